#pragma once

// Backtracking search over rotational word pairs.
//
// A rotational special colouring of K_{n(q)} is fixed by the palette symbols at
// the non-star positions of its two words. Positions forced equal by edge
// symmetry form classes; the search assigns one symbol per class, in order of
// the smallest offset in the class, and prunes as soon as a fully decided
// vertex set through position 0 or 1 is a monochromatic K_m or a rainbow K_4.
// The shift-by-2 automorphism carries every vertex set onto one through
// position 0 or 1, so at a leaf this check is exact.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixr/admissibility.hpp"
#include "mixr/colouring.hpp"

namespace mixr {

inline constexpr std::uint32_t kMaxSearchOrder = 9;
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct WordSlot {
    int word = 0;
    std::uint32_t offset = 0;

    friend bool operator==(const WordSlot&, const WordSlot&) = default;
    friend auto operator<=>(const WordSlot&, const WordSlot&) = default;
};

/// The free symmetry classes of word positions for rotational_cycle(q).
class RotationalModel {
public:
    static constexpr int kStarClass = -1;

    explicit RotationalModel(std::uint32_t q);

    [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
    [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
    [[nodiscard]] const LeviGraph& levi() const noexcept { return levi_; }
    [[nodiscard]] const CyclicLabeling& labeling() const noexcept { return labeling_; }

    [[nodiscard]] std::size_t class_count() const noexcept { return classes_.size(); }
    /// Slots of each class, sorted; classes ordered by their smallest slot offset.
    [[nodiscard]] const std::vector<std::vector<WordSlot>>& classes() const noexcept { return classes_; }
    [[nodiscard]] int slot_class(int word, std::uint32_t offset) const { return slot_class_[word * n_ + offset]; }
    /// Class of the edge between positions i and j, or kStarClass.
    [[nodiscard]] int edge_class(std::uint32_t i, std::uint32_t j) const;

    [[nodiscard]] WordPair words(std::span<const std::uint8_t> assignment) const;
    /// Class assignment of a word pair; nullopt if the stars differ from this
    /// model or two slots of one class disagree.
    [[nodiscard]] std::optional<std::vector<std::uint8_t>> assignment(const WordPair& words) const;

    /// Sorted, deduplicated class sets of the m-sets through position 0 or 1
    /// whose edges all carry palette colours.
    [[nodiscard]] std::vector<std::vector<int>> palette_cliques(std::uint32_t m) const;
    /// Class sets of 4-sets through position 0 or 1 that can be rainbow with a
    /// palette of t symbols (distinct classes, at most t palette edges).
    [[nodiscard]] std::vector<std::vector<int>> rainbow_candidates(std::uint32_t t) const;

private:
    std::uint32_t q_;
    std::uint32_t n_;
    LeviGraph levi_;
    CyclicLabeling labeling_;
    std::vector<int> slot_class_;  // [word * n + offset]
    std::vector<std::vector<WordSlot>> classes_;
};

enum class SearchMode { first, all, count };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& s);

/// Resumable position of a search: the first unexplored node in depth-first
/// order, plus counters accumulated before it.
struct Checkpoint {
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    std::uint32_t palette = 0;
    SearchMode mode = SearchMode::all;
    bool break_symmetry = false;
    std::uint64_t nodes = 0;
    std::uint64_t solutions = 0;
    std::vector<std::uint8_t> stack;

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

void write_checkpoint(std::ostream& os, const Checkpoint& cp);
Checkpoint read_checkpoint(std::istream& is);

struct SearchConfig {
    std::uint32_t q = 2;
    std::uint32_t m = 4;
    std::uint32_t palette = 2;
    SearchMode mode = SearchMode::first;
    std::optional<std::uint64_t> node_budget = kDefaultNodeBudget;
    std::uint32_t threads = 1;
    /// Depth of the prefixes handed to workers; chosen from `threads` if unset.
    std::optional<std::uint32_t> split_depth;
    /// Only emit words whose palette symbols appear in first-use order.
    bool break_symmetry = false;
    std::optional<Checkpoint> resume;
};

struct SearchOutcome {
    std::vector<WordPair> solutions;  // empty in count mode
    std::uint64_t solution_count = 0;  // includes solutions counted before a resume
    std::uint64_t nodes_explored = 0;  // includes nodes counted before a resume
    bool exhausted = false;
    std::optional<Checkpoint> checkpoint;  // set when the budget ran out
};

SearchOutcome search_rotational(const SearchConfig& config);
SearchOutcome search_rotational(const RotationalModel& model, const SearchConfig& config);

struct WordsReport {
    AdmissibilityReport admissibility;
    bool special = false;
    bool rotational = false;
    std::uint32_t colours = 0;
    bool reverse_property = false;
};

WordsReport verify_words(std::uint32_t q, const WordPair& words, std::uint32_t m);

void write_words_report(std::ostream& os, const WordsReport& report);

}  // namespace mixr
