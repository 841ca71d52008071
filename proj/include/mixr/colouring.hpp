#pragma once

// Edge-colourings of complete graphs, special colourings over an embedded Levi
// graph, and the two-word description of rotational colourings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixr/projective_plane.hpp"

namespace mixr {

using Colour = std::uint32_t;

/// Symmetric colour assignment on the pairs of K_n. Colour ids below
/// palette_size() are the shared palette; larger ids are free-standing colours.
class EdgeColouring {
public:
    EdgeColouring() = default;
    EdgeColouring(std::uint32_t n, std::uint32_t palette_size, Colour fill = 0);

    [[nodiscard]] std::uint32_t size() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t palette_size() const noexcept { return palette_; }
    void set_palette_size(std::uint32_t t) noexcept { palette_ = t; }

    [[nodiscard]] Colour colour(std::uint32_t u, std::uint32_t v) const { return colours_[pair_index(u, v)]; }
    void set(std::uint32_t u, std::uint32_t v, Colour c) { colours_[pair_index(u, v)] = c; }

    /// Colours in row-major upper-triangle order: (0,1), (0,2), ..., (n-2,n-1).
    [[nodiscard]] const std::vector<Colour>& pair_colours() const noexcept { return colours_; }
    [[nodiscard]] std::size_t pair_index(std::uint32_t u, std::uint32_t v) const;

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    std::uint32_t n_ = 0;
    std::uint32_t palette_ = 0;
    std::vector<Colour> colours_;
};

std::uint32_t colour_count(const EdgeColouring& c);

/// Relabels colours by first occurrence in row-major upper-triangle order.
/// The palette size is carried over unchanged.
EdgeColouring canonicalize(const EdgeColouring& c);

/// True iff every colour on an embedded Levi edge occurs exactly once.
/// embedding[levi vertex] is the K_n vertex it sits on.
bool is_special(const EdgeColouring& c, const LeviGraph& levi, std::span<const std::uint32_t> embedding);

inline constexpr char kStar = '*';
inline constexpr std::uint32_t kMaxPalette = 36;

/// Palette symbol for ids 0..35: '0'..'9' then 'A'..'Z'.
char palette_symbol(Colour id);
/// Inverse of palette_symbol; nullopt for anything else, including '*'.
std::optional<Colour> palette_id(char symbol);

/// Words c(v_0) and c(v_1). Character d-1 of a word is the symbol at offset d.
struct WordPair {
    std::uint32_t q = 0;
    std::string w0;
    std::string w1;

    [[nodiscard]] char at(int word, std::uint32_t offset) const { return (word ? w1 : w0)[offset - 1]; }
    [[nodiscard]] bool reverse_property() const;

    friend bool operator==(const WordPair&, const WordPair&) = default;
    friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

/// Checks length, alphabet, '*' at offset 1, star consistency and symmetric
/// palette consistency. Throws InputError naming the offending offset.
void validate_words(const WordPair& words);

/// Star offsets of one word.
std::vector<std::uint32_t> star_offsets(const std::string& word);

/// Colouring of K_{n(q)} indexed by cycle position, together with the
/// labeling that places the Levi graph on those positions.
struct SpecialColouring {
    EdgeColouring base;
    CyclicLabeling labeling;
    LeviGraph levi;

    /// embedding[levi vertex] = position on the cycle.
    [[nodiscard]] std::vector<std::uint32_t> embedding() const;
};

SpecialColouring expand_words(const LeviGraph& levi, const CyclicLabeling& labeling, const WordPair& words);
/// Builds L_q and a labeling whose offsets match the star pattern of w0.
SpecialColouring expand_words(const WordPair& words);

/// Words of a rotational special colouring. Throws InputError with a witness
/// pair of positions if the colouring is not rotational.
WordPair extract_words(const SpecialColouring& colouring);

/// Reattaches L_q to a position-indexed colouring of K_{n(q)}: the star offsets
/// are the uniquely coloured edges at position 0.
SpecialColouring attach_levi(std::uint32_t q, const EdgeColouring& colouring);

/// True iff the colouring is rotational for its labeling (same words at all
/// even and at all odd positions).
bool is_rotational(const SpecialColouring& colouring);

struct FanoConstruction {
    SpecialColouring colouring;
    std::vector<std::uint32_t> point_cycle;  // Levi vertex ids, cyclic order
    std::vector<std::uint32_t> line_cycle;
};

/// The 7-cycle construction on K_14 over L_2.
FanoConstruction fano_colouring();

/// Whether two edges of L_2-vertices are at distance 1: some endpoint of one is
/// adjacent in the graph to some endpoint of the other.
bool edges_at_distance_one(const Graph& g, std::pair<std::uint32_t, std::uint32_t> e,
                           std::pair<std::uint32_t, std::uint32_t> f);

// Text formats -------------------------------------------------------------

void write_colouring(std::ostream& os, const EdgeColouring& c);
EdgeColouring read_colouring(std::istream& is);
void write_words(std::ostream& os, const WordPair& words);
WordPair read_words(std::istream& is);
/// Blocks of the word format separated by blank lines.
std::vector<WordPair> read_word_list(std::istream& is);

}  // namespace mixr
