#pragma once

// Admissibility of edge-colourings (no monochromatic K_m, no rainbow K_4) and
// the counting bounds that hold for admissible colourings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "mixr/colouring.hpp"

namespace mixr {

using VertexSet = std::vector<std::uint32_t>;

struct AdmissibilityReport {
    bool admissible = false;
    std::optional<VertexSet> mono_witness;
    std::optional<VertexSet> rainbow_witness;
    std::uint32_t colour_count = 0;
    double theorem_bound = 0.0;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
};

struct SigmaQuery {
    VertexSet a;
    VertexSet b;
    std::uint32_t k = 0;  // max(|A|, |B|)
    std::uint32_t m = 0;
    std::uint64_t sigma = 0;
    double lemma_bound = 0.0;  // k^{3/2} sqrt(m)
};

/// Lexicographically least m-set whose induced edges share one colour.
std::optional<VertexSet> find_mono_clique(const EdgeColouring& c, std::uint32_t m);
/// Lexicographically least 4-set whose six edges have distinct colours.
std::optional<VertexSet> find_rainbow_k4(const EdgeColouring& c);

AdmissibilityReport is_admissible(const EdgeColouring& c, std::uint32_t m);

/// Number of colours that occur on some A-B edge and on no other edge.
SigmaQuery sigma(const EdgeColouring& c, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                 std::uint32_t m);

/// sigma <= k^{3/2} sqrt(m), compared exactly as sigma^2 <= k^3 m.
bool lemma_bound_holds(std::uint64_t sigma, std::uint32_t k, std::uint32_t m);

/// Runs the admissibility check first; throws PreconditionError if the
/// colouring is not admissible for m.
bool check_lemma_bound(const EdgeColouring& c, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                       std::uint32_t m);

/// n^{3/2} sqrt(2m).
double theorem_bound(std::uint32_t n, std::uint32_t m);
/// colours <= n^{3/2} sqrt(2m), compared exactly as colours^2 <= 2 m n^3.
bool theorem_bound_holds(std::uint64_t colours, std::uint32_t n, std::uint32_t m);
/// C(n,2) < n^{3/2} sqrt(2m) for every n in 1..21.
bool base_case_check(std::uint32_t m);

struct LemmaSweep {
    std::uint32_t samples = 0;
    std::uint32_t holding = 0;
    std::optional<SigmaQuery> worst;  // largest sigma^2 / (k^3 m)
};

/// `samples` random disjoint pairs (A, B) drawn from a seeded generator; each
/// is checked against the lemma bound. Requires an admissible colouring.
LemmaSweep lemma_sweep(const EdgeColouring& c, std::uint32_t m, std::uint32_t samples, std::uint64_t seed);

/// Line-oriented report: admissible, colours, bound, optional mono/rainbow.
void write_report(std::ostream& os, const AdmissibilityReport& report);

}  // namespace mixr
