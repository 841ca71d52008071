#pragma once

// Exact maxr(n; K_m, K_4) for tiny n by enumerating set partitions of the edge
// set of K_n in restricted-growth form.

#include <cstdint>

#include "mixr/colouring.hpp"

namespace mixr {

inline constexpr std::uint32_t kMaxBruteForceOrder = 6;

struct BruteForceResult {
    std::uint32_t value = 0;
    EdgeColouring witness;  // lexicographically least canonical maximizer
    std::uint64_t nodes = 0;
};

BruteForceResult brute_force_maxr(std::uint32_t n, std::uint32_t m);

}  // namespace mixr
