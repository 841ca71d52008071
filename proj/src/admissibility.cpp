#include "mixr/admissibility.hpp"

#include <cmath>
#include <algorithm>
#include <iomanip>
#include <numeric>
#include <random>
#include <ostream>
#include <unordered_map>

#include "mixr/error.hpp"

namespace mixr {

namespace {

// Depth-first clique extension in increasing vertex order, so the first clique
// found is the lexicographically least.
bool extend_clique(const std::vector<Bitset>& adj, Bitset remaining, std::uint32_t needed, VertexSet& chosen) {
    if (needed == 0) return true;
    while (remaining.count() >= needed) {
        const auto v = remaining.find_first();
        remaining.reset(v);
        chosen.push_back(static_cast<std::uint32_t>(v));
        if (extend_clique(adj, remaining & adj[v], needed - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<VertexSet> find_mono_clique(const EdgeColouring& c, std::uint32_t m) {
    if (m < 3) throw InputError("clique size m must be at least 3");
    const auto n = c.size();
    if (m > n) return std::nullopt;

    std::unordered_map<Colour, std::uint64_t> counts;
    for (auto col : c.pair_colours()) ++counts[col];
    const std::uint64_t needed_edges = std::uint64_t{m} * (m - 1) / 2;

    // Per-vertex neighbourhoods of every colour class large enough to hold K_m.
    std::unordered_map<Colour, std::vector<Bitset>> classes;
    for (const auto& [col, cnt] : counts)
        if (cnt >= needed_edges) classes.emplace(col, std::vector<Bitset>(n, Bitset(n)));
    if (classes.empty()) return std::nullopt;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
            auto it = classes.find(c.colour(u, v));
            if (it == classes.end()) continue;
            it->second[u].set(v);
            it->second[v].set(u);
        }

    Bitset above(n);
    VertexSet chosen;
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            auto it = classes.find(c.colour(a, b));
            if (it == classes.end()) continue;
            const auto& adj = it->second;
            above.set();
            for (std::uint32_t v = 0; v <= b; ++v) above.reset(v);
            chosen = {a, b};
            if (extend_clique(adj, adj[a] & adj[b] & above, m - 2, chosen)) return chosen;
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> find_rainbow_k4(const EdgeColouring& c) {
    const auto n = c.size();
    if (n < 4) throw InputError("rainbow K4 search needs at least 4 vertices");
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) {
            const auto ab = c.colour(a, b);
            for (std::uint32_t x = b + 1; x < n; ++x) {
                const auto ax = c.colour(a, x), bx = c.colour(b, x);
                if (ax == ab || bx == ab || ax == bx) continue;
                for (std::uint32_t d = x + 1; d < n; ++d) {
                    const auto ad = c.colour(a, d), bd = c.colour(b, d), xd = c.colour(x, d);
                    if (ad == ab || ad == ax || ad == bx) continue;
                    if (bd == ab || bd == ax || bd == bx || bd == ad) continue;
                    if (xd == ab || xd == ax || xd == bx || xd == ad || xd == bd) continue;
                    return VertexSet{a, b, x, d};
                }
            }
        }
    return std::nullopt;
}

AdmissibilityReport is_admissible(const EdgeColouring& c, std::uint32_t m) {
    if (m < 3) throw InputError("clique size m must be at least 3");
    if (c.size() == 0) throw InputError("colouring has no vertices");
    AdmissibilityReport r;
    r.n = c.size();
    r.m = m;
    r.mono_witness = find_mono_clique(c, m);
    if (c.size() >= 4) r.rainbow_witness = find_rainbow_k4(c);
    r.admissible = !r.mono_witness && !r.rainbow_witness;
    r.colour_count = colour_count(c);
    r.theorem_bound = theorem_bound(r.n, m);
    return r;
}

SigmaQuery sigma(const EdgeColouring& c, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                 std::uint32_t m) {
    if (a.empty() || b.empty()) throw InputError("sigma needs two nonempty vertex sets");
    std::vector<std::uint8_t> side(c.size(), 0);
    for (auto v : a) {
        if (v >= c.size() || side[v]) throw InputError("vertex sets must be disjoint and in range");
        side[v] = 1;
    }
    for (auto v : b) {
        if (v >= c.size() || side[v]) throw InputError("vertex sets must be disjoint and in range");
        side[v] = 2;
    }
    std::unordered_map<Colour, std::uint64_t> total, across;
    for (std::uint32_t u = 0; u < c.size(); ++u)
        for (std::uint32_t v = u + 1; v < c.size(); ++v) {
            const auto col = c.colour(u, v);
            ++total[col];
            if (side[u] && side[v] && side[u] != side[v]) ++across[col];
        }
    SigmaQuery q;
    q.a.assign(a.begin(), a.end());
    q.b.assign(b.begin(), b.end());
    q.k = static_cast<std::uint32_t>(std::max(a.size(), b.size()));
    q.m = m;
    for (const auto& [col, cnt] : across)
        if (cnt == total[col]) ++q.sigma;
    q.lemma_bound = std::pow(static_cast<double>(q.k), 1.5) * std::sqrt(static_cast<double>(m));
    return q;
}

bool lemma_bound_holds(std::uint64_t sigma, std::uint32_t k, std::uint32_t m) {
    using u128 = unsigned __int128;
    return u128{sigma} * sigma <= u128{k} * k * k * m;
}

bool check_lemma_bound(const EdgeColouring& c, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                       std::uint32_t m) {
    if (!is_admissible(c, m).admissible)
        throw PreconditionError("the lemma bound is only claimed for admissible colourings");
    const auto q = sigma(c, a, b, m);
    return lemma_bound_holds(q.sigma, q.k, m);
}

double theorem_bound(std::uint32_t n, std::uint32_t m) {
    if (m < 3) throw InputError("clique size m must be at least 3");
    return std::pow(static_cast<double>(n), 1.5) * std::sqrt(2.0 * m);
}

bool theorem_bound_holds(std::uint64_t colours, std::uint32_t n, std::uint32_t m) {
    using u128 = unsigned __int128;
    return u128{colours} * colours <= u128{2} * m * n * n * n;
}

bool base_case_check(std::uint32_t m) {
    if (m < 3) throw InputError("clique size m must be at least 3");
    using u128 = unsigned __int128;
    for (std::uint64_t n = 1; n <= 21; ++n) {
        const u128 pairs = n * (n - 1) / 2;
        if (!(pairs * pairs < u128{2} * m * n * n * n)) return false;
    }
    return true;
}

LemmaSweep lemma_sweep(const EdgeColouring& c, std::uint32_t m, std::uint32_t samples, std::uint64_t seed) {
    if (!is_admissible(c, m).admissible)
        throw PreconditionError("the lemma bound is only claimed for admissible colourings");
    const auto n = c.size();
    if (n < 2) throw InputError("lemma sweep needs at least two vertices");
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> perm(n);
    LemmaSweep out;
    double worst_ratio = -1.0;
    for (std::uint32_t s = 0; s < samples; ++s) {
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto a_size = std::uniform_int_distribution<std::uint32_t>(1, n - 1)(rng);
        const auto b_size = std::uniform_int_distribution<std::uint32_t>(1, n - a_size)(rng);
        std::vector<std::uint32_t> a(perm.begin(), perm.begin() + a_size);
        std::vector<std::uint32_t> b(perm.begin() + a_size, perm.begin() + a_size + b_size);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        auto q = sigma(c, a, b, m);
        ++out.samples;
        if (lemma_bound_holds(q.sigma, q.k, m)) ++out.holding;
        const double ratio = static_cast<double>(q.sigma) / q.lemma_bound;
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            out.worst = std::move(q);
        }
    }
    return out;
}

void write_report(std::ostream& os, const AdmissibilityReport& report) {
    auto write_set = [&](const char* key, const VertexSet& s) {
        os << key;
        for (auto v : s) os << ' ' << v;
        os << '\n';
    };
    os << "admissible " << (report.admissible ? "true" : "false") << '\n';
    os << "colours " << report.colour_count << '\n';
    os << "bound " << std::fixed << std::setprecision(6) << report.theorem_bound << std::defaultfloat << '\n';
    if (report.mono_witness) write_set("mono", *report.mono_witness);
    if (report.rainbow_witness) write_set("rainbow", *report.rainbow_witness);
}

}  // namespace mixr
