#pragma once

// Slow, independent reference implementations used to cross-check the library.
// Nothing here calls into the code under test except for plain data access.

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mixr/colouring.hpp"

namespace oracle {

// --- polynomial arithmetic over GF(p) -------------------------------------

using Poly = std::vector<std::uint32_t>;  // low degree first

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& monic, std::uint32_t p) {
    const std::size_t k = monic.size() - 1;
    std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    for (std::size_t d = prod.size(); d-- > k;) {
        const auto c = prod[d] % p;
        if (!c) continue;
        for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * monic[i]) % p;
    }
    Poly out(k, 0);
    for (std::size_t i = 0; i < k && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
    return out;
}

/// Multiplicative order of x modulo `monic` by repeated multiplication; 0 if x
/// never returns to 1 (reducible modulus with x a zero divisor).
inline std::uint64_t order_of_x(const Poly& monic, std::uint32_t p) {
    const std::size_t k = monic.size() - 1;
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < k; ++i) q *= p;
    Poly one(k, 0);
    one[0] = 1;
    Poly x(k, 0);
    if (k == 1) x[0] = (p - monic[0]) % p;
    else x[1] = 1;
    Poly cur = x;
    for (std::uint64_t t = 1; t < q; ++t) {
        if (cur == one) return t;
        cur = poly_mul_mod(cur, x, monic, p);
    }
    return 0;
}

/// First monic degree-k polynomial, tuples (c0, ..., c_{k-1}) in lexicographic
/// order, for which x has order p^k - 1.
inline Poly first_primitive(std::uint32_t p, std::uint32_t k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    std::vector<std::uint32_t> c(k, 0);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::uint64_t r = idx;
        for (std::uint32_t i = k; i-- > 0;) {
            c[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        Poly monic(c.begin(), c.end());
        monic.push_back(1);
        if (monic[0] == 0) continue;
        if (k == 1 && q == 2) return monic;  // GF(2): x = 1 has order 1 = q - 1
        if (order_of_x(monic, p) == q - 1) return monic;
    }
    return {};
}

// --- admissibility by enumeration -------------------------------------------

template <typename Visit>
void for_each_subset(std::uint32_t n, std::uint32_t k, Visit visit) {
    if (k > n) return;
    std::vector<std::uint32_t> s(k);
    for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        if (!visit(s)) return;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + static_cast<std::uint32_t>(i)) --i;
        if (i < 0) return;
        ++s[static_cast<std::size_t>(i)];
        for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

template <typename ColourFn>
std::optional<std::vector<std::uint32_t>> naive_mono(std::uint32_t n, std::uint32_t m, ColourFn colour) {
    std::optional<std::vector<std::uint32_t>> found;
    for_each_subset(n, m, [&](const std::vector<std::uint32_t>& s) {
        const auto c0 = colour(s[0], s[1]);
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (colour(s[a], s[b]) != c0) return true;
        found = s;
        return false;
    });
    return found;
}

template <typename ColourFn>
std::optional<std::vector<std::uint32_t>> naive_rainbow(std::uint32_t n, ColourFn colour) {
    std::optional<std::vector<std::uint32_t>> found;
    for_each_subset(n, 4, [&](const std::vector<std::uint32_t>& s) {
        std::set<std::uint64_t> seen;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) seen.insert(colour(s[a], s[b]));
        if (seen.size() != 6) return true;
        found = s;
        return false;
    });
    return found;
}

inline bool naive_admissible(const mixr::EdgeColouring& c, std::uint32_t m) {
    auto col = [&](std::uint32_t u, std::uint32_t v) { return c.colour(u, v); };
    return !naive_mono(c.size(), m, col) && !naive_rainbow(c.size(), col);
}

inline std::uint32_t naive_colour_count(const mixr::EdgeColouring& c) {
    std::set<std::uint32_t> s;
    for (std::uint32_t u = 0; u < c.size(); ++u)
        for (std::uint32_t v = u + 1; v < c.size(); ++v) s.insert(c.colour(u, v));
    return static_cast<std::uint32_t>(s.size());
}

// --- maxr without pruning ----------------------------------------------------

struct MaxrResult {
    std::uint32_t value = 0;
    std::vector<std::uint32_t> witness;  // restricted-growth string, row-major edges
    std::uint64_t strings = 0;
};

/// Walks every restricted-growth string of the C(n,2) edges. Only strings that
/// would beat the best value so far are tested for admissibility, so the
/// first maximizer in lexicographic order is kept.
inline MaxrResult unpruned_maxr(std::uint32_t n, std::uint32_t m) {
    const std::uint32_t e = n * (n - 1) / 2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge;
    std::vector<std::vector<std::uint32_t>> idx(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
            idx[u][v] = idx[v][u] = static_cast<std::uint32_t>(edge.size());
            edge.emplace_back(u, v);
        }
    // limit[i] = 1 + max(a[0..i-1]): the largest value a[i] may take.
    std::vector<std::uint32_t> a(e, 0), limit(e, 1);
    limit[0] = 0;
    MaxrResult r;
    while (true) {
        ++r.strings;
        const auto b = std::max(limit[e - 1], a[e - 1] + 1);
        if (b > r.value) {
            auto col = [&](std::uint32_t u, std::uint32_t v) { return a[idx[u][v]]; };
            if (!naive_mono(n, m, col) && (n < 4 || !naive_rainbow(n, col))) {
                r.value = b;
                r.witness = a;
            }
        }
        std::size_t i = e - 1;
        while (i > 0 && a[i] == limit[i]) --i;
        if (i == 0) break;
        ++a[i];
        const auto next_limit = std::max(limit[i], a[i] + 1);
        for (auto j = i + 1; j < e; ++j) {
            a[j] = 0;
            limit[j] = next_limit;
        }
    }
    return r;
}

// --- DIMACS ------------------------------------------------------------------

struct Cnf {
    std::uint32_t vars = 0;
    std::uint32_t declared_clauses = 0;
    std::vector<std::vector<int>> clauses;
    std::map<std::uint32_t, std::string> class_comments;
};

inline Cnf parse_dimacs(const std::string& text) {
    Cnf f;
    std::istringstream is(text);
    std::string line;
    std::vector<int> cur;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream ls(line);
            std::string c, kw;
            std::uint32_t v = 0;
            if (ls >> c >> kw >> v && kw == "class") {
                std::string rest;
                std::getline(ls, rest);
                f.class_comments[v] = rest;
            }
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream ls(line);
            std::string p, cnf;
            ls >> p >> cnf >> f.vars >> f.declared_clauses;
            continue;
        }
        std::istringstream ls(line);
        int lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(lit);
            }
        }
    }
    return f;
}

inline bool satisfies(const Cnf& f, std::uint64_t assignment) {
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (auto lit : cl) {
            const auto v = static_cast<std::uint32_t>(std::abs(lit)) - 1;
            const bool val = (assignment >> v) & 1;
            if ((lit > 0) == val) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

/// Brute-force model count over all 2^vars assignments; clauses are packed
/// into positive/negative literal masks.
inline std::uint64_t count_models(const Cnf& f) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
    for (const auto& cl : f.clauses) {
        std::uint64_t pos = 0, neg = 0;
        for (auto lit : cl) (lit > 0 ? pos : neg) |= std::uint64_t{1} << (std::abs(lit) - 1);
        masks.emplace_back(pos, neg);
    }
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.vars); ++a) {
        bool ok = true;
        for (const auto& [pos, neg] : masks)
            if (!((a & pos) | (~a & neg))) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

// --- graphs --------------------------------------------------------------------

/// All-pairs distances by Floyd-Warshall on an adjacency predicate.
template <typename Adj>
std::vector<std::vector<std::uint32_t>> distances(std::uint32_t n, Adj adjacent) {
    constexpr std::uint32_t inf = 1u << 30;
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::uint32_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::uint32_t j = 0; j < n; ++j)
            if (i != j && adjacent(i, j)) d[i][j] = 1;
    }
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Differences of a residue set, counted with multiplicity.
inline bool difference_set(std::uint32_t modulus, const std::vector<std::uint32_t>& s) {
    std::vector<int> hits(modulus, 0);
    for (auto a : s)
        for (auto b : s)
            if (a != b) ++hits[(a + modulus - b) % modulus];
    for (std::uint32_t r = 1; r < modulus; ++r)
        if (hits[r] != 1) return false;
    return true;
}

}  // namespace oracle
