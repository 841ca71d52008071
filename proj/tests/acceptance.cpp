// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mixr/admissibility.hpp"
#include "mixr/brute_force.hpp"
#include "mixr/colouring.hpp"
#include "mixr/projective_plane.hpp"
#include "mixr/sat_export.hpp"
#include "mixr/search.hpp"
#include "oracles.hpp"

using namespace mixr;
using Clock = std::chrono::steady_clock;

namespace {

// Recorded verdict for the printed q=3 pair at m=4.
constexpr bool kQ3PairAdmissible = true;

struct Check {
    std::string detail;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SearchOutcome all_solutions(std::uint32_t q, std::uint32_t threads = 1) {
    SearchConfig cfg;
    cfg.q = q;
    cfg.mode = SearchMode::all;
    cfg.threads = threads;
    return search_rotational(cfg);
}

Check criterion1() {
    Check c;
    const auto t0 = Clock::now();
    const auto sc = expand_words(fixtures::kK14Pair);
    const auto r = is_admissible(sc.base, 4);
    const double t = seconds_since(t0);
    c.require(sc.base.size() == 14, "not K14");
    c.require(colour_count(sc.base) == 23, "colour count is not 23");
    c.require(is_special(sc.base, sc.levi, sc.embedding()), "not special");
    c.require(is_rotational(sc), "not rotational");
    c.require(r.admissible, "not admissible for m=4");
    c.require(oracle::naive_admissible(sc.base, 4), "enumeration oracle disagrees");
    c.require(t < 1.0, "slower than 1 s");
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(t) + " s";
    return c;
}

Check criterion2() {
    Check c;
    const auto t0 = Clock::now();
    const auto f = fano_colouring();
    const double t = seconds_since(t0);
    const auto& sc = f.colouring;
    const auto& g = sc.levi.graph;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            const std::pair e{f.point_cycle[i], f.point_cycle[(i + 1) % 7]};
            const std::pair e2{f.line_cycle[j], f.line_cycle[(j + 1) % 7]};
            c.require(g.adjacent(e.first, e2.first) || g.adjacent(e.first, e2.second) ||
                          g.adjacent(e.second, e2.first) || g.adjacent(e.second, e2.second),
                      "cycle edges not at distance 1");
        }
    c.require(is_admissible(sc.base, 4).admissible, "not admissible");
    c.require(colour_count(sc.base) == 23, "colour count is not 23");
    const auto words = extract_words(sc);
    std::vector<std::uint32_t> residues;
    for (auto d : star_offsets(words.w0)) residues.push_back(((d - 1) / 2) % 7);
    c.require(oracle::difference_set(7, residues), "star offsets do not give a difference set");
    c.require(t < 10.0, "slower than 10 s");
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(t) + " s";
    return c;
}

Check criterion3() {
    Check c;
    double worst = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto t0 = Clock::now();
        const auto plane = build_plane(q);
        const auto levi = levi_graph(plane);
        const auto lab = rotational_cycle(plane);
        const bool ok = verify_rotational(levi, lab);
        const double t = seconds_since(t0);
        worst = std::max(worst, t);
        c.require(ok, "verify_rotational failed for q=" + std::to_string(q));
        c.require(t < 5.0, "q=" + std::to_string(q) + " slower than 5 s");
        if (q <= 5) {
            const auto mod = q * q + q + 1;
            std::vector<std::uint32_t> residues;
            for (auto d : lab.offsets) residues.push_back(((d - 1) / 2) % mod);
            c.require(oracle::difference_set(mod, residues), "difference set fails for q=" + std::to_string(q));
        }
    }
    c.detail += (c.detail.empty() ? "" : "; ") + std::string("slowest ") + std::to_string(worst) + " s";
    return c;
}

std::vector<std::pair<EdgeColouring, std::uint32_t>> corpus() {
    std::vector<std::pair<EdgeColouring, std::uint32_t>> out;
    out.emplace_back(expand_words(fixtures::kK14Pair).base, 4);
    out.emplace_back(fano_colouring().colouring.base, 4);
    out.emplace_back(expand_words(fixtures::kQ3Pair).base, 4);
    for (std::uint32_t q : {2u, 3u})
        for (const auto& w : all_solutions(q).solutions) out.emplace_back(expand_words(w).base, 4);
    for (auto [n, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{4, 4}, {5, 3}, {5, 4}, {6, 3}, {6, 4}})
        out.emplace_back(brute_force_maxr(n, m).witness, m);
    return out;
}

Check criterion4() {
    Check c;
    for (std::uint32_t m : {3u, 4u, 5u}) c.require(base_case_check(m), "base case fails for m=" + std::to_string(m));
    std::size_t checked = 0;
    for (const auto& [col, m] : corpus()) {
        if (!is_admissible(col, m).admissible) continue;
        ++checked;
        c.require(theorem_bound_holds(colour_count(col), col.size(), m), "bound violated");
    }
    c.require(std::abs(theorem_bound(14, 4) - 148.16) <= 0.01, "bound(14,4) is not 148.16");
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(checked) + " admissible colourings";
    return c;
}

Check criterion5() {
    Check c;
    const auto fig = expand_words(fixtures::kK14Pair).base;
    std::vector<std::uint32_t> points, lines;
    for (std::uint32_t i = 0; i < 14; ++i) (i % 2 ? lines : points).push_back(i);
    const auto q = sigma(fig, points, lines, 4);
    c.require(q.sigma == 21, "points/lines sigma is not 21");
    c.require(std::abs(q.lemma_bound - 37.04) < 0.02 && lemma_bound_holds(q.sigma, q.k, 4), "points/lines bound");
    std::vector<EdgeColouring> sample{fig};
    for (std::uint32_t qq : {2u, 3u})
        for (const auto& w : all_solutions(qq).solutions) sample.push_back(expand_words(w).base);
    std::uint64_t queries = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto sweep = lemma_sweep(sample[i], 4, 200, 1000 + i);
        queries += sweep.samples;
        c.require(sweep.samples == 200 && sweep.holding == 200, "lemma bound violated");
    }
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(sample.size()) + " colourings, " +
                std::to_string(queries) + " queries";
    return c;
}

Check criterion6() {
    Check c;
    c.require(brute_force_maxr(4, 4).value == 5, "maxr(4,4) != 5");
    c.require(brute_force_maxr(3, 3).value == 3, "maxr(3,3) != 3");
    std::string values;
    for (auto [n, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 3}, {5, 4}, {6, 3}}) {
        const auto t0 = Clock::now();
        const auto fast = brute_force_maxr(n, m);
        const double t_fast = seconds_since(t0);
        const auto t1 = Clock::now();
        const auto slow = oracle::unpruned_maxr(n, m);
        const double t_slow = seconds_since(t1);
        const auto tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        std::vector<std::uint32_t> rgs(fast.witness.pair_colours().begin(), fast.witness.pair_colours().end());
        c.require(fast.value == slow.value, tag + " values differ");
        c.require(rgs == slow.witness, tag + " witnesses differ");
        c.require(t_fast < 600 && t_slow < 600, tag + " slower than 10 min");
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s%s=%u [%.2fs/%.1fs]", values.empty() ? "" : " ", tag.c_str(), fast.value,
                      t_fast, t_slow);
        values += buf;
    }
    c.detail += (c.detail.empty() ? "" : "; ") + values;
    return c;
}

Check criterion7() {
    Check c;
    const auto& w = fixtures::kQ3Pair;
    c.require(w.w0.size() == 25 && w.w1.size() == 25, "length is not 25");
    try {
        validate_words(w);
    } catch (const std::exception& e) {
        c.require(false, std::string("structural check: ") + e.what());
    }
    c.require(w.reverse_property(), "w1 is not the reverse of w0");
    const auto first = verify_words(3, w, 4);
    const auto second = verify_words(3, w, 4);
    c.require(first.colours == 54, "colour count is not 54");
    c.require(first.admissibility.admissible == second.admissibility.admissible &&
                  first.admissibility.mono_witness == second.admissibility.mono_witness &&
                  first.admissibility.rainbow_witness == second.admissibility.rainbow_witness,
              "verdict not stable");
    c.require(first.admissibility.admissible == oracle::naive_admissible(expand_words(w).base, 4),
              "enumeration oracle disagrees");
    c.require(first.admissibility.admissible == kQ3PairAdmissible, "verdict differs from the recorded golden");
    c.detail += (c.detail.empty() ? "" : "; ") +
                std::string("verdict admissible=") + (first.admissibility.admissible ? "true" : "false");
    return c;
}

Check criterion8() {
    Check c;
    const auto t0 = Clock::now();
    const auto one = all_solutions(2, 1);
    const double t = seconds_since(t0);
    c.require(one.exhausted, "not exhausted");
    c.require(t < 60.0, "slower than 60 s");
    const std::set<WordPair> ref(one.solutions.begin(), one.solutions.end());
    c.require(ref.count(fixtures::kK14Pair) == 1, "K14 pair missing");
    for (std::uint32_t threads : {4u, 8u}) {
        const auto other = all_solutions(2, threads);
        c.require(other.exhausted && std::set<WordPair>(other.solutions.begin(), other.solutions.end()) == ref,
                  "solution set differs with " + std::to_string(threads) + " threads");
    }
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(ref.size()) + " solutions, " + std::to_string(t) + " s";
    return c;
}

Check criterion9() {
    Check c;
    const auto cnf = oracle::parse_dimacs(encode_sat(2, 4).text);
    c.require(cnf.vars <= 30, "too many variables for enumeration");
    const auto models = oracle::count_models(cnf);
    const auto search = all_solutions(2);
    c.require(models == search.solution_count, "model count differs from search count");
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(models) + " models over " + std::to_string(cnf.vars) +
                " variables";
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"The q=2 word pair gives a special rotational admissible 23-colouring of K14", criterion1},
        {"7-cycle construction", criterion2},
        {"rotational Hamilton cycles for q in {2,3,4,5,7,8,9}", criterion3},
        {"colour bound and base case", criterion4},
        {"sigma bound sweep", criterion5},
        {"brute-force maxr against the unpruned enumerator", criterion6},
        {"q=3 printed words", criterion7},
        {"q=2 search completeness", criterion8},
        {"CNF model count equals search count", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        failed += !c.ok;
        std::printf("%s criterion %zu: %s (%s)\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
