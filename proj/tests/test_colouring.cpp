#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "mixr/admissibility.hpp"
#include "mixr/colouring.hpp"
#include "mixr/error.hpp"
#include "mixr/search.hpp"
#include "oracles.hpp"

using namespace mixr;

namespace {

EdgeColouring permute_colours(const EdgeColouring& c, std::mt19937_64& rng) {
    std::vector<Colour> ids;
    for (auto col : c.pair_colours()) ids.push_back(col);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto image = ids;
    for (auto& x : image) x += 1000;
    std::shuffle(image.begin(), image.end(), rng);
    EdgeColouring out(c.size(), c.palette_size());
    for (std::uint32_t u = 0; u < c.size(); ++u)
        for (std::uint32_t v = u + 1; v < c.size(); ++v) {
            const auto pos = std::lower_bound(ids.begin(), ids.end(), c.colour(u, v)) - ids.begin();
            out.set(u, v, image[static_cast<std::size_t>(pos)]);
        }
    return out;
}

// A uniformly random valid word pair for rotational_cycle(q) over t symbols.
WordPair random_words(const RotationalModel& model, std::uint32_t t, std::mt19937_64& rng) {
    std::vector<std::uint8_t> a(model.class_count());
    std::uniform_int_distribution<int> d(0, static_cast<int>(t) - 1);
    for (auto& x : a) x = static_cast<std::uint8_t>(d(rng));
    return model.words(a);
}

}  // namespace

TEST_SUITE("colouring") {

TEST_CASE("basic colouring operations") {
    EdgeColouring mono(5, 1, 0);
    CHECK(colour_count(mono) == 1);
    EdgeColouring rainbow(4, 0);
    Colour next = 0;
    for (std::uint32_t u = 0; u < 4; ++u)
        for (std::uint32_t v = u + 1; v < 4; ++v) rainbow.set(u, v, next++);
    CHECK(colour_count(rainbow) == 6);
    CHECK(rainbow.colour(3, 1) == rainbow.colour(1, 3));
    CHECK_THROWS_AS((void)rainbow.colour(2, 2), InputError);
    CHECK_THROWS_AS((void)rainbow.colour(0, 4), InputError);
}

TEST_CASE("canonicalize") {
    EdgeColouring c(3, 0);
    c.set(0, 1, 5);
    c.set(0, 2, 9);
    c.set(1, 2, 5);
    const auto k = canonicalize(c);
    CHECK(k.pair_colours() == std::vector<Colour>{0, 1, 0});
    std::mt19937_64 rng(11);
    for (int s = 0; s < 50; ++s) {
        EdgeColouring x(7, 0);
        std::uniform_int_distribution<Colour> d(0, 30);
        for (std::uint32_t u = 0; u < 7; ++u)
            for (std::uint32_t v = u + 1; v < 7; ++v) x.set(u, v, d(rng));
        CHECK(canonicalize(canonicalize(x)) == canonicalize(x));
        CHECK(canonicalize(permute_colours(x, rng)) == canonicalize(x));
        CHECK(colour_count(canonicalize(x)) == oracle::naive_colour_count(x));
    }
    const auto fig = expand_words(fixtures::kK14Pair).base;
    CHECK(canonicalize(permute_colours(fig, rng)) == canonicalize(permute_colours(fig, rng)));
}

TEST_CASE("palette symbols") {
    CHECK(palette_symbol(0) == '0');
    CHECK(palette_symbol(10) == 'A');
    CHECK(palette_symbol(35) == 'Z');
    CHECK(palette_id('Z') == 35u);
    CHECK_FALSE(palette_id('*').has_value());
    CHECK_FALSE(palette_id('a').has_value());
    CHECK_THROWS(palette_symbol(36));
}

TEST_CASE("K14 pair expands to 23 colours") {
    const auto sc = expand_words(fixtures::kK14Pair);
    CHECK(sc.base.size() == 14);
    CHECK(colour_count(sc.base) == 23);
    CHECK(oracle::naive_colour_count(sc.base) == 23);
    CHECK(is_special(sc.base, sc.levi, sc.embedding()));
    CHECK(is_rotational(sc));
    CHECK(extract_words(sc) == fixtures::kK14Pair);
    CHECK_FALSE(fixtures::kK14Pair.reverse_property());
    CHECK(sc.labeling.offsets == std::vector<std::uint32_t>{1, 5, 13});
}

TEST_CASE("q=3 pair: structure and colour count") {
    const auto& w = fixtures::kQ3Pair;
    CHECK(w.w0.size() == 25);
    CHECK(w.w1.size() == 25);
    CHECK_NOTHROW(validate_words(w));
    CHECK(w.reverse_property());
    CHECK(std::string(w.w0.rbegin(), w.w0.rend()) == w.w1);
    CHECK(star_offsets(w.w0) == std::vector<std::uint32_t>{1, 7, 11, 25});
    const auto sc = expand_words(w);
    CHECK(colour_count(sc.base) == 54);
    CHECK(is_special(sc.base, sc.levi, sc.embedding()));
    CHECK(is_rotational(sc));
    CHECK(extract_words(sc) == w);
}

TEST_CASE("word symmetry holds on both printed pairs") {
    for (const auto& w : {fixtures::kK14Pair, fixtures::kQ3Pair}) {
        const auto n = static_cast<std::uint32_t>(w.w0.size() + 1);
        for (std::uint32_t d = 1; d < n; ++d) {
            if (d % 2 == 0) {
                CHECK(w.at(0, d) == w.at(0, n - d));
                CHECK(w.at(1, d) == w.at(1, n - d));
            } else {
                CHECK(w.at(0, d) == w.at(1, n - d));
            }
        }
    }
}

TEST_CASE("structural word errors") {
    auto bad = fixtures::kK14Pair;
    bad.w0[1] = '1';  // offset 2 vs offset 12
    CHECK_THROWS_WITH_AS(validate_words(bad), doctest::Contains("symmetric-position conflict at offset"), InputError);
    auto shortw = fixtures::kQ3Pair;
    shortw.w0.pop_back();
    CHECK_THROWS_AS(validate_words(shortw), InputError);
    CHECK_THROWS_AS(expand_words(shortw), InputError);
    auto nostar = fixtures::kK14Pair;
    nostar.w0[0] = '0';
    CHECK_THROWS_AS(validate_words(nostar), InputError);
    auto symbol = fixtures::kK14Pair;
    symbol.w1[2] = 'x';
    CHECK_THROWS_AS(validate_words(symbol), InputError);
    auto star_mismatch = fixtures::kK14Pair;
    star_mismatch.w0[2] = '*';  // offset 3 star without partner
    CHECK_THROWS_AS(validate_words(star_mismatch), InputError);
}

TEST_CASE("speciality") {
    auto sc = expand_words(fixtures::kK14Pair);
    const auto emb = sc.embedding();
    // Recolour one Levi edge (positions 0 and 1) to palette colour 0.
    sc.base.set(0, 1, 0);
    CHECK_FALSE(is_special(sc.base, sc.levi, emb));
    auto dup = emb;
    dup[1] = dup[0];
    CHECK_THROWS_AS(is_special(sc.base, sc.levi, dup), InputError);
}

TEST_CASE("non-rotational colouring is rejected with a witness") {
    auto sc = expand_words(fixtures::kK14Pair);
    // (0,2) is a palette edge; flip it.
    sc.base.set(0, 2, 1 - sc.base.colour(0, 2));
    CHECK_FALSE(is_rotational(sc));
    CHECK_THROWS_WITH_AS(extract_words(sc), doctest::Contains("not rotational"), InputError);
}

TEST_CASE("round trips over random word pairs") {
    std::mt19937_64 rng(2024);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const RotationalModel model(q);
        const int trials = q == 2 ? 50 : 20;
        for (int s = 0; s < trials; ++s) {
            const auto t = 1 + static_cast<std::uint32_t>(rng() % 4);
            const auto w = random_words(model, t, rng);
            const auto sc = expand_words(w);
            REQUIRE(extract_words(sc) == w);
            std::set<char> used;
            for (char ch : w.w0 + w.w1)
                if (ch != kStar) used.insert(ch);
            REQUIRE(colour_count(sc.base) == (q + 1) * (q * q + q + 1) + used.size());
            // expand . extract is the identity up to colour renaming
            const auto again = expand_words(extract_words(attach_levi(q, sc.base)));
            REQUIRE(canonicalize(again.base) == canonicalize(sc.base));
        }
    }
}

TEST_CASE("file formats round trip byte-exactly") {
    const auto sc = expand_words(fixtures::kQ3Pair);
    std::ostringstream a;
    write_colouring(a, sc.base);
    std::istringstream ain(a.str());
    const auto back = read_colouring(ain);
    CHECK(back == sc.base);
    std::ostringstream a2;
    write_colouring(a2, back);
    CHECK(a2.str() == a.str());
    CHECK(a.str().rfind("mrc 1\nn 26\npalette 2\n", 0) == 0);

    std::ostringstream w;
    write_words(w, fixtures::kQ3Pair);
    CHECK(w.str() == "q 3\nw0 *00001*001*1110100110010*\nw1 *0100110010111*100*10000*\n");
    std::istringstream win(w.str());
    CHECK(read_words(win) == fixtures::kQ3Pair);

    std::istringstream list("q 2\nw0 *001*1010100*\nw1 *1010000*101*\n\nq 2\nw0 *001*1010100*\nw1 *1000101*001*\n");
    CHECK(read_word_list(list).size() == 2);

    for (const char* bad : {"", "mrc 2\n", "mrc 1\nn 3\npalette 0\n0 1\n", "mrc 1\nn 3\npalette 0\n0 1 2\n3\n",
                            "mrc 1\nn 3\npalette 0\n0 x\n2\n"}) {
        std::istringstream is(bad);
        CHECK_THROWS_AS(read_colouring(is), InputError);
    }
    std::istringstream badw("q 2\nw0 *001*1010100*\n");
    CHECK_THROWS_AS(read_words(badw), InputError);
}

TEST_CASE("fano colouring") {
    const auto f = fano_colouring();
    const auto& sc = f.colouring;
    CHECK(colour_count(sc.base) == 23);
    CHECK(is_special(sc.base, sc.levi, sc.embedding()));
    CHECK(is_admissible(sc.base, 4).admissible);
    CHECK(oracle::naive_admissible(sc.base, 4));
    REQUIRE(f.point_cycle.size() == 7);
    REQUIRE(f.line_cycle.size() == 7);
    const auto& g = sc.levi.graph;
    for (std::size_t i = 0; i < 7; ++i) {
        const std::pair e{f.point_cycle[i], f.point_cycle[(i + 1) % 7]};
        CHECK(sc.levi.side[e.first] == Side::point);
        for (std::size_t j = 0; j < 7; ++j) {
            const std::pair e2{f.line_cycle[j], f.line_cycle[(j + 1) % 7]};
            CHECK(sc.levi.side[e2.first] == Side::line);
            // Minimum endpoint distance is exactly 1.
            const auto d = oracle::distances(14, [&](auto a, auto b) { return g.adjacent(a, b); });
            const auto mind = std::min({d[e.first][e2.first], d[e.first][e2.second], d[e.second][e2.first],
                                        d[e.second][e2.second]});
            CHECK(mind == 1);
            CHECK(edges_at_distance_one(g, e, e2));
        }
    }
    const auto words = extract_words(sc);
    CHECK(is_planar_difference_set(7, offsets_to_residues(star_offsets(words.w0), 7)));
    CHECK(is_rotational(sc));
    // Deterministic.
    CHECK(fano_colouring().colouring.base == sc.base);
}

}
