#include "mixr/colouring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "mixr/error.hpp"

namespace mixr {

// ---------------------------------------------------------------------------
// EdgeColouring

EdgeColouring::EdgeColouring(std::uint32_t n, std::uint32_t palette_size, Colour fill)
    : n_(n), palette_(palette_size), colours_(std::size_t{n} * (n == 0 ? 0 : n - 1) / 2, fill) {}

std::size_t EdgeColouring::pair_index(std::uint32_t u, std::uint32_t v) const {
    if (u == v || u >= n_ || v >= n_) throw InputError("invalid vertex pair");
    if (u > v) std::swap(u, v);
    // Rows 0..u-1 hold (n-1) + (n-2) + ... + (n-u) pairs.
    return std::size_t{u} * (2 * std::size_t{n_} - u - 1) / 2 + (v - u - 1);
}

std::uint32_t colour_count(const EdgeColouring& c) {
    std::vector<Colour> ids = c.pair_colours();
    std::sort(ids.begin(), ids.end());
    return static_cast<std::uint32_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

EdgeColouring canonicalize(const EdgeColouring& c) {
    EdgeColouring out(c.size(), c.palette_size());
    std::unordered_map<Colour, Colour> rename;
    const auto& src = c.pair_colours();
    for (std::uint32_t u = 0; u < c.size(); ++u)
        for (std::uint32_t v = u + 1; v < c.size(); ++v) {
            const auto [it, fresh] = rename.try_emplace(src[c.pair_index(u, v)], static_cast<Colour>(rename.size()));
            out.set(u, v, it->second);
        }
    return out;
}

namespace {

std::unordered_map<Colour, std::uint32_t> colour_histogram(const EdgeColouring& c) {
    std::unordered_map<Colour, std::uint32_t> counts;
    for (auto col : c.pair_colours()) ++counts[col];
    return counts;
}

}  // namespace

bool is_special(const EdgeColouring& c, const LeviGraph& levi, std::span<const std::uint32_t> embedding) {
    if (embedding.size() != levi.size()) throw InputError("embedding size does not match the Levi graph");
    std::vector<bool> hit(c.size(), false);
    for (auto v : embedding) {
        if (v >= c.size() || hit[v]) throw InputError("embedding is not injective");
        hit[v] = true;
    }
    const auto counts = colour_histogram(c);
    for (const auto& [u, v] : levi.graph.edges())
        if (counts.at(c.colour(embedding[u], embedding[v])) != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Words

char palette_symbol(Colour id) {
    if (id < 10) return static_cast<char>('0' + id);
    if (id < kMaxPalette) return static_cast<char>('A' + (id - 10));
    throw InputError("palette colour " + std::to_string(id) + " has no word symbol");
}

std::optional<Colour> palette_id(char symbol) {
    if (symbol >= '0' && symbol <= '9') return static_cast<Colour>(symbol - '0');
    if (symbol >= 'A' && symbol <= 'Z') return static_cast<Colour>(symbol - 'A' + 10);
    return std::nullopt;
}

bool WordPair::reverse_property() const { return std::string(w0.rbegin(), w0.rend()) == w1; }

std::vector<std::uint32_t> star_offsets(const std::string& word) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == kStar) out.push_back(static_cast<std::uint32_t>(i + 1));
    return out;
}

void validate_words(const WordPair& words) {
    PrimePower::from_order(words.q);
    const auto n = levi_order(words.q);
    for (int w = 0; w < 2; ++w) {
        const auto& s = w ? words.w1 : words.w0;
        if (s.size() != n - 1)
            throw InputError("word w" + std::to_string(w) + " has length " + std::to_string(s.size()) +
                             ", expected " + std::to_string(n - 1));
        for (auto ch : s)
            if (ch != kStar && !palette_id(ch))
                throw InputError(std::string("invalid word symbol '") + ch + "'");
    }
    if (words.at(0, 1) != kStar || words.at(1, 1) != kStar)
        throw InputError("offset 1 must be '*' in both words");
    for (std::uint32_t d = 1; d < n; ++d) {
        for (int w = 0; w < 2; ++w) {
            const char here = words.at(w, d);
            // The edge v_i v_{i+d} seen from v_{i+d}: offset n-d in the word of v_{i+d}'s parity.
            const int other_word = d % 2 == 0 ? w : 1 - w;
            const char there = words.at(other_word, n - d);
            if (d % 2 == 0 && here == kStar)
                throw InputError("'*' at even offset " + std::to_string(d) + " joins two vertices of one side");
            if ((here == kStar) != (there == kStar))
                throw InputError("star mismatch at offset " + std::to_string(d));
            if (here != there)
                throw InputError("symmetric-position conflict at offset " + std::to_string(d));
        }
    }
}

std::vector<std::uint32_t> SpecialColouring::embedding() const {
    std::vector<std::uint32_t> emb(labeling.order.size());
    for (std::uint32_t pos = 0; pos < labeling.order.size(); ++pos) emb[labeling.order[pos]] = pos;
    return emb;
}

namespace {

std::vector<std::uint32_t> odd_offsets(const LeviGraph& levi, const CyclicLabeling& lab) {
    const auto n = static_cast<std::uint32_t>(lab.order.size());
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 1; d < n; ++d)
        if (levi.graph.adjacent(lab.order[1], lab.order[(1 + d) % n])) out.push_back(d);
    return out;
}

CyclicLabeling labeling_for_offsets(const LeviGraph& levi, std::span<const std::uint32_t> offsets) {
    auto lab = rotational_cycle(build_plane(levi.q));
    if (std::equal(lab.offsets.begin(), lab.offsets.end(), offsets.begin(), offsets.end())) return lab;
    return labeling_with_offsets(levi, offsets);
}

}  // namespace

SpecialColouring expand_words(const LeviGraph& levi, const CyclicLabeling& labeling, const WordPair& words) {
    validate_words(words);
    const auto n = levi_order(words.q);
    if (levi.size() != n || labeling.order.size() != n)
        throw InputError("word length does not match the labeling");
    if (star_offsets(words.w0) != labeling_offsets(levi.graph, labeling.order))
        throw InputError("star pattern of w0 differs from the labeling's offsets");
    if (star_offsets(words.w1) != odd_offsets(levi, labeling))
        throw InputError("star pattern of w1 differs from the labeling's offsets");

    Colour palette = 0;
    for (const auto* s : {&words.w0, &words.w1})
        for (auto ch : *s)
            if (auto id = palette_id(ch)) palette = std::max(palette, *id + 1);

    SpecialColouring out{EdgeColouring(n, palette), labeling, levi};
    Colour next_unique = palette;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const char sym = words.at(static_cast<int>(i % 2), j - i);
            if (sym == kStar) {
                if (!levi.graph.adjacent(labeling.order[i], labeling.order[j]))
                    throw InputError("labeling is not rotational: star offset joins non-adjacent vertices");
                out.base.set(i, j, next_unique++);
            } else {
                out.base.set(i, j, *palette_id(sym));
            }
        }
    return out;
}

SpecialColouring expand_words(const WordPair& words) {
    validate_words(words);
    const auto levi = levi_graph(build_plane(words.q));
    const auto offsets = star_offsets(words.w0);
    return expand_words(levi, labeling_for_offsets(levi, offsets), words);
}

namespace {

struct RotationScan {
    WordPair words;
    std::optional<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>>> conflict;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> shared_star;
};

RotationScan scan_rotation(const SpecialColouring& sc) {
    const auto n = sc.base.size();
    if (sc.levi.size() != n || sc.labeling.order.size() != n)
        throw InputError("colouring, labeling and Levi graph sizes differ");
    const auto counts = colour_histogram(sc.base);
    RotationScan scan;
    scan.words.q = sc.levi.q;
    scan.words.w0.assign(n - 1, '\0');
    scan.words.w1.assign(n - 1, '\0');
    // First pair that wrote each slot, for witnesses.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> origin(2 * n, {0, 0});
    auto slot = [&](int word, std::uint32_t d) -> char& { return (word ? scan.words.w1 : scan.words.w0)[d - 1]; };
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            char sym;
            const auto col = sc.base.colour(i, j);
            if (sc.levi.graph.adjacent(sc.labeling.order[i], sc.labeling.order[j])) {
                sym = kStar;
                if (counts.at(col) != 1 && !scan.shared_star) scan.shared_star = {i, j};
            } else {
                if (col >= kMaxPalette) throw InputError("palette colour " + std::to_string(col) + " has no word symbol");
                sym = palette_symbol(col);
            }
            const std::uint32_t d = j - i;
            const std::pair<int, std::uint32_t> views[2] = {{static_cast<int>(i % 2), d},
                                                            {static_cast<int>(j % 2), n - d}};
            for (const auto& [w, off] : views) {
                char& s = slot(w, off);
                const auto key = static_cast<std::size_t>(w) * n + off;
                if (s == '\0') {
                    s = sym;
                    origin[key] = {i, j};
                } else if (s != sym && !scan.conflict) {
                    scan.conflict = {origin[key], {i, j}};
                }
            }
        }
    return scan;
}

}  // namespace

WordPair extract_words(const SpecialColouring& colouring) {
    const auto scan = scan_rotation(colouring);
    if (scan.conflict) {
        const auto& [a, b] = *scan.conflict;
        std::ostringstream msg;
        msg << "colouring is not rotational: pairs (" << a.first << "," << a.second << ") and (" << b.first
            << "," << b.second << ") give conflicting words";
        throw InputError(msg.str());
    }
    if (scan.shared_star) {
        std::ostringstream msg;
        msg << "colouring is not special: Levi edge at positions (" << scan.shared_star->first << ","
            << scan.shared_star->second << ") shares its colour";
        throw InputError(msg.str());
    }
    return scan.words;
}

bool is_rotational(const SpecialColouring& colouring) {
    try {
        return !scan_rotation(colouring).conflict.has_value();
    } catch (const InputError&) {
        return false;
    }
}

SpecialColouring attach_levi(std::uint32_t q, const EdgeColouring& colouring) {
    const auto n = levi_order(q);
    if (colouring.size() != n)
        throw InputError("colouring has " + std::to_string(colouring.size()) + " vertices, expected " +
                         std::to_string(n));
    const auto counts = colour_histogram(colouring);
    std::vector<std::uint32_t> offsets;
    for (std::uint32_t d = 1; d < n; ++d)
        if (counts.at(colouring.colour(0, d)) == 1) offsets.push_back(d);
    auto levi = levi_graph(build_plane(q));
    auto labeling = labeling_for_offsets(levi, offsets);
    return {colouring, std::move(labeling), std::move(levi)};
}

// ---------------------------------------------------------------------------
// The 7-cycle construction

bool edges_at_distance_one(const Graph& g, std::pair<std::uint32_t, std::uint32_t> e,
                           std::pair<std::uint32_t, std::uint32_t> f) {
    return g.adjacent(e.first, f.first) || g.adjacent(e.first, f.second) || g.adjacent(e.second, f.first) ||
           g.adjacent(e.second, f.second);
}

namespace {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

Edge make_edge(std::uint32_t a, std::uint32_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::vector<Edge> cycle_edges(const std::vector<std::uint32_t>& cycle) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    std::sort(out.begin(), out.end());
    return out;
}

// Hamilton cycles on `vertices` (sorted), each written from the smallest vertex
// with its smaller neighbour second, in lexicographic order.
std::vector<std::vector<std::uint32_t>> all_cycles(const std::vector<std::uint32_t>& vertices) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> rest(vertices.begin() + 1, vertices.end());
    do {
        if (rest.front() < rest.back()) {
            std::vector<std::uint32_t> c{vertices.front()};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

FanoConstruction fano_colouring() {
    const auto plane = build_plane(2);
    auto levi = levi_graph(plane);
    auto labeling = rotational_cycle(plane);
    const auto n = levi.size();
    const auto half = levi.plane_size();
    const auto& g = levi.graph;

    // The shift-by-2 automorphism of the labeling, as a map on Levi vertices.
    std::vector<std::uint32_t> shift(n);
    for (std::uint32_t i = 0; i < n; ++i) shift[labeling.order[i]] = labeling.order[(i + 2) % n];
    auto invariant = [&](const std::vector<Edge>& edges) {
        std::vector<Edge> image;
        for (const auto& [a, b] : edges) image.push_back(make_edge(shift[a], shift[b]));
        std::sort(image.begin(), image.end());
        return image == edges;
    };

    std::vector<std::uint32_t> points(half), lines(half);
    for (std::uint32_t i = 0; i < half; ++i) {
        points[i] = i;
        lines[i] = half + i;
    }
    std::vector<std::pair<std::vector<std::uint32_t>, std::vector<Edge>>> point_cycles, line_cycles;
    for (auto& c : all_cycles(points)) {
        auto e = cycle_edges(c);
        if (invariant(e)) point_cycles.emplace_back(std::move(c), std::move(e));
    }
    for (auto& c : all_cycles(lines)) {
        auto e = cycle_edges(c);
        if (invariant(e)) line_cycles.emplace_back(std::move(c), std::move(e));
    }

    for (const auto& [pc, pe] : point_cycles)
        for (const auto& [lc, le] : line_cycles) {
            const bool ok = std::all_of(pe.begin(), pe.end(), [&](const Edge& e) {
                return std::all_of(le.begin(), le.end(), [&](const Edge& f) { return edges_at_distance_one(g, e, f); });
            });
            if (!ok) continue;

            std::vector<std::uint32_t> pos(n);
            for (std::uint32_t i = 0; i < n; ++i) pos[labeling.order[i]] = i;
            EdgeColouring base(n, 2);
            for (std::uint32_t u = 0; u < n; ++u)
                for (std::uint32_t v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) continue;  // unique colours below
                    Colour c = 0;
                    if (u < half && v < half) {
                        c = std::binary_search(pe.begin(), pe.end(), Edge{u, v}) ? 0 : 1;
                    } else if (u >= half && v >= half) {
                        c = std::binary_search(le.begin(), le.end(), Edge{u, v}) ? 0 : 1;
                    }
                    base.set(pos[u], pos[v], c);
                }
            Colour next_unique = 2;
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j)
                    if (g.adjacent(labeling.order[i], labeling.order[j])) base.set(i, j, next_unique++);
            return {{std::move(base), std::move(labeling), std::move(levi)}, pc, lc};
        }
    throw std::logic_error("no admissible pair of 7-cycles found");
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string next_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line)) throw InputError(std::string("unexpected end of input, expected ") + what);
    return line;
}

std::uint64_t parse_keyword_value(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string k;
    std::uint64_t v = 0;
    std::string extra;
    if (!(ss >> k >> v) || k != key || (ss >> extra)) throw InputError("expected '" + key + " <int>', got '" + line + "'");
    return v;
}

}  // namespace

void write_colouring(std::ostream& os, const EdgeColouring& c) {
    os << "mrc 1\n" << "n " << c.size() << '\n' << "palette " << c.palette_size() << '\n';
    for (std::uint32_t i = 0; i + 1 < c.size(); ++i) {
        for (std::uint32_t j = i + 1; j < c.size(); ++j) os << (j > i + 1 ? " " : "") << c.colour(i, j);
        os << '\n';
    }
}

EdgeColouring read_colouring(std::istream& is) {
    if (next_line(is, "header") != "mrc 1") throw InputError("not an mrc version 1 file");
    const auto n = parse_keyword_value(next_line(is, "'n <n>'"), "n");
    const auto t = parse_keyword_value(next_line(is, "'palette <t>'"), "palette");
    if (n > 100000) throw InputError("vertex count too large");
    EdgeColouring c(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(t));
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        std::istringstream row(next_line(is, "a colour row"));
        for (std::uint32_t j = i + 1; j < n; ++j) {
            std::uint64_t col = 0;
            if (!(row >> col) || col > 0xffffffffu) throw InputError("row " + std::to_string(i) + " is short or malformed");
            c.set(i, j, static_cast<Colour>(col));
        }
        std::string extra;
        if (row >> extra) throw InputError("row " + std::to_string(i) + " has extra entries");
    }
    return c;
}

void write_words(std::ostream& os, const WordPair& words) {
    os << "q " << words.q << '\n' << "w0 " << words.w0 << '\n' << "w1 " << words.w1 << '\n';
}

namespace {

std::string parse_word_line(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string k, w, extra;
    if (!(ss >> k >> w) || k != key || (ss >> extra)) throw InputError("expected '" + key + " <word>', got '" + line + "'");
    return w;
}

}  // namespace

WordPair read_words(std::istream& is) {
    WordPair words;
    words.q = static_cast<std::uint32_t>(parse_keyword_value(next_line(is, "'q <q>'"), "q"));
    words.w0 = parse_word_line(next_line(is, "'w0 <word>'"), "w0");
    words.w1 = parse_word_line(next_line(is, "'w1 <word>'"), "w1");
    return words;
}

std::vector<WordPair> read_word_list(std::istream& is) {
    std::vector<WordPair> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto w0 = next_line(is, "'w0 <word>'");
        const auto w1 = next_line(is, "'w1 <word>'");
        std::istringstream block(line + '\n' + w0 + '\n' + w1 + '\n');
        out.push_back(read_words(block));
    }
    return out;
}

}  // namespace mixr
