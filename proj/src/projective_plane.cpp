#include "mixr/projective_plane.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "mixr/error.hpp"

namespace mixr {

// ---------------------------------------------------------------------------
// Graph

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) throw InputError("self-loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

std::uint64_t Graph::edge_count() const {
    std::uint64_t total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < size(); ++u)
        for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<std::uint32_t>(v));
    return out;
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    const std::uint32_t n = g.size();
    s.vertices = n;
    s.edges = g.edge_count();
    if (n > 0) {
        const auto d0 = g.degree(0);
        bool regular = true;
        for (std::uint32_t v = 1; v < n && regular; ++v) regular = g.degree(v) == d0;
        if (regular) s.regular_degree = d0;
    }

    constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t girth = unseen;
    std::uint32_t diameter = 0;
    bool connected = true;
    bool bipartite = true;
    std::vector<std::uint32_t> dist(n), parent(n);
    for (std::uint32_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = unseen;
        std::deque<std::uint32_t> queue{root};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbours(u);
            for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
                const auto v = static_cast<std::uint32_t>(w);
                if (dist[v] == unseen) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    girth = std::min(girth, dist[u] + dist[v] + 1);
                    if (dist[u] == dist[v]) bipartite = false;
                }
            }
        }
        for (auto d : dist) {
            if (d == unseen) {
                connected = false;
            } else {
                diameter = std::max(diameter, d);
            }
        }
    }
    s.bipartite = bipartite;
    if (girth != unseen) s.girth = girth;
    if (connected) s.diameter = diameter;
    return s;
}

// ---------------------------------------------------------------------------
// Plane

namespace {

FieldTable::Code triple_code(const Triple& t, std::uint32_t q) { return (t[0] * q + t[1]) * q + t[2]; }

FieldTable::Code dot(const FieldTable& f, const Triple& a, const Triple& b) {
    FieldTable::Code acc = 0;
    for (int i = 0; i < 3; ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

Triple cross(const FieldTable& f, const Triple& a, const Triple& b) {
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

Triple to_triple(const FieldElement& e) { return {e.coeffs[0], e.coeffs[1], e.coeffs[2]}; }

}  // namespace

Triple IncidencePlane::normalize(Triple t) const {
    const auto& f = *field_;
    for (std::size_t i = 0; i < 3; ++i) {
        if (t[i] != 0) {
            const auto s = f.inv(t[i]);
            for (auto& c : t) c = f.mul(c, s);
            return t;
        }
    }
    throw InputError("the zero vector spans no point");
}

std::uint32_t IncidencePlane::point_index(const Triple& t) const {
    return index_of_[triple_code(normalize(t), q_)];
}

std::uint32_t IncidencePlane::line_index(const Triple& dual) const { return point_index(dual); }

IncidencePlane build_plane(std::uint32_t q, std::uint32_t cap) {
    if (q > cap) throw InputError("plane order " + std::to_string(q) + " exceeds the cap of " + std::to_string(cap));
    const auto pp = PrimePower::from_order(q);
    IncidencePlane plane;
    plane.q_ = q;
    plane.field_ = std::make_shared<const FieldTable>(FieldTable::build(pp.p, pp.k));
    plane.index_of_.assign(std::size_t{q} * q * q, 0);
    for (FieldTable::Code a = 0; a < q; ++a)
        for (FieldTable::Code b = 0; b < q; ++b)
            for (FieldTable::Code c = 0; c < q; ++c) {
                const Triple t{a, b, c};
                const bool normalized = (a == 1) || (a == 0 && b == 1) || (a == 0 && b == 0 && c == 1);
                if (!normalized) continue;
                plane.index_of_[triple_code(t, q)] = static_cast<std::uint32_t>(plane.points_.size());
                plane.points_.push_back({t});
            }
    const auto n = static_cast<std::uint32_t>(plane.points_.size());
    plane.incidence_.assign(n, Bitset(n));
    plane.lines_.resize(n);
    for (std::uint32_t l = 0; l < n; ++l) {
        auto& line = plane.lines_[l];
        line.dual_coords = plane.points_[l].coords;
        for (std::uint32_t p = 0; p < n; ++p) {
            if (dot(*plane.field_, plane.points_[p].coords, line.dual_coords) == 0) {
                line.point_ids.push_back(p);
                plane.incidence_[p].set(l);
            }
        }
    }
    return plane;
}

LeviGraph levi_graph(const IncidencePlane& plane) {
    const auto n = plane.size();
    LeviGraph levi;
    levi.q = plane.order();
    levi.graph = Graph(2 * n);
    levi.side.assign(2 * n, Side::point);
    std::fill(levi.side.begin() + n, levi.side.end(), Side::line);
    for (std::uint32_t l = 0; l < n; ++l)
        for (auto p : plane.lines()[l].point_ids) levi.graph.add_edge(p, n + l);
    return levi;
}

// ---------------------------------------------------------------------------
// Rotational Hamilton cycles

CyclicLabeling rotational_cycle(const IncidencePlane& plane) {
    const auto cubic = FieldTable::extend(plane.field_ptr(), 3);
    const auto& f = plane.field();
    const auto n = plane.size();
    CyclicLabeling lab;
    lab.order.reserve(2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        // Index i + 1 wraps to alpha^0 at i = n - 1, the same line as through alpha^n.
        const auto a = to_triple(cubic.element(cubic.power(i)));
        const auto b = to_triple(cubic.element(cubic.power(i + 1)));
        lab.order.push_back(plane.point_index(a));
        lab.order.push_back(n + plane.line_index(cross(f, a, b)));
    }
    Graph g = levi_graph(plane).graph;
    lab.offsets = labeling_offsets(g, lab.order);
    return lab;
}

CyclicLabeling rotational_cycle(std::uint32_t q, std::uint32_t cap) {
    return rotational_cycle(build_plane(q, cap));
}

bool singer_incident(const FieldTable& cubic, std::int64_t i, std::int64_t j) {
    const FieldTable* f = cubic.base();
    if (f == nullptr || cubic.degree() != 3) throw InputError("expected a cubic extension");
    const auto a = to_triple(cubic.element(cubic.power(i)));
    const auto b = to_triple(cubic.element(cubic.power(j)));
    const auto c = to_triple(cubic.element(cubic.power(j + 1)));
    return dot(*f, a, cross(*f, b, c)) == 0;
}

std::vector<std::uint32_t> labeling_offsets(const Graph& g, std::span<const std::uint32_t> order) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 1; d < order.size(); ++d)
        if (g.adjacent(order[0], order[d])) out.push_back(d);
    return out;
}

namespace {

void require_permutation(std::uint32_t n, std::span<const std::uint32_t> order) {
    if (order.size() != n)
        throw InputError("labeling has " + std::to_string(order.size()) + " entries, graph has " +
                         std::to_string(n) + " vertices");
    std::vector<bool> seen(n, false);
    for (auto v : order) {
        if (v >= n || seen[v]) throw InputError("labeling is not a permutation of the vertices");
        seen[v] = true;
    }
}

}  // namespace

bool verify_rotational(const LeviGraph& levi, const CyclicLabeling& labeling) {
    const auto n = levi.size();
    const auto& order = labeling.order;
    require_permutation(n, order);
    const auto& g = levi.graph;
    for (std::uint32_t i = 0; i < n; ++i)
        if (!g.adjacent(order[i], order[(i + 1) % n])) return false;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (g.adjacent(order[i], order[j]) != g.adjacent(order[(i + 2) % n], order[(j + 2) % n]))
                return false;
    return true;
}

std::set<std::uint32_t> offsets_to_residues(std::span<const std::uint32_t> offsets, std::uint32_t modulus) {
    std::set<std::uint32_t> out;
    for (auto d : offsets) {
        if (d % 2 == 0) throw InputError("even offset " + std::to_string(d) + " cannot join a point to a line");
        out.insert(((d - 1) / 2) % modulus);
    }
    return out;
}

bool is_planar_difference_set(std::uint32_t modulus, const std::set<std::uint32_t>& residues) {
    if (modulus == 0) throw InputError("modulus must be positive");
    std::vector<std::uint32_t> hits(modulus, 0);
    for (auto a : residues) {
        if (a >= modulus) throw InputError("residue " + std::to_string(a) + " out of range");
        for (auto b : residues)
            if (a != b) ++hits[(a + modulus - b) % modulus];
    }
    for (std::uint32_t r = 1; r < modulus; ++r)
        if (hits[r] != 1) return false;
    return true;
}

namespace {

// Embeds the cyclic incidence structure of an offset set into a Levi graph by
// backtracking along the Hamilton cycle.
class OffsetEmbedder {
public:
    OffsetEmbedder(const LeviGraph& levi, std::span<const std::uint32_t> offsets)
        : levi_(levi), n_(levi.size()), wanted_(n_, false), order_(n_), used_(n_, false) {
        for (auto d : offsets) wanted_[d] = true;
    }

    bool run() {
        for (std::uint32_t p = 0; p < levi_.plane_size(); ++p) {
            if (place(0, p)) return true;
        }
        return false;
    }

    [[nodiscard]] const std::vector<std::uint32_t>& order() const { return order_; }

private:
    // Target adjacency between positions i and k.
    [[nodiscard]] bool target(std::uint32_t i, std::uint32_t k) const {
        if ((i % 2) == (k % 2)) return false;
        const auto [even, odd] = i % 2 == 0 ? std::pair{i, k} : std::pair{k, i};
        return wanted_[(odd + n_ - even) % n_];
    }

    bool place(std::uint32_t pos, std::uint32_t v) {
        for (std::uint32_t i = 0; i < pos; ++i)
            if (levi_.graph.adjacent(order_[i], v) != target(i, pos)) return false;
        order_[pos] = v;
        used_[v] = true;
        if (pos + 1 == n_) return true;
        const auto& nb = levi_.graph.neighbours(v);
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
            if (!used_[w] && place(pos + 1, static_cast<std::uint32_t>(w))) return true;
        }
        used_[v] = false;
        return false;
    }

    const LeviGraph& levi_;
    std::uint32_t n_;
    std::vector<bool> wanted_;
    std::vector<std::uint32_t> order_;
    std::vector<bool> used_;
};

}  // namespace

CyclicLabeling labeling_with_offsets(const LeviGraph& levi, std::span<const std::uint32_t> offsets) {
    const auto n = levi.size();
    const auto q = levi.q;
    std::vector<std::uint32_t> sorted(offsets.begin(), offsets.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto d : sorted)
        if (d == 0 || d >= n) throw InputError("offset " + std::to_string(d) + " out of range");
    if (sorted.size() != q + 1) throw InputError("offset set must have q+1 elements");
    if (sorted.front() != 1 || sorted.back() != n - 1)
        throw InputError("offsets 1 and n-1 are required for a Hamilton cycle");
    if (!is_planar_difference_set(levi.plane_size(), offsets_to_residues(sorted, levi.plane_size())))
        throw InputError("offsets do not map to a planar difference set");
    OffsetEmbedder embed(levi, sorted);
    if (!embed.run()) throw InputError("no rotational labeling with the requested offsets");
    return {embed.order(), sorted};
}

// ---------------------------------------------------------------------------
// Dumps

void write_plane(std::ostream& os, const IncidencePlane& plane) {
    os << "plane q=" << plane.order() << '\n';
    for (const auto& line : plane.lines()) {
        for (std::size_t i = 0; i < line.point_ids.size(); ++i) os << (i ? " " : "") << line.point_ids[i];
        os << '\n';
    }
}

void write_graph(std::ostream& os, const Graph& g) {
    os << "graph n=" << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

}  // namespace mixr
