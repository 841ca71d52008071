#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mixr {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph with one adjacency bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::uint32_t n) : adj_(n, Bitset(n)) {}

    [[nodiscard]] std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(adj_.size()); }
    [[nodiscard]] bool adjacent(std::uint32_t u, std::uint32_t v) const { return adj_[u].test(v); }
    [[nodiscard]] const Bitset& neighbours(std::uint32_t u) const { return adj_[u]; }
    [[nodiscard]] std::uint32_t degree(std::uint32_t u) const {
        return static_cast<std::uint32_t>(adj_[u].count());
    }

    void add_edge(std::uint32_t u, std::uint32_t v);

    [[nodiscard]] std::uint64_t edge_count() const;
    /// Edges (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

private:
    std::vector<Bitset> adj_;
};

struct GraphStats {
    std::uint32_t vertices = 0;
    std::uint64_t edges = 0;
    std::optional<std::uint32_t> regular_degree;  // empty if not regular
    bool bipartite = false;
    std::optional<std::uint32_t> girth;     // empty: acyclic
    std::optional<std::uint32_t> diameter;  // empty: disconnected

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Exact statistics by breadth-first search from every vertex.
GraphStats graph_stats(const Graph& g);

}  // namespace mixr
