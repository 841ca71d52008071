#pragma once

// The Desarguesian plane PG(2,q), its incidence (Levi) graph and rotational
// Hamilton cycles of that graph.

#include <array>
#include <cstdint>
#include <memory>
#include <ostream>
#include <set>
#include <span>
#include <vector>

#include "mixr/finite_field.hpp"
#include "mixr/graph.hpp"

namespace mixr {

inline constexpr std::uint32_t kDefaultPlaneCap = 32;

using Triple = std::array<FieldTable::Code, 3>;

struct ProjectivePoint {
    Triple coords;  // first nonzero coordinate is 1
};

struct ProjectiveLine {
    std::vector<std::uint32_t> point_ids;  // sorted, q+1 entries
    Triple dual_coords;                    // normalized like a point
};

class IncidencePlane {
public:
    [[nodiscard]] std::uint32_t order() const noexcept { return q_; }
    /// q^2 + q + 1.
    [[nodiscard]] std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(points_.size()); }
    [[nodiscard]] const FieldTable& field() const noexcept { return *field_; }
    [[nodiscard]] std::shared_ptr<const FieldTable> field_ptr() const noexcept { return field_; }
    [[nodiscard]] const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<ProjectiveLine>& lines() const noexcept { return lines_; }

    [[nodiscard]] bool incident(std::uint32_t point, std::uint32_t line) const {
        return incidence_[point].test(line);
    }
    /// Scales a nonzero triple so its first nonzero coordinate is 1.
    [[nodiscard]] Triple normalize(Triple t) const;
    /// Index of the point spanned by a nonzero vector.
    [[nodiscard]] std::uint32_t point_index(const Triple& t) const;
    /// Index of the line with the given (not necessarily normalized) dual coordinates.
    [[nodiscard]] std::uint32_t line_index(const Triple& dual) const;

private:
    friend IncidencePlane build_plane(std::uint32_t q, std::uint32_t cap);

    std::uint32_t q_ = 0;
    std::shared_ptr<const FieldTable> field_;
    std::vector<ProjectivePoint> points_;
    std::vector<ProjectiveLine> lines_;
    std::vector<Bitset> incidence_;         // [point] -> lines through it
    std::vector<std::uint32_t> index_of_;  // normalized triple code -> index
};

enum class Side : std::uint8_t { point, line };

/// Bipartite incidence graph; vertices 0..N-1 are points, N..2N-1 are lines.
struct LeviGraph {
    std::uint32_t q = 0;
    Graph graph;
    std::vector<Side> side;

    [[nodiscard]] std::uint32_t size() const noexcept { return graph.size(); }
    [[nodiscard]] std::uint32_t plane_size() const noexcept { return graph.size() / 2; }
};

/// Vertex ordering v_0 ... v_{n-1} of a Levi graph together with the offsets d
/// for which v_0 v_d is an edge.
struct CyclicLabeling {
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> offsets;

    friend bool operator==(const CyclicLabeling&, const CyclicLabeling&) = default;
};

/// 2(q^2 + q + 1).
[[nodiscard]] constexpr std::uint32_t levi_order(std::uint32_t q) { return 2 * (q * q + q + 1); }

IncidencePlane build_plane(std::uint32_t q, std::uint32_t cap = kDefaultPlaneCap);
LeviGraph levi_graph(const IncidencePlane& plane);

/// The Singer-type construction: p_i = <alpha^i>, l_i = <alpha^i, alpha^{i+1}>,
/// ordered p_0, l_0, p_1, l_1, ... with alpha primitive in GF(q^3).
CyclicLabeling rotational_cycle(const IncidencePlane& plane);
CyclicLabeling rotational_cycle(std::uint32_t q, std::uint32_t cap = kDefaultPlaneCap);

/// Incidence of p_i on l_j decided by the determinant of the coordinates of
/// alpha^i, alpha^j, alpha^{j+1} over GF(q).
bool singer_incident(const FieldTable& cubic, std::int64_t i, std::int64_t j);

/// Hamiltonicity plus shift-by-2 automorphism, checked over all vertex pairs.
/// Throws InputError if the labeling is not a permutation of the vertices.
bool verify_rotational(const LeviGraph& levi, const CyclicLabeling& labeling);

/// Offsets d with labeling.order[0] adjacent to labeling.order[d].
std::vector<std::uint32_t> labeling_offsets(const Graph& g, std::span<const std::uint32_t> order);

/// Finds a rotational labeling of `levi` with points at even positions whose
/// offset set is `offsets`. Throws InputError if none exists.
CyclicLabeling labeling_with_offsets(const LeviGraph& levi, std::span<const std::uint32_t> offsets);

/// Maps even-to-odd offsets d to residues (d - 1) / 2 mod (q^2 + q + 1).
std::set<std::uint32_t> offsets_to_residues(std::span<const std::uint32_t> offsets, std::uint32_t modulus);

bool is_planar_difference_set(std::uint32_t modulus, const std::set<std::uint32_t>& residues);

void write_plane(std::ostream& os, const IncidencePlane& plane);
void write_graph(std::ostream& os, const Graph& g);

}  // namespace mixr
