#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gentle/algebra.hpp"

namespace gentle {

// One end of an arc; side is 0 or 1.
struct End {
    int arc = 0;
    int side = 0;
    friend bool operator==(const End&, const End&) = default;
};

struct SurfaceArc {
    std::string id;
    std::array<int, 2> point{0, 0};  // open marked point at each end
};

// A corner between consecutive fan arcs at an open point carries one arrow.
struct Corner {
    std::string arrow;  // empty means "generated"
    int grade = 0;
};

enum class Topology { Disk, Annulus, Other };

// Combinatorial marked surface with an arc system on the open (∘) points.
// Each marked boundary component lists its open points in boundary order; a closed (•)
// point sits between each open point and its successor. Fans list the arc ends at an
// open point so that consecutive ends bound a polygon corner carrying an arrow fan[i] -> fan[i+1].
struct Surface {
    std::vector<std::vector<int>> boundary;
    std::vector<std::string> point_ids;
    std::vector<std::vector<End>> fans;
    std::vector<std::vector<Corner>> corners;  // per point, fans[p].size() - 1 entries
    std::vector<SurfaceArc> arcs;
    int unmarked = 0;  // boundary components without marked points

    int num_points() const { return static_cast<int>(point_ids.size()); }
    int num_arcs() const { return static_cast<int>(arcs.size()); }
    int component_of(int point) const;
    int index_in_component(int point) const;
    int next_point(int point) const;
    int position(int point) const { return 2 * index_in_component(point); }
    int fan_index(End e) const;
    int point_of(End e) const { return arcs[e.arc].point[e.side]; }
    int euler_characteristic() const;
    int boundary_components() const { return static_cast<int>(boundary.size()) + unmarked; }
    int genus() const;
    Topology topology() const;
    // Structural checks: indices in range, each end listed in exactly one fan at its point.
    void check_structure() const;
};

// A side of a polygon: either an arc traversed from `from` to the opposite end, or the
// boundary segment starting at `point`.
struct PolygonSide {
    bool is_arc = true;
    End from;       // arc sides
    int point = 0;  // segment sides
};

struct ElementaryPolygon {
    std::vector<PolygonSide> sides;  // cyclic
    int arc_edges = 0;
    int boundary_edges = 0;
    bool unmarked = false;  // surrounds an unmarked boundary component
    int total_edges() const { return arc_edges + boundary_edges; }
};

std::vector<ElementaryPolygon> elementary_polygons(const Surface& s);

struct FfasCheck {
    bool ok = true;
    std::string violation;
};
FfasCheck check_ffas(const Surface& s);

// One surface per connected component of p.
std::vector<Surface> surface_from_algebra(const Presentation& p);
Surface surface_of_connected_algebra(const Presentation& p);
Presentation algebra_from_surface(const Surface& s);

// Closed points of each component are extra when their polygon is a digon.
// Returned per component, indexed by the open point preceding the closed point.
std::vector<std::vector<bool>> extra_points(const Surface& s);

// Nothing means infinite.
std::optional<int> global_dimension_geometric(const Surface& s);
std::optional<int> global_dimension_geometric(const Presentation& p);

std::string topology_name(Topology t);

}  // namespace gentle
