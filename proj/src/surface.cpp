#include "gentle/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gentle {

int Surface::component_of(int point) const {
    for (std::size_t c = 0; c < boundary.size(); ++c)
        for (int q : boundary[c])
            if (q == point) return static_cast<int>(c);
    throw InputError("point " + point_ids.at(point) + " is not on a boundary component");
}

int Surface::index_in_component(int point) const {
    for (const auto& comp : boundary)
        for (std::size_t i = 0; i < comp.size(); ++i)
            if (comp[i] == point) return static_cast<int>(i);
    throw InputError("point " + point_ids.at(point) + " is not on a boundary component");
}

int Surface::next_point(int point) const {
    const auto& comp = boundary[component_of(point)];
    return comp[(index_in_component(point) + 1) % comp.size()];
}

int Surface::fan_index(End e) const {
    const auto& fan = fans[point_of(e)];
    for (std::size_t i = 0; i < fan.size(); ++i)
        if (fan[i] == e) return static_cast<int>(i);
    throw ConsistencyError("arc end missing from its fan");
}

int Surface::euler_characteristic() const { return num_points() - num_arcs(); }

int Surface::genus() const { return (2 - euler_characteristic() - boundary_components()) / 2; }

Topology Surface::topology() const {
    if (genus() != 0) return Topology::Other;
    if (boundary_components() == 1) return Topology::Disk;
    if (boundary_components() == 2) return Topology::Annulus;
    return Topology::Other;
}

std::string topology_name(Topology t) {
    switch (t) {
        case Topology::Disk: return "disk";
        case Topology::Annulus: return "annulus";
        default: return "other";
    }
}

void Surface::check_structure() const {
    const int np = num_points();
    if (static_cast<int>(fans.size()) != np || static_cast<int>(corners.size()) != np)
        throw InputError("fan or corner table does not match the point list");
    std::set<int> seen;
    for (const auto& comp : boundary)
        for (int q : comp) {
            if (q < 0 || q >= np) throw InputError("boundary references an unknown point");
            if (!seen.insert(q).second) throw InputError("point " + point_ids[q] + " appears twice on the boundary");
        }
    if (static_cast<int>(seen.size()) != np) throw InputError("some point is not on any boundary component");
    std::vector<int> hits(2 * arcs.size(), 0);
    for (int q = 0; q < np; ++q) {
        if (corners[q].size() + 1 != std::max<std::size_t>(fans[q].size(), 1))
            throw InputError("point " + point_ids[q] + " has a corner count that does not match its fan");
        for (const End& e : fans[q]) {
            if (e.arc < 0 || e.arc >= num_arcs() || (e.side != 0 && e.side != 1))
                throw InputError("fan at " + point_ids[q] + " references an unknown arc end");
            if (arcs[e.arc].point[e.side] != q)
                throw InputError("arc " + arcs[e.arc].id + " is listed in the fan of a point it does not end at");
            ++hits[2 * e.arc + e.side];
        }
    }
    for (std::size_t i = 0; i < hits.size(); ++i)
        if (hits[i] != 1) throw InputError("arc " + arcs[i / 2].id + " end is not listed exactly once in a fan");
}

std::vector<ElementaryPolygon> elementary_polygons(const Surface& s) {
    s.check_structure();
    const int na = s.num_arcs();
    // dart = arrival at an end
    std::vector<bool> used(2 * na, false);
    std::vector<bool> seg_used(s.num_points(), false);
    std::vector<ElementaryPolygon> out;

    // Continue after arriving at point `r` through end `e` (or after a segment when e is absent).
    auto trace = [&](End start) {
        ElementaryPolygon poly;
        End cur = start;
        while (true) {
            used[2 * cur.arc + cur.side] = true;
            const int r = s.point_of(cur);
            const int i = s.fan_index(cur);
            End nxt;
            if (i + 1 < static_cast<int>(s.fans[r].size())) {
                nxt = s.fans[r][i + 1];
            } else {
                int q = r;
                while (true) {
                    poly.sides.push_back({false, {}, q});
                    ++poly.boundary_edges;
                    seg_used[q] = true;
                    q = s.next_point(q);
                    if (!s.fans[q].empty()) break;
                }
                nxt = s.fans[q][0];
            }
            poly.sides.push_back({true, nxt, 0});
            ++poly.arc_edges;
            End arrive{nxt.arc, 1 - nxt.side};
            if (arrive == start) break;
            if (used[2 * arrive.arc + arrive.side]) throw ConsistencyError("polygon trace did not close");
            cur = arrive;
        }
        poly.unmarked = poly.boundary_edges == 0;
        return poly;
    };

    for (int a = 0; a < na; ++a)
        for (int side = 0; side < 2; ++side)
            if (!used[2 * a + side]) out.push_back(trace({a, side}));
    // components carrying points but no arcs
    for (int q = 0; q < s.num_points(); ++q)
        if (!seg_used[q] && s.fans[q].empty()) {
            ElementaryPolygon poly;
            int r = q;
            do {
                poly.sides.push_back({false, {}, r});
                ++poly.boundary_edges;
                seg_used[r] = true;
                r = s.next_point(r);
            } while (r != q);
            out.push_back(poly);
        }
    return out;
}

FfasCheck check_ffas(const Surface& s) {
    FfasCheck res;
    auto polys = elementary_polygons(s);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& p = polys[i];
        const int bd = p.boundary_edges + (p.unmarked ? 1 : 0);
        if (bd != 1 || p.arc_edges < 1) {
            res.ok = false;
            res.violation = "polygon " + std::to_string(i) + " has " + std::to_string(p.boundary_edges) +
                            " boundary edges and " + std::to_string(p.arc_edges) + " arc edges";
            return res;
        }
    }
    return res;
}

Surface surface_of_connected_algebra(const Presentation& p) {
    auto diag = validate_gentle(p);
    if (!diag.ok()) {
        const auto& v = diag.violations.front();
        if (v.axiom == "admissible") throw NotFiniteDimensional("oriented cycle without relations: " + v.witness);
        throw PreconditionError("not gentle: " + v.axiom + " at " + v.witness);
    }
    const int n = p.num_vertices();
    std::vector<std::array<int, 2>> in(n, {-1, -1}), out(n, {-1, -1});
    for (int v = 0; v < n; ++v) {
        auto ins = p.arrows_in(v), outs = p.arrows_out(v);
        std::vector<std::pair<int, int>> ends;
        std::vector<bool> in_used(ins.size(), false), out_used(outs.size(), false);
        for (std::size_t i = 0; i < ins.size(); ++i)
            for (std::size_t j = 0; j < outs.size(); ++j)
                if (!in_used[i] && !out_used[j] && !p.is_relation(ins[i], outs[j])) {
                    ends.emplace_back(ins[i], outs[j]);
                    in_used[i] = out_used[j] = true;
                }
        for (std::size_t i = 0; i < ins.size(); ++i)
            if (!in_used[i]) ends.emplace_back(ins[i], -1);
        for (std::size_t j = 0; j < outs.size(); ++j)
            if (!out_used[j]) ends.emplace_back(-1, outs[j]);
        if (ends.size() > 2) throw PreconditionError("vertex " + p.vertices[v] + " needs more than two arc ends");
        for (std::size_t k = 0; k < ends.size(); ++k) {
            in[v][k] = ends[k].first;
            out[v][k] = ends[k].second;
        }
    }
    auto end_of_in = [&](int arrow) -> End {
        int t = p.arrows[arrow].target;
        for (int sd = 0; sd < 2; ++sd)
            if (in[t][sd] == arrow) return {t, sd};
        throw ConsistencyError("arrow end not assigned");
    };

    Surface s;
    for (int v = 0; v < n; ++v) s.arcs.push_back({p.vertices[v], {-1, -1}});
    std::vector<bool> seen(2 * n, false);
    for (int v = 0; v < n; ++v)
        for (int sd = 0; sd < 2; ++sd) {
            if (in[v][sd] >= 0) continue;
            std::vector<End> fan;
            std::vector<Corner> corners;
            End e{v, sd};
            while (true) {
                fan.push_back(e);
                seen[2 * e.arc + e.side] = true;
                int a = out[e.arc][e.side];
                if (a < 0) break;
                corners.push_back({p.arrows[a].id, p.arrows[a].grade});
                e = end_of_in(a);
            }
            const int pt = s.num_points();
            for (const End& f : fan) s.arcs[f.arc].point[f.side] = pt;
            s.point_ids.push_back("p" + std::to_string(pt));
            s.fans.push_back(std::move(fan));
            s.corners.push_back(std::move(corners));
        }
    for (int i = 0; i < 2 * n; ++i)
        if (!seen[i]) throw NotFiniteDimensional("oriented cycle without relations through vertex " + p.vertices[i / 2]);

    // boundary order
    const int np = s.num_points();
    auto pred = [&](End e) -> std::optional<End> {
        int i = s.fan_index(e);
        if (i == 0) return std::nullopt;
        return s.fans[s.point_of(e)][i - 1];
    };
    auto next_boundary = [&](int q) {
        End e = s.fans[q].back();
        for (int guard = 0; guard <= 4 * n + 4; ++guard) {
            e = {e.arc, 1 - e.side};
            auto pr = pred(e);
            if (!pr) return s.point_of(e);
            e = *pr;
        }
        throw ConsistencyError("boundary walk did not terminate");
    };
    std::vector<bool> placed(np, false);
    for (int q = 0; q < np; ++q) {
        if (placed[q]) continue;
        std::vector<int> comp;
        int r = q;
        while (!placed[r]) {
            placed[r] = true;
            comp.push_back(r);
            r = next_boundary(r);
        }
        if (r != q) throw ConsistencyError("boundary walk is not a permutation");
        s.boundary.push_back(std::move(comp));
    }
    for (const auto& poly : elementary_polygons(s))
        if (poly.unmarked) ++s.unmarked;
    return s;
}

std::vector<Surface> surface_from_algebra(const Presentation& p) {
    std::vector<Surface> out;
    for (const auto& c : connected_components(p)) out.push_back(surface_of_connected_algebra(c));
    return out;
}

Presentation algebra_from_surface(const Surface& s) {
    s.check_structure();
    Presentation p;
    for (const auto& a : s.arcs) p.add_vertex(a.id);
    // arrow entering / leaving each end
    std::vector<int> entering(2 * s.num_arcs(), -1), leaving(2 * s.num_arcs(), -1);
    for (int q = 0; q < s.num_points(); ++q)
        for (std::size_t i = 0; i + 1 < s.fans[q].size(); ++i) {
            End a = s.fans[q][i], b = s.fans[q][i + 1];
            const Corner& c = s.corners[q][i];
            std::string id = c.arrow.empty() ? s.point_ids[q] + "." + std::to_string(i) : c.arrow;
            int idx = p.add_arrow(id, s.arcs[a.arc].id, s.arcs[b.arc].id, c.grade);
            leaving[2 * a.arc + a.side] = idx;
            entering[2 * b.arc + b.side] = idx;
        }
    for (int x = 0; x < s.num_arcs(); ++x)
        for (int sd = 0; sd < 2; ++sd) {
            int alpha = entering[2 * x + sd], beta = leaving[2 * x + (1 - sd)];
            if (alpha >= 0 && beta >= 0) p.relations.emplace_back(alpha, beta);
        }
    return p;
}

std::vector<std::vector<bool>> extra_points(const Surface& s) {
    std::vector<std::vector<bool>> out;
    for (const auto& comp : s.boundary) out.emplace_back(comp.size(), false);
    for (const auto& poly : elementary_polygons(s))
        if (poly.arc_edges == 1 && poly.boundary_edges == 1)
            for (const auto& side : poly.sides)
                if (!side.is_arc) out[s.component_of(side.point)][s.index_in_component(side.point)] = true;
    return out;
}

std::optional<int> global_dimension_geometric(const Surface& s) {
    int best = 0;
    for (const auto& poly : elementary_polygons(s)) {
        if (poly.unmarked) return std::nullopt;
        best = std::max(best, poly.arc_edges);
    }
    return best - 1;
}

std::optional<int> global_dimension_geometric(const Presentation& p) {
    int best = 0;
    for (const auto& s : surface_from_algebra(p)) {
        auto g = global_dimension_geometric(s);
        if (!g) return std::nullopt;
        best = std::max(best, *g);
    }
    return best;
}

}  // namespace gentle
