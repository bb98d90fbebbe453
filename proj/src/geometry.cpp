#include "gentle/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace gentle {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long pmod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Geometry::Geometry(Surface s) : s_(std::move(s)) {
    const Topology topo = s_.topology();
    if (topo == Topology::Other || s_.unmarked != 0)
        throw PreconditionError("geometric model needs a disk or an annulus with marked boundary");
    annulus_ = topo == Topology::Annulus;
    for (const auto& comp : s_.boundary) n_.push_back(static_cast<int>(comp.size()));
    polygons_ = elementary_polygons(s_);
    for (auto& poly : polygons_) {
        if (poly.boundary_edges != 1 || poly.arc_edges < 1 || poly.arc_edges > 2)
            throw PreconditionError("geometric model needs triangles and digons only");
        auto it = std::find_if(poly.sides.begin(), poly.sides.end(), [](const PolygonSide& x) { return !x.is_arc; });
        std::rotate(poly.sides.begin(), it, poly.sides.end());
    }
    extra_ = extra_points(s_);

    const int na = s_.num_arcs();
    side_polygon_.assign(na, {-1, -1});
    std::vector<std::array<int, 2>> side_index(na, {-1, -1});
    for (std::size_t pi = 0; pi < polygons_.size(); ++pi)
        for (std::size_t j = 1; j < polygons_[pi].sides.size(); ++j) {
            const End f = polygons_[pi].sides[j].from;
            side_polygon_[f.arc][f.side] = static_cast<int>(pi);
            side_index[f.arc][f.side] = static_cast<int>(j) - 1;
        }

    auto endpoint = [](const Chord& c, int side) { return side == 0 ? c.a : c.b; };
    // Lifted corners c_0..c_m of a polygon given the lift of its arc side j.
    auto face_lift = [&](int pi, int j, const Chord& lifted) {
        const auto& poly = polygons_[pi];
        const int m = poly.arc_edges;
        const End f = poly.sides[j + 1].from;
        std::vector<LPoint> L(m + 1);
        L[j] = endpoint(lifted, f.side);
        L[j + 1] = endpoint(lifted, 1 - f.side);
        if (m == 2) {
            if (j == 0) L[2] = step(L[0], -2);
            else L[0] = step(L[2], 2);
        }
        return L;
    };

    std::vector<bool> known(na, false), lifted(polygons_.size(), false);
    arc_lift_.assign(na, {});
    std::deque<std::pair<int, std::vector<LPoint>>> queue;
    if (!polygons_.empty()) {
        const auto& poly = polygons_[0];
        const int m = poly.arc_edges;
        std::vector<LPoint> L(m + 1);
        L[m] = lift(poly.sides[0].point);
        L[0] = step(L[m], 2);
        if (m == 2) L[1] = lift(s_.point_of(poly.sides[2].from));
        lifted[0] = true;
        queue.emplace_back(0, L);
    }
    while (!queue.empty()) {
        auto [pi, L] = queue.front();
        queue.pop_front();
        const auto& poly = polygons_[pi];
        for (int j = 0; j < poly.arc_edges; ++j) {
            const End f = poly.sides[j + 1].from;
            if (known[f.arc]) continue;
            Chord c;
            if (f.side == 0) c = {L[j], L[j + 1]};
            else c = {L[j + 1], L[j]};
            arc_lift_[f.arc] = c;
            known[f.arc] = true;
            const int other = 1 - f.side;
            const int qi = side_polygon_[f.arc][other];
            if (qi >= 0 && !lifted[qi]) {
                lifted[qi] = true;
                queue.emplace_back(qi, face_lift(qi, side_index[f.arc][other], c));
            }
        }
    }
    for (int a = 0; a < na; ++a)
        if (!known[a]) throw PreconditionError("surface is not connected");

    opposite_.assign(na, {});
    opposite_kind_.assign(na, {0, 0});
    third_arc_.assign(na, {-1, -1});
    dual_lift_.assign(na, {});
    for (int a = 0; a < na; ++a) {
        std::array<LPoint, 2> bullets;
        for (int sd = 0; sd < 2; ++sd) {
            const int pi = side_polygon_[a][sd];
            const int j = side_index[a][sd];
            auto L = face_lift(pi, j, arc_lift_[a]);
            const int m = polygons_[pi].arc_edges;
            bullets[sd] = step(L[m], 1);
            if (m == 1) {
                opposite_[a][sd] = bullets[sd];
            } else {
                opposite_[a][sd] = j == 0 ? L[2] : L[0];
                opposite_kind_[a][sd] = j == 0 ? 1 : 2;
                third_arc_[a][sd] = polygons_[pi].sides[j == 0 ? 2 : 1].from.arc;
            }
        }
        dual_lift_[a] = {bullets[0], bullets[1]};
    }

    // The lifted picture must reproduce the ribbon structure.
    for (int p = 0; p < s_.num_points(); ++p) {
        const LPoint at = lift(p);
        std::vector<LPoint> others;
        for (const End& e : s_.fans[p]) {
            Chord c;
            if (!lift_at(e.arc, e.side, at, c)) throw ConsistencyError("arc lift does not reach its endpoint");
            others.push_back(e.side == 0 ? c.b : c.a);
        }
        auto order = fan_order(at, others);
        for (std::size_t i = 0; i < order.size(); ++i)
            if (order[i] != static_cast<int>(i))
                throw ConsistencyError("geometric fan order disagrees with the ribbon structure at " + s_.point_ids[p]);
    }
}

long long Geometry::reduce(int c, long long k) const { return annulus_ ? k : pmod(k, 2LL * n_[c]); }

int Geometry::open_point(LPoint p) const {
    if (p.k % 2 != 0) return -1;
    return s_.boundary[p.c][pmod(p.k / 2, n_[p.c])];
}

int Geometry::closed_index(LPoint p) const { return static_cast<int>(pmod(floor_div(p.k - 1, 2), n_[p.c])); }

bool Geometry::is_extra(LPoint p) const { return !is_open(p) && extra_[p.c][closed_index(p)]; }

std::string Geometry::describe(LPoint p) const {
    std::string base = is_open(p) ? s_.point_ids[open_point(p)]
                                  : "*" + s_.point_ids[s_.boundary[p.c][closed_index(p)]];
    return base + "@" + std::to_string(p.c) + ":" + std::to_string(p.k);
}

LPoint Geometry::translate(LPoint p, long long t) const {
    if (!annulus_ || t == 0) return p;
    if (p.c == 0) return {0, p.k + 2LL * n_[0] * t};
    return {1, p.k - 2LL * n_[1] * t};
}

Chord Geometry::translate(const Chord& c, long long t) const { return {translate(c.a, t), translate(c.b, t)}; }

bool Geometry::translation_between(LPoint from, LPoint to, long long& t) const {
    if (from.c != to.c) return false;
    if (!annulus_) {
        t = 0;
        return reduce(from.c, from.k) == reduce(to.c, to.k);
    }
    const long long diff = to.k - from.k;
    const long long period = 2LL * n_[from.c];
    if (diff % period != 0) return false;
    t = from.c == 0 ? diff / period : -diff / period;
    return true;
}

LPoint Geometry::step(LPoint p, long long delta) const { return {p.c, reduce(p.c, p.k + delta)}; }

long long Geometry::key(LPoint p) const { return (static_cast<long long>(p.c) << 40) + reduce(p.c, p.k); }

bool Geometry::equivalent(LPoint p, LPoint q) const {
    long long t;
    return translation_between(p, q, t);
}

Chord Geometry::normalize(Chord c) const {
    if (key(c.b) < key(c.a)) std::swap(c.a, c.b);
    c.a = step(c.a, 0);
    c.b = step(c.b, 0);
    if (annulus_) {
        const long long period = 2LL * n_[c.a.c];
        const long long q = floor_div(c.a.k, period);
        c = translate(c, c.a.c == 0 ? -q : q);
    }
    return c;
}

bool Geometry::crosses(const Chord& x, const Chord& y) const {
    long long x1 = key(x.a), x2 = key(x.b), y1 = key(y.a), y2 = key(y.b);
    if (x1 > x2) std::swap(x1, x2);
    if (y1 > y2) std::swap(y1, y2);
    if (x1 == y1 || x1 == y2 || x2 == y1 || x2 == y2) return false;
    return (x1 < y1 && y1 < x2 && x2 < y2) || (y1 < x1 && x1 < y2 && y2 < x2);
}

std::vector<Geometry::Crossing> Geometry::crossings(const Chord& c, const std::vector<Chord>& family) const {
    struct Item {
        Crossing x;
        long long in;
        int group;
        long long out;
    };
    std::vector<Item> items;
    const long long lo = std::min(key(c.a), key(c.b)), hi = std::max(key(c.a), key(c.b));
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Chord& f = family[i];
        long long range = 0;
        if (annulus_) range = (std::llabs(c.a.k) + std::llabs(c.b.k) + std::llabs(f.a.k) + std::llabs(f.b.k)) / 2 + 2;
        for (long long t = -range; t <= range; ++t) {
            Chord g = translate(f, t);
            if (!crosses(c, g)) continue;
            long long ka = key(g.a), kb = key(g.b);
            long long in = (ka > lo && ka < hi) ? ka : kb;
            long long out = in == ka ? kb : ka;
            items.push_back({{static_cast<int>(i), g, t}, in, out < lo ? 0 : 1, -out});
        }
    }
    std::sort(items.begin(), items.end(), [](const Item& u, const Item& v) {
        if (u.in != v.in) return u.in < v.in;
        if (u.group != v.group) return u.group < v.group;
        return u.out < v.out;
    });
    std::vector<Crossing> out;
    for (auto& it : items) out.push_back(it.x);
    if (key(c.a) > key(c.b)) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Geometry::Crossing> Geometry::arc_crossings(const Chord& c) const { return crossings(c, arc_lift_); }

std::vector<Geometry::Crossing> Geometry::dual_crossings(const Chord& c) const { return crossings(c, dual_lift_); }

bool Geometry::lift_at(int arc, int side, LPoint p, Chord& out) const {
    const LPoint e = side == 0 ? arc_lift_[arc].a : arc_lift_[arc].b;
    long long t;
    if (!translation_between(e, p, t)) return false;
    out = translate(arc_lift_[arc], t);
    if (!annulus_) {
        out.a = step(out.a, 0);
        out.b = step(out.b, 0);
    }
    return true;
}

std::vector<int> Geometry::fan_order(LPoint p, const std::vector<LPoint>& others) const {
    const long long kp = key(p);
    std::vector<int> idx(others.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto rank = [&](int i) {
        long long kq = key(others[i]);
        return std::pair<int, long long>(kq > kp ? 0 : 1, kq);
    };
    std::stable_sort(idx.begin(), idx.end(), [&](int u, int v) { return rank(u) > rank(v); });
    return idx;
}

}  // namespace gentle
