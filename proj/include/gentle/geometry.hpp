#pragma once

#include <array>
#include <string>
#include <vector>

#include "gentle/surface.hpp"

namespace gentle {

// Point on the boundary of the universal cover. k is a position along component c in boundary
// order: even positions are open points, odd positions closed points. On a disk positions are
// taken modulo 2N; on an annulus the cover is a strip and the deck transformation shifts
// component 0 by +2N0 and component 1 by -2N1.
struct LPoint {
    int c = 0;
    long long k = 0;
    friend bool operator==(const LPoint&, const LPoint&) = default;
    friend auto operator<=>(const LPoint& a, const LPoint& b) = default;
};

struct Chord {
    LPoint a, b;
    friend bool operator==(const Chord&, const Chord&) = default;
    friend auto operator<=>(const Chord&, const Chord&) = default;
};

// Surfaces whose polygons are triangles and digons (hereditary algebras), on a disk or annulus.
class Geometry {
public:
    explicit Geometry(Surface s);

    const Surface& surface() const { return s_; }
    bool annulus() const { return annulus_; }
    int components() const { return static_cast<int>(n_.size()); }
    int points_on(int c) const { return n_[c]; }

    LPoint lift(int point) const { return {s_.component_of(point), s_.position(point)}; }
    bool is_open(LPoint p) const { return p.k % 2 == 0; }
    // Projected open point, or -1 for closed positions.
    int open_point(LPoint p) const;
    // Index of the open point preceding a closed position.
    int closed_index(LPoint p) const;
    bool is_extra(LPoint p) const;
    std::string describe(LPoint p) const;

    LPoint translate(LPoint p, long long t) const;
    Chord translate(const Chord& c, long long t) const;
    // t with translate(from, t) == to, when one exists.
    bool translation_between(LPoint from, LPoint to, long long& t) const;
    LPoint step(LPoint p, long long delta) const;  // move along the boundary

    // Total order on the boundary circle of the cover.
    long long key(LPoint p) const;
    bool same_point(LPoint p, LPoint q) const { return key(p) == key(q); }
    // Equivalent points modulo the deck group.
    bool equivalent(LPoint p, LPoint q) const;
    Chord normalize(Chord c) const;

    bool crosses(const Chord& x, const Chord& y) const;

    const Chord& arc_lift(int arc) const { return arc_lift_[arc]; }  // a = side 0, b = side 1
    const Chord& dual_lift(int arc) const { return dual_lift_[arc]; }
    // Point on each side of arc_lift(arc) closing its polygon: the far corner of a triangle or the
    // closed point of a digon.
    const std::array<LPoint, 2>& opposite(int arc) const { return opposite_[arc]; }
    const std::array<int, 2>& side_polygon(int arc) const { return side_polygon_[arc]; }
    // 0: digon, 1: the opposite corner starts the boundary segment, 2: it ends it.
    const std::array<int, 2>& opposite_kind(int arc) const { return opposite_kind_[arc]; }
    // Other arc of the triangle on each side, -1 for a digon.
    const std::array<int, 2>& third_arc(int arc) const { return third_arc_[arc]; }
    const std::vector<ElementaryPolygon>& polygons() const { return polygons_; }

    struct Crossing {
        int arc;
        Chord lift;
        long long t;  // lift == translate(family[arc], t)
    };
    // Lifts of the given chords (one per index, all deck translates considered) crossing c,
    // ordered from c.a to c.b.
    std::vector<Crossing> crossings(const Chord& c, const std::vector<Chord>& family) const;
    std::vector<Crossing> arc_crossings(const Chord& c) const;
    std::vector<Crossing> dual_crossings(const Chord& c) const;

    // Lift of `arc` translated so that end `side` sits at p, if possible.
    bool lift_at(int arc, int side, LPoint p, Chord& out) const;
    // Fan order at p: given chords that end at p, the ordering permutation (first = first in fan).
    std::vector<int> fan_order(LPoint p, const std::vector<LPoint>& others) const;

private:
    Surface s_;
    bool annulus_ = false;
    std::vector<int> n_;
    std::vector<ElementaryPolygon> polygons_;
    std::vector<Chord> arc_lift_, dual_lift_;
    std::vector<std::array<LPoint, 2>> opposite_;
    std::vector<std::array<int, 2>> side_polygon_, opposite_kind_, third_arc_;
    std::vector<std::vector<bool>> extra_;
    long long reduce(int c, long long k) const;
};

}  // namespace gentle
