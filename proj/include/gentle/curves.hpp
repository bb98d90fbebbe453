#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/geometry.hpp"
#include "gentle/paths.hpp"
#include "gentle/rep.hpp"

namespace gentle {

// Walk v_0 - v_1 - ... - v_m; letter i joins v_i and v_{i+1}. A direct letter is an arrow
// v_i -> v_{i+1}, an inverse letter an arrow v_{i+1} -> v_i.
struct StringWalk {
    std::vector<int> vertices;
    std::vector<int> arrows;
    std::vector<bool> direct;

    int letters() const { return static_cast<int>(arrows.size()); }
    StringWalk inverse() const;
    std::vector<int> encoding() const;
    std::string label(const Presentation& p) const;
    friend bool operator==(const StringWalk&, const StringWalk&) = default;
};

struct Check {
    bool ok = true;
    std::string violation;
    explicit operator bool() const { return ok; }
};

Check check_string(const Presentation& p, const StringWalk& w);
// Representative of {w, w^-1} with the smaller encoding.
StringWalk canonical_string(const StringWalk& w);
// All strings with at most max_letters letters, one per equivalence class, sorted by
// (letters, encoding).
std::vector<StringWalk> enumerate_strings(const Presentation& p, int max_letters);
Representation string_module(const Presentation& p, const StringWalk& w);
StringWalk projective_string(const Presentation& p, int v);
// Positions of peaks and valleys of the walk.
std::vector<int> top_positions(const StringWalk& w);
std::vector<int> socle_positions(const StringWalk& w);

// Closed walk: vertices.front() == vertices.back().
Check check_band(const Presentation& p, const StringWalk& w);
Representation band_module(const Presentation& p, const StringWalk& band, const Rational& lambda, int k);

// A connected gentle algebra together with its surface in the lifted chord picture.
// Arcs are indexed like vertices and fan corners carry the arrows.
class GentleModel {
public:
    explicit GentleModel(Presentation a);

    const Presentation& algebra() const { return a_; }
    const PathAlgebra& paths() const { return paths_; }
    const Geometry& geometry() const { return geo_; }
    const Surface& surface() const { return geo_.surface(); }
    int corner_arrow(int point, int i) const { return corner_arrow_[point][i]; }
    // Fan entries joined by an arrow: (point, index of the source end).
    std::pair<int, int> arrow_corner(int arrow) const { return arrow_corner_[arrow]; }

private:
    Presentation a_;
    PathAlgebra paths_;
    Geometry geo_;
    std::vector<std::vector<int>> corner_arrow_;
    std::vector<std::pair<int, int>> arrow_corner_;
};

// Raw encoding: the crossed arcs in order; consecutive arcs must share an open endpoint.
Check is_permissible(const Surface& s, const std::vector<int>& crossed_arcs);
// Lifted curve: endpoints in M ∪ E and consecutive crossings joined through polygon corners.
Check is_permissible(const GentleModel& m, const Chord& c);

// Nothing when the curve crosses no arc (zero module).
std::optional<StringWalk> string_of_curve(const GentleModel& m, const Chord& c);
std::optional<Representation> module_of_curve(const GentleModel& m, const Chord& c);
Chord curve_of_string(const GentleModel& m, const StringWalk& w);
// Lifts of the crossed arcs of the curve of w, in order.
std::vector<Chord> crossed_lifts(const GentleModel& m, const StringWalk& w);

struct ClosedCurve {
    std::vector<int> crossings;  // cyclic
    long long winding = 0;
};
ClosedCurve closed_curve_of_band(const GentleModel& m, const StringWalk& band);

struct TopSocle {
    std::vector<int> top;  // crossed arcs (vertices)
    std::vector<int> socle;
};
TopSocle top_socle_arcs(const GentleModel& m, const Chord& c);

Chord simple_curve(const GentleModel& m, int v);
Chord projective_curve(const GentleModel& m, int v);
// Arc following the given end in its fan.
std::optional<int> left_arc(const Surface& s, int arc, int side);

}  // namespace gentle
