#include "gentle/embed.hpp"

#include <algorithm>

namespace gentle {

namespace {

LPoint end_of(const Chord& c, int which) { return which == 0 ? c.a : c.b; }

Chord lifted_arc(const Geometry& g, int arc, long long t) {
    Chord c = g.translate(g.arc_lift(arc), t);
    return {g.step(c.a, 0), g.step(c.b, 0)};
}

// Side of the crossed lift X (arc a, translate t) whose polygon contains the curve end x.
int far_side(const Geometry& g, int a, long long t, LPoint x) {
    for (int sd = 0; sd < 2; ++sd)
        if (g.same_point(g.translate(g.opposite(a)[sd], t), x)) return sd;
    throw ConsistencyError("curve end is not opposite its first crossing");
}

// Path from the top position down to pos along w.
int walk_path(const PathAlgebra& A, const StringWalk& w, int top, int pos) {
    std::vector<int> arrows;
    if (top <= pos) {
        for (int i = top; i < pos; ++i) arrows.push_back(w.arrows[i]);
    } else {
        for (int i = top - 1; i >= pos; --i) arrows.push_back(w.arrows[i]);
    }
    int p = A.find(arrows, w.vertices[top]);
    if (p < 0) throw ConsistencyError("string segment is not a nonzero path");
    return p;
}

// Arrow from the crossed arc to the third arc of the far triangle at a Case I end.
int closing_arrow(const GentleModel& m, int a, long long t, LPoint x, int third) {
    const Geometry& g = m.geometry();
    const Surface& s = m.surface();
    const Chord X = lifted_arc(g, a, t);
    const LPoint q = g.step(x, 2);
    for (int sd = 0; sd < 2; ++sd) {
        if (g.same_point(end_of(X, sd), q)) continue;
        const int pt = s.point_of({a, sd});
        const int i = s.fan_index({a, sd});
        const auto& fan = s.fans[pt];
        if (i + 1 < static_cast<int>(fan.size()) && fan[i + 1].arc == third) return m.corner_arrow(pt, i);
    }
    throw ConsistencyError("no arrow into the third arc of the far triangle");
}

struct FanLetter {
    int path;
    bool direct;
};

FanLetter fan_letter(const GentleModel& m, int ax, const Chord& x, int ay, const Chord& y) {
    const Geometry& g = m.geometry();
    const Surface& s = m.surface();
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy) {
            if (!g.same_point(end_of(x, sx), end_of(y, sy))) continue;
            const int pt = s.point_of({ax, sx});
            if (pt != s.point_of({ay, sy})) continue;
            const int ix = s.fan_index({ax, sx}), iy = s.fan_index({ay, sy});
            std::vector<int> arrows;
            for (int k = std::min(ix, iy); k < std::max(ix, iy); ++k) arrows.push_back(m.corner_arrow(pt, k));
            const int from = ix < iy ? ax : ay;
            const int p = m.paths().find(arrows, from);
            if (p < 0) throw ConsistencyError("fan interval is not a nonzero path");
            return {p, ix < iy};
        }
    throw ConsistencyError("consecutive closed-arc crossings share no point");
}

}  // namespace

std::string end_case_name(EndCase c) {
    switch (c) {
        case EndCase::I: return "I";
        case EndCase::II: return "II";
        case EndCase::III: return "III";
    }
    return "?";
}

std::vector<int> CurveCover::kernel() const {
    std::vector<int> k;
    if (q_left) k.push_back(*q_left);
    k.insert(k.end(), q_core.begin(), q_core.end());
    if (q_right) k.push_back(*q_right);
    return k;
}

EndCase end_segment_case(const GentleModel& m, const Chord& c, int which) {
    const Geometry& g = m.geometry();
    const LPoint x = end_of(c, which);
    if (!g.is_open(x)) {
        if (g.is_extra(x)) return EndCase::III;
        throw InputError("curve ends at a closed point outside the extra set");
    }
    auto xs = g.arc_crossings(c);
    if (xs.empty()) throw InputError("curve crosses no arc");
    const auto& X = which == 0 ? xs.front() : xs.back();
    const int sd = far_side(g, X.arc, X.t, x);
    if (g.opposite_kind(X.arc)[sd] == 1) return EndCase::I;
    if (g.opposite_kind(X.arc)[sd] == 2) return EndCase::II;
    throw ConsistencyError("open curve end inside a digon");
}

Chord rotate_curve(const GentleModel& m, const Chord& c) {
    const Geometry& g = m.geometry();
    Chord r = c;
    for (int which = 0; which < 2; ++which) {
        LPoint& x = which == 0 ? r.a : r.b;
        switch (end_segment_case(m, c, which)) {
            case EndCase::I: break;
            case EndCase::II: x = g.step(x, -2); break;
            case EndCase::III: x = g.step(x, -1); break;
        }
    }
    return r;
}

CurveCover projective_cover_curve(const GentleModel& m, const Chord& c) {
    const Geometry& g = m.geometry();
    auto w = string_of_curve(m, c);
    if (!w) throw InputError("curve crosses no arc");
    CurveCover cc;
    for (int i : top_positions(*w)) cc.cover.push_back(w->vertices[i]);
    const int last = w->letters();
    for (int i : socle_positions(*w))
        if (i != 0 && i != last) cc.q_core.push_back(w->vertices[i]);
    auto xs = g.arc_crossings(c);
    for (int which = 0; which < 2; ++which) {
        if (end_segment_case(m, c, which) != EndCase::I) continue;
        const auto& X = which == 0 ? xs.front() : xs.back();
        const int sd = far_side(g, X.arc, X.t, end_of(c, which));
        (which == 0 ? cc.q_left : cc.q_right) = g.third_arc(X.arc)[sd];
    }
    return cc;
}

TwoTermComplex projective_presentation_curve(const GentleModel& m, const Chord& c) {
    const Geometry& g = m.geometry();
    const PathAlgebra& A = m.paths();
    auto w = string_of_curve(m, c);
    if (!w) throw InputError("curve crosses no arc");
    const CurveCover cc = projective_cover_curve(m, c);
    const auto tops = top_positions(*w);
    const int last = w->letters();
    TwoTermComplex cx = TwoTermComplex::make(cc.kernel(), cc.cover);
    auto top_slot = [&](int pos) {
        return static_cast<int>(std::find(tops.begin(), tops.end(), pos) - tops.begin());
    };
    int row = 0;
    auto xs = g.arc_crossings(c);
    auto end_row = [&](int which) {
        const auto& X = which == 0 ? xs.front() : xs.back();
        const LPoint x = end_of(c, which);
        const int sd = far_side(g, X.arc, X.t, x);
        const int third = g.third_arc(X.arc)[sd];
        const int pos = which == 0 ? 0 : last;
        const int top = which == 0 ? tops.front() : tops.back();
        const int seg = walk_path(A, *w, top, pos);
        const int p = A.concat(seg, A.arrow_path(closing_arrow(m, X.arc, X.t, x, third)));
        if (p < 0) throw ConsistencyError("kernel generator maps to zero");
        add_term(cx.d.entry[row][top_slot(top)], p, 1);
        ++row;
    };
    if (cc.q_left) end_row(0);
    for (int i : socle_positions(*w)) {
        if (i == 0 || i == last) continue;
        auto right = std::upper_bound(tops.begin(), tops.end(), i);
        const int tl = *(right - 1), tr = *right;
        add_term(cx.d.entry[row][top_slot(tl)], walk_path(A, *w, tl, i), 1);
        add_term(cx.d.entry[row][top_slot(tr)], walk_path(A, *w, tr, i), -1);
        ++row;
    }
    if (cc.q_right) end_row(1);
    return cx;
}

HomotopyString homotopy_string_of_curve(const GentleModel& m, const Chord& c) {
    const Geometry& g = m.geometry();
    auto xs = g.dual_crossings(c);
    if (xs.empty()) throw InputError("curve crosses no closed arc");
    HomotopyString h;
    std::vector<Chord> lifts;
    for (const auto& x : xs) {
        h.vertices.push_back(x.arc);
        lifts.push_back(lifted_arc(g, x.arc, x.t));
    }
    h.degrees.push_back(0);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        auto l = fan_letter(m, xs[i].arc, lifts[i], xs[i + 1].arc, lifts[i + 1]);
        h.letters.push_back(l.path);
        h.direct.push_back(l.direct);
        h.degrees.push_back(h.degrees.back() + (l.direct ? -1 : 1));
    }
    const int top = *std::max_element(h.degrees.begin(), h.degrees.end());
    for (int& d : h.degrees) d -= top;
    return h;
}

HomotopyString homotopy_string_of(const GentleModel& m, const AdmissibleCurve& c) {
    HomotopyString h = homotopy_string_of_curve(m, c.chord);
    if (c.degrees.size() != h.vertices.size())
        throw InputError("grading has " + std::to_string(c.degrees.size()) + " entries, curve has " +
                         std::to_string(h.vertices.size()) + " closed-arc crossings");
    for (std::size_t i = 0; i < h.letters.size(); ++i)
        if (c.degrees[i + 1] - c.degrees[i] != (h.direct[i] ? -1 : 1))
            throw InputError("grading jumps incorrectly between crossings " + std::to_string(i) + " and " +
                             std::to_string(i + 1));
    h.degrees = c.degrees;
    return h;
}

TwoTermComplex complex_of_admissible(const GentleModel& m, const AdmissibleCurve& c) {
    return complex_of_homotopy_string(m.paths(), homotopy_string_of(m, c));
}

AdmissibleCurve embed_curve(const GentleModel& m, const Chord& c) {
    AdmissibleCurve ac;
    ac.chord = rotate_curve(m, c);
    ac.degrees = homotopy_string_of_curve(m, ac.chord).degrees;
    return ac;
}

AdmissibleCurve arc_curve(const GentleModel& m, int v, int degree) {
    return {m.geometry().arc_lift(v), {degree}};
}

int end_degree(const GentleModel& m, const AdmissibleCurve& c, int which) {
    (void)m;
    if (c.degrees.empty()) throw InputError("empty grading");
    return which == 0 ? c.degrees.front() : c.degrees.back();
}

}  // namespace gentle
