#include "gentle/curves.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gentle {

StringWalk StringWalk::inverse() const {
    StringWalk w;
    w.vertices.assign(vertices.rbegin(), vertices.rend());
    w.arrows.assign(arrows.rbegin(), arrows.rend());
    for (auto it = direct.rbegin(); it != direct.rend(); ++it) w.direct.push_back(!*it);
    return w;
}

std::vector<int> StringWalk::encoding() const {
    std::vector<int> e{vertices.front()};
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        e.push_back(2 * arrows[i] + (direct[i] ? 1 : 0));
        e.push_back(vertices[i + 1]);
    }
    return e;
}

std::string StringWalk::label(const Presentation& p) const {
    std::string s = p.vertices[vertices.front()];
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        s += direct[i] ? " -" + p.arrows[arrows[i]].id + "-> " : " <-" + p.arrows[arrows[i]].id + "- ";
        s += p.vertices[vertices[i + 1]];
    }
    return s;
}

namespace {

// Letter i joins vertices[i] and vertices[i+1]; check the arrow matches.
bool letter_fits(const Presentation& p, const StringWalk& w, std::size_t i) {
    const Arrow& a = p.arrows[w.arrows[i]];
    if (w.direct[i]) return a.source == w.vertices[i] && a.target == w.vertices[i + 1];
    return a.source == w.vertices[i + 1] && a.target == w.vertices[i];
}

// Junction at vertex i+1 between letters i and i+1.
bool junction_ok(const Presentation& p, const StringWalk& w, std::size_t i) {
    const int a = w.arrows[i], b = w.arrows[i + 1];
    const bool da = w.direct[i], db = w.direct[i + 1];
    if (da && db) return !p.is_relation(a, b);
    if (!da && !db) return !p.is_relation(b, a);
    return a != b;
}

}  // namespace

Check check_string(const Presentation& p, const StringWalk& w) {
    Check c;
    if (w.vertices.size() != w.arrows.size() + 1 || w.direct.size() != w.arrows.size()) {
        c.ok = false;
        c.violation = "walk has inconsistent lengths";
        return c;
    }
    for (std::size_t i = 0; i < w.arrows.size(); ++i)
        if (!letter_fits(p, w, i)) {
            c.ok = false;
            c.violation = "letter " + std::to_string(i) + " does not join its vertices";
            return c;
        }
    for (std::size_t i = 0; i + 1 < w.arrows.size(); ++i)
        if (!junction_ok(p, w, i)) {
            c.ok = false;
            c.violation = "letters " + std::to_string(i) + "," + std::to_string(i + 1) +
                          " meet in a relation or cancel";
            return c;
        }
    return c;
}

StringWalk canonical_string(const StringWalk& w) {
    StringWalk inv = w.inverse();
    return inv.encoding() < w.encoding() ? inv : w;
}

std::vector<StringWalk> enumerate_strings(const Presentation& p, int max_letters) {
    std::set<std::vector<int>> seen;
    std::vector<StringWalk> out;
    StringWalk cur;
    std::function<void()> grow = [&]() {
        StringWalk c = canonical_string(cur);
        if (seen.insert(c.encoding()).second) out.push_back(c);
        if (cur.letters() >= max_letters) return;
        const int x = cur.vertices.back();
        auto extend = [&](int arrow, bool dir, int next) {
            cur.arrows.push_back(arrow);
            cur.direct.push_back(dir);
            cur.vertices.push_back(next);
            if (cur.arrows.size() < 2 || junction_ok(p, cur, cur.arrows.size() - 2)) grow();
            cur.arrows.pop_back();
            cur.direct.pop_back();
            cur.vertices.pop_back();
        };
        for (int a : p.arrows_out(x)) extend(a, true, p.arrows[a].target);
        for (int a : p.arrows_in(x)) extend(a, false, p.arrows[a].source);
    };
    for (int v = 0; v < p.num_vertices(); ++v) {
        cur = StringWalk{{v}, {}, {}};
        grow();
    }
    std::sort(out.begin(), out.end(), [](const StringWalk& a, const StringWalk& b) {
        if (a.letters() != b.letters()) return a.letters() < b.letters();
        return a.encoding() < b.encoding();
    });
    return out;
}

Representation string_module(const Presentation& p, const StringWalk& w) {
    if (auto c = check_string(p, w); !c) throw InputError("not a string: " + c.violation);
    Representation M;
    M.dims.assign(p.num_vertices(), 0);
    std::vector<int> slot(w.vertices.size());
    for (std::size_t i = 0; i < w.vertices.size(); ++i) slot[i] = M.dims[w.vertices[i]]++;
    for (const auto& a : p.arrows) M.maps.emplace_back(M.dims[a.target], M.dims[a.source]);
    for (std::size_t i = 0; i < w.arrows.size(); ++i) {
        const std::size_t from = w.direct[i] ? i : i + 1, to = w.direct[i] ? i + 1 : i;
        M.maps[w.arrows[i]](slot[to], slot[from]) = 1;
    }
    return M;
}

StringWalk projective_string(const Presentation& p, int v) {
    auto maximal_path = [&](int first) {
        std::vector<int> path{first};
        while (true) {
            int next = -1;
            for (int b : p.arrows_out(p.arrows[path.back()].target))
                if (!p.is_relation(path.back(), b)) next = b;
            if (next < 0 || path.size() > static_cast<std::size_t>(p.num_arrows()))
                break;
            path.push_back(next);
        }
        return path;
    };
    auto outs = p.arrows_out(v);
    StringWalk w{{v}, {}, {}};
    if (outs.size() >= 2) {
        auto left = maximal_path(outs[1]);
        std::vector<int> verts{v};
        for (int a : left) verts.push_back(p.arrows[a].target);
        w.vertices.assign(verts.rbegin(), verts.rend());
        w.arrows.assign(left.rbegin(), left.rend());
        w.direct.assign(left.size(), false);
    }
    if (!outs.empty())
        for (int a : maximal_path(outs[0])) {
            w.arrows.push_back(a);
            w.direct.push_back(true);
            w.vertices.push_back(p.arrows[a].target);
        }
    return canonical_string(w);
}

std::vector<int> top_positions(const StringWalk& w) {
    std::vector<int> out;
    const int m = w.letters();
    for (int i = 0; i <= m; ++i) {
        bool into_left = i > 0 && w.direct[i - 1];
        bool into_right = i < m && !w.direct[i];
        if (!into_left && !into_right) out.push_back(i);
    }
    return out;
}

std::vector<int> socle_positions(const StringWalk& w) {
    std::vector<int> out;
    const int m = w.letters();
    for (int i = 0; i <= m; ++i) {
        bool out_left = i > 0 && !w.direct[i - 1];
        bool out_right = i < m && w.direct[i];
        if (!out_left && !out_right) out.push_back(i);
    }
    return out;
}

Check check_band(const Presentation& p, const StringWalk& w) {
    Check c = check_string(p, w);
    if (!c) return c;
    if (w.letters() == 0 || w.vertices.front() != w.vertices.back()) {
        c.ok = false;
        c.violation = "band walk must be closed and nonempty";
        return c;
    }
    StringWalk twice = w;
    twice.arrows.insert(twice.arrows.end(), w.arrows.begin(), w.arrows.end());
    twice.direct.insert(twice.direct.end(), w.direct.begin(), w.direct.end());
    twice.vertices.insert(twice.vertices.end(), w.vertices.begin() + 1, w.vertices.end());
    if (auto d = check_string(p, twice); !d) {
        c.ok = false;
        c.violation = "band walk does not close up: " + d.violation;
    }
    return c;
}

Representation band_module(const Presentation& p, const StringWalk& band, const Rational& lambda, int k) {
    if (lambda.is_zero()) throw InputError("band eigenvalue must be nonzero");
    if (k < 1) throw InputError("band size must be positive");
    if (auto c = check_band(p, band); !c) throw InputError("not a band: " + c.violation);
    const int m = band.letters();
    Representation M;
    M.dims.assign(p.num_vertices(), 0);
    std::vector<int> base(m);
    for (int i = 0; i < m; ++i) {
        base[i] = M.dims[band.vertices[i]];
        M.dims[band.vertices[i]] += k;
    }
    for (const auto& a : p.arrows) M.maps.emplace_back(M.dims[a.target], M.dims[a.source]);
    for (int i = 0; i < m; ++i) {
        const int from = band.direct[i] ? i : (i + 1) % m, to = band.direct[i] ? (i + 1) % m : i;
        Matrix& mat = M.maps[band.arrows[i]];
        for (int r = 0; r < k; ++r) {
            if (i + 1 < m) {
                mat(base[to] + r, base[from] + r) = 1;
            } else {
                mat(base[to] + r, base[from] + r) = lambda;
                if (r + 1 < k) mat(base[to] + r, base[from] + r + 1) = 1;
            }
        }
    }
    return M;
}

GentleModel::GentleModel(Presentation a)
    : a_(std::move(a)), paths_(a_), geo_(surface_of_connected_algebra(a_)) {
    const Surface& s = geo_.surface();
    corner_arrow_.resize(s.num_points());
    arrow_corner_.assign(a_.num_arrows(), {-1, -1});
    for (int q = 0; q < s.num_points(); ++q)
        for (std::size_t i = 0; i < s.corners[q].size(); ++i) {
            int idx = a_.arrow_index(s.corners[q][i].arrow);
            corner_arrow_[q].push_back(idx);
            arrow_corner_[idx] = {q, static_cast<int>(i)};
        }
}

Check is_permissible(const Surface& s, const std::vector<int>& crossed_arcs) {
    Check c;
    for (int a : crossed_arcs)
        if (a < 0 || a >= s.num_arcs()) throw InputError("curve crosses an unknown arc");
    for (std::size_t i = 0; i + 1 < crossed_arcs.size(); ++i) {
        const auto& x = s.arcs[crossed_arcs[i]].point;
        const auto& y = s.arcs[crossed_arcs[i + 1]].point;
        bool shared = x[0] == y[0] || x[0] == y[1] || x[1] == y[0] || x[1] == y[1];
        if (!shared) {
            c.ok = false;
            c.violation = "arcs " + s.arcs[crossed_arcs[i]].id + "," + s.arcs[crossed_arcs[i + 1]].id +
                          " share no endpoint";
            return c;
        }
    }
    return c;
}

namespace {

struct Letter {
    int arrow;
    bool direct;
};

// Arrow joining consecutive crossed lifts x (arc ax) and y (arc ay) through a shared corner.
std::optional<Letter> corner_letter(const GentleModel& m, int ax, const Chord& x, int ay, const Chord& y) {
    const Geometry& g = m.geometry();
    const Surface& s = m.surface();
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy) {
            LPoint px = sx == 0 ? x.a : x.b, py = sy == 0 ? y.a : y.b;
            if (!g.same_point(px, py)) continue;
            int ix = s.fan_index({ax, sx}), iy = s.fan_index({ay, sy});
            if (s.point_of({ax, sx}) != s.point_of({ay, sy})) continue;
            if (iy == ix + 1) return Letter{m.corner_arrow(s.point_of({ax, sx}), ix), true};
            if (ix == iy + 1) return Letter{m.corner_arrow(s.point_of({ax, sx}), iy), false};
        }
    return std::nullopt;
}

bool endpoint_ok(const Geometry& g, LPoint p) { return g.is_open(p) || g.is_extra(p); }

}  // namespace

Check is_permissible(const GentleModel& m, const Chord& c) {
    Check res;
    const Geometry& g = m.geometry();
    if (!endpoint_ok(g, c.a) || !endpoint_ok(g, c.b)) {
        res.ok = false;
        res.violation = "endpoint is a closed point outside the extra set";
        return res;
    }
    auto xs = g.arc_crossings(c);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!corner_letter(m, xs[i].arc, xs[i].lift, xs[i + 1].arc, xs[i + 1].lift)) {
            res.ok = false;
            res.violation = "crossings " + std::to_string(i) + "," + std::to_string(i + 1) +
                            " are not joined by a polygon corner";
            return res;
        }
    return res;
}

std::optional<StringWalk> string_of_curve(const GentleModel& m, const Chord& c) {
    const Geometry& g = m.geometry();
    auto xs = g.arc_crossings(c);
    if (xs.empty()) return std::nullopt;
    StringWalk w;
    w.vertices.push_back(xs[0].arc);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        auto l = corner_letter(m, xs[i].arc, xs[i].lift, xs[i + 1].arc, xs[i + 1].lift);
        if (!l) throw PreconditionError("curve is not permissible");
        w.arrows.push_back(l->arrow);
        w.direct.push_back(l->direct);
        w.vertices.push_back(xs[i + 1].arc);
    }
    return w;
}

std::optional<Representation> module_of_curve(const GentleModel& m, const Chord& c) {
    auto w = string_of_curve(m, c);
    if (!w) return std::nullopt;
    return string_module(m.algebra(), *w);
}

std::vector<Chord> crossed_lifts(const GentleModel& m, const StringWalk& w) {
    if (auto c = check_string(m.algebra(), w); !c) throw InputError("not a string: " + c.violation);
    const Geometry& g = m.geometry();
    const Surface& s = m.surface();
    std::vector<Chord> lifts{g.arc_lift(w.vertices.front())};
    for (int i = 0; i < w.letters(); ++i) {
        auto [q, j] = m.arrow_corner(w.arrows[i]);
        End from = s.fans[q][j], to = s.fans[q][j + 1];
        End here = w.direct[i] ? from : to, there = w.direct[i] ? to : from;
        const Chord& cur = lifts.back();
        LPoint at = here.side == 0 ? cur.a : cur.b;
        Chord next;
        if (!g.lift_at(there.arc, there.side, at, next)) throw ConsistencyError("string lift failed");
        lifts.push_back(next);
    }
    return lifts;
}

Chord curve_of_string(const GentleModel& m, const StringWalk& w) {
    const Geometry& g = m.geometry();
    auto lifts = crossed_lifts(m, w);
    // Point beyond lift `x` of arc `a`, on the side away from the neighbouring lift `nb`.
    auto far_point = [&](int a, const Chord& x, const Chord* nb) {
        long long t;
        if (!g.translation_between(g.arc_lift(a).a, x.a, t)) throw ConsistencyError("lift mismatch");
        std::array<LPoint, 2> opp{g.translate(g.opposite(a)[0], t), g.translate(g.opposite(a)[1], t)};
        if (!g.annulus())
            for (auto& p : opp) p = g.step(p, 0);
        if (!nb) return opp;
        LPoint other = g.same_point(nb->a, x.a) || g.same_point(nb->a, x.b) ? nb->b : nb->a;
        if (g.same_point(opp[0], other)) return std::array<LPoint, 2>{opp[1], opp[1]};
        if (g.same_point(opp[1], other)) return std::array<LPoint, 2>{opp[0], opp[0]};
        throw ConsistencyError("consecutive crossings do not bound a triangle");
    };
    const int last = w.letters();
    if (last == 0) {
        auto opp = far_point(w.vertices[0], lifts[0], nullptr);
        return {opp[0], opp[1]};
    }
    LPoint start = far_point(w.vertices[0], lifts[0], &lifts[1])[0];
    LPoint end = far_point(w.vertices[last], lifts[last], &lifts[last - 1])[0];
    return {start, end};
}

ClosedCurve closed_curve_of_band(const GentleModel& m, const StringWalk& band) {
    if (auto c = check_band(m.algebra(), band); !c) throw InputError("not a band: " + c.violation);
    ClosedCurve cc;
    auto lifts = crossed_lifts(m, band);
    cc.crossings.assign(band.vertices.begin(), band.vertices.end() - 1);
    long long t = 0;
    if (!m.geometry().translation_between(lifts.front().a, lifts.back().a, t))
        throw ConsistencyError("band lift does not close");
    cc.winding = t;
    return cc;
}

TopSocle top_socle_arcs(const GentleModel& m, const Chord& c) {
    TopSocle ts;
    auto w = string_of_curve(m, c);
    if (!w) return ts;
    for (int i : top_positions(*w)) ts.top.push_back(w->vertices[i]);
    for (int i : socle_positions(*w)) ts.socle.push_back(w->vertices[i]);
    return ts;
}

Chord simple_curve(const GentleModel& m, int v) { return curve_of_string(m, StringWalk{{v}, {}, {}}); }

Chord projective_curve(const GentleModel& m, int v) {
    return curve_of_string(m, projective_string(m.algebra(), v));
}

std::optional<int> left_arc(const Surface& s, int arc, int side) {
    End e{arc, side};
    const auto& fan = s.fans[s.point_of(e)];
    int i = s.fan_index(e);
    if (i + 1 < static_cast<int>(fan.size())) return fan[i + 1].arc;
    return std::nullopt;
}

}  // namespace gentle
