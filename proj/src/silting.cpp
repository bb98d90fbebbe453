#include "gentle/silting.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <thread>

namespace gentle {

bool is_tau_rigid_pair(const PathAlgebra& A, const std::vector<Representation>& M, const std::vector<int>& P) {
    const Presentation& p = A.presentation();
    Representation sum = M.empty() ? zero_representation(p) : direct_sum(M);
    for (int v : P)
        if (sum.dims[v] != 0) return false;
    if (sum.is_zero()) return true;
    return hom_dim(p, sum, ar_translate(A, sum)) == 0;
}

EnumerationMode EnumerationMode::parse(const std::string& text, int string_bound) {
    EnumerationMode m;
    m.string_bound = string_bound;
    if (string_bound < 1) throw InputError("string bound must be at least 1");
    if (text == "exhaustive") return m;
    if (text.rfind("depth:", 0) == 0) {
        std::size_t used = 0;
        int d = -1;
        try {
            d = std::stoi(text.substr(6), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size() - 6 || d < 0) throw InputError("bad mutation depth in '" + text + "'");
        m.exhaustive = false;
        m.depth = d;
        return m;
    }
    throw InputError("mode must be 'exhaustive' or 'depth:<d>', got '" + text + "'");
}

std::string EnumerationMode::label() const {
    return exhaustive ? "exhaustive" : "depth:" + std::to_string(depth);
}

// ---------------------------------------------------------------------------------------------

Catalogue::Catalogue(Presentation a, int string_bound) : bound_(string_bound) {
    type_ = classify_hereditary_type(a);
    model_ = std::make_unique<GentleModel>(std::move(a));
    const Presentation& p = model_->algebra();
    const int n = p.num_vertices();
    const int letters = type_.kind == HereditaryType::Kind::A ? n - 1 : bound_;
    for (auto& w : enumerate_strings(p, letters)) {
        Item it;
        it.string = w;
        it.label = w.label(p);
        by_encoding_[w.encoding()] = static_cast<int>(items_.size());
        curves_.push_back(curve_of_string(*model_, w));
        items_.push_back(std::move(it));
    }
    for (int v = 0; v < n; ++v) {
        Item it;
        it.shift = true;
        it.vertex = v;
        it.label = "P(" + p.vertices[v] + ")[1]";
        shift_item_.push_back(static_cast<int>(items_.size()));
        curves_.push_back(model_->geometry().arc_lift(v));
        items_.push_back(std::move(it));
    }
    const std::size_t m = items_.size();
    module_.resize(m);
    tau_.resize(m);
    rigid_.assign(m, -1);
    round_trip_.assign(m, -1);
    complex_.resize(m);
    admissible_.resize(m);
}

std::optional<int> Catalogue::find_string(const StringWalk& w) const {
    auto it = by_encoding_.find(canonical_string(w).encoding());
    if (it == by_encoding_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Catalogue::find_module(const Representation& M) {
    for (int i = 0; i < size(); ++i) {
        if (items_[i].shift) continue;
        const Representation& N = module(i);
        if (N.dims != M.dims) continue;
        if (is_isomorphic(algebra(), M, N)) return i;
    }
    return std::nullopt;
}

const Representation& Catalogue::module(int i) {
    if (!module_[i]) {
        if (items_[i].shift) module_[i] = zero_representation(algebra());
        else module_[i] = string_module(algebra(), items_[i].string);
    }
    return *module_[i];
}

const Representation& Catalogue::tau(int i) {
    if (!tau_[i]) tau_[i] = items_[i].shift ? zero_representation(algebra()) : ar_translate(paths(), module(i));
    return *tau_[i];
}

bool Catalogue::tau_rigid(int i) {
    if (rigid_[i] < 0) rigid_[i] = items_[i].shift || hom_dim(algebra(), module(i), tau(i)) == 0;
    return rigid_[i] != 0;
}

bool Catalogue::compatible(int i, int j) {
    if (i == j) return tau_rigid(i);
    if (i > j) std::swap(i, j);
    auto [it, fresh] = compat_.try_emplace(key(i, j), 0);
    if (!fresh) return it->second != 0;
    bool ok;
    const Item &x = items_[i], &y = items_[j];
    if (x.shift && y.shift) ok = true;
    else if (y.shift) ok = module(i).dims[y.vertex] == 0;
    else if (x.shift) ok = module(j).dims[x.vertex] == 0;
    else ok = hom_dim(algebra(), module(i), tau(j)) == 0 && hom_dim(algebra(), module(j), tau(i)) == 0;
    it->second = ok;
    return ok;
}

const TwoTermComplex& Catalogue::complex(int i) {
    if (!complex_[i]) {
        if (items_[i].shift) complex_[i] = TwoTermComplex::stalk(items_[i].vertex, -1);
        else complex_[i] = min_projective_presentation(paths(), module(i));
    }
    return *complex_[i];
}

const AdmissibleCurve& Catalogue::admissible(int i) {
    if (!admissible_[i]) {
        if (items_[i].shift) admissible_[i] = arc_curve(*model_, items_[i].vertex, -1);
        else admissible_[i] = embed_curve(*model_, curves_[i]);
    }
    return *admissible_[i];
}

bool Catalogue::item_round_trip(int i) {
    if (round_trip_[i] >= 0) return round_trip_[i] != 0;
    bool ok = true;
    const Item& it = items_[i];
    if (it.shift) {
        const auto& c = complex(i);
        ok = c.P0.empty() && c.P1.size() == 1 && c.P1[0] == it.vertex;
        ok = ok && !string_of_curve(*model_, curves_[i]);
    } else {
        ok = is_isomorphic(algebra(), cokernel(paths(), complex(i)), module(i));
        auto w = string_of_curve(*model_, curves_[i]);
        ok = ok && w && canonical_string(*w) == it.string;
    }
    ok = ok && complexes_isomorphic(paths(), complex_of_admissible(*model_, admissible(i)), complex(i));
    round_trip_[i] = ok;
    return ok;
}

const HomK& Catalogue::hom(int i, int j) {
    auto& slot = hom_[key(i, j)];
    if (!slot) slot = std::make_unique<HomK>(paths(), complex(i), complex(j), 0);
    return *slot;
}

std::size_t Catalogue::hom_shift1(int i, int j) {
    auto [it, fresh] = hom1_.try_emplace(key(i, j), 0);
    if (fresh) it->second = HomK(paths(), complex(i), complex(j), 1).dim();
    return it->second;
}

const std::vector<std::vector<Vector>>& Catalogue::composition(int i, int j, int k) {
    const long long kk = (static_cast<long long>(i) * 4099 + j) * 4099 + k;
    auto it = comp_.find(kk);
    if (it != comp_.end()) return it->second;
    const HomK &f = hom(i, j), &g = hom(j, k), &h = hom(i, k);
    std::vector<std::vector<Vector>> t(f.dim(), std::vector<Vector>(g.dim()));
    for (std::size_t a = 0; a < f.dim(); ++a) {
        auto [f0, f1] = f.chain_maps(f.representatives()[a]);
        for (std::size_t b = 0; b < g.dim(); ++b) {
            auto [g0, g1] = g.chain_maps(g.representatives()[b]);
            t[a][b] = h.reduce(h.chain_coords(compose(paths(), g0, f0), compose(paths(), g1, f1)));
        }
    }
    return comp_.emplace(kk, std::move(t)).first->second;
}

bool Catalogue::curves_cross(int i, int j) {
    if (i > j) std::swap(i, j);
    auto [it, fresh] = cross_.try_emplace(key(i, j), 0);
    if (fresh) it->second = !model_->geometry().crossings(curves_[i], {curves_[j]}).empty();
    return it->second != 0;
}

namespace {

std::string labelled_key(const Presentation& b) {
    std::string k = std::to_string(b.num_vertices()) + "|";
    for (const auto& a : b.arrows) k += std::to_string(a.source) + ">" + std::to_string(a.target) + ",";
    k += "|";
    for (const auto& r : b.relations) k += std::to_string(r.first) + "." + std::to_string(r.second) + ",";
    return k;
}

}  // namespace

std::optional<int> Catalogue::gl_dim_cached(const Presentation& b) {
    auto key = labelled_key(b);
    auto it = gldim_.find(key);
    if (it != gldim_.end()) return it->second;
    auto v = global_dimension_linear(b);
    gldim_.emplace(std::move(key), v);
    return v;
}

std::optional<int> Catalogue::geometric_gl_dim_cached(const Presentation& b) {
    auto key = labelled_key(b);
    auto it = geo_gldim_.find(key);
    if (it != geo_gldim_.end()) return it->second;
    auto v = global_dimension_geometric(b);
    geo_gldim_.emplace(std::move(key), v);
    return v;
}

// ---------------------------------------------------------------------------------------------

bool is_support_tau_tilting(Catalogue& cat, const Pair& pair) {
    if (static_cast<int>(pair.size()) != cat.rank()) return false;
    for (std::size_t x = 0; x < pair.size(); ++x) {
        if (x > 0 && pair[x] == pair[x - 1]) return false;
        for (std::size_t y = x; y < pair.size(); ++y)
            if (!cat.compatible(pair[x], pair[y])) return false;
    }
    return true;
}

namespace {

std::vector<int> rigid_candidates(Catalogue& cat) {
    std::vector<int> c;
    for (int i = 0; i < cat.size(); ++i)
        if (cat.tau_rigid(i)) c.push_back(i);
    return c;
}

void exchange_edges(const std::vector<Pair>& pairs, std::vector<Exchange>& edges) {
    std::map<Pair, std::vector<int>> by_rest;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t s = 0; s < pairs[p].size(); ++s) {
            Pair rest = pairs[p];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
            by_rest[rest].push_back(static_cast<int>(p));
        }
    for (auto& [rest, ps] : by_rest)
        if (ps.size() == 2) edges.push_back({ps[0], ps[1]});
    std::sort(edges.begin(), edges.end(),
              [](const Exchange& a, const Exchange& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
}

}  // namespace

Pair mutate_pair(Catalogue& cat, const Pair& pair, int slot) {
    if (!is_support_tau_tilting(cat, pair)) throw InputError("not a support tau-tilting pair");
    if (slot < 0 || slot >= static_cast<int>(pair.size())) throw InputError("mutation slot out of range");
    Pair rest = pair;
    const int removed = rest[slot];
    rest.erase(rest.begin() + slot);
    std::optional<int> found;
    for (int c = 0; c < cat.size(); ++c) {
        if (c == removed || std::binary_search(rest.begin(), rest.end(), c)) continue;
        if (!cat.tau_rigid(c)) continue;
        bool ok = true;
        for (int r : rest)
            if (!cat.compatible(c, r)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (found) throw ConsistencyError("almost complete pair has more than two completions");
        found = c;
    }
    if (!found) throw BoundExceeded("no other completion within " + std::to_string(cat.string_bound()) + " letters");
    rest.push_back(*found);
    std::sort(rest.begin(), rest.end());
    return rest;
}

Enumeration enumerate_stau_tilt(Catalogue& cat, const EnumerationMode& mode) {
    Enumeration out;
    const int n = cat.rank();
    if (mode.exhaustive) {
        if (cat.type().kind != HereditaryType::Kind::A)
            throw PreconditionError("exhaustive enumeration is only available for type A (infinitely many pairs)");
        const auto cand = rigid_candidates(cat);
        const int m = static_cast<int>(cand.size());
        std::vector<std::vector<char>> ok(m, std::vector<char>(m));
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) ok[x][y] = ok[y][x] = cat.compatible(cand[x], cand[y]);
        std::vector<int> chosen;
        std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& pool) {
            if (static_cast<int>(chosen.size()) == n) {
                Pair p;
                for (int x : chosen) p.push_back(cand[x]);
                out.pairs.push_back(std::move(p));
                return;
            }
            if (static_cast<int>(chosen.size() + pool.size()) < n) return;
            for (std::size_t k = 0; k < pool.size(); ++k) {
                const int x = pool[k];
                std::vector<int> next;
                for (std::size_t l = k + 1; l < pool.size(); ++l)
                    if (ok[x][pool[l]]) next.push_back(pool[l]);
                chosen.push_back(x);
                rec(next);
                chosen.pop_back();
            }
        };
        std::vector<int> all(m);
        for (int x = 0; x < m; ++x) all[x] = x;
        rec(all);
        std::sort(out.pairs.begin(), out.pairs.end());
        exchange_edges(out.pairs, out.edges);
        return out;
    }

    Pair start;
    for (int v = 0; v < n; ++v) {
        auto i = cat.find_string(projective_string(cat.algebra(), v));
        if (!i) throw BoundExceeded("projective module exceeds the string bound");
        start.push_back(*i);
    }
    std::sort(start.begin(), start.end());
    std::map<Pair, int> index{{start, 0}};
    std::vector<int> depth{0};
    out.pairs.push_back(start);
    std::set<std::pair<int, int>> edges;
    for (std::size_t head = 0; head < out.pairs.size(); ++head) {
        if (depth[head] >= mode.depth) continue;
        for (int s = 0; s < n; ++s) {
            Pair next;
            try {
                next = mutate_pair(cat, out.pairs[head], s);
            } catch (const BoundExceeded&) {
                ++out.bound_exceeded;
                continue;
            }
            auto [it, fresh] = index.try_emplace(next, static_cast<int>(out.pairs.size()));
            if (fresh) {
                out.pairs.push_back(next);
                depth.push_back(depth[head] + 1);
            }
            const int a = static_cast<int>(head), b = it->second;
            edges.emplace(std::min(a, b), std::max(a, b));
        }
    }
    for (auto [a, b] : edges) out.edges.push_back({a, b});
    return out;
}

std::vector<TwoTermComplex> silting_of_pair(Catalogue& cat, const Pair& pair) {
    if (!is_support_tau_tilting(cat, pair)) throw InputError("not a support tau-tilting pair");
    std::vector<TwoTermComplex> s;
    for (int i : pair) s.push_back(cat.complex(i));
    return s;
}

Pair h0_of_silting(Catalogue& cat, const std::vector<TwoTermComplex>& summands) {
    Pair p;
    for (const auto& c : summands) {
        if (c.P0.empty()) {
            if (c.P1.size() != 1) throw InputError("degree -1 summand is not indecomposable");
            p.push_back(cat.shift_item(c.P1[0]));
            continue;
        }
        auto i = cat.find_module(cokernel(cat.paths(), c));
        if (!i) throw InputError("H0 of a summand is not a known string module");
        p.push_back(*i);
    }
    std::sort(p.begin(), p.end());
    return p;
}

bool is_2term_silting(const PathAlgebra& A, const std::vector<TwoTermComplex>& summands) {
    if (static_cast<int>(summands.size()) != A.num_vertices()) return false;
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = 0; j < summands.size(); ++j) {
            if (hom_complexes_upto_homotopy(A, summands[i], summands[j], 1) != 0) return false;
            if (j > i && complexes_isomorphic(A, summands[i], summands[j])) return false;
        }
    return true;
}

Triangulation triangulation_of_pair(Catalogue& cat, const Pair& pair) {
    Triangulation t;
    for (std::size_t x = 0; x < pair.size(); ++x)
        for (std::size_t y = x + 1; y < pair.size(); ++y)
            if (cat.curves_cross(pair[x], pair[y]))
                throw ConsistencyError("curves of " + cat.item(pair[x]).label + " and " + cat.item(pair[y]).label +
                                       " cross");
    for (int i : pair) {
        if (cat.item(i).shift) t.coarcs.push_back(cat.item(i).vertex);
        else t.curves.push_back(cat.curve(i));
    }
    return t;
}

Pair pair_of_triangulation(Catalogue& cat, const Triangulation& t) {
    Pair p;
    for (const auto& c : t.curves) {
        auto w = string_of_curve(cat.model(), c);
        if (!w) throw InputError("triangulation curve crosses no arc");
        auto i = cat.find_string(*w);
        if (!i) throw InputError("triangulation curve exceeds the string bound");
        p.push_back(*i);
    }
    for (int v : t.coarcs) p.push_back(cat.shift_item(v));
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<AdmissibleCurve> ffas_rotate(Catalogue& cat, const Pair& pair) {
    std::vector<AdmissibleCurve> out;
    for (int i : pair) out.push_back(cat.admissible(i));
    return out;
}

// ---------------------------------------------------------------------------------------------

EndoGeometric endo_geometric(const GentleModel& m, const std::vector<AdmissibleCurve>& curves) {
    const Geometry& g = m.geometry();
    const Surface& base = m.surface();
    EndoGeometric e;
    Surface& s = e.surface;
    s.boundary = base.boundary;
    s.point_ids = base.point_ids;
    s.fans.assign(base.num_points(), {});
    s.corners.assign(base.num_points(), {});
    for (std::size_t i = 0; i < curves.size(); ++i) {
        SurfaceArc arc;
        arc.id = "X" + std::to_string(i + 1);
        for (int sd = 0; sd < 2; ++sd) {
            const LPoint x = sd == 0 ? curves[i].chord.a : curves[i].chord.b;
            arc.point[sd] = g.open_point(x);
            if (arc.point[sd] < 0) throw PreconditionError("rotated curve ends at a closed point");
        }
        s.arcs.push_back(arc);
    }
    for (int p = 0; p < s.num_points(); ++p) {
        const LPoint at = g.lift(p);
        std::vector<End> ends;
        std::vector<LPoint> others;
        std::vector<int> degree;
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (int sd = 0; sd < 2; ++sd) {
                if (s.arcs[i].point[sd] != p) continue;
                const Chord& c = curves[i].chord;
                long long t;
                if (!g.translation_between(sd == 0 ? c.a : c.b, at, t)) continue;
                const Chord moved = g.translate(c, t);
                ends.push_back({static_cast<int>(i), sd});
                others.push_back(g.step(sd == 0 ? moved.b : moved.a, 0));
                degree.push_back(end_degree(m, curves[i], sd));
            }
        const auto order = g.fan_order(at, others);
        for (std::size_t k = 0; k < order.size(); ++k) {
            s.fans[p].push_back(ends[order[k]]);
            if (k > 0) s.corners[p].push_back({"", degree[order[k - 1]] - degree[order[k]]});
        }
    }
    s.check_structure();
    e.ffas = check_ffas(s);
    if (!e.ffas.ok) return e;
    e.polygons = elementary_polygons(s);
    bool unmarked = false;
    for (const auto& poly : e.polygons) {
        e.max_arc_edges = std::max(e.max_arc_edges, poly.arc_edges);
        e.max_total_edges = std::max(e.max_total_edges, poly.total_edges());
        unmarked = unmarked || poly.unmarked;
    }
    if (!unmarked) e.gl_dim_bound = e.max_arc_edges - 1;
    e.graded = algebra_from_surface(s);
    e.h0 = delete_nonzero_graded_arrows(e.graded);
    return e;
}

namespace {

using HomDim = std::function<std::size_t(int, int)>;
// Coordinates of g after f, for basis vectors f of Hom(i,j) and g of Hom(j,k).
using Compose = std::function<const std::vector<std::vector<Vector>>&(int, int, int)>;

Vector apply_bilinear(const std::vector<std::vector<Vector>>& t, const Vector& f, const Vector& g, std::size_t dim) {
    Vector out(dim);
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (f[a].is_zero()) continue;
        for (std::size_t b = 0; b < g.size(); ++b) {
            if (g[b].is_zero()) continue;
            const Rational c = f[a] * g[b];
            for (std::size_t x = 0; x < dim; ++x) out[x] += c * t[a][b][x];
        }
    }
    return out;
}

Vector unit(std::size_t dim, std::size_t k) {
    Vector v(dim);
    v[k] = 1;
    return v;
}

EndoResult endo_core(int n, const HomDim& dim, const Compose& comp) {
    EndoResult r;
    Presentation& b = r.algebra;
    for (int i = 0; i < n; ++i) b.add_vertex("X" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        if (dim(i, i) != 1) {
            r.ok = false;
            r.problem = "summand X" + std::to_string(i + 1) + " has endomorphism ring of dimension " +
                        std::to_string(dim(i, i));
            return r;
        }
    // arrow u -> v stands for an irreducible map X_v -> X_u; arrow_map holds it in Hom(v, u)
    std::vector<Vector> arrow_map;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::size_t d = dim(i, j);
            if (d == 0) continue;
            std::vector<Vector> span;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j || dim(i, k) == 0 || dim(k, j) == 0) continue;
                const auto& t = comp(i, k, j);
                for (const auto& row : t)
                    for (const auto& v : row) span.push_back(v);
            }
            std::size_t rk = rank_of_vectors(span, d);
            for (std::size_t x = 0; x < d && rk < d; ++x) {
                span.push_back(unit(d, x));
                const std::size_t nr = rank_of_vectors(span, d);
                if (nr == rk) {
                    span.pop_back();
                    continue;
                }
                rk = nr;
                b.arrows.push_back({"b" + std::to_string(b.arrows.size() + 1), j, i, 0});
                arrow_map.push_back(unit(d, x));
            }
        }
    const int na = b.num_arrows();
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y) {
            const Arrow &ax = b.arrows[x], &ay = b.arrows[y];
            if (ax.target != ay.source) continue;
            // X_w -> X_v -> X_u with x: u -> v, y: v -> w
            const int u = ax.source, v = ax.target, w = ay.target;
            const std::size_t d = dim(w, u);
            if (d == 0) {
                b.relations.emplace_back(x, y);
                continue;
            }
            if (is_zero_vector(apply_bilinear(comp(w, v, u), arrow_map[y], arrow_map[x], d)))
                b.relations.emplace_back(x, y);
        }
    if (!validate_gentle(b).ok()) {
        r.ok = false;
        r.problem = "endomorphism quiver with zero relations is not gentle";
        return r;
    }
    std::optional<PathAlgebra> pa;
    try {
        pa.emplace(b);
    } catch (const std::exception& ex) {
        r.ok = false;
        r.problem = std::string("endomorphism presentation is not finite dimensional: ") + ex.what();
        return r;
    }
    // images of all paths must form bases of the Hom spaces
    std::map<std::pair<int, int>, std::vector<Vector>> images;
    std::vector<Vector> image(pa->num_paths());
    for (int q = 0; q < pa->num_paths(); ++q) {
        const Path& path = pa->path(q);
        const int u = path.source, w = path.target;
        if (path.arrows.empty()) {
            image[q] = unit(1, 0);
        } else if (path.arrows.size() == 1) {
            image[q] = arrow_map[path.arrows[0]];
        } else {
            std::vector<int> head(path.arrows.begin(), path.arrows.end() - 1);
            const int hp = pa->find(head, u);
            const int last = path.arrows.back();
            const int v = b.arrows[last].source;
            image[q] = apply_bilinear(comp(w, v, u), arrow_map[last], image[hp], dim(w, u));
        }
        images[{w, u}].push_back(image[q]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t d = dim(i, j);
            auto it = images.find({i, j});
            const std::size_t cnt = it == images.end() ? 0 : it->second.size();
            if (cnt != d || (d > 0 && rank_of_vectors(it->second, d) != d)) {
                r.ok = false;
                r.problem = "paths " + std::to_string(j + 1) + "~>" + std::to_string(i + 1) +
                            " do not give a basis of Hom(X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) +
                            ")";
                return r;
            }
        }
    return r;
}

}  // namespace

EndoResult endo_algebraic(const PathAlgebra& A, const std::vector<TwoTermComplex>& summands) {
    const int n = static_cast<int>(summands.size());
    std::map<std::pair<int, int>, std::unique_ptr<HomK>> homs;
    std::map<std::tuple<int, int, int>, std::vector<std::vector<Vector>>> comps;
    auto hom = [&](int i, int j) -> const HomK& {
        auto& slot = homs[{i, j}];
        if (!slot) slot = std::make_unique<HomK>(A, summands[i], summands[j], 0);
        return *slot;
    };
    HomDim dim = [&](int i, int j) { return hom(i, j).dim(); };
    Compose comp = [&](int i, int j, int k) -> const std::vector<std::vector<Vector>>& {
        auto it = comps.find({i, j, k});
        if (it != comps.end()) return it->second;
        const HomK &f = hom(i, j), &g = hom(j, k), &h = hom(i, k);
        std::vector<std::vector<Vector>> t(f.dim(), std::vector<Vector>(g.dim()));
        for (std::size_t a = 0; a < f.dim(); ++a) {
            auto [f0, f1] = f.chain_maps(f.representatives()[a]);
            for (std::size_t b = 0; b < g.dim(); ++b) {
                auto [g0, g1] = g.chain_maps(g.representatives()[b]);
                t[a][b] = h.reduce(h.chain_coords(compose(A, g0, f0), compose(A, g1, f1)));
            }
        }
        return comps.emplace(std::make_tuple(i, j, k), std::move(t)).first->second;
    };
    return endo_core(n, dim, comp);
}

EndoResult endo_algebraic(Catalogue& cat, const Pair& pair) {
    const int n = static_cast<int>(pair.size());
    HomDim dim = [&](int i, int j) { return cat.hom(pair[i], pair[j]).dim(); };
    Compose comp = [&](int i, int j, int k) -> const std::vector<std::vector<Vector>>& {
        return cat.composition(pair[i], pair[j], pair[k]);
    };
    return endo_core(n, dim, comp);
}

// ---------------------------------------------------------------------------------------------

std::string Classification::tag() const {
    std::string t = "(" + std::to_string(form) + ")";
    std::vector<std::string> parts;
    for (const auto& c : components) parts.push_back(std::string(c.annulus ? "~A" : "A") + std::to_string(c.size));
    std::sort(parts.begin(), parts.end());
    t += " ";
    for (std::size_t i = 0; i < parts.size(); ++i) t += (i ? " x " : "") + parts[i];
    return t;
}

Classification classify_silted(const Presentation& b, const HereditaryType& ambient) {
    Classification c;
    int annuli = 0, total = 0;
    for (const auto& comp : connected_components(b)) {
        ComponentShape sh;
        sh.size = comp.num_vertices();
        if (!validate_gentle(comp).ok()) throw ClassificationViolation("component is not gentle");
        if (comp.num_arrows() > 0) {
            const Topology t = surface_of_connected_algebra(comp).topology();
            if (t == Topology::Annulus) sh.annulus = true;
            else if (t != Topology::Disk)
                throw ClassificationViolation("component surface is neither a disk nor an annulus");
        }
        annuli += sh.annulus;
        total += sh.size;
        c.components.push_back(sh);
    }
    if (total != b.num_vertices() || total != ambient.n)
        throw ClassificationViolation("component sizes sum to " + std::to_string(total) + ", expected " +
                                      std::to_string(ambient.n));
    auto gd = global_dimension_geometric(b);
    if (!gd || *gd > 2) throw ClassificationViolation("global dimension exceeds 2");
    const bool connected = c.components.size() == 1;
    if (ambient.kind == HereditaryType::Kind::A) {
        if (annuli > 0) throw ClassificationViolation("annulus component over a type A algebra");
        c.form = connected ? 1 : 2;
    } else {
        if (annuli > 1) throw ClassificationViolation("more than one annulus component");
        if (connected) c.form = annuli ? 1 : 2;
        else c.form = annuli ? 4 : 3;
    }
    return c;
}

// ---------------------------------------------------------------------------------------------

ObjectRecord verify_pair(Catalogue& cat, const Pair& pair) {
    ObjectRecord rec;
    for (int i : pair) rec.summands.push_back(cat.item(i).label);
    auto fail = [&](std::string s) { rec.failures.push_back(std::move(s)); };
    try {
        if (!is_support_tau_tilting(cat, pair)) fail("not a support tau-tilting pair");
        for (int i : pair)
            if (!cat.item_round_trip(i)) fail("round trip fails for " + cat.item(i).label);
        for (int i : pair)
            for (int j : pair)
                if (cat.hom_shift1(i, j) != 0)
                    fail("Hom(" + cat.item(i).label + ", " + cat.item(j).label + "[1]) is nonzero");
        Triangulation t = triangulation_of_pair(cat, pair);
        if (pair_of_triangulation(cat, t) != pair) fail("triangulation does not return the pair");

        auto curves = ffas_rotate(cat, pair);
        const Geometry& g = cat.model().geometry();
        for (std::size_t x = 0; x < curves.size(); ++x)
            for (std::size_t y = x + 1; y < curves.size(); ++y)
                if (!g.crossings(curves[x].chord, {curves[y].chord}).empty())
                    fail("rotated curves " + std::to_string(x + 1) + " and " + std::to_string(y + 1) + " cross");
        EndoGeometric geo = endo_geometric(cat.model(), curves);
        if (!geo.ffas.ok) {
            fail("rotated system is not an FFAS: " + geo.ffas.violation);
        } else {
            rec.max_total_edges = geo.max_total_edges;
            rec.max_arc_edges = geo.max_arc_edges;
            rec.gl_dim_bound = geo.gl_dim_bound;
            if (geo.max_total_edges > 4 || geo.max_arc_edges > 3)
                fail("polygon with " + std::to_string(geo.max_total_edges) + " edges");
            if (!geo.gl_dim_bound || *geo.gl_dim_bound > 2) fail("geometric bound exceeds 2");
        }
        EndoResult alg = endo_algebraic(cat, pair);
        if (!alg.ok) fail("algebraic endomorphisms: " + alg.problem);
        rec.endo = alg.ok ? alg.algebra : geo.h0;
        if (alg.ok && geo.ffas.ok) {
            std::vector<int> id(pair.size());
            for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
            if (!isomorphic_with_vertex_map(geo.h0, alg.algebra, id)) fail("geometric and algebraic endomorphisms differ");
        }
        rec.gl_dim = cat.gl_dim_cached(rec.endo);
        rec.gl_dim_geometric = cat.geometric_gl_dim_cached(rec.endo);
        if (!rec.gl_dim || *rec.gl_dim > 2) fail("global dimension exceeds 2");
        if (rec.gl_dim != rec.gl_dim_geometric) fail("global dimension formula disagrees with the linear oracle");
        try {
            Classification c = classify_silted(rec.endo, cat.type());
            rec.form = c.form;
            rec.form_tag = c.tag();
        } catch (const ClassificationViolation& ex) {
            fail(std::string("unclassified: ") + ex.what());
        }
    } catch (const std::exception& ex) {
        fail(std::string("exception: ") + ex.what());
    }
    return rec;
}

VerificationReport verify_no_strictly_shod(const Presentation& a, const EnumerationMode& mode,
                                           const std::string& algebra_id, int jobs) {
    VerificationReport rep;
    rep.algebra_id = algebra_id;
    rep.mode = mode;
    rep.rank = a.num_vertices();
    Catalogue cat(a, mode.string_bound);
    rep.type_label = cat.type().label();
    Enumeration en = enumerate_stau_tilt(cat, mode);
    rep.edges = en.edges;
    rep.bound_exceeded = en.bound_exceeded;
    rep.objects.resize(en.pairs.size());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(en.pairs.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < en.pairs.size(); ++i) rep.objects[i] = verify_pair(cat, en.pairs[i]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                Catalogue local(a, mode.string_bound);
                for (std::size_t i = w; i < en.pairs.size(); i += jobs) rep.objects[i] = verify_pair(local, en.pairs[i]);
            });
        for (auto& t : pool) t.join();
    }
    for (const auto& r : rep.objects) {
        if (!r.failures.empty()) ++rep.failures;
        if (r.gl_dim) rep.max_gl_dim = std::max(rep.max_gl_dim, *r.gl_dim);
        if (r.form) ++rep.form_counts["(" + std::to_string(r.form) + ")"];
    }
    rep.pass = rep.failures == 0 && !rep.objects.empty() && rep.max_gl_dim <= 2;
    return rep;
}

}  // namespace gentle
