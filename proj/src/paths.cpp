#include "gentle/paths.hpp"

#include <algorithm>

namespace gentle {

PathAlgebra::PathAlgebra(Presentation p) : p_(std::move(p)), n_(p_.num_vertices()) {
    const int m = p_.num_arrows();
    between_.assign(static_cast<std::size_t>(n_) * n_, {});
    for (int v = 0; v < n_; ++v) {
        trivial_.push_back(static_cast<int>(paths_.size()));
        index_[{v, {}}] = static_cast<int>(paths_.size());
        paths_.push_back({v, v, {}});
    }
    // breadth-first extension; every arrow appears at most once in a nonzero path of a
    // finite-dimensional monomial algebra, so length m + 1 certifies infinite dimension
    std::vector<int> frontier;
    for (int a = 0; a < m; ++a) {
        Path q{p_.arrows[a].source, p_.arrows[a].target, {a}};
        index_[{q.source, q.arrows}] = static_cast<int>(paths_.size());
        frontier.push_back(static_cast<int>(paths_.size()));
        paths_.push_back(q);
    }
    int length = 1;
    while (!frontier.empty()) {
        if (length > m) throw NotFiniteDimensional("nonzero paths of unbounded length");
        std::vector<int> next;
        for (int idx : frontier) {
            for (int a : p_.arrows_out(paths_[idx].target)) {
                if (p_.is_relation(paths_[idx].arrows.back(), a)) continue;
                Path q = paths_[idx];
                q.arrows.push_back(a);
                q.target = p_.arrows[a].target;
                index_[{q.source, q.arrows}] = static_cast<int>(paths_.size());
                next.push_back(static_cast<int>(paths_.size()));
                paths_.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
        ++length;
    }
    arrow_path_.resize(m);
    for (int a = 0; a < m; ++a) arrow_path_[a] = index_.at({p_.arrows[a].source, {a}});
    rank_.resize(paths_.size());
    for (int i = 0; i < num_paths(); ++i) {
        auto& b = between_[paths_[i].source * n_ + paths_[i].target];
        rank_[i] = static_cast<int>(b.size());
        b.push_back(i);
    }
    const std::size_t N = paths_.size();
    concat_.assign(N * N, -1);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const auto& a = paths_[i];
            const auto& b = paths_[j];
            if (a.target != b.source) continue;
            if (a.arrows.empty()) {
                concat_[i * N + j] = static_cast<int>(j);
                continue;
            }
            if (b.arrows.empty()) {
                concat_[i * N + j] = static_cast<int>(i);
                continue;
            }
            if (p_.is_relation(a.arrows.back(), b.arrows.front())) continue;
            std::vector<int> w = a.arrows;
            w.insert(w.end(), b.arrows.begin(), b.arrows.end());
            auto it = index_.find({a.source, w});
            if (it != index_.end()) concat_[i * N + j] = it->second;
        }
}

int PathAlgebra::find(const std::vector<int>& arrows, int source) const {
    auto it = index_.find({source, arrows});
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> PathAlgebra::arrow_ids(int path) const {
    std::vector<std::string> ids;
    for (int a : paths_[path].arrows) ids.push_back(p_.arrows[a].id);
    return ids;
}

std::string PathAlgebra::path_label(int path) const {
    const auto& q = paths_[path];
    if (q.arrows.empty()) return "e" + p_.vertices[q.source];
    std::string s;
    for (int a : q.arrows) s += (s.empty() ? "" : ".") + p_.arrows[a].id;
    return s;
}

void add_term(PathComb& c, int path, const Rational& coef) {
    if (coef.is_zero()) return;
    auto it = std::lower_bound(c.begin(), c.end(), path, [](const PathTerm& t, int p) { return t.path < p; });
    if (it != c.end() && it->path == path) {
        it->coef += coef;
        if (it->coef.is_zero()) c.erase(it);
    } else {
        c.insert(it, {path, coef});
    }
}

PathComb combine(const PathComb& a, const PathComb& b, const Rational& scale_b) {
    PathComb r = a;
    for (const auto& t : b) add_term(r, t.path, t.coef * scale_b);
    return r;
}

PathComb concat(const PathAlgebra& A, const PathComb& c1, const PathComb& c2) {
    PathComb r;
    for (const auto& x : c1)
        for (const auto& y : c2) {
            int p = A.concat(x.path, y.path);
            if (p >= 0) add_term(r, p, x.coef * y.coef);
        }
    return r;
}

ProjMap ProjMap::zero(std::vector<int> src, std::vector<int> dst) {
    ProjMap f;
    f.entry.assign(src.size(), std::vector<PathComb>(dst.size()));
    f.src = std::move(src);
    f.dst = std::move(dst);
    return f;
}

ProjMap ProjMap::identity(const PathAlgebra& A, const std::vector<int>& objs) {
    ProjMap f = zero(objs, objs);
    for (std::size_t i = 0; i < objs.size(); ++i) f.entry[i][i].push_back({A.trivial(objs[i]), 1});
    return f;
}

bool ProjMap::is_zero() const {
    for (const auto& row : entry)
        for (const auto& c : row)
            if (!c.empty()) return false;
    return true;
}

ProjMap compose(const PathAlgebra& A, const ProjMap& g, const ProjMap& f) {
    if (f.dst != g.src) throw ConsistencyError("composing morphisms with mismatched objects");
    ProjMap r = ProjMap::zero(f.src, g.dst);
    for (std::size_t i = 0; i < f.src.size(); ++i)
        for (std::size_t j = 0; j < f.dst.size(); ++j) {
            if (f.entry[i][j].empty()) continue;
            for (std::size_t k = 0; k < g.dst.size(); ++k) {
                if (g.entry[j][k].empty()) continue;
                PathComb c = concat(A, g.entry[j][k], f.entry[i][j]);
                for (const auto& t : c) add_term(r.entry[i][k], t.path, t.coef);
            }
        }
    return r;
}

ProjMap add(const ProjMap& a, const ProjMap& b, const Rational& scale_b) {
    if (a.src != b.src || a.dst != b.dst) throw ConsistencyError("adding morphisms with mismatched objects");
    ProjMap r = a;
    for (std::size_t i = 0; i < a.src.size(); ++i)
        for (std::size_t j = 0; j < a.dst.size(); ++j) r.entry[i][j] = combine(a.entry[i][j], b.entry[i][j], scale_b);
    return r;
}

ProjHomSpace::ProjHomSpace(const PathAlgebra& A, std::vector<int> src, std::vector<int> dst)
    : A_(&A), src_(std::move(src)), dst_(std::move(dst)) {
    offset_.resize(src_.size() * dst_.size());
    for (std::size_t i = 0; i < src_.size(); ++i)
        for (std::size_t j = 0; j < dst_.size(); ++j) {
            offset_[i * dst_.size() + j] = dim_;
            for (int p : A.between(dst_[j], src_[i]))
                slots_.push_back({static_cast<int>(i), static_cast<int>(j), p});
            dim_ += A.between(dst_[j], src_[i]).size();
        }
}

std::size_t ProjHomSpace::index(int i, int j, int path) const {
    return offset_[static_cast<std::size_t>(i) * dst_.size() + j] + A_->rank_in_block(path);
}

Vector ProjHomSpace::coords(const ProjMap& f) const {
    Vector v(dim_);
    for (std::size_t i = 0; i < src_.size(); ++i)
        for (std::size_t j = 0; j < dst_.size(); ++j)
            for (const auto& t : f.entry[i][j]) v[index(static_cast<int>(i), static_cast<int>(j), t.path)] += t.coef;
    return v;
}

ProjMap ProjHomSpace::element(const Vector& v) const {
    ProjMap f = ProjMap::zero(src_, dst_);
    for (std::size_t k = 0; k < dim_; ++k)
        if (!v[k].is_zero()) add_term(f.entry[slots_[k].i][slots_[k].j], slots_[k].path, v[k]);
    return f;
}

}  // namespace gentle
