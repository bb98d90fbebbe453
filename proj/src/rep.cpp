#include "gentle/rep.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace gentle {

int Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

Representation zero_representation(const Presentation& p) {
    Representation M;
    M.dims.assign(p.num_vertices(), 0);
    for (int a = 0; a < p.num_arrows(); ++a) M.maps.emplace_back(0, 0);
    return M;
}

Representation simple_representation(const Presentation& p, int v) {
    Representation M = zero_representation(p);
    M.dims[v] = 1;
    for (int a = 0; a < p.num_arrows(); ++a)
        M.maps[a] = Matrix(M.dims[p.arrows[a].target], M.dims[p.arrows[a].source]);
    return M;
}

Representation projective_representation(const PathAlgebra& A, int v) {
    const auto& p = A.presentation();
    Representation M;
    M.dims.resize(p.num_vertices());
    for (int w = 0; w < p.num_vertices(); ++w) M.dims[w] = static_cast<int>(A.between(v, w).size());
    for (int a = 0; a < p.num_arrows(); ++a) {
        const int s = p.arrows[a].source, t = p.arrows[a].target;
        Matrix m(M.dims[t], M.dims[s]);
        for (int q : A.between(v, s)) {
            int r = A.concat(q, A.arrow_path(a));
            if (r >= 0) m(A.rank_in_block(r), A.rank_in_block(q)) = 1;
        }
        M.maps.push_back(std::move(m));
    }
    return M;
}

Representation injective_representation(const PathAlgebra& A, int v) {
    const auto& p = A.presentation();
    Representation M;
    M.dims.resize(p.num_vertices());
    for (int w = 0; w < p.num_vertices(); ++w) M.dims[w] = static_cast<int>(A.between(w, v).size());
    for (int a = 0; a < p.num_arrows(); ++a) {
        const int s = p.arrows[a].source, t = p.arrows[a].target;
        Matrix m(M.dims[t], M.dims[s]);
        for (int q2 : A.between(t, v)) {
            int q = A.concat(A.arrow_path(a), q2);
            if (q >= 0) m(A.rank_in_block(q2), A.rank_in_block(q)) = 1;
        }
        M.maps.push_back(std::move(m));
    }
    return M;
}

Representation direct_sum(const std::vector<Representation>& parts) {
    Representation S;
    if (parts.empty()) return S;
    const std::size_t nv = parts[0].dims.size(), na = parts[0].maps.size();
    S.dims.assign(nv, 0);
    for (const auto& P : parts)
        for (std::size_t v = 0; v < nv; ++v) S.dims[v] += P.dims[v];
    S.maps.resize(na);
    for (std::size_t a = 0; a < na; ++a) {
        std::size_t rows = 0, cols = 0;
        for (const auto& P : parts) {
            rows += P.maps[a].rows();
            cols += P.maps[a].cols();
        }
        Matrix m(rows, cols);
        std::size_t r0 = 0, c0 = 0;
        for (const auto& P : parts) {
            for (std::size_t i = 0; i < P.maps[a].rows(); ++i)
                for (std::size_t j = 0; j < P.maps[a].cols(); ++j) m(r0 + i, c0 + j) = P.maps[a](i, j);
            r0 += P.maps[a].rows();
            c0 += P.maps[a].cols();
        }
        S.maps[a] = std::move(m);
    }
    return S;
}

Matrix path_action(const PathAlgebra& A, const Representation& M, int path) {
    const Path& q = A.path(path);
    Matrix r = Matrix::identity(M.dims[q.source]);
    for (int a : q.arrows) r = M.maps[a] * r;
    return r;
}

void check_representation(const Presentation& p, const Representation& M) {
    if (static_cast<int>(M.dims.size()) != p.num_vertices() || static_cast<int>(M.maps.size()) != p.num_arrows())
        throw InputError("representation does not match the presentation");
    for (int a = 0; a < p.num_arrows(); ++a) {
        const auto& m = M.maps[a];
        if (static_cast<int>(m.rows()) != M.dims[p.arrows[a].target] ||
            static_cast<int>(m.cols()) != M.dims[p.arrows[a].source])
            throw InputError("matrix of arrow " + p.arrows[a].id + " has the wrong shape");
    }
}

bool satisfies_relations(const Presentation& p, const Representation& M) {
    check_representation(p, M);
    for (const auto& r : p.relations)
        if (!(M.maps[r.second] * M.maps[r.first]).is_zero()) return false;
    return true;
}

std::vector<RepMorphism> hom_space(const Presentation& p, const Representation& M, const Representation& N) {
    check_representation(p, M);
    check_representation(p, N);
    const int n = p.num_vertices();
    std::vector<std::size_t> off(n + 1, 0);
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(N.dims[v]) * M.dims[v];
    std::size_t eqs = 0;
    for (const auto& a : p.arrows) eqs += static_cast<std::size_t>(N.dims[a.target]) * M.dims[a.source];
    Matrix C(eqs, off[n]);
    std::size_t row = 0;
    for (int ai = 0; ai < p.num_arrows(); ++ai) {
        const auto& a = p.arrows[ai];
        const int s = a.source, t = a.target;
        const Matrix& Ma = M.maps[ai];
        const Matrix& Na = N.maps[ai];
        for (int r = 0; r < N.dims[t]; ++r)
            for (int c = 0; c < M.dims[s]; ++c, ++row) {
                // (N_a f_s)(r, c) - (f_t M_a)(r, c)
                for (int k = 0; k < N.dims[s]; ++k)
                    if (!Na(r, k).is_zero()) C(row, off[s] + static_cast<std::size_t>(k) * M.dims[s] + c) += Na(r, k);
                for (int k = 0; k < M.dims[t]; ++k)
                    if (!Ma(k, c).is_zero()) C(row, off[t] + static_cast<std::size_t>(r) * M.dims[t] + k) -= Ma(k, c);
            }
    }
    std::vector<RepMorphism> basis;
    for (const auto& x : nullspace(C)) {
        RepMorphism f(n);
        for (int v = 0; v < n; ++v) {
            f[v] = Matrix(N.dims[v], M.dims[v]);
            for (int r = 0; r < N.dims[v]; ++r)
                for (int c = 0; c < M.dims[v]; ++c) f[v](r, c) = x[off[v] + static_cast<std::size_t>(r) * M.dims[v] + c];
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

std::size_t hom_dim(const Presentation& p, const Representation& M, const Representation& N) {
    return hom_space(p, M, N).size();
}

bool is_isomorphic(const Presentation& p, const Representation& M, const Representation& N) {
    if (M.dims != N.dims) return false;
    if (M.total_dim() == 0) return true;
    auto basis = hom_space(p, M, N);
    if (basis.empty()) return false;
    std::mt19937 rng(0xC0FFEEu);
    std::uniform_int_distribution<int> coef(1, 997);
    for (int attempt = 0; attempt < 4; ++attempt) {
        RepMorphism f(M.dims.size());
        for (std::size_t v = 0; v < M.dims.size(); ++v) f[v] = Matrix(N.dims[v], M.dims[v]);
        for (const auto& b : basis) {
            Rational c = coef(rng);
            for (std::size_t v = 0; v < M.dims.size(); ++v) f[v] = f[v] + b[v].scaled(c);
        }
        bool invertible = true;
        for (std::size_t v = 0; v < M.dims.size() && invertible; ++v)
            if (M.dims[v] > 0 && !invertible_mod_prime(f[v])) invertible = false;
        if (invertible) return true;
    }
    return false;
}

namespace {

// Columns of the images of all arrows ending at v.
std::vector<Vector> radical_span(const Presentation& p, const Representation& M, int v) {
    std::vector<Vector> cols;
    for (int a : p.arrows_in(v)) {
        const Matrix& m = M.maps[a];
        for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    }
    return cols;
}

Vector unit(std::size_t n, std::size_t k) {
    Vector e(n);
    e[k] = 1;
    return e;
}

// Greedy extension of span(cols) to the whole space by standard vectors; returns the added vectors.
std::vector<Vector> complement(const std::vector<Vector>& cols, std::size_t n) {
    std::vector<Vector> span = cols;
    std::size_t r = rank_of_vectors(span, n);
    std::vector<Vector> added;
    for (std::size_t k = 0; k < n && r < n; ++k) {
        span.push_back(unit(n, k));
        std::size_t r2 = rank_of_vectors(span, n);
        if (r2 > r) {
            added.push_back(unit(n, k));
            r = r2;
        } else {
            span.pop_back();
        }
    }
    return added;
}

// Independent subset of cols, in order.
std::vector<Vector> independent(const std::vector<Vector>& cols, std::size_t n) {
    if (cols.empty()) return {};
    Echelon e = rref(Matrix::from_columns(cols, n));
    std::vector<Vector> out;
    for (auto pc : e.pivots) out.push_back(cols[pc]);
    return out;
}

}  // namespace

std::vector<int> radical_dims(const Presentation& p, const Representation& M) {
    std::vector<int> r(p.num_vertices());
    for (int v = 0; v < p.num_vertices(); ++v)
        r[v] = static_cast<int>(rank_of_vectors(radical_span(p, M, v), M.dims[v]));
    return r;
}

std::vector<int> top_dims(const Presentation& p, const Representation& M) {
    auto r = radical_dims(p, M);
    for (int v = 0; v < p.num_vertices(); ++v) r[v] = M.dims[v] - r[v];
    return r;
}

std::vector<int> socle_dims(const Presentation& p, const Representation& M) {
    std::vector<int> s(p.num_vertices());
    for (int v = 0; v < p.num_vertices(); ++v) {
        auto outs = p.arrows_out(v);
        std::size_t rows = 0;
        for (int a : outs) rows += M.maps[a].rows();
        Matrix st(rows, M.dims[v]);
        std::size_t r0 = 0;
        for (int a : outs) {
            for (std::size_t i = 0; i < M.maps[a].rows(); ++i)
                for (int j = 0; j < M.dims[v]; ++j) st(r0 + i, j) = M.maps[a](i, j);
            r0 += M.maps[a].rows();
        }
        s[v] = M.dims[v] - static_cast<int>(rank(st));
    }
    return s;
}

Subrepresentation kernel(const Presentation& p, const Representation& M, const Representation& N, const RepMorphism& f) {
    (void)N;
    const int n = p.num_vertices();
    Subrepresentation K;
    K.rep.dims.resize(n);
    K.inclusion.resize(n);
    for (int v = 0; v < n; ++v) {
        auto ns = nullspace(f[v]);
        K.rep.dims[v] = static_cast<int>(ns.size());
        K.inclusion[v] = ns.empty() ? Matrix(M.dims[v], 0) : Matrix::from_columns(ns, M.dims[v]);
    }
    for (int a = 0; a < p.num_arrows(); ++a) {
        const int s = p.arrows[a].source, t = p.arrows[a].target;
        Matrix m(K.rep.dims[t], K.rep.dims[s]);
        if (K.rep.dims[s] > 0 && K.rep.dims[t] > 0) {
            LinearSolver sol(K.inclusion[t]);
            Matrix img = M.maps[a] * K.inclusion[s];
            for (std::size_t j = 0; j < img.cols(); ++j) {
                auto x = sol.solve(img.column(j));
                if (!x) throw ConsistencyError("kernel is not a subrepresentation");
                for (std::size_t i = 0; i < x->size(); ++i) m(i, j) = (*x)[i];
            }
        }
        K.rep.maps.push_back(std::move(m));
    }
    return K;
}

Representation quotient(const Presentation& p, const Representation& M, const std::vector<Matrix>& spans) {
    const int n = p.num_vertices();
    std::vector<std::vector<Vector>> U(n), C(n);
    std::vector<std::optional<LinearSolver>> full(n);
    Representation Q;
    Q.dims.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < spans[v].cols(); ++j) cols.push_back(spans[v].column(j));
        U[v] = independent(cols, M.dims[v]);
        C[v] = complement(U[v], M.dims[v]);
        Q.dims[v] = static_cast<int>(C[v].size());
        std::vector<Vector> basis = U[v];
        basis.insert(basis.end(), C[v].begin(), C[v].end());
        if (M.dims[v] > 0) full[v].emplace(Matrix::from_columns(basis, M.dims[v]));
    }
    for (int a = 0; a < p.num_arrows(); ++a) {
        const int s = p.arrows[a].source, t = p.arrows[a].target;
        Matrix m(Q.dims[t], Q.dims[s]);
        for (int j = 0; j < Q.dims[s]; ++j) {
            if (Q.dims[t] == 0) break;
            auto x = full[t]->solve(M.maps[a].apply(C[s][j]));
            for (int i = 0; i < Q.dims[t]; ++i) m(i, j) = (*x)[U[t].size() + i];
        }
        Q.maps.push_back(std::move(m));
    }
    return Q;
}

ProjectiveCover projective_cover(const PathAlgebra& A, const Representation& M) {
    const auto& p = A.presentation();
    ProjectiveCover pc;
    for (int v = 0; v < p.num_vertices(); ++v)
        for (auto& g : complement(radical_span(p, M, v), M.dims[v])) {
            pc.vertices.push_back(v);
            pc.generators.push_back(std::move(g));
        }
    std::vector<Representation> parts;
    for (int v : pc.vertices) parts.push_back(projective_representation(A, v));
    pc.cover = parts.empty() ? zero_representation(p) : direct_sum(parts);
    pc.map.resize(p.num_vertices());
    for (int w = 0; w < p.num_vertices(); ++w) {
        Matrix m(M.dims[w], pc.cover.dims[w]);
        std::size_t col = 0;
        for (std::size_t i = 0; i < pc.vertices.size(); ++i)
            for (int q : A.between(pc.vertices[i], w)) {
                Vector img = path_action(A, M, q).apply(pc.generators[i]);
                for (int r = 0; r < M.dims[w]; ++r) m(r, col) = img[r];
                ++col;
            }
        pc.map[w] = std::move(m);
    }
    pc.kernel = kernel(p, pc.cover, M, pc.map);
    return pc;
}

TwoTermComplex min_projective_presentation(const PathAlgebra& A, const Representation& M) {
    ProjectiveCover c0 = projective_cover(A, M);
    const Representation& K = c0.kernel.rep;
    ProjectiveCover c1 = projective_cover(A, K);
    TwoTermComplex pres = TwoTermComplex::make(c1.vertices, c0.vertices);
    for (std::size_t i = 0; i < c1.vertices.size(); ++i) {
        const int u = c1.vertices[i];
        Vector x = c0.kernel.inclusion[u].apply(c1.generators[i]);
        std::size_t off = 0;
        for (std::size_t j = 0; j < c0.vertices.size(); ++j) {
            const auto& paths = A.between(c0.vertices[j], u);
            for (std::size_t r = 0; r < paths.size(); ++r) add_term(pres.d.entry[i][j], paths[r], x[off + r]);
            off += paths.size();
        }
    }
    return pres;
}

Representation cokernel(const PathAlgebra& A, const TwoTermComplex& c) {
    const auto& p = A.presentation();
    std::vector<Representation> parts;
    for (int v : c.P0) parts.push_back(projective_representation(A, v));
    if (parts.empty()) return zero_representation(p);
    Representation P0 = direct_sum(parts);
    const int n = p.num_vertices();
    std::vector<std::vector<Vector>> img(n);
    for (std::size_t i = 0; i < c.P1.size(); ++i) {
        const int u = c.P1[i];
        for (int w = 0; w < n; ++w)
            for (int r : A.between(u, w)) {
                Vector x(P0.dims[w]);
                std::size_t off = 0;
                for (std::size_t j = 0; j < c.P0.size(); ++j) {
                    for (const auto& t : c.d.entry[i][j]) {
                        int q = A.concat(t.path, r);
                        if (q >= 0) x[off + A.rank_in_block(q)] += t.coef;
                    }
                    off += A.between(c.P0[j], w).size();
                }
                img[w].push_back(std::move(x));
            }
    }
    std::vector<Matrix> spans(n);
    for (int w = 0; w < n; ++w)
        spans[w] = img[w].empty() ? Matrix(P0.dims[w], 0) : Matrix::from_columns(img[w], P0.dims[w]);
    return quotient(p, P0, spans);
}

Representation ar_translate(const PathAlgebra& A, const Representation& M) {
    const auto& p = A.presentation();
    TwoTermComplex pres = min_projective_presentation(A, M);
    if (pres.P1.empty()) return zero_representation(p);
    std::vector<Representation> i1, i0;
    for (int u : pres.P1) i1.push_back(injective_representation(A, u));
    for (int v : pres.P0) i0.push_back(injective_representation(A, v));
    Representation I1 = direct_sum(i1);
    Representation I0 = i0.empty() ? zero_representation(p) : direct_sum(i0);
    const int n = p.num_vertices();
    RepMorphism nu(n);
    for (int x = 0; x < n; ++x) {
        Matrix m(I0.dims[x], I1.dims[x]);
        std::size_t col0 = 0;
        for (std::size_t i = 0; i < pres.P1.size(); ++i) {
            const auto& qs = A.between(x, pres.P1[i]);
            std::size_t row0 = 0;
            for (std::size_t j = 0; j < pres.P0.size(); ++j) {
                const auto& ys = A.between(x, pres.P0[j]);
                for (const auto& t : pres.d.entry[i][j])
                    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
                        int q = A.concat(ys[yi], t.path);
                        if (q >= 0) m(row0 + yi, col0 + A.rank_in_block(q)) += t.coef;
                    }
                row0 += ys.size();
            }
            col0 += qs.size();
        }
        nu[x] = std::move(m);
    }
    return kernel(p, I1, I0, nu).rep;
}

std::size_t ext1(const PathAlgebra& A, const Representation& M, const Representation& N) {
    const auto& p = A.presentation();
    ProjectiveCover c = projective_cover(A, M);
    std::size_t hom_p0 = 0;
    for (int v : c.vertices) hom_p0 += N.dims[v];
    return hom_dim(p, c.kernel.rep, N) + hom_dim(p, M, N) - hom_p0;
}

std::optional<int> projective_dimension(const PathAlgebra& A, const Representation& M, int cap) {
    Representation K = M;
    for (int k = 0; k <= cap; ++k) {
        ProjectiveCover c = projective_cover(A, K);
        if (c.kernel.rep.is_zero()) return k;
        K = c.kernel.rep;
    }
    return std::nullopt;
}

std::optional<int> global_dimension_linear(const Presentation& B, int cap) {
    PathAlgebra A(B);
    int best = 0;
    for (int v = 0; v < B.num_vertices(); ++v) {
        auto pd = projective_dimension(A, simple_representation(B, v), cap);
        if (!pd) return std::nullopt;
        best = std::max(best, *pd);
    }
    return best;
}

}  // namespace gentle
