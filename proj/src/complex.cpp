#include "gentle/complex.hpp"

#include <algorithm>
#include <random>

namespace gentle {

TwoTermComplex TwoTermComplex::stalk(int v, int degree) {
    if (degree == 0) return make({}, {v});
    if (degree == -1) return make({v}, {});
    throw PreconditionError("stalk complexes live in degree 0 or -1");
}

TwoTermComplex TwoTermComplex::make(std::vector<int> p1, std::vector<int> p0) {
    TwoTermComplex c;
    c.d = ProjMap::zero(p1, p0);
    c.P1 = std::move(p1);
    c.P0 = std::move(p0);
    return c;
}

bool TwoTermComplex::is_minimal(const PathAlgebra& A) const {
    for (const auto& row : d.entry)
        for (const auto& c : row)
            for (const auto& t : c)
                if (A.path(t.path).arrows.empty()) return false;
    return true;
}

TwoTermComplex direct_sum(const std::vector<TwoTermComplex>& parts) {
    std::vector<int> p1, p0;
    for (const auto& c : parts) {
        p1.insert(p1.end(), c.P1.begin(), c.P1.end());
        p0.insert(p0.end(), c.P0.begin(), c.P0.end());
    }
    TwoTermComplex s = TwoTermComplex::make(p1, p0);
    std::size_t o1 = 0, o0 = 0;
    for (const auto& c : parts) {
        for (std::size_t i = 0; i < c.P1.size(); ++i)
            for (std::size_t j = 0; j < c.P0.size(); ++j) s.d.entry[o1 + i][o0 + j] = c.d.entry[i][j];
        o1 += c.P1.size();
        o0 += c.P0.size();
    }
    return s;
}

namespace {

Vector concat_vectors(const Vector& a, const Vector& b) {
    Vector r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

ProjMap unit_map(const ProjHomSpace& S, std::size_t k) {
    ProjMap f = ProjMap::zero(S.src(), S.dst());
    const auto& s = S.slots()[k];
    f.entry[s.i][s.j].push_back({s.path, 1});
    return f;
}

}  // namespace

HomK::HomK(const PathAlgebra& A, const TwoTermComplex& X, const TwoTermComplex& Y, int shift)
    : A_(&A), shift_(shift) {
    if (shift == 0) {
        spaces_.emplace_back(A, X.P0, Y.P0);
        spaces_.emplace_back(A, X.P1, Y.P1);
        const ProjHomSpace& F0 = spaces_[0];
        const ProjHomSpace& F1 = spaces_[1];
        chain_dim_ = F0.dim() + F1.dim();
        ProjHomSpace target(A, X.P1, Y.P0);
        // chain condition dY f1 - f0 dX = 0
        Matrix C(target.dim(), chain_dim_);
        for (std::size_t k = 0; k < F0.dim(); ++k) {
            Vector v = target.coords(compose(A, unit_map(F0, k), X.d));
            for (std::size_t r = 0; r < v.size(); ++r) C(r, k) = -v[r];
        }
        for (std::size_t k = 0; k < F1.dim(); ++k) {
            Vector v = target.coords(compose(A, Y.d, unit_map(F1, k)));
            for (std::size_t r = 0; r < v.size(); ++r) C(r, F0.dim() + k) = v[r];
        }
        cycles_ = nullspace(C);
        ProjHomSpace H(A, X.P0, Y.P1);
        for (std::size_t k = 0; k < H.dim(); ++k) {
            ProjMap h = unit_map(H, k);
            boundaries_.push_back(concat_vectors(F0.coords(compose(A, Y.d, h)), F1.coords(compose(A, h, X.d))));
        }
    } else if (shift == 1) {
        spaces_.emplace_back(A, X.P1, Y.P0);
        const ProjHomSpace& G = spaces_[0];
        chain_dim_ = G.dim();
        for (std::size_t k = 0; k < G.dim(); ++k) {
            Vector v(G.dim());
            v[k] = 1;
            cycles_.push_back(v);
        }
        ProjHomSpace H1(A, X.P1, Y.P1);
        for (std::size_t k = 0; k < H1.dim(); ++k) boundaries_.push_back(G.coords(compose(A, Y.d, unit_map(H1, k))));
        ProjHomSpace H0(A, X.P0, Y.P0);
        for (std::size_t k = 0; k < H0.dim(); ++k) boundaries_.push_back(G.coords(compose(A, unit_map(H0, k), X.d)));
    } else if (shift == -1) {
        spaces_.emplace_back(A, X.P0, Y.P1);
        const ProjHomSpace& G = spaces_[0];
        chain_dim_ = G.dim();
        ProjHomSpace T1(A, X.P0, Y.P0);
        ProjHomSpace T2(A, X.P1, Y.P1);
        Matrix C(T1.dim() + T2.dim(), G.dim());
        for (std::size_t k = 0; k < G.dim(); ++k) {
            ProjMap h = unit_map(G, k);
            Vector a = T1.coords(compose(A, Y.d, h));
            Vector b = T2.coords(compose(A, h, X.d));
            for (std::size_t r = 0; r < a.size(); ++r) C(r, k) = a[r];
            for (std::size_t r = 0; r < b.size(); ++r) C(T1.dim() + r, k) = b[r];
        }
        cycles_ = nullspace(C);
    } else {
        chain_dim_ = 0;
    }
    // representatives: cycles independent modulo boundaries (pivot columns after the boundaries)
    if (!cycles_.empty()) {
        std::vector<Vector> span = boundaries_;
        span.insert(span.end(), cycles_.begin(), cycles_.end());
        Echelon e = rref(Matrix::from_columns(span, chain_dim_));
        for (std::size_t pc : e.pivots)
            if (pc >= boundaries_.size()) reps_.push_back(cycles_[pc - boundaries_.size()]);
    }
    std::vector<Vector> cols = reps_;
    cols.insert(cols.end(), boundaries_.begin(), boundaries_.end());
    if (chain_dim_ > 0) solver_.emplace(Matrix::from_columns(cols, chain_dim_));
}

Vector HomK::reduce(const Vector& chain) const {
    if (chain.size() != chain_dim_) throw ConsistencyError("chain coordinates have wrong length");
    if (!solver_) return {};
    auto sol = solver_->solve(chain);
    if (!sol) throw ConsistencyError("vector is not a chain map");
    return Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps_.size()));
}

bool HomK::is_null_homotopic(const Vector& chain) const { return is_zero_vector(reduce(chain)); }

Vector HomK::chain_coords(const ProjMap& f0, const ProjMap& f1) const {
    if (shift_ != 0) throw PreconditionError("chain_coords is defined for degree-zero maps");
    return concat_vectors(spaces_[0].coords(f0), spaces_[1].coords(f1));
}

std::pair<ProjMap, ProjMap> HomK::chain_maps(const Vector& chain) const {
    if (shift_ != 0) throw PreconditionError("chain_maps is defined for degree-zero maps");
    const std::size_t n0 = spaces_[0].dim();
    Vector a(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(n0));
    Vector b(chain.begin() + static_cast<std::ptrdiff_t>(n0), chain.end());
    return {spaces_[0].element(a), spaces_[1].element(b)};
}

std::size_t hom_complexes_upto_homotopy(const PathAlgebra& A, const TwoTermComplex& X, const TwoTermComplex& Y,
                                        int shift) {
    if (shift > 1 || shift < -1) return 0;
    return HomK(A, X, Y, shift).dim();
}

bool complexes_isomorphic(const PathAlgebra& A, const TwoTermComplex& X, const TwoTermComplex& Y) {
    // the class [P0] - [P1] in the Grothendieck group is an invariant
    std::vector<int> kx(A.num_vertices(), 0), ky(A.num_vertices(), 0);
    for (int v : X.P0) kx[v]++;
    for (int v : X.P1) kx[v]--;
    for (int v : Y.P0) ky[v]++;
    for (int v : Y.P1) ky[v]--;
    if (kx != ky) return false;
    HomK XY(A, X, Y, 0), YX(A, Y, X, 0), XX(A, X, X, 0), YY(A, Y, Y, 0);
    if (XX.dim() == 0 && YY.dim() == 0) return true;  // both contractible
    if (XY.dim() == 0 || YX.dim() == 0 || XX.dim() != YY.dim()) return false;
    const Vector idX = XX.chain_coords(ProjMap::identity(A, X.P0), ProjMap::identity(A, X.P1));
    const Vector idY = YY.chain_coords(ProjMap::identity(A, Y.P0), ProjMap::identity(A, Y.P1));
    std::mt19937 rng(0x5151u);
    std::uniform_int_distribution<int> coef(1, 97);
    for (int attempt = 0; attempt < 4; ++attempt) {
        Vector f(XY.chain_dim());
        for (const auto& r : XY.representatives()) {
            Rational c = coef(rng);
            for (std::size_t k = 0; k < f.size(); ++k) f[k] += c * r[k];
        }
        auto [f0, f1] = XY.chain_maps(f);
        // unknowns: coefficients of g over representatives of Hom(Y, X), then homotopies on X and Y
        const auto& greps = YX.representatives();
        const std::size_t nx = XX.chain_dim(), ny = YY.chain_dim();
        std::vector<Vector> cols;
        for (const auto& g : greps) {
            auto [g0, g1] = YX.chain_maps(g);
            Vector gf = XX.chain_coords(compose(A, g0, f0), compose(A, g1, f1));
            Vector fg = YY.chain_coords(compose(A, f0, g0), compose(A, f1, g1));
            cols.push_back(concat_vectors(gf, fg));
        }
        for (const auto& b : XX.boundaries()) cols.push_back(concat_vectors(b, Vector(ny)));
        for (const auto& b : YY.boundaries()) cols.push_back(concat_vectors(Vector(nx), b));
        Vector rhs = concat_vectors(idX, idY);
        if (solve(Matrix::from_columns(cols, nx + ny), rhs)) return true;
    }
    return false;
}

bool HomotopyString::is_two_term() const {
    if (degrees.empty()) return false;
    auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    return *lo >= -1 && *hi <= 0;
}

TwoTermComplex complex_of_homotopy_string(const PathAlgebra& A, const HomotopyString& h) {
    if (!h.is_two_term()) throw PreconditionError("homotopy string is not concentrated in degrees -1 and 0");
    std::vector<int> p1, p0;
    std::vector<int> slot(h.vertices.size());
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        if (h.degrees[i] == 0) {
            slot[i] = static_cast<int>(p0.size());
            p0.push_back(h.vertices[i]);
        } else {
            slot[i] = static_cast<int>(p1.size());
            p1.push_back(h.vertices[i]);
        }
    }
    TwoTermComplex c = TwoTermComplex::make(p1, p0);
    for (std::size_t k = 0; k < h.letters.size(); ++k) {
        // the letter's path runs from the degree-0 end to the degree -1 end
        std::size_t from = h.direct[k] ? k : k + 1;
        std::size_t to = h.direct[k] ? k + 1 : k;
        if (h.degrees[from] != 0 || h.degrees[to] != -1)
            throw ConsistencyError("homotopy letter does not go from degree 0 to degree -1");
        const Path& q = A.path(h.letters[k]);
        if (q.source != h.vertices[from] || q.target != h.vertices[to])
            throw ConsistencyError("homotopy letter endpoints do not match its vertices");
        add_term(c.d.entry[slot[to]][slot[from]], h.letters[k], 1);
    }
    return c;
}

}  // namespace gentle
