#include <doctest.h>

#include "gentle/curves.hpp"

using namespace gentle;

namespace {

// Euler form of a quiver without relations: <m, n> = sum m_v n_v - sum over arrows m_s n_t.
long euler_form(const Presentation& p, const std::vector<int>& m, const std::vector<int>& n) {
    long s = 0;
    for (int v = 0; v < p.num_vertices(); ++v) s += static_cast<long>(m[v]) * n[v];
    for (const auto& a : p.arrows) s -= static_cast<long>(m[a.source]) * n[a.target];
    return s;
}

std::vector<Representation> string_modules(const Presentation& p, int letters) {
    std::vector<Representation> out;
    for (const auto& w : enumerate_strings(p, letters)) out.push_back(string_module(p, w));
    return out;
}

}  // namespace

TEST_CASE("hom spaces over A2") {
    Presentation p = type_a(">");
    PathAlgebra A(p);
    auto P1 = projective_representation(A, 0);
    auto S1 = simple_representation(p, 0);
    CHECK(P1.dims == std::vector<int>{1, 1});
    CHECK(hom_dim(p, P1, S1) == 1);
    CHECK(hom_dim(p, S1, P1) == 0);
    CHECK(hom_dim(p, P1, P1) == 1);
    for (const auto& f : hom_space(p, P1, P1)) CHECK(f.size() == 2);
}

TEST_CASE("minimal projective presentations") {
    Presentation p = type_a(">");
    PathAlgebra A(p);
    auto c = min_projective_presentation(A, simple_representation(p, 0));
    CHECK(c.P1 == std::vector<int>{1});
    CHECK(c.P0 == std::vector<int>{0});
    CHECK(c.is_minimal(A));
    auto proj = min_projective_presentation(A, projective_representation(A, 0));
    CHECK(proj.P1.empty());
    CHECK(proj.P0 == std::vector<int>{0});

    // zigzag 1 -> 2 <- 3 and the module with dimension vector (1,1,1)
    Presentation z = type_a("><");
    PathAlgebra Z(z);
    StringWalk w{{0, 1, 2}, {0, 1}, {true, false}};
    auto M = string_module(z, w);
    CHECK(M.dims == std::vector<int>{1, 1, 1});
    auto cz = min_projective_presentation(Z, M);
    CHECK(cz.P1 == std::vector<int>{1});
    std::vector<int> p0 = cz.P0;
    std::sort(p0.begin(), p0.end());
    CHECK(p0 == std::vector<int>{0, 2});
}

TEST_CASE("cokernel of the minimal presentation is the module") {
    for (const auto& p : {type_a(">><"), type_atilde(2, 1)}) {
        PathAlgebra A(p);
        for (const auto& M : string_modules(p, 5)) {
            auto c = min_projective_presentation(A, M);
            CHECK(c.is_minimal(A));
            CHECK(is_isomorphic(p, cokernel(A, c), M));
        }
    }
}

TEST_CASE("AR translate") {
    Presentation p = type_a(">");
    PathAlgebra A(p);
    CHECK(ar_translate(A, projective_representation(A, 0)).is_zero());
    CHECK(is_isomorphic(p, ar_translate(A, simple_representation(p, 0)), simple_representation(p, 1)));

    Presentation k = type_atilde(1, 1);
    PathAlgebra K(k);
    StringWalk band{{0, 1, 0}, {0, 1}, {true, false}};
    auto R = band_module(k, band, Rational(1), 1);
    CHECK(R.dims == std::vector<int>{1, 1});
    CHECK(is_isomorphic(k, ar_translate(K, R), R));
    auto R2 = band_module(k, band, Rational(1), 2);
    CHECK(R2.dims == std::vector<int>{2, 2});
    CHECK(hom_dim(k, R2, R2) == 2);  // End of J_2(1) block is 2-dimensional and local
    CHECK_THROWS(band_module(k, band, Rational(0), 1));
}

TEST_CASE("Ext over A2") {
    Presentation p = type_a(">");
    PathAlgebra A(p);
    auto S1 = simple_representation(p, 0), S2 = simple_representation(p, 1);
    CHECK(ext1(A, S1, S2) == 1);
    CHECK(ext1(A, S2, S1) == 0);
    CHECK(ext1(A, projective_representation(A, 0), S1) == 0);
}

TEST_CASE("Euler form and AR duality on hereditary fixtures") {
    for (const auto& p : {type_a(">"), type_a("><"), type_a("<><"), type_atilde(1, 1), type_atilde(2, 1)}) {
        PathAlgebra A(p);
        auto mods = string_modules(p, 4);
        for (const auto& M : mods) {
            auto tM = ar_translate(A, M);
            for (const auto& N : mods) {
                const long hom = static_cast<long>(hom_dim(p, M, N));
                const long ext = static_cast<long>(ext1(A, M, N));
                CHECK(hom - ext == euler_form(p, M.dims, N.dims));
                CHECK(ext == static_cast<long>(hom_dim(p, N, tM)));
            }
        }
    }
}

TEST_CASE("global dimension by resolutions") {
    Presentation semisimple;
    semisimple.add_vertex("1");
    semisimple.add_vertex("2");
    CHECK(global_dimension_linear(semisimple) == 0);
    CHECK(global_dimension_linear(type_a(">><")) == 1);
    Presentation r = type_a(">>");
    r.add_relation("a1", "a2");
    CHECK(global_dimension_linear(r) == 2);
    Presentation cyc;
    for (auto v : {"1", "2"}) cyc.add_vertex(v);
    cyc.add_arrow("a", "1", "2");
    cyc.add_arrow("b", "2", "1");
    cyc.add_relation("a", "b");
    cyc.add_relation("b", "a");
    CHECK_FALSE(global_dimension_linear(cyc).has_value());
}

TEST_CASE("isomorphism test distinguishes bands by eigenvalue") {
    Presentation k = type_atilde(1, 1);
    StringWalk band{{0, 1, 0}, {0, 1}, {true, false}};
    CHECK_FALSE(is_isomorphic(k, band_module(k, band, Rational(1), 1), band_module(k, band, Rational(2), 1)));
    CHECK(is_isomorphic(k, band_module(k, band, Rational(3), 1), band_module(k, band, Rational(3), 1)));
}
