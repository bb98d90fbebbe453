#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "gentle/curves.hpp"
#include "gentle/json_io.hpp"

using namespace gentle;

namespace {

std::vector<int> arc_edge_counts(const Surface& s) {
    std::vector<int> c;
    for (const auto& p : elementary_polygons(s)) c.push_back(p.arc_edges);
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<Presentation> corpus() {
    std::vector<Presentation> out;
    for (const char* dir : {"typeA", "atilde", "corpus"}) {
        std::vector<std::string> files;
        for (const auto& e : std::filesystem::directory_iterator(std::string(GENTLE_FIXTURE_DIR) + "/" + dir))
            files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) out.push_back(algebra_from_json(read_json_file(f)));
    }
    return out;
}

}  // namespace

TEST_CASE("surface of a single vertex") {
    Surface s = surface_from_algebra(type_a(""))[0];
    CHECK(s.topology() == Topology::Disk);
    CHECK(s.num_points() == 2);
    CHECK(s.num_arcs() == 1);
    CHECK(arc_edge_counts(s) == std::vector<int>{1, 1});
    CHECK(global_dimension_geometric(s) == 0);
}

TEST_CASE("surface of 1 -> 2") {
    Surface s = surface_from_algebra(type_a(">"))[0];
    CHECK(s.topology() == Topology::Disk);
    CHECK(s.num_points() == 3);
    REQUIRE(s.num_arcs() == 2);
    const auto& x = s.arcs[0].point;
    const auto& y = s.arcs[1].point;
    int shared = 0;
    for (int i : x)
        for (int j : y) shared += i == j;
    CHECK(shared == 1);
    CHECK(arc_edge_counts(s).back() == 2);
    Presentation back = algebra_from_surface(s);
    CHECK(isomorphic(back, type_a(">")));
    CHECK(back.arrows[0].grade == 0);
}

TEST_CASE("Kronecker surface") {
    Surface s = surface_from_algebra(type_atilde(1, 1))[0];
    CHECK(s.topology() == Topology::Annulus);
    REQUIRE(s.boundary.size() == 2);
    CHECK(s.boundary[0].size() == 1);
    CHECK(s.boundary[1].size() == 1);
    REQUIRE(s.num_arcs() == 2);
    CHECK(s.arcs[0].point == s.arcs[1].point);
    CHECK(isomorphic(algebra_from_surface(s), type_atilde(1, 1)));
}

TEST_CASE("hand-built fan of three arcs") {
    Surface s;
    s.boundary = {{0, 1, 2, 3}};
    s.point_ids = {"p0", "p1", "p2", "p3"};
    s.arcs = {{"x", {0, 1}}, {"y", {0, 2}}, {"z", {0, 3}}};
    s.fans = {{{2, 0}, {1, 0}, {0, 0}}, {{0, 1}}, {{1, 1}}, {{2, 1}}};
    s.corners = {{{}, {}}, {}, {}, {}};
    CHECK_NOTHROW(s.check_structure());
    CHECK(check_ffas(s).ok);
    Presentation p = algebra_from_surface(s);
    CHECK(validate_gentle(p).ok());
    CHECK(isomorphic(p, type_a(">>")));
    CHECK(global_dimension_geometric(s) == 1);

    // reversing the fan order cuts off polygons with two boundary edges
    std::reverse(s.fans[0].begin(), s.fans[0].end());
    CHECK_FALSE(check_ffas(s).ok);
}

TEST_CASE("A3 with a relation has one polygon with three arc edges") {
    Presentation r = type_a(">>");
    r.add_relation("a1", "a2");
    Surface s = surface_from_algebra(r)[0];
    CHECK(arc_edge_counts(s) == std::vector<int>{1, 1, 1, 3});
    CHECK(global_dimension_geometric(s) == 2);
    CHECK(global_dimension_linear(r) == 2);
    CHECK(isomorphic(algebra_from_surface(s), r));
}

TEST_CASE("hereditary surfaces") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& o : type_a_orientations_up_to_reflection(n)) {
            Surface s = surface_from_algebra(type_a(o))[0];
            CHECK(s.topology() == Topology::Disk);
            CHECK(s.num_points() == n + 1);
            for (const auto& poly : elementary_polygons(s)) {
                CHECK(poly.arc_edges <= 2);
                CHECK(poly.boundary_edges == 1);
            }
            CHECK(global_dimension_geometric(s) == (n == 1 ? 0 : 1));
        }
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        Surface s = surface_from_algebra(type_atilde(p, q))[0];
        CHECK(s.topology() == Topology::Annulus);
        CHECK(s.boundary[0].size() + s.boundary[1].size() == static_cast<std::size_t>(p + q));
    }
}

TEST_CASE("dual dissection crosses each arc exactly once") {
    for (const auto& p : {type_a(">><"), type_a("<><>"), type_atilde(2, 1), type_atilde(2, 2)}) {
        GentleModel m(p);
        const Geometry& g = m.geometry();
        std::vector<Chord> arcs;
        for (int a = 0; a < p.num_vertices(); ++a) arcs.push_back(g.arc_lift(a));
        for (int a = 0; a < p.num_vertices(); ++a) {
            auto xs = g.crossings(g.dual_lift(a), arcs);
            REQUIRE(xs.size() == 1);
            CHECK(xs[0].arc == a);
        }
    }
}

TEST_CASE("round trip and gl.dim formula over the fixture corpus") {
    for (const auto& p : corpus()) {
        CAPTURE(canonical_form(p));
        auto comps = surface_from_algebra(p);
        auto parts = connected_components(p);
        REQUIRE(comps.size() == parts.size());
        for (std::size_t i = 0; i < comps.size(); ++i) {
            CHECK(check_ffas(comps[i]).ok);
            CHECK(isomorphic(algebra_from_surface(comps[i]), parts[i]));
        }
        CHECK(global_dimension_geometric(p) == global_dimension_linear(p));
    }
}

TEST_CASE("surface JSON") {
    Surface s = surface_from_algebra(type_a(">"))[0];
    Json j = surface_to_json(s);
    CHECK(j["topology"] == "disk");
    CHECK(j["boundary"][0].size() == 6);
    CHECK(j["boundary"][0][0]["color"] == "open");
    CHECK(j["boundary"][0][1]["color"] == "closed");
    CHECK(j["arcs"].size() == 2);
    CHECK(j["corners"].size() == 1);
    CHECK(j["gl_dim"] == 1);
    int extra = 0;
    for (const auto& pt : j["boundary"][0])
        if (pt.value("extra", false)) ++extra;
    CHECK(extra == 2);  // the two digons
    Presentation two;
    for (auto v : {"1", "2", "3"}) two.add_vertex(v);
    two.add_arrow("a", "1", "2");
    CHECK(surfaces_to_json(surface_from_algebra(two))["components"].size() == 2);
}
