#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tricoord/builtins.hpp"
#include "tricoord/triangulation.hpp"

using namespace tricoord;

TEST_CASE("builtin surfaces validate with the right invariants") {
    const Triangulation s11 = builtin_surface("S_1_1");
    CHECK(s11.zeta() == 3);
    CHECK(s11.invariants().genus == 1);
    CHECK(s11.invariants().marked_points == 1);
    CHECK(s11.invariants().components == 1);

    const Triangulation s04 = builtin_surface("S_0_4");
    CHECK(s04.zeta() == 6);
    CHECK(s04.invariants().genus == 0);
    CHECK(s04.invariants().marked_points == 4);

    const Triangulation s12 = builtin_surface("S_1_2");
    CHECK(s12.zeta() == 6);
    CHECK(s12.invariants().genus == 1);
    CHECK(s12.invariants().marked_points == 2);
}

TEST_CASE("validation rejects malformed gluings") {
    // edge 1 used three times
    CHECK_THROWS_AS(Triangulation::from_file_labels({{1, 2, 3}, {-1, 1, -3}}),
                    std::invalid_argument);
    // inconsistent orientation: +1 twice
    CHECK_THROWS_AS(Triangulation::from_file_labels({{1, 2, 3}, {1, -2, -3}}),
                    std::invalid_argument);
    // zero label
    CHECK_THROWS_AS(Triangulation::from_file_labels({{0, 2, 3}, {-1, -2, -3}}),
                    std::invalid_argument);
    // empty face list
    CHECK_THROWS_AS(Triangulation::from_file_labels({}), std::invalid_argument);
}

TEST_CASE("vertex orbits") {
    const Triangulation s11 = builtin_surface("S_1_1");
    CHECK(s11.corners_of_vertices().size() == 1);
    CHECK(s11.corners_of_vertices()[0].size() == 6);

    const Triangulation s04 = builtin_surface("S_0_4");
    CHECK(s04.corners_of_vertices().size() == 4);
    for (const auto& orbit : s04.corners_of_vertices()) CHECK(orbit.size() == 3);

    const Triangulation s12 = builtin_surface("S_1_2");
    CHECK(s12.corners_of_vertices().size() == 2);
}

TEST_CASE("flip is an involution and preserves invariants") {
    for (const auto& name : builtin_surface_names()) {
        const Triangulation t = builtin_surface(name);
        for (int e = 0; e < t.zeta(); ++e) {
            if (!t.flippable(e)) continue;
            const Triangulation f = t.flip(e);
            CHECK(f.invariants().genus == t.invariants().genus);
            CHECK(f.invariants().marked_points == t.invariants().marked_points);
            CHECK(f.invariants().zeta == t.invariants().zeta);
            CHECK(f.flip(e) == t);
            CHECK_FALSE(f == t);
        }
    }
}

TEST_CASE("self-folded edges are not flippable") {
    // thrice-marked sphere: edges 1 and 2 are self-folded
    const Triangulation s03 = Triangulation::from_file_labels({{1, 2, -2}, {-1, 3, -3}});
    CHECK(s03.invariants().genus == 0);
    CHECK(s03.invariants().marked_points == 3);
    CHECK_FALSE(s03.flippable(1));
    CHECK_THROWS_AS(s03.flip(1), std::invalid_argument);
    CHECK(s03.flippable(0));
}

TEST_CASE("reorder semantics") {
    const Triangulation t = builtin_surface("S_1_1");
    CHECK(t.reorder({0, 1, 2}) == t);
    CHECK_FALSE(t.reorder({1, 0, 2}) == t);
    CHECK(t.reorder({1, 0, 2}).reorder({1, 0, 2}) == t);
    CHECK(t.reorder({1, 2, 0}).invariants().zeta == 3);
    CHECK_THROWS_AS(t.reorder({0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(t.reorder({0, 1}), std::invalid_argument);
}

TEST_CASE("equality ignores face order but not labels") {
    const Triangulation a = Triangulation::from_file_labels({{1, 2, 3}, {-1, -2, -3}});
    const Triangulation b = Triangulation::from_file_labels({{-1, -2, -3}, {1, 2, 3}});
    CHECK(a == b);
}

TEST_CASE("serialization round-trips canonically") {
    for (const auto& name : builtin_surface_names()) {
        const Triangulation t = builtin_surface(name);
        CHECK(Triangulation::from_file_labels(t.to_file_labels()) == t);
        const std::string j = surface_to_json(t, name);
        CHECK(parse_surface_json(j) == t);
        CHECK(surface_to_json(parse_surface_json(j), name) == j);
    }
}

TEST_CASE("flips explore distinct triangulations") {
    const Triangulation t = builtin_surface("S_1_2");
    for (int e = 0; e < t.zeta(); ++e)
        for (int f = e + 1; f < t.zeta(); ++f) {
            if (!t.flippable(e) || !t.flippable(f)) continue;
            CHECK_FALSE(t.flip(e) == t.flip(f));
        }
}
