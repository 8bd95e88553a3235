#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tricoord/builtins.hpp"
#include "tricoord/reducibility.hpp"

using namespace tricoord;
using testutil::ev;
using testutil::TorusOracle;

TEST_CASE("assemble_M stacking") {
    const Triangulation s11 = builtin_surface("S_1_1");
    const GeneratorTable table = builtin_table("S_1_1");
    const MappingClassPath id = compile(parse_word(""), table);
    const CellMatrices cell = cell_of(id.path(), ev({0, 1, 1}));
    const BigMatrix f = corner_matrix(s11, enumerate_corner_choices(s11)[0]);
    const BigMatrix m = assemble_M(cell, f);
    CHECK(m.rows() == 3 + 3 + 1 + 8 + 3);
    CHECK(m.cols() == 3);
    // identity path: the A - Id blocks vanish
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j) == 0);
    CHECK(bit_bound(m) ==
          BitBound::max(BitBound::max(bit_bound(cell.B), bit_bound(f)), BitBound::bits(0)));
}

TEST_CASE("decide on the once-marked torus ground truth") {
    const GeneratorTable table = builtin_table("S_1_1");
    for (const char* ws : {"a", "b", "~a", "~b", "a.a", "b.b", ""}) {
        const ReducibilityReport rep = decide(compile(parse_word(ws), table));
        CHECK(rep.reducible);
        REQUIRE(rep.certificate.has_value());
        CHECK(verify_certificate(compile(parse_word(ws), table), *rep.certificate));
        CHECK(bit_bound(*rep.certificate) <= rep.bound);
    }
    for (const char* ws : {"a.~b", "~a.b"}) {
        const ReducibilityReport rep = decide(compile(parse_word(ws), table));
        CHECK_FALSE(rep.reducible);
        CHECK_FALSE(rep.certificate.has_value());
    }
}

TEST_CASE("twist certificates decompose onto the twisting curve") {
    const GeneratorTable table = builtin_table("S_1_1");
    const ReducibilityReport rep = decide(compile(parse_word("a"), table));
    REQUIRE(rep.certificate.has_value());
    const auto comps = decompose(table.base(), *rep.certificate);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].first == ev({0, 1, 1}));
}

TEST_CASE("decide matches the homology oracle and brute force on short words") {
    const GeneratorTable table = builtin_table("S_1_1");
    for (int len = 0; len <= 2; ++len) {
        for (const Word& w : testutil::all_words(table, len)) {
            const MappingClassPath p = compile(w, table);
            const bool fast = decide(p).reducible;
            const bool oracle = TorusOracle::reducible(w);
            const bool brute = brute_force_invariant(p, 12).has_value();
            CHECK(fast == oracle);
            CHECK(fast == brute);
        }
    }
}

TEST_CASE("pruning does not change verdicts") {
    const GeneratorTable table = builtin_table("S_1_1");
    for (const char* ws : {"a", "a.~b", "a.b", "b.b"}) {
        const MappingClassPath p = compile(parse_word(ws), table);
        const ReducibilityReport with = decide(p, SearchOptions{true, 1});
        const ReducibilityReport without = decide(p, SearchOptions{false, 1});
        CHECK(with.reducible == without.reducible);
        CHECK(with.certificate == without.certificate);
        CHECK(without.branches_pruned == 0);
    }
}

TEST_CASE("parallel search returns the serial result") {
    const GeneratorTable table = builtin_table("S_1_1");
    for (const char* ws : {"a", "a.~b", "b.a.b"}) {
        const MappingClassPath p = compile(parse_word(ws), table);
        const ReducibilityReport serial = decide(p, SearchOptions{true, 1});
        const ReducibilityReport parallel = decide(p, SearchOptions{true, 4});
        CHECK(serial.reducible == parallel.reducible);
        CHECK(serial.certificate == parallel.certificate);
        CHECK(serial.branches_explored == parallel.branches_explored);
        CHECK(brute_force_invariant(p, 6, SearchOptions{true, 1}) ==
              brute_force_invariant(p, 6, SearchOptions{true, 4}));
    }
}

TEST_CASE("verify_certificate semantics and robustness") {
    const GeneratorTable table = builtin_table("S_1_1");
    const MappingClassPath a = compile(parse_word("a"), table);
    CHECK(verify_certificate(a, ev({0, 1, 1})));
    CHECK(verify_certificate(a, ev({0, 2, 2})));  // scaling
    CHECK_FALSE(verify_certificate(a, ev({0, 0, 0})));
    CHECK_FALSE(verify_certificate(a, ev({1, 0, 1})));
    CHECK_FALSE(verify_certificate(a, ev({0, 1})));        // wrong length
    CHECK_FALSE(verify_certificate(a, ev({-2, 1, 1})));    // negative entry
    CHECK_FALSE(verify_certificate(a, ev({0, 1, 1, 0})));  // too long

    const MappingClassPath anosov = compile(parse_word("a.~b"), table);
    EdgeVector v(3, BigInt(0));
    for (;;) {
        int i = 2;
        while (i >= 0 && v[i] == 10) v[i--] = 0;
        if (i < 0) break;
        v[i] += 1;
        CHECK_FALSE(verify_certificate(anosov, v));
    }
}

TEST_CASE("brute force pinned examples") {
    const GeneratorTable table = builtin_table("S_1_1");
    CHECK(brute_force_invariant(compile(parse_word("a"), table), 2) == ev({0, 1, 1}));
    CHECK_FALSE(brute_force_invariant(compile(parse_word("a.~b"), table), 10).has_value());
    CHECK(brute_force_invariant(compile(parse_word(""), table), 1).has_value());
    CHECK_THROWS_AS(brute_force_invariant(compile(parse_word("a"), table), 0),
                    std::invalid_argument);
}

TEST_CASE("certificates stay within the reported bound on mixed words") {
    for (const auto& name : {"S_1_1", "S_0_4"}) {
        const GeneratorTable table = builtin_table(name);
        for (const char* ws : {"a", "b.b", "a.b.~a"}) {
            const MappingClassPath p = compile(parse_word(ws), table);
            const ReducibilityReport rep = decide(p);
            if (!rep.reducible) continue;
            CHECK(bit_bound(*rep.certificate) <= rep.bound);
        }
    }
}
