#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circulant/zmod.hpp"

using namespace circulant;

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Modulus(2), Error);
    CHECK_THROWS_AS(Modulus(0), Error);
    CHECK(Modulus(3).value() == 3);
}

TEST_CASE("reflexive reduction folds into [1, n/2]") {
    Modulus n54(54);
    CHECK(reflexive_reduce({1, 3, 17, 19}, n54) == std::vector<i64>{1, 3, 17, 19});
    CHECK(reflexive_reduce({25, 11, 51, 7, 47, 3, 43, 29}, n54) ==
          std::vector<i64>{3, 7, 11, 25});
    CHECK(reflexive_reduce({10, 3, 44, 37, 71, 64, 78, 17}, Modulus(81)) ==
          std::vector<i64>{3, 10, 17, 37});
    CHECK(reflexive_reduce({-1, 11}, Modulus(10)) == std::vector<i64>{1});
    CHECK(reflexive_reduce({5, 5}, Modulus(10)) == std::vector<i64>{5});
}

TEST_CASE("reflexive reduction rejects zero jumps") {
    CHECK_THROWS_AS(reflexive_reduce({54}, Modulus(54)), ZeroJumpError);
    CHECK_THROWS_AS(reflexive_reduce({0}, Modulus(10)), ZeroJumpError);
    CHECK_THROWS_AS(reflexive_reduce({1, -108}, Modulus(54)), ZeroJumpError);
}

TEST_CASE("full connection set is the symmetric closure") {
    CHECK(CirculantGraph(81, {1, 3, 26, 28}).full_set() ==
          std::vector<i64>{1, 3, 26, 28, 53, 55, 78, 80});
    CHECK(CirculantGraph(48, {1, 2, 23}).full_set() ==
          std::vector<i64>{1, 2, 23, 25, 46, 47});
    // n/2 pairs with itself and appears once
    CHECK(CirculantGraph(10, {5}).full_set() == std::vector<i64>{5});
    CHECK(CirculantGraph(10, {1, 5}).degree() == 3);
}

TEST_CASE("adjacency via difference classes") {
    CirculantGraph g(6, {1, 3});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(0, 5));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(2, 4));
    CHECK_FALSE(g.adjacent(3, 3));
}

TEST_CASE("connectivity is a gcd condition") {
    CHECK(CirculantGraph(8, {1}).is_connected());
    CHECK_FALSE(CirculantGraph(8, {2, 4}).is_connected());
    CHECK(CirculantGraph(8, {2, 3}).is_connected());
}

TEST_CASE("gcd profile") {
    CHECK(gcd_profile(CirculantGraph(54, {1, 3, 17, 19})) == std::vector<i64>{1, 1, 1, 3});
    CHECK(gcd_profile(CirculantGraph(81, {3, 7, 20, 34})) == std::vector<i64>{1, 1, 1, 3});
    CHECK(gcd_profile(CirculantGraph(8, {2, 4})) == std::vector<i64>{2, 4});
}

TEST_CASE("periodic cycle length is the additive order") {
    CHECK(periodic_cycle_length(Modulus(81), 3) == 27);
    CHECK(periodic_cycle_length(Modulus(54), 18) == 3);
    CHECK(periodic_cycle_length(Modulus(54), 5) == 54);
    CHECK(periodic_cycle_length(Modulus(10), 5) == 2);
}

TEST_CASE("units of Z_54") {
    CHECK(units(Modulus(54)) == std::vector<i64>{1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35,
                                                 37, 41, 43, 47, 49, 53});
    CHECK(units(Modulus(27)).size() == 18);
}

TEST_CASE("spectrum invariant") {
    // 4-cycle: eigenvalues 2, 0, 0, -2
    CHECK(spectrum_invariant(CirculantGraph(4, {1})) == std::vector<double>{2.0, 0.0, 0.0, -2.0});
    // complete graph on 4 vertices
    CHECK(spectrum_invariant(CirculantGraph(4, {1, 2})) ==
          std::vector<double>{3.0, -1.0, -1.0, -1.0});
    // multiplier images are cospectral
    CHECK(spectrum_invariant(CirculantGraph(5, {1})) == spectrum_invariant(CirculantGraph(5, {2})));
    CHECK(spectrum_invariant(CirculantGraph(8, {1, 4})) !=
          spectrum_invariant(CirculantGraph(8, {2, 4})));
}

TEST_CASE("canonical text form") {
    CHECK(CirculantGraph(54, {19, 3, 17, 1}).to_text() == "C54(1,3,17,19)");
    CHECK(CirculantGraph(10, {5}).to_text() == "C10(5)");
}

TEST_CASE("graph ordering and equality") {
    CirculantGraph a(54, {1, 3, 17, 19});
    CirculantGraph b(54, {25, 11, 51, 7, 47, 3, 43, 29});
    CHECK(CirculantGraph(54, {3, 7, 11, 25}) == b);
    CHECK(a != b);
    CHECK(a < b);
}
