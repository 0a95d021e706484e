#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circulant/transforms.hpp"

using namespace circulant;

TEST_CASE("multiplier images") {
    CHECK(adams_image(CirculantGraph(54, {1, 17, 18, 19}), 5) ==
          CirculantGraph(54, {5, 13, 18, 23}));
    CHECK(adams_image(CirculantGraph(54, {5, 13, 21, 23}), 5) ==
          CirculantGraph(54, {3, 7, 11, 25}));
    CHECK(adams_image(CirculantGraph(48, {1, 4, 23}), 11) == CirculantGraph(48, {4, 11, 13}));
    // a = 1 and a = n-1 are always the identity on canonical sets
    CirculantGraph g(54, {1, 3, 17, 19});
    CHECK(adams_image(g, 1) == g);
    CHECK(adams_image(g, 53) == g);
    CHECK_THROWS_AS(adams_image(g, 6), NotAUnitError);
    CHECK_THROWS_AS(adams_image(g, 0), NotAUnitError);
}

TEST_CASE("theta parameters validate the common factor") {
    CHECK_THROWS_AS(ThetaParams(Modulus(54), 5, 1), InvalidRError);
    CHECK_THROWS_AS(ThetaParams(Modulus(54), 1, 0), InvalidRError);
    ThetaParams p(Modulus(54), 3, 2);
    CHECK(p.m == 3);
    CHECK(p.t == 2);
    // t reduces mod n/m
    CHECK(ThetaParams(Modulus(54), 3, 20).t == 2);
}

TEST_CASE("theta residue map") {
    ThetaParams p81(Modulus(81), 3, 3);
    CHECK(theta_residue(26, p81) == 44);
    CHECK(theta_residue(3, p81) == 3);    // multiples of m stay put
    CHECK(theta_residue(78, p81) == 78);
    CHECK(theta_residue(1, ThetaParams(Modulus(81), 3, 8)) == 25);
    CHECK(theta_residue(0, p81) == 0);
}

TEST_CASE("theta on full sets reproduces the scan rows") {
    std::set<i64> base{1, 3, 26, 28, 53, 55, 78, 80};
    CHECK(theta_set(base, ThetaParams(Modulus(81), 3, 3)) ==
          std::set<i64>{10, 3, 44, 37, 71, 64, 78, 17});
    // bijection: image cardinality never drops
    CHECK(theta_set(base, ThetaParams(Modulus(81), 3, 1)).size() == base.size());
}

TEST_CASE("symmetry detection") {
    Modulus n81(81);
    CHECK(is_symmetric({3, 10, 17, 37, 44, 64, 71, 78}, n81));
    CHECK_FALSE(is_symmetric({4, 3, 32, 31, 59, 58, 78, 5}, n81));
    CHECK(is_symmetric({27}, Modulus(54)));
    CHECK_FALSE(is_symmetric({1}, Modulus(54)));
}

TEST_CASE("theta graph keeps only symmetric images") {
    CirculantGraph g81(81, {1, 3, 26, 28});
    auto img = theta_graph(g81, 3, 3);
    REQUIRE(img.has_value());
    CHECK(*img == CirculantGraph(81, {3, 10, 17, 37}));

    CHECK_FALSE(theta_graph(CirculantGraph(54, {1, 3, 17, 19}), 3, 1).has_value());
    // t = 0 is the identity
    CHECK(theta_graph(g81, 3, 0) == g81);
    // r need not be a jump of g as long as gcd(n, r) > 1
    CHECK(theta_graph(CirculantGraph(54, {1, 6, 17, 19}), 3, 2) ==
          CirculantGraph(54, {6, 7, 11, 25}));
}

TEST_CASE("theta composition and inverse on a fixed example") {
    CirculantGraph g(81, {1, 3, 26, 28});
    auto h = theta_graph(g, 3, 3);
    REQUIRE(h.has_value());
    // inverse parameter n/m - t undoes the map
    CHECK(theta_graph(*h, 3, 27 - 3) == g);
    // composing t=3 twice equals t=6
    auto h2 = theta_graph(*h, 3, 3);
    REQUIRE(h2.has_value());
    CHECK(h2 == theta_graph(g, 3, 6));
}
