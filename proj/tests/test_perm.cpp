#include <random>

#include "core/perm.hpp"
#include "doctest.h"

using namespace dessin;

namespace {

Perm random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

}  // namespace

TEST_CASE("parse smallest cycle") {
    Perm p = parse_cycles("(1 2 3)", 3);
    CHECK(p[0] == 1);
    CHECK(p[1] == 2);
    CHECK(p[2] == 0);
}

TEST_CASE("parse the printed degree-21 rotation") {
    Perm x = parse_cycles("(1,2,3)(4,5,6)(7,8,9)(11,12,13)(15,16,17)(18,19,20)", 21);
    auto ca = cycle_analysis(x);
    CHECK(ca.cycle_type == std::vector<std::pair<int, int>>{{1, 3}, {3, 6}});
    CHECK(ca.order == 3);
}

TEST_CASE("empty word is the identity") {
    Perm p = parse_cycles("", 5);
    CHECK(p.is_identity());
    CHECK(p.degree() == 5);
}

TEST_CASE("comments and commas are tolerated") {
    Perm p = parse_cycles("# leading comment\n(1 2) (4,5) # trailing", 5);
    CHECK(p == parse_cycles("(1,2)(4 5)", 5));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), Error);   // repeated point
    CHECK_THROWS_AS(parse_cycles("(1 9)", 3), Error);        // out of range
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), Error);         // unterminated
    CHECK_THROWS_AS(parse_cycles("1 2)", 3), Error);         // missing paren
    CHECK_THROWS_AS(parse_cycles("(0 1)", 3), Error);        // 1-indexed input
}

TEST_CASE("round trip through format") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 40);
        Perm p = random_perm(rng, n);
        CHECK(parse_cycles(format_cycles(p), n) == p);
    }
}

TEST_CASE("fixed trailing points survive the round trip") {
    Perm p = parse_cycles("(1 2)", 9);
    CHECK(p.degree() == 9);
    CHECK(parse_cycles(format_cycles(p), 9).degree() == 9);
}

TEST_CASE("compose laws") {
    std::mt19937 rng(11);
    for (int t = 0; t < 1000; ++t) {
        int n = 2 + static_cast<int>(rng() % 49);
        Perm p = random_perm(rng, n), q = random_perm(rng, n), r = random_perm(rng, n);
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(compose(Perm(n), p) == p);
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(is_odd(compose(p, q)) == (is_odd(p) != is_odd(q)));
        CHECK(cycle_analysis(inverse(p)).cycle_type == cycle_analysis(p).cycle_type);
    }
    CHECK_THROWS_AS(compose(Perm(3), Perm(4)), Error);
}

TEST_CASE("compose applies the left factor first") {
    // 1 -> 2 under p, then 2 -> 3 under q
    Perm p = parse_cycles("(1 2)", 3);
    Perm q = parse_cycles("(2 3)", 3);
    CHECK(compose(p, q)[0] == 2);
}

TEST_CASE("inverse of a 3-cycle reverses it") {
    CHECK(inverse(parse_cycles("(1 2 3)", 3)) == parse_cycles("(1 3 2)", 3));
    CHECK(inverse(Perm(4)).is_identity());
}

TEST_CASE("commutator of an element with itself") {
    std::mt19937 rng(3);
    Perm p = random_perm(rng, 12);
    CHECK(commutator(p, p).is_identity());
}

TEST_CASE("cycle analysis of the identity") {
    auto ca = cycle_analysis(Perm(7));
    CHECK(ca.cycle_type == std::vector<std::pair<int, int>>{{1, 7}});
    CHECK(ca.order == 1);
    CHECK(ca.fixed_point_count == 7);
    CHECK_FALSE(ca.odd);
}

TEST_CASE("power walks cycles") {
    Perm p = parse_cycles("(1 2 3 4 5 6 7)", 7);
    CHECK(power(p, 7).is_identity());
    CHECK(power(p, -1) == inverse(p));
    CHECK(power(p, 153) == power(p, 153 % 7));
}

TEST_CASE("degree must be positive") {
    CHECK_THROWS_AS(Perm(0), Error);
    CHECK_THROWS_AS(Perm(std::vector<int>{0, 0}), Error);
}
