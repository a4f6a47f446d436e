#include <random>
#include <set>
#include <unordered_set>

#include "core/group.hpp"
#include "doctest.h"

using namespace dessin;

namespace {

Perm random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

// brute-force closure; returns empty set when the cap is exceeded
std::set<std::vector<int>> closure(const std::vector<Perm>& gens, std::size_t cap) {
    int n = gens[0].degree();
    std::set<std::vector<int>> seen;
    std::vector<Perm> frontier{Perm(n)};
    seen.insert(Perm(n).images());
    while (!frontier.empty()) {
        Perm cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            Perm nxt = compose(cur, g);
            if (seen.insert(nxt.images()).second) {
                if (seen.size() > cap) return {};
                frontier.push_back(nxt);
            }
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("S3 chain") {
    std::vector<Perm> gens{parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)};
    StabilizerChain chain(gens);
    CHECK(chain.order() == BigInt(6));
    CHECK(chain.contains(parse_cycles("(1 3)", 3)));
    CHECK(chain.contains(Perm(3)));
}

TEST_CASE("chain order equals brute-force closure on random subgroups") {
    std::mt19937 rng(2024);
    int done = 0;
    while (done < 20) {
        int n = 4 + static_cast<int>(rng() % 7);  // degrees 4..10
        int k = 1 + static_cast<int>(rng() % 3);
        std::vector<Perm> gens;
        for (int i = 0; i < k; ++i) gens.push_back(random_perm(rng, n));
        auto cl = closure(gens, 200000);
        if (cl.empty()) continue;  // too large for the oracle; resample
        StabilizerChain chain(gens);
        CHECK(chain.order() == BigInt(cl.size()));
        ++done;
    }
}

TEST_CASE("membership agrees with closure on a small group") {
    std::mt19937 rng(5);
    // dihedral-ish: two involutions on 8 points
    std::vector<Perm> gens{parse_cycles("(1 2)(3 4)(5 6)(7 8)", 8),
                           parse_cycles("(2 3)(4 5)(6 7)", 8)};
    auto cl = closure(gens, 5000);
    REQUIRE(!cl.empty());
    StabilizerChain chain(gens);
    CHECK(chain.order() == BigInt(cl.size()));
    for (const auto& v : cl) CHECK(chain.contains(Perm(std::vector<int>(v))));
    int non_members = 0;
    for (int t = 0; t < 200; ++t) {
        Perm p = random_perm(rng, 8);
        if (!cl.count(p.images())) {
            ++non_members;
            CHECK_FALSE(chain.contains(p));
        }
    }
    CHECK(non_members > 0);
}

TEST_CASE("transitivity") {
    CHECK(is_transitive({parse_cycles("(1 2 3 4 5)", 5)}));
    CHECK_FALSE(is_transitive({Perm(2)}));
    CHECK_FALSE(is_transitive({parse_cycles("(1 2)(3 4)", 4)}));
}

TEST_CASE("primitivity basics") {
    // C4 acting regularly is imprimitive; S4 naturally is primitive
    CHECK_FALSE(is_primitive({parse_cycles("(1 2 3 4)", 4)}));
    CHECK(is_primitive({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)}));
    CHECK_THROWS_AS(is_primitive({parse_cycles("(1 2)(3 4)", 4)}), Error);
}

TEST_CASE("recognize alternating groups from standard generators") {
    for (int n = 5; n <= 15; n += 2) {
        std::string big = "(";
        for (int i = 1; i <= n; ++i) big += std::to_string(i) + (i < n ? " " : ")");
        std::vector<Perm> gens{parse_cycles("(1 2 3)", n), parse_cycles(big, n)};
        auto f = recognize(gens);
        CHECK(f.recognition == GroupFacts::Recognition::kAlternating);
        CHECK(f.recognition_str() == "Alternating(" + std::to_string(n) + ")");
        CHECK(f.transitive);
    }
}

TEST_CASE("recognize symmetric group") {
    std::vector<Perm> gens{parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4 5)", 5)};
    CHECK(recognize(gens).recognition == GroupFacts::Recognition::kSymmetric);
}

TEST_CASE("parity blocks odd permutations from even groups") {
    // A5 chain rejects a transposition
    std::vector<Perm> gens{parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)};
    StabilizerChain chain(gens);
    CHECK(chain.order() == BigInt(60));
    CHECK_FALSE(chain.contains(parse_cycles("(1 2)", 5)));
}

TEST_CASE("jordan certificate on a toy input") {
    // regular C7: every power is a 7-cycle or trivial; 7 > 7-3
    CHECK_FALSE(jordan_certificate({parse_cycles("(1 2 3 4 5 6 7)", 7)}).has_value());
}

TEST_CASE("jordan certificate output is always a legal witness") {
    std::mt19937 rng(99);
    for (int t = 0; t < 10; ++t) {
        int n = 8 + static_cast<int>(rng() % 8);
        std::vector<Perm> gens{random_perm(rng, n), random_perm(rng, n)};
        if (!is_transitive(gens)) continue;
        auto cert = jordan_certificate(gens, 500, t);
        if (!cert) continue;
        CHECK(cert->cycle_length <= n - 3);
        auto ca = cycle_analysis(cert->element);
        int nontrivial = 0;
        for (auto [len, cnt] : ca.cycle_type)
            if (len > 1) {
                nontrivial += cnt;
                CHECK(len == cert->cycle_length);
            }
        CHECK(nontrivial == 1);
    }
}

TEST_CASE("jordan search is deterministic for a fixed seed") {
    std::vector<Perm> gens{parse_cycles("(1 2 3)(4 5 6)(7 8)", 9),
                           parse_cycles("(2 4)(3 7)(6 9)", 9)};
    REQUIRE(is_transitive(gens));
    auto a = jordan_certificate(gens, 1000, 42);
    auto b = jordan_certificate(gens, 1000, 42);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
        CHECK(a->word == b->word);
        CHECK(a->cycle_length == b->cycle_length);
        CHECK(a->element == b->element);
    }
}

TEST_CASE("class formula on S4 naturally") {
    std::vector<Perm> gens{parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)};
    CHECK(fixed_points_via_class_formula(gens, Perm(4)) == 4);
    for (const char* w : {"(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4)"}) {
        Perm h = parse_cycles(w, 4);
        CHECK(fixed_points_via_class_formula(gens, h) ==
              cycle_analysis(h).fixed_point_count);
    }
}

TEST_CASE("class formula rejects outsiders and oversized groups") {
    std::vector<Perm> a5{parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)};
    CHECK_THROWS_AS(fixed_points_via_class_formula(a5, parse_cycles("(1 2)", 5)), Error);
    // A13 is way past the million-element cap
    std::string big = "(";
    for (int i = 1; i <= 13; ++i) big += std::to_string(i) + (i < 13 ? " " : ")");
    std::vector<Perm> a13{parse_cycles("(1 2 3)", 13), parse_cycles(big, 13)};
    CHECK_THROWS_AS(fixed_points_via_class_formula(a13, Perm(13)), Error);
}
