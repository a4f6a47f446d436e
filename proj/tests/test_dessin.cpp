#include <algorithm>
#include <numeric>
#include <set>

#include "core/catalog.hpp"
#include "core/dessin.hpp"
#include "doctest.h"

using namespace dessin;

namespace {

// Independent primitivity oracle: enumerate every candidate block containing
// point 0 (size a proper divisor of n) and try to grow it into a block
// system; a partial overlap anywhere kills the candidate.
bool has_nontrivial_block_system(const Dessin& d) {
    int n = d.degree();
    std::vector<int> divisors;
    for (int b = 2; b < n; ++b)
        if (n % b == 0) divisors.push_back(b);
    std::vector<int> elems(n - 1);
    std::iota(elems.begin(), elems.end(), 1);
    for (int b : divisors) {
        std::vector<int> pick(b - 1);
        // iterate subsets of size b-1 from {1..n-1}
        std::vector<int> idx(b - 1);
        std::iota(idx.begin(), idx.end(), 0);
        auto advance = [&]() {
            int i = b - 2;
            while (i >= 0 && idx[i] == n - 1 - (b - 1 - i)) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < b - 1; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        bool more = true;
        while (more) {
            std::set<int> block{0};
            for (int i : idx) block.insert(elems[i]);
            // grow the translate system; partial overlap => not a block
            std::vector<std::set<int>> sys{block};
            bool is_block = true;
            for (std::size_t head = 0; head < sys.size() && is_block; ++head) {
                for (const Perm* g : {&d.x(), &d.y()}) {
                    std::set<int> img;
                    for (int v : sys[head]) img.insert((*g)[v]);
                    bool seen = false;
                    for (const auto& s : sys) {
                        std::set<int> inter;
                        std::set_intersection(s.begin(), s.end(), img.begin(),
                                              img.end(),
                                              std::inserter(inter, inter.begin()));
                        if (inter.empty()) continue;
                        if (inter.size() == img.size() && s.size() == img.size()) {
                            seen = true;
                            break;
                        }
                        is_block = false;
                        break;
                    }
                    if (!is_block) break;
                    if (!seen) sys.push_back(img);
                }
            }
            if (is_block) return true;
            more = advance();
        }
    }
    return false;
}

}  // namespace

TEST_CASE("dessin construction and connectivity") {
    CHECK(Dessin(parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)).degree() == 3);
    CHECK_THROWS_AS(Dessin(Perm(2), Perm(2)), Error);
    CHECK_THROWS_AS(Dessin(Perm(2), Perm(3)), Error);
}

TEST_CASE("z closes the triangle relation") {
    Dessin s = named("S");
    CHECK(compose(compose(s.x(), s.y()), s.z()).is_identity());
    CHECK(dessin_type(s).str() == "(3,2,7)");
}

TEST_CASE("signatures of the small dessins") {
    auto sa = genus_signature(named("A"));
    CHECK(sa.genus == 0);
    CHECK(sa.periods == std::vector<int>{2, 2, 3, 3});
    auto sb = genus_signature(named("B"));
    CHECK(sb.genus == 0);
    CHECK(sb.periods == std::vector<int>{2, 2, 2, 7});
    auto ss = genus_signature(named("S"));
    CHECK(ss.periods == std::vector<int>{2, 2, 2, 3});
}

TEST_CASE("torus examples") {
    CHECK(genus_signature(named("T")).genus == 1);
    Dessin p19 = named("P19");
    CHECK(genus_signature(p19).genus == 1);  // (19-7)/12
    CHECK(dessin_type(p19).str() == "(3,2,19)");
}

TEST_CASE("mirror is an involution and A is reflexible") {
    Dessin s = named("S");
    Dessin mm = mirror(mirror(s));
    CHECK(mm.x() == s.x());
    CHECK(mm.y() == s.y());
    CHECK_FALSE(is_isomorphic(s, mirror(s)).has_value());
    Dessin a = named("A");
    CHECK(is_isomorphic(a, mirror(a)).has_value());
    CHECK(genus_signature(mirror(a)).genus == genus_signature(a).genus);
}

TEST_CASE("isomorphism returns a genuine equivariant bijection") {
    Dessin s = named("S");
    auto phi = is_isomorphic(s, s);
    REQUIRE(phi.has_value());
    for (int v = 0; v < s.degree(); ++v) {
        CHECK((*phi)[s.x()[v]] == s.x()[(*phi)[v]]);
        CHECK((*phi)[s.y()[v]] == s.y()[(*phi)[v]]);
    }
}

TEST_CASE("quotients") {
    Dessin g = named("G"), a = named("A"), b = named("B");
    auto phi = is_quotient(g, a);
    REQUIRE(phi.has_value());
    CHECK(g.degree() == 3 * a.degree());
    for (int v = 0; v < g.degree(); ++v) {
        CHECK((*phi)[g.x()[v]] == a.x()[(*phi)[v]]);
        CHECK((*phi)[g.y()[v]] == a.y()[(*phi)[v]]);
    }
    CHECK_FALSE(is_quotient(a, b).has_value());
}

TEST_CASE("automorphism counts divide the degree") {
    for (const char* nm : {"A", "G", "S", "C"}) {
        Dessin d = named(nm);
        int c = automorphism_count(d);
        CHECK(d.degree() % c == 0);
    }
    CHECK(automorphism_count(named("A")) == 1);
    CHECK(automorphism_count(named("G")) == 3);
    CHECK(automorphism_count(named("J")) == 2);
    CHECK(automorphism_count(named("C")) == 1);
    CHECK(automorphism_count(named("E")) == 1);
}

TEST_CASE("isomorphism is reflexive and symmetric on sampled pairs") {
    Dessin a = named("A");
    Dessin a2 = psl2_handle_dessin(13);
    CHECK(is_isomorphic(a, a).has_value());
    CHECK(is_isomorphic(a, a2).has_value());
    CHECK(is_isomorphic(a2, a).has_value());
    Dessin s = named("S"), sb = named("Sbar");
    CHECK(is_isomorphic(s, sb).has_value() == is_isomorphic(sb, s).has_value());
}

TEST_CASE("the z of A has order 7 and two 7-cycles") {
    Dessin a = named("A");
    Perm xy = compose(a.x(), a.y());
    CHECK(perm_order(xy) == 7);
    CHECK(inverse(xy) == a.z());
    CHECK(cycle_type_str(a.z()) == "7^2");
}

TEST_CASE("primitivity against the block-enumeration oracle") {
    Dessin a = named("A");
    CHECK_FALSE(has_nontrivial_block_system(a));
    CHECK(is_primitive(a.generators()));
    Dessin c = named("C");
    CHECK(has_nontrivial_block_system(c));
    CHECK_FALSE(is_primitive(c.generators()));
    CHECK_FALSE(is_primitive(named("G").generators()));
}

TEST_CASE("hurwitz genus bookkeeping") {
    CHECK(hurwitz_genus(BigInt(1092)).str() == "14");
    CHECK(hurwitz_genus(BigInt(504)).str() == "7");
    CHECK(hurwitz_genus(BigInt(168)).str() == "3");
    CHECK_THROWS_AS(hurwitz_genus(BigInt(100)), Error);
}

TEST_CASE("macbeath classification") {
    CHECK(macbeath_classify(7).str() == "Hurwitz(1)");
    CHECK(macbeath_classify(8).str() == "Hurwitz(1)");
    CHECK(macbeath_classify(13).str() == "Hurwitz(3)");
    CHECK(macbeath_classify(11).str() == "NotHurwitz");
    CHECK_THROWS_AS(macbeath_classify(12), Error);  // not a prime power
    CHECK_THROWS_AS(macbeath_classify(1), Error);
}

TEST_CASE("analyze wraps recognize") {
    auto f = analyze(named("S"));
    CHECK(f.order == BigInt(168));
    CHECK(f.recognition_str() == "Other(168)");
    CHECK(f.transitive);
}
