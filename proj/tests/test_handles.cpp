#include <map>

#include "core/catalog.hpp"
#include "core/expr.hpp"
#include "core/handles.hpp"
#include "doctest.h"

using namespace dessin;

namespace {

std::map<int, int> by_k(const std::vector<Handle>& hs) {
    std::map<int, int> m;
    for (const auto& h : hs) m[h.k]++;
    return m;
}

Handle pick(const Dessin& d, int k, int index = 0) {
    std::vector<Handle> match;
    for (const auto& h : y_handles(d))
        if (h.k == k) match.push_back(h);
    return match.at(index);
}

// re-verify the defining relation by direct permutation evaluation
void verify_y_relation(const Dessin& d, const Handle& h) {
    int t = h.a;
    for (int s = 0; s < h.k - 1; ++s) t = d.y()[d.x()[t]];
    CHECK(d.x()[t] == h.b);
    CHECK(d.y()[h.a] == h.a);
    CHECK(d.y()[h.b] == h.b);
}

}  // namespace

TEST_CASE("y-handle inventories match the catalogue") {
    CHECK(by_k(y_handles(named("S"))) == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(by_k(y_handles(named("Sbar"))) == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(by_k(y_handles(named("A"))) == std::map<int, int>{{1, 1}});
    CHECK(by_k(y_handles(named("C"))) == std::map<int, int>{{1, 1}, {3, 1}});
    CHECK(by_k(y_handles(named("B"))) == std::map<int, int>{{2, 2}, {3, 1}});
}

TEST_CASE("handles satisfy their defining relation") {
    for (const char* nm : {"S", "A", "B", "C", "G"})
        for (const auto& h : y_handles(named(nm))) verify_y_relation(named(nm), h);
}

TEST_CASE("x-handle inventories") {
    auto ha = x_handles(named("A"));
    REQUIRE(ha.size() == 1);
    CHECK(ha[0].k == 2);
    auto h13 = x_handles(named("Fig13"));
    REQUIRE(h13.size() == 1);
    CHECK(h13[0].k == 1);
    CHECK(x_handles(named("B")).empty());
    CHECK(x_handles(named("Fig16")).size() == 2);
}

TEST_CASE("max disjoint handles") {
    Dessin g = named("G");
    CHECK(max_disjoint_handles(y_handles(g), 1, Axis::kY) == 3);
    Dessin b = named("B");
    CHECK(max_disjoint_handles(y_handles(b), 2, Axis::kY) == 1);
    CHECK(max_disjoint_handles({}, 1, Axis::kY) == 0);
}

TEST_CASE("same-face predicate") {
    CHECK(same_face_check(named("S")));
    CHECK(same_face_check(named("B")));
    CHECK_FALSE(same_face_check(named("A")));
    CHECK_THROWS_AS(same_face_check(named("P19")), Error);  // wrong type
}

TEST_CASE("y-join leaves x alone and y alone off the handles") {
    Dessin a = named("A"), cdes = named("C");
    Handle ha = pick(a, 1), hc = pick(cdes, 1);
    Dessin j = y_join(a, ha, cdes, hc);
    CHECK(j.degree() == 35);
    for (int v = 0; v < a.degree(); ++v) CHECK(j.x()[v] == a.x()[v]);
    for (int v = 0; v < cdes.degree(); ++v)
        CHECK(j.x()[v + a.degree()] == cdes.x()[v] + a.degree());
    for (int v = 0; v < a.degree(); ++v)
        if (v != ha.a && v != ha.b) CHECK(j.y()[v] == a.y()[v]);
    CHECK(j.y()[ha.a] == hc.a + a.degree());
    CHECK(j.y()[ha.b] == hc.b + a.degree());
}

TEST_CASE("join commutativity up to isomorphism") {
    Dessin a = named("A"), cdes = named("C");
    Dessin ac = y_join(a, pick(a, 1), cdes, pick(cdes, 1));
    Dessin ca = y_join(cdes, pick(cdes, 1), a, pick(a, 1));
    CHECK(is_isomorphic(ac, ca).has_value());
}

TEST_CASE("join rejects bad handles") {
    Dessin a = named("A"), b = named("B");
    CHECK_THROWS_AS(y_join(a, pick(a, 1), b, pick(b, 2)), Error);  // mismatched k
    Handle fake{Axis::kY, 1, 0, 5};
    CHECK_THROWS_AS(y_join(a, fake, a, pick(a, 1)), Error);
}

TEST_CASE("multiple join rejects overlapping handles") {
    Dessin b = named("B");
    auto h0 = pick(b, 2, 0), h1 = pick(b, 2, 1);  // these share a fixed point
    CHECK_THROWS_AS(multiple_y_join(b, b, {{h0, h0}, {h1, h1}}), Error);
}

TEST_CASE("twist changes the type") {
    Dessin s = named("S");
    Handle h = pick(s, 1);
    Dessin t = twist_y_join(s, h, s, h);
    CHECK(dessin_type(t).str() == "(3,2,12)");
}

TEST_CASE("x-join mirror law") {
    // mirror(D1(x)D2(x)D3) = mirror(D3)(x)mirror(D2)(x)mirror(D1)
    Dessin a = named("A");
    Dessin g = x_join({{a, x_handles(a)[0]},
                       {a, x_handles(a)[0]},
                       {a, x_handles(a)[0]}});
    Dessin am = mirror(a);
    auto ham = x_handles(am);
    REQUIRE(ham.size() == 1);
    Dessin gm = x_join({{am, ham[0]}, {am, ham[0]}, {am, ham[0]}});
    CHECK(is_isomorphic(mirror(g), gm).has_value());
}

TEST_CASE("x-join rejects parts whose count does not divide the x-order") {
    Dessin a = named("A");
    auto h = x_handles(a)[0];
    CHECK_THROWS_AS(x_join({{a, h}, {a, h}}), Error);  // 2 does not divide 3
}

TEST_CASE("x-join never touches y") {
    Dessin a = named("A");
    auto h = x_handles(a)[0];
    Dessin g = x_join({{a, h}, {a, h}, {a, h}});
    for (int copy = 0; copy < 3; ++copy)
        for (int v = 0; v < a.degree(); ++v)
            CHECK(g.y()[v + copy * a.degree()] == a.y()[v] + copy * a.degree());
    // and x is untouched off the handle points
    for (int copy = 0; copy < 3; ++copy)
        for (int v = 0; v < a.degree(); ++v)
            if (v != h.a && v != h.b)
                CHECK(g.x()[v + copy * a.degree()] == a.x()[v] + copy * a.degree());
}

TEST_CASE("join iteration grows x-handle inventories predictably") {
    // Fig18 joined to itself along its (2)-handle has two x-handles; the
    // 3-fold x-join of that has degree 252 and three, and one more round
    // gives degree 756 and six.
    Dessin d1 = evaluate("Fig18(2)Fig18");
    CHECK(d1.degree() == 84);
    auto h1 = x_handles(d1);
    CHECK(h1.size() == 2);
    Dessin d2 = x_join({{d1, h1[0]}, {d1, h1[0]}, {d1, h1[0]}});
    CHECK(d2.degree() == 252);
    CHECK(genus_signature(d2).genus == 0);
    auto h2 = x_handles(d2);
    CHECK(h2.size() == 3);
    Dessin d3 = x_join({{d2, h2[0]}, {d2, h2[0]}, {d2, h2[0]}});
    CHECK(d3.degree() == 756);
    CHECK(genus_signature(d3).genus == 0);
    CHECK(x_handles(d3).size() == 6);
}

TEST_CASE("handle projection sanity") {
    Dessin s = named("S");
    auto phi = is_quotient(s, s);
    REQUIRE(phi.has_value());
    CHECK(handle_projection_check(s, s, *phi));
    std::vector<int> bogus(s.degree(), 0);
    CHECK_THROWS_AS(handle_projection_check(s, s, bogus), Error);
}
