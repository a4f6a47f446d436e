#include "claims.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "catalog.hpp"
#include "expr.hpp"
#include "handles.hpp"

namespace dessin {

namespace {

struct Checker {
    std::vector<std::string> fails;
    std::vector<std::string> notes;

    void is_true(bool cond, const std::string& what) {
        if (!cond) fails.push_back(what);
    }
    template <typename A, typename B>
    void eq(const A& actual, const B& expected, const std::string& what) {
        std::ostringstream a, e;
        a << actual;
        e << expected;
        if (a.str() != e.str())
            fails.push_back(what + ": expected " + e.str() + ", got " + a.str());
    }
    void note(const std::string& n) { notes.push_back(n); }
};

std::ostream& operator<<(std::ostream& os, const BigInt& b) { return os << b.str(); }

BigInt fact_half(unsigned n) {
    std::uint32_t rem = 0;
    BigInt f = BigInt::factorial(n).div_small(2, &rem);
    return f;
}

struct HandleCounts {
    int k1, k2, k3;
};

HandleCounts disjoint_y(const Dessin& d) {
    auto hs = y_handles(d);
    return {max_disjoint_handles(hs, 1, Axis::kY),
            max_disjoint_handles(hs, 2, Axis::kY),
            max_disjoint_handles(hs, 3, Axis::kY)};
}

// Independent Riemann-Hurwitz route for type-(3,2,7) dessins.
long long rh_genus(const Dessin& d) {
    auto a = cycle_analysis(d.x()).fixed_point_count;
    auto b = cycle_analysis(d.y()).fixed_point_count;
    auto c = cycle_analysis(d.z()).fixed_point_count;
    long long num = d.degree() - 28LL * a - 21LL * b - 36LL * c;
    if (num % 84 != 0) return -1000000;
    return 1 + num / 84;
}

long long euler_genus_direct(const Dessin& d) {
    long long cycles = 0;
    for (const Perm* p : {&d.x(), &d.y(), &d.z()})
        cycles += static_cast<long long>(cycles_of(*p).size());
    return (2 - (cycles - d.degree())) / 2;
}

struct Row {
    const char* name;
    int degree;
    HandleCounts handles;
    int alpha, beta, gamma;
    const char* group;       // for the report only
    std::function<BigInt()> order;
};

const std::vector<Row>& table1() {
    static const std::vector<Row> rows = {
        {"A", 14, {1, 0, 0}, 2, 2, 0, "PSL2(13)", [] { return BigInt(1092); }},
        {"B", 15, {0, 1, 1}, 0, 3, 1, "A15", [] { return fact_half(15); }},
        {"C", 21, {1, 0, 1}, 0, 5, 0, "PGL3(2)>D4", [] { return BigInt(168); }},
        {"D", 22, {0, 1, 0}, 1, 2, 1, "A22", [] { return fact_half(22); }},
        {"E", 28, {1, 1, 0}, 1, 4, 0, "PSL2(8)>D9", [] { return BigInt(504); }},
        {"F", 30, {0, 1, 0}, 0, 2, 2, "PSL2(29)", [] { return BigInt(12180); }},
        {"G", 42, {3, 0, 0}, 0, 6, 0, "PSL2(13)>D13", [] { return BigInt(1092); }},
        {"H", 42, {1, 0, 1}, 0, 6, 0, "A42", [] { return fact_half(42); }},
        {"I", 57, {0, 2, 0}, 0, 5, 1, "A57", [] { return fact_half(57); }},
        {"J", 72, {2, 0, 0}, 0, 4, 2, "(S2wrA36)^A72",
         [] { return BigInt(2).pow(34) * BigInt::factorial(36); }},
        {"K", 72, {1, 0, 0}, 0, 4, 2, "A72", [] { return fact_half(72); }},
        {"L", 102, {0, 1, 0}, 0, 2, 4, "A102", [] { return fact_half(102); }},
        {"M", 108, {1, 1, 0}, 0, 4, 3, "A108", [] { return fact_half(108); }},
        {"N", 108, {1, 0, 1}, 0, 4, 3, "A108", [] { return fact_half(108); }},
    };
    return rows;
}

void check_row(Checker& c, const Row& row) {
    Dessin d = named(row.name);
    c.eq(d.degree(), row.degree, "degree");
    auto sig = genus_signature(d);
    c.eq(sig.genus, 0, "genus");
    c.eq(sig.alpha, row.alpha, "alpha");
    c.eq(sig.beta, row.beta, "beta");
    c.eq(sig.gamma, row.gamma, "gamma");
    auto hc = disjoint_y(d);
    c.eq(hc.k1, row.handles.k1, "(1)-handles");
    c.eq(hc.k2, row.handles.k2, "(2)-handles");
    c.eq(hc.k3, row.handles.k3, "(3)-handles");
    StabilizerChain chain(d.generators());
    c.eq(chain.order(), row.order(), std::string("order of ") + row.group);
    c.note("order = " + chain.order().str());
}

using ClaimFn = std::function<void(Checker&, unsigned)>;

struct Claim {
    std::string id;
    std::string description;
    bool full_only;
    ClaimFn fn;
};

std::vector<Claim> build_claims() {
    std::vector<Claim> claims;
    auto add = [&](const std::string& id, const std::string& desc, ClaimFn fn,
                   bool full_only = false) {
        claims.push_back({id, desc, full_only, std::move(fn)});
    };

    // --- 1. Table 1 reproduction -------------------------------------------
    for (const auto& row : table1()) {
        std::string nm = row.name;
        bool full_only = nm >= "I" && nm <= "N" && nm.size() == 1;
        add("table1." + nm,
            "Table 1 row " + nm + " (" + row.group + ")",
            [nm](Checker& c, unsigned) {
                const auto& rows = table1();
                auto it = std::find_if(rows.begin(), rows.end(),
                                       [&](const Row& r) { return nm == r.name; });
                check_row(c, *it);
            },
            full_only);
    }

    // --- 2. A(1)C ----------------------------------------------------------
    add("join.A1C", "A(1)C: degree 35, [x,y] type 1^2 2^2 4^2 21, w^4 certificate, A35",
        [](Checker& c, unsigned seed) {
            Dessin d = evaluate("A(1)C");
            c.eq(d.degree(), 35, "degree");
            Perm w = commutator(d.x(), d.y());
            c.eq(cycle_type_str(w), "1^2 2^2 4^2 21", "[x,y] cycle type");
            Perm w4 = power(w, 4);
            auto ct = cycle_analysis(w4);
            c.is_true(ct.cycle_type.size() == 2 && ct.cycle_type[1].first == 21 &&
                          ct.cycle_type[1].second == 1,
                      "w^4 is a 21-cycle");
            auto cert = jordan_certificate(d.generators(), 10000, seed, {"x", "y"});
            c.is_true(cert.has_value(), "jordan certificate found");
            if (cert) {
                c.eq(cert->cycle_length, 21, "certificate cycle length");
                c.note("certificate: " + cert->word + " -> " +
                       std::to_string(cert->cycle_length) + "-cycle");
            }
            c.eq(analyze(d).recognition_str(), "Alternating(35)", "monodromy");
        });

    // --- 3. S and Sbar ------------------------------------------------------
    add("small.S", "S, Sbar: order 168, one (1)- and one (2)-handle, S != Sbar",
        [](Checker& c, unsigned) {
            Dessin s = named("S"), sb = named("Sbar");
            for (const auto* d : {&s, &sb}) {
                c.eq(StabilizerChain(d->generators()).order(), BigInt(168), "order");
                auto hc = disjoint_y(*d);
                c.eq(hc.k1, 1, "(1)-handles");
                c.eq(hc.k2, 1, "(2)-handles");
                c.eq(hc.k3, 0, "(3)-handles");
            }
            c.is_true(!is_isomorphic(s, sb).has_value(), "S not isomorphic to Sbar");
            c.is_true(is_isomorphic(mirror(s), sb).has_value(), "mirror(S) = Sbar");
        });

    // --- 4. double covers of S ---------------------------------------------
    add("cover.S", "S(k)S family: chiral pair of order 1344; S(2)S; S(k)Sbar self-mirror",
        [](Checker& c, unsigned) {
            Dessin s1s = evaluate("S(1)S");
            Dessin sb1sb = evaluate("Sbar(1)Sbar");
            BigInt o1 = StabilizerChain(s1s.generators()).order();
            BigInt o2 = StabilizerChain(sb1sb.generators()).order();
            c.eq(o1, BigInt(1344), "order of S(1)S");
            c.eq(o2, BigInt(1344), "order of Sbar(1)Sbar");
            c.is_true(!is_isomorphic(s1s, sb1sb).has_value(),
                      "S(1)S and Sbar(1)Sbar not isomorphic (chiral)");
            c.is_true(is_isomorphic(mirror(s1s), sb1sb).has_value(),
                      "mirror(S(1)S) = Sbar(1)Sbar");
            Dessin s2s = evaluate("S(2)S");
            BigInt o3 = StabilizerChain(s2s.generators()).order();
            c.eq(o3, BigInt(168), "order of S(2)S");
            c.eq(o3.to_u64() / s2s.degree(), 12, "point stabiliser order of S(2)S");
            for (const char* e : {"S(1)Sbar", "S(2)Sbar"}) {
                Dessin d = evaluate(e);
                c.eq(StabilizerChain(d.generators()).order(), BigInt(1092),
                     std::string("order of ") + e);
                c.is_true(is_isomorphic(d, mirror(d)).has_value(),
                          std::string(e) + " isomorphic to its mirror");
            }
        });

    // --- 5. twist warning ---------------------------------------------------
    add("twist.SS", "TWIST(S,S): type (3,2,12), solvable monodromy of order 2688",
        [](Checker& c, unsigned) {
            Dessin t = evaluate("TWIST(S,S)");
            c.eq(dessin_type(t).str(), "(3,2,12)", "type");
            auto zt = cycle_analysis(t.z());
            std::set<int> lens;
            for (auto [l, cnt] : zt.cycle_type) lens.insert(l);
            c.is_true(lens.count(2) && lens.count(12), "faces of valency 2 and 12");
            c.eq(StabilizerChain(t.generators()).order(), BigInt(2688), "order");
        });

    // --- 6. A(1)A, B(3)B, C(1)C ---------------------------------------------
    add("cover.A1A", "A(1)A: degree 28, order 1092, imprimitive, two x-handles",
        [](Checker& c, unsigned) {
            Dessin d = evaluate("A(1)A");
            c.eq(d.degree(), 28, "degree");
            c.eq(StabilizerChain(d.generators()).order(), BigInt(1092), "order");
            c.is_true(!is_primitive(d.generators()), "imprimitive");
            c.eq(x_handles(d).size(), 2u, "x-handle count");
        });
    add("cover.B3B", "B(3)B: order 2^14 * 15!/2",
        [](Checker& c, unsigned) {
            Dessin d = evaluate("B(3)B");
            c.eq(d.degree(), 30, "degree");
            BigInt expect = BigInt(2).pow(14) * fact_half(15);
            c.eq(StabilizerChain(d.generators()).order(), expect, "order");
        });
    add("cover.C1C", "C(1)C: computed order (documented as 2^6*168); genus question flagged",
        [](Checker& c, unsigned) {
            Dessin d = evaluate("C(1)C");
            BigInt order = StabilizerChain(d.generators()).order();
            c.eq(order, BigInt(10752), "order (2^6 * 168)");
            BigInt g = hurwitz_genus(order);
            c.note("computed order " + order.str() + "; hurwitz_genus(order) = " +
                   g.str() +
                   " -- the documented genus-257 identification corresponds to "
                   "order 21504, not the computed order; reported as computed");
        });

    // --- 7. B(2)B chirality --------------------------------------------------
    add("cover.B2B", "B(2)B four variants: same-handle chiral pair; crossed pair isomorphic",
        [](Checker& c, unsigned) {
            Dessin same0 = evaluate("B(2@0,0)B");
            Dessin same1 = evaluate("B(2@1,1)B");
            Dessin cross01 = evaluate("B(2@0,1)B");
            Dessin cross10 = evaluate("B(2@1,0)B");
            BigInt wreath = BigInt(2).pow(14) * fact_half(15);
            c.eq(StabilizerChain(same0.generators()).order(), wreath, "order of B(2@0,0)B");
            c.eq(StabilizerChain(same1.generators()).order(), wreath, "order of B(2@1,1)B");
            c.is_true(!is_isomorphic(same0, same1).has_value(),
                      "same-handle variants not isomorphic (chiral pair)");
            c.is_true(is_isomorphic(mirror(same0), same1).has_value(),
                      "same-handle variants are mirror images");
            c.is_true(is_isomorphic(cross01, cross10).has_value(),
                      "crossed variants isomorphic");
            c.is_true(is_isomorphic(cross01, mirror(cross01)).has_value(),
                      "crossed variant invariant under the antipodal symmetry");
        });
    add("cover.B2B.crossed_order", "B(2)B crossed-handle variant has monodromy A30",
        [](Checker& c, unsigned) {
            // The documented value 30!/2 is not reproducible: both crossed
            // joins generate a group of order 12180 = |PSL2(29)| with point
            // stabilisers of order 406, i.e. a natural-action dessin of
            // degree 30 in a trace class without handles. The claim is kept
            // as documented rather than weakened; the failure detail carries
            // the computed order.
            Dessin cross01 = evaluate("B(2@0,1)B");
            BigInt got = StabilizerChain(cross01.generators()).order();
            c.eq(got, fact_half(30), "order of crossed variant");
            c.note("computed order " + got.str() +
                   " = |PSL2(29)| with point stabiliser order " +
                   std::to_string(got.to_u64() / 30) +
                   "; the crossed joins match the drawn dessins exactly, so the "
                   "documented A_30 identification is not reproducible and the "
                   "claim is kept as documented");
        });

    // --- 8. PSL2(p) trace classes ---------------------------------------------
    add("psl2.traces", "natural PSL2(p) dessins: unique handle kinds and trace classes",
        [](Checker& c, unsigned) {
            struct Case { long long p; int k; long long trace; };
            for (auto [p, k, trace] : {Case{13, 1, 5}, Case{29, 2, 3}, Case{41, 3, 11}}) {
                Dessin d = psl2_handle_dessin(p);
                c.eq(d.degree(), p + 1, "degree for p=" + std::to_string(p));
                auto hs = y_handles(d);
                c.eq(hs.size(), 1u, "handle count for p=" + std::to_string(p));
                if (!hs.empty())
                    c.eq(hs[0].k, k, "handle kind for p=" + std::to_string(p));
                // exhaustive trace scan: a handle appears only in the stated class
                for (long long t = 0; 2 * t <= p; ++t) {
                    auto opt = find_psl2_triple(p, t);
                    if (!opt) continue;
                    bool has = !y_handles(*opt).empty();
                    bool expect = t == trace;
                    c.is_true(has == expect,
                              "p=" + std::to_string(p) + " trace " + std::to_string(t) +
                                  (expect ? " should" : " should not") + " give a handle");
                }
            }
            // p=13, traces 3 and 6: y's fixed points in different faces
            for (long long t : {3, 6}) {
                auto opt = find_psl2_triple(13, t);
                c.is_true(opt.has_value(), "trace " + std::to_string(t) + " dessin exists");
                if (!opt) continue;
                auto yfix = cycle_analysis(opt->y()).fixed_points;
                c.eq(yfix.size(), 2u, "two fixed points of y");
                std::vector<int> face(opt->degree(), -1);
                int fid = 0;
                for (const auto& cyc : cycles_of(opt->z())) {
                    for (int v : cyc) face[v] = fid;
                    ++fid;
                }
                c.is_true(face[yfix[0]] != face[yfix[1]],
                          "trace " + std::to_string(t) + ": fixed points in distinct faces");
            }
        });

    // --- 9. x-handle suite ---------------------------------------------------
    add("xjoin.AAA", "A has one x-handle; A(x)A(x)A = G with its Table-1 facts",
        [](Checker& c, unsigned) {
            Dessin a = named("A");
            auto hs = x_handles(a);
            c.eq(hs.size(), 1u, "x-handle count of A");
            if (!hs.empty()) c.eq(hs[0].k, 2, "x-handle of A is non-trivial");
            Dessin g = evaluate("X(A,A,A)");
            c.eq(g.degree(), 42, "degree");
            Dessin gcat = named("G");
            c.is_true(is_isomorphic(g, gcat).has_value(), "X(A,A,A) isomorphic to G");
            c.eq(disjoint_y(gcat).k1, 3, "G has 3 disjoint (1)-handles");
            c.eq(automorphism_count(gcat), 3, "automorphism count of G");
            BigInt o = StabilizerChain(gcat.generators()).order();
            c.eq(o, BigInt(1092), "order of G");
            c.eq(o.to_u64() / 42, 26, "point stabiliser order of G");
        });
    add("xjoin.fig13", "trivial x-join of three Fig13 copies: degree 24, order 168",
        [](Checker& c, unsigned) {
            Dessin d = evaluate("X(Fig13,Fig13,Fig13)");
            c.eq(d.degree(), 24, "degree");
            c.eq(StabilizerChain(d.generators()).order(), BigInt(168), "order");
        });
    add("xsuite.figs", "Fig15..Fig18: alternating recognitions and certificates",
        [](Checker& c, unsigned) {
            Dessin f15 = named("Fig15");
            c.eq(analyze(f15).recognition_str(), "Alternating(21)", "Fig15 monodromy");
            Perm w = commutator(f15.x(), f15.y());
            auto ct = cycle_analysis(w);
            c.is_true(ct.cycle_type.size() == 2 && ct.cycle_type[1].first == 19,
                      "Fig15 commutator is a 19-cycle");
            Dessin f16 = named("Fig16");
            c.is_true(is_isomorphic(f16, evaluate("A(1)A")).has_value(),
                      "Fig16 isomorphic to A(1)A");
            Dessin f17 = named("Fig17");
            c.eq(analyze(f17).recognition_str(), "Alternating(29)", "Fig17 monodromy");
            auto ct17 = cycle_analysis(commutator(f17.x(), f17.y()));
            c.is_true(ct17.cycle_type.size() == 2 && ct17.cycle_type[1].first == 27,
                      "Fig17 commutator is an (n-2)-cycle");
            c.eq(analyze(named("Fig18")).recognition_str(), "Alternating(42)",
                 "Fig18 monodromy");
        });

    // --- 10. modular suite ---------------------------------------------------
    add("modular.P", "P(19) and P(7)(x)P(7)(x)P(19)",
        [](Checker& c, unsigned seed) {
            Dessin p19 = named("P19");
            c.eq(p19.degree(), 20, "degree of P(19)");
            c.eq(dessin_type(p19).str(), "(3,2,19)", "type of P(19)");
            c.eq(genus_signature(p19).genus, 1, "genus of P(19)");
            Dessin j = evaluate("X(P7,P7,P19)");
            c.eq(j.degree(), 36, "degree");
            c.eq(cycle_type_str(j.z()), "1^3 7 9 17", "z cycle type");
            c.is_true(is_primitive(j.generators()), "primitive");
            Perm z153 = power(j.z(), 153);
            auto ct = cycle_analysis(z153);
            c.is_true(ct.cycle_type.size() == 2 && ct.cycle_type[1].first == 7 &&
                          ct.cycle_type[1].second == 1,
                      "z^153 is a 7-cycle");
            auto cert = jordan_certificate(j.generators(), 10000, seed, {"x", "y"});
            c.is_true(cert.has_value() && cert->cycle_length <= 33,
                      "jordan certificate with length <= n-3");
            c.eq(analyze(j).recognition_str(), "Alternating(36)", "monodromy");
        });

    // --- 11. formula / property suites --------------------------------------
    add("props.euler", "Euler genus equals the Riemann-Hurwitz count on (3,2,7) dessins",
        [](Checker& c, unsigned) {
            std::vector<std::string> exprs = {"S", "Sbar", "A", "B", "C", "D", "E",
                                              "F", "G", "H", "Fig15", "Fig16",
                                              "Fig17", "Fig18", "A(1)C", "S(1)S",
                                              "B(3)B", "X(A,A,A)", "G(1)G"};
            for (const auto& e : exprs) {
                Dessin d = evaluate(e);
                c.eq(euler_genus_direct(d), rh_genus(d), "genus routes for " + e);
            }
        });
    add("props.additivity", "signature additivity laws on sample joins",
        [](Checker& c, unsigned) {
            // y-joins: n, g, alpha, beta, gamma
            struct YCase { const char* l; const char* r; int k; };
            for (auto [l, r, k] : {YCase{"A", "C", 1}, YCase{"F", "F", 2},
                                   YCase{"B", "B", 3}, YCase{"S", "Sbar", 1}}) {
                Dessin dl = evaluate(l), dr = evaluate(r);
                auto hl = y_handles(dl), hr = y_handles(dr);
                auto pick = [k = k](const std::vector<Handle>& hs) {
                    for (const auto& h : hs)
                        if (h.k == k) return h;
                    throw Error("missing handle in additivity test");
                };
                Dessin j = y_join(dl, pick(hl), dr, pick(hr));
                auto sl = genus_signature(dl), sr = genus_signature(dr),
                     sj = genus_signature(j);
                c.eq(j.degree(), dl.degree() + dr.degree(), "degree additivity");
                c.eq(sj.genus, sl.genus + sr.genus, "genus additivity");
                c.eq(sj.alpha, sl.alpha + sr.alpha, "alpha additivity");
                c.eq(sj.beta, sl.beta + sr.beta - 4, "beta additivity");
                c.eq(sj.gamma, sl.gamma + sr.gamma, "gamma additivity");
            }
            Dessin a = named("A");
            Dessin g = evaluate("X(A,A,A)");
            auto sa = genus_signature(a), sg = genus_signature(g);
            c.eq(sg.genus, 3 * sa.genus, "x-join genus");
            c.eq(sg.alpha, 3 * sa.alpha - 6, "x-join alpha");
            c.eq(sg.beta, 3 * sa.beta, "x-join beta");
            c.eq(sg.gamma, 3 * sa.gamma, "x-join gamma");
            // F(2)F keeps the PSL2(29) monodromy
            Dessin f2f = evaluate("F(2)F");
            c.eq(f2f.degree(), 60, "F(2)F degree");
            c.eq(StabilizerChain(f2f.generators()).order(), BigInt(12180),
                 "F(2)F order");
        });
    add("props.multijoin", "multiple joins on the G stem: genus g1+g2+m-1",
        [](Checker& c, unsigned) {
            Dessin g = named("G");
            auto hs = y_handles(g);
            std::vector<Handle> ones;
            for (const auto& h : hs)
                if (h.k == 1) ones.push_back(h);
            c.eq(ones.size(), 3u, "three (1)-handles");
            Dessin two = multiple_y_join(g, g, {{ones[0], ones[0]}, {ones[1], ones[1]}});
            c.eq(two.degree(), 84, "degree of double join");
            c.eq(genus_signature(two).genus, 1, "genus of double join");
            c.eq(genus_signature(two).beta, 4, "beta of double join");
            Dessin three = multiple_y_join(
                g, g, {{ones[0], ones[0]}, {ones[1], ones[1]}, {ones[2], ones[2]}});
            c.eq(genus_signature(three).genus, 2, "genus of triple join");
            c.eq(genus_signature(three).beta, 0, "beta of triple join");
            Dessin single = multiple_y_join(g, g, {{ones[0], ones[1]}});
            Dessin plain = y_join(g, ones[0], g, ones[1]);
            c.is_true(single.x() == plain.x() && single.y() == plain.y(),
                      "single-pair multiple join equals y_join");
        });
    add("props.covers", "rank-formula cover counts and double-cover uniqueness",
        [](Checker& c, unsigned) {
            auto [da, ta] = cover_counts(named("A"));
            c.eq(da, BigInt(1), "A double covers");
            c.eq(ta, BigInt(1), "A triple covers");
            c.eq(StabilizerChain(evaluate("A(1)A").generators()).order(), BigInt(1092),
                 "unique double cover of A keeps order 1092");
            c.eq(cover_counts(named("S")).first, BigInt(3), "S double covers");
            c.eq(cover_counts(named("C")).first, BigInt(15), "C double covers");
        });
    add("props.classformula", "fixed-point class formula equals direct counts",
        [](Checker& c, unsigned) {
            for (const char* nm : {"A", "F", "S", "G", "Fig13"}) {
                Dessin d = named(nm);
                int n = d.degree();
                auto gens = d.generators();
                // full closure (independent of the chain)
                struct VecHash {
                    std::size_t operator()(const std::vector<int>& v) const {
                        std::size_t h = 1469598103934665603ULL;
                        for (int x : v) {
                            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
                            h *= 1099511628211ULL;
                        }
                        return h;
                    }
                };
                std::unordered_set<std::vector<int>, VecHash> elems;
                std::vector<Perm> frontier{Perm(n)};
                elems.insert(Perm(n).images());
                while (!frontier.empty()) {
                    Perm cur = std::move(frontier.back());
                    frontier.pop_back();
                    for (const auto& g : gens) {
                        Perm nxt = compose(cur, g);
                        if (elems.insert(nxt.images()).second) frontier.push_back(nxt);
                    }
                }
                long long order = static_cast<long long>(elems.size());
                c.eq(BigInt(static_cast<std::uint64_t>(order)),
                     StabilizerChain(gens).order(),
                     std::string("closure size vs chain order for ") + nm);
                // conjugacy classes; formula must hold for every element
                std::unordered_set<std::vector<int>, VecHash> assigned;
                int checked = 0;
                for (const auto& ev : elems) {
                    if (assigned.count(ev)) continue;
                    Perm h{std::vector<int>(ev)};
                    std::unordered_set<std::vector<int>, VecHash> cls;
                    std::vector<Perm> fr{h};
                    cls.insert(ev);
                    long long in_h = h[0] == 0 ? 1 : 0;
                    while (!fr.empty()) {
                        Perm cur = std::move(fr.back());
                        fr.pop_back();
                        for (const auto& g : gens) {
                            Perm conj = compose(compose(inverse(g), cur), g);
                            if (cls.insert(conj.images()).second) {
                                if (conj[0] == 0) ++in_h;
                                fr.push_back(conj);
                            }
                        }
                    }
                    for (const auto& cv : cls) assigned.insert(cv);
                    long long cent = order / static_cast<long long>(cls.size());
                    long long stab = order / n;
                    long long formula = in_h * cent / stab;
                    c.is_true(in_h * cent % stab == 0,
                              std::string("integral formula in ") + nm);
                    c.eq(formula, cycle_analysis(h).fixed_point_count,
                         std::string("class formula in ") + nm);
                    ++checked;
                }
                c.note(std::string(nm) + ": " + std::to_string(checked) + " classes");
                // the public operation on a few elements, including identity
                c.eq(fixed_points_via_class_formula(gens, Perm(n)), n,
                     std::string("identity fixes all points in ") + nm);
                c.eq(fixed_points_via_class_formula(gens, d.x()),
                     cycle_analysis(d.x()).fixed_point_count,
                     std::string("op on x in ") + nm);
                c.eq(fixed_points_via_class_formula(gens, d.z()),
                     cycle_analysis(d.z()).fixed_point_count,
                     std::string("op on z in ") + nm);
            }
        });
    add("props.projection", "handle projection and lifting along coverings",
        [](Checker& c, unsigned) {
            Dessin g = named("G"), a = named("A");
            auto phi = is_quotient(g, a);
            c.is_true(phi.has_value(), "G covers A");
            if (phi) c.is_true(handle_projection_check(g, a, *phi), "G -> A projection");
            Dessin a1a = evaluate("A(1)A");
            auto phi2 = is_quotient(a1a, a);
            c.is_true(phi2.has_value(), "A(1)A covers A");
            if (phi2)
                c.is_true(handle_projection_check(a1a, a, *phi2), "A(1)A -> A projection");
            Dessin s = named("S");
            auto phi3 = is_quotient(s, s);
            c.is_true(phi3.has_value(), "identity covering");
            if (phi3) c.is_true(handle_projection_check(s, s, *phi3), "S -> S projection");
        });
    add("props.sameface", "same-face handles exactly for B, S, Sbar",
        [](Checker& c, unsigned) {
            for (const char* nm : {"S", "Sbar", "A", "B", "C", "D", "E", "F", "G",
                                   "H", "I", "J", "K", "L", "M", "N"}) {
                bool expect = std::string(nm) == "B" || std::string(nm) == "S" ||
                              std::string(nm) == "Sbar";
                c.eq(same_face_check(named(nm)), expect,
                     std::string("same_face_check(") + nm + ")");
            }
        });
    add("props.macbeath", "Macbeath classification on the sampled prime powers",
        [](Checker& c, unsigned) {
            auto cls = [](long long q) { return macbeath_classify(q).str(); };
            c.eq(cls(7), "Hurwitz(1)", "q=7");
            c.eq(cls(8), "Hurwitz(1)", "q=8");
            c.eq(cls(13), "Hurwitz(3)", "q=13");
            c.eq(cls(27), "Hurwitz(1)", "q=27");
            c.eq(cls(29), "Hurwitz(3)", "q=29");
            c.eq(cls(41), "Hurwitz(3)", "q=41");
            c.eq(cls(43), "Hurwitz(3)", "q=43");
            c.eq(cls(11), "NotHurwitz", "q=11");
            c.eq(cls(17), "NotHurwitz", "q=17");
            c.eq(cls(23), "NotHurwitz", "q=23");
        });
    return claims;
}

}  // namespace

VerifyReport run_verify(const std::string& tier, unsigned seed) {
    if (tier != "core" && tier != "full") throw Error("verify: tier must be core or full");
    bool full = tier == "full";
    VerifyReport report;
    for (const auto& claim : build_claims()) {
        if (claim.full_only && !full) continue;
        ClaimResult r;
        r.id = claim.id;
        r.description = claim.description;
        Checker c;
        try {
            claim.fn(c, seed);
        } catch (const std::exception& e) {
            c.fails.push_back(std::string("exception: ") + e.what());
        }
        r.pass = c.fails.empty();
        std::string detail;
        for (const auto& f : c.fails) detail += (detail.empty() ? "" : "; ") + f;
        for (const auto& n : c.notes) detail += (detail.empty() ? "" : "; ") + n;
        r.detail = detail;
        if (!r.pass) ++report.failures;
        report.results.push_back(std::move(r));
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
    return report;
}

}  // namespace dessin
