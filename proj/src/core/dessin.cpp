#include "dessin.hpp"

#include <algorithm>

namespace dessin {

Dessin::Dessin(Perm x, Perm y)
    : degree_(x.degree()), x_(std::move(x)), y_(std::move(y)) {
    if (x_.degree() != y_.degree()) throw Error("dessin: degree mismatch");
    z_ = inverse(compose(x_, y_));
    if (!is_transitive({x_, y_}))
        throw Error("dessin: <x,y> is not transitive (disconnected)");
}

TypeTriple dessin_type(const Dessin& d) {
    return {perm_order(d.x()), perm_order(d.y()), perm_order(d.z())};
}

bool is_hurwitz_type(const Dessin& d) {
    return dessin_type(d) == TypeTriple{3, 2, 7};
}

std::string Signature::str() const {
    std::string s = "(" + std::to_string(genus) + ";";
    if (periods.empty()) s += " -";
    for (std::size_t i = 0; i < periods.size(); ++i)
        s += (i ? ", " : " ") + std::to_string(periods[i]);
    s += ")";
    if (!uniform) s += " [non-uniform]";
    return s;
}

Signature genus_signature(const Dessin& d) {
    Signature sig;
    int n = d.degree();
    auto cx = cycle_analysis(d.x());
    auto cy = cycle_analysis(d.y());
    auto cz = cycle_analysis(d.z());
    sig.alpha = cx.fixed_point_count;
    sig.beta = cy.fixed_point_count;
    sig.gamma = cz.fixed_point_count;
    long long cycles = 0;
    for (auto [len, cnt] : cx.cycle_type) cycles += cnt;
    for (auto [len, cnt] : cy.cycle_type) cycles += cnt;
    for (auto [len, cnt] : cz.cycle_type) cycles += cnt;
    long long two_minus_2g = cycles - n;
    if ((2 - two_minus_2g) % 2 != 0)
        throw Error("genus_signature: Euler sum has wrong parity");
    long long g = (2 - two_minus_2g) / 2;
    if (g < 0) throw Error("genus_signature: negative genus");
    sig.genus = static_cast<int>(g);

    // periods: a cycle of length l < p of a generator of order p contributes
    // p/l when l | p; otherwise the dessin is flagged non-uniform
    auto add_periods = [&sig](const CycleAnalysis& ca, long long gen_order) {
        for (auto [len, cnt] : ca.cycle_type) {
            if (len == gen_order) continue;
            if (gen_order % len == 0) {
                for (int i = 0; i < cnt; ++i)
                    sig.periods.push_back(static_cast<int>(gen_order / len));
            } else {
                sig.uniform = false;
            }
        }
    };
    auto t = dessin_type(d);
    add_periods(cx, t.p);
    add_periods(cy, t.q);
    add_periods(cz, t.r);
    std::sort(sig.periods.begin(), sig.periods.end());

    if (t == TypeTriple{3, 2, 7}) {
        long long num = n - 28LL * sig.alpha - 21LL * sig.beta - 36LL * sig.gamma;
        if (num % 84 != 0 || 1 + num / 84 != g)
            throw Error("genus_signature: Euler genus disagrees with Riemann-Hurwitz count");
    }
    return sig;
}

Dessin mirror(const Dessin& d) {
    return Dessin(inverse(d.x()), inverse(d.y()));
}

namespace {

// equivariant map search: fix phi(0), propagate along both generators
std::optional<std::vector<int>> propagate(const Dessin& d, const Dessin& e,
                                          int image_of_0, bool need_bijection) {
    std::vector<int> phi(d.degree(), -1);
    phi[0] = image_of_0;
    std::vector<int> stack{0};
    const Perm* gd[2] = {&d.x(), &d.y()};
    const Perm* ge[2] = {&e.x(), &e.y()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int t = 0; t < 2; ++t) {
            int w = (*gd[t])[v];
            int img = (*ge[t])[phi[v]];
            if (phi[w] < 0) {
                phi[w] = img;
                stack.push_back(w);
            } else if (phi[w] != img) {
                return std::nullopt;
            }
        }
    }
    if (need_bijection) {
        if (d.degree() != e.degree()) return std::nullopt;
        std::vector<char> hit(e.degree(), 0);
        for (int v : phi) {
            if (hit[v]) return std::nullopt;
            hit[v] = 1;
        }
    }
    return phi;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Dessin& d, const Dessin& e) {
    if (d.degree() != e.degree()) return std::nullopt;
    for (int q = 0; q < e.degree(); ++q)
        if (auto phi = propagate(d, e, q, true)) return phi;
    return std::nullopt;
}

std::optional<std::vector<int>> is_quotient(const Dessin& d, const Dessin& e) {
    if (d.degree() < e.degree()) return std::nullopt;
    for (int q = 0; q < e.degree(); ++q)
        if (auto phi = propagate(d, e, q, false)) return phi;
    return std::nullopt;
}

int automorphism_count(const Dessin& d) {
    int count = 0;
    for (int q = 0; q < d.degree(); ++q)
        if (propagate(d, d, q, true)) ++count;
    return count;
}

std::pair<BigInt, BigInt> cover_counts(const Dessin& d) {
    if (!is_hurwitz_type(d)) throw Error("cover_counts: dessin is not of type (3,2,7)");
    auto sig = genus_signature(d);
    auto rank = [](int g, int fixed) { return std::max(0, 2 * g + fixed - 1); };
    BigInt doubles = BigInt(2).pow(rank(sig.genus, sig.beta)).minus_one();
    std::uint32_t r2 = 0;
    BigInt triples =
        BigInt(3).pow(rank(sig.genus, sig.alpha)).minus_one().div_small(2, &r2);
    if (r2 != 0) throw Error("cover_counts: internal parity error");
    return {doubles, triples};
}

BigInt hurwitz_genus(const BigInt& order) {
    std::uint32_t rem = 0;
    BigInt q = order.div_small(84, &rem);
    if (rem != 0) throw Error("hurwitz_genus: order not divisible by 84");
    return q + BigInt(1);
}

MacbeathClass macbeath_classify(long long q) {
    if (q < 2 || q > 1000000000LL) throw Error("macbeath_classify: q out of range");
    // factor by trial division; q must be a prime power
    long long m = q, p = 0;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            while (m % d == 0) m /= d;
            break;
        }
    }
    if (p == 0) p = q;  // q prime
    else if (m != 1) throw Error("macbeath_classify: q is not a prime power");
    long long e = 0;
    long long t = q;
    while (t > 1) {
        t /= p;
        ++e;
    }
    // recompute exactly: p^e must equal q
    long long check = 1;
    for (long long i = 0; i < e; ++i) check *= p;
    if (check != q) throw Error("macbeath_classify: q is not a prime power");

    MacbeathClass r;
    long long pm = p % 7;
    if (q == 7) {
        r.hurwitz = true;
        r.curve_count = 1;
    } else if (e == 3 && (pm == 2 || pm == 5 || pm == 3 || pm == 4)) {
        r.hurwitz = true;
        r.curve_count = 1;
    } else if (e == 1 && (pm == 1 || pm == 6)) {
        r.hurwitz = true;
        r.curve_count = 3;
    }
    return r;
}

GroupFacts analyze(const Dessin& d) { return recognize(d.generators()); }

}  // namespace dessin
