#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace dessin {

// A dessin d'enfant: transitive pair (x, y) on {0..n-1} with z = (xy)^-1
// cached so that x*y*z = 1. Immutable; joins build new dessins.
class Dessin {
public:
    Dessin(Perm x, Perm y);

    int degree() const { return degree_; }
    const Perm& x() const { return x_; }
    const Perm& y() const { return y_; }
    const Perm& z() const { return z_; }
    std::vector<Perm> generators() const { return {x_, y_}; }

private:
    int degree_;
    Perm x_, y_, z_;
};

struct TypeTriple {
    long long p, q, r;  // orders of x, y, z
    bool operator==(const TypeTriple& o) const {
        return p == o.p && q == o.q && r == o.r;
    }
    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + "," +
               std::to_string(r) + ")";
    }
};

TypeTriple dessin_type(const Dessin& d);
bool is_hurwitz_type(const Dessin& d);  // type (3,2,7)

struct Signature {
    int genus = 0;
    std::vector<int> periods;  // sorted ascending
    int alpha = 0, beta = 0, gamma = 0;
    bool uniform = true;  // false when some cycle length does not divide the
                          // generator order (periods then omit those cycles)
    std::string str() const;
};

// Genus from the Euler relation c(x)+c(y)+c(z)-n = 2-2g; for type (3,2,7) the
// result is cross-checked against the Riemann-Hurwitz count
// g = 1 + (n - 28a - 21b - 36c)/84 and a mismatch is a hard error.
Signature genus_signature(const Dessin& d);

Dessin mirror(const Dessin& d);

std::optional<std::vector<int>> is_isomorphic(const Dessin& d, const Dessin& e);
std::optional<std::vector<int>> is_quotient(const Dessin& d, const Dessin& e);
int automorphism_count(const Dessin& d);

// (2^(2g+beta-1) - 1, (3^(2g+alpha-1) - 1)/2); requires type (3,2,7).
std::pair<BigInt, BigInt> cover_counts(const Dessin& d);

BigInt hurwitz_genus(const BigInt& order);  // 1 + order/84, order % 84 == 0

struct MacbeathClass {
    bool hurwitz = false;
    int curve_count = 0;  // 1 or 3 when hurwitz
    std::string str() const {
        return hurwitz ? "Hurwitz(" + std::to_string(curve_count) + ")" : "NotHurwitz";
    }
};

MacbeathClass macbeath_classify(long long q);

GroupFacts analyze(const Dessin& d);

}  // namespace dessin
