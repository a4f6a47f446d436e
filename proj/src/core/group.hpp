#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "perm.hpp"

namespace dessin {

// Base and strong generating set built by deterministic Schreier-Sims with a
// full verification pass. Queries are exact; order is arbitrary precision.
class StabilizerChain {
public:
    struct Level {
        int beta = -1;
        std::vector<int> orbit;               // discovery order, orbit[0] == beta
        std::vector<int> transversal_index;   // point -> index into reps, -1 outside
        std::vector<Perm> reps;               // reps[i] maps beta -> orbit[i]
        std::vector<Perm> gens;               // strong generators assigned here
    };

    explicit StabilizerChain(const std::vector<Perm>& generators);

    int degree() const { return degree_; }
    const std::vector<Level>& levels() const { return levels_; }
    BigInt order() const;
    bool contains(const Perm& p) const;

private:
    void verify(const std::vector<Perm>& generators) const;

    int degree_;
    std::vector<Level> levels_;
};

struct GroupFacts {
    enum class Primitivity { kYes, kNo, kNotComputed };
    enum class Recognition { kAlternating, kSymmetric, kOther };

    int degree = 0;
    BigInt order;
    bool transitive = false;
    Primitivity primitive = Primitivity::kNotComputed;
    Recognition recognition = Recognition::kOther;
    std::vector<bool> generator_odd;  // parity per generator

    std::string recognition_str() const;
};

bool is_transitive(const std::vector<Perm>& gens);

// Minimal-block computation via union-find refinement; requires transitivity.
bool is_primitive(const std::vector<Perm>& gens);

// Primitivity is auto-computed only for degree <= kPrimitivityDegreeCap.
inline constexpr int kPrimitivityDegreeCap = 256;

GroupFacts recognize(const std::vector<Perm>& gens);

struct JordanCertificate {
    std::string word;   // human-readable witness, e.g. "[x,y]^4"
    int cycle_length;   // nontrivial support is a single cycle of this length
    Perm element;
};

// Search generators, products, commutators, their powers, then seeded random
// words for an element whose nontrivial support is one cycle of length
// l <= n-3. Deterministic for a fixed seed.
std::optional<JordanCertificate> jordan_certificate(
    const std::vector<Perm>& gens, int budget = 10000, unsigned seed = 0,
    const std::vector<std::string>& gen_names = {});

inline constexpr long long kClassFormulaOrderCap = 1000000;

// |h^G ∩ H| * |C_G(h)| / |H| with H the stabiliser of point 0, computed by
// full element enumeration. Requires transitivity, group order below the cap,
// and h in the group.
long long fixed_points_via_class_formula(const std::vector<Perm>& gens,
                                         const Perm& h);

}  // namespace dessin
