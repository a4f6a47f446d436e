#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dessin {

// Error raised by all validation failures in the core.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Permutation of {0..n-1} stored as an image array. Points act on the right:
// compose(p, q) applies p first, then q. Immutable once built.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);                  // identity
    explicit Perm(std::vector<int> images);     // validates bijection

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }

private:
    std::vector<int> img_;
};

Perm compose(const Perm& p, const Perm& q);  // p first, then q
Perm inverse(const Perm& p);
Perm commutator(const Perm& p, const Perm& q);  // p^-1 q^-1 p q
Perm power(const Perm& p, long long e);         // e may be negative

struct CycleAnalysis {
    std::vector<std::pair<int, int>> cycle_type;  // (length, count), ascending
    long long order = 1;                          // lcm of cycle lengths
    int fixed_point_count = 0;
    bool odd = false;                             // parity
    std::vector<int> fixed_points;                // sorted
};

CycleAnalysis cycle_analysis(const Perm& p);
std::vector<std::vector<int>> cycles_of(const Perm& p);  // includes fixed points
long long perm_order(const Perm& p);
bool is_odd(const Perm& p);

// Cycle notation over 1-indexed points; points omitted from all cycles are
// fixed. Grammar: cycle := '(' INT ((','|' ') INT)* ')'; '#' starts a comment.
Perm parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Perm& p);  // canonical: min-first, sorted

std::string cycle_type_str(const Perm& p);  // e.g. "1^3 3^6"

}  // namespace dessin
