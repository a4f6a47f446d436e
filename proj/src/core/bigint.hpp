#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dessin {

// Unsigned arbitrary-precision integer, base 1e9 limbs.
// Group orders in this project reach ~180 decimal digits (A_108), far past
// any machine word.
class BigInt {
public:
    BigInt() : limbs_{0} {}
    BigInt(std::uint64_t v);

    static BigInt from_decimal(const std::string& s);
    static BigInt factorial(unsigned n);
    static BigInt pow2(unsigned e) { return BigInt(2).pow(e); }

    BigInt& mul_small(std::uint64_t v);
    BigInt operator*(const BigInt& o) const;
    BigInt operator+(const BigInt& o) const;
    BigInt minus_one() const;  // requires *this >= 1
    BigInt pow(unsigned e) const;

    // Quotient by a small divisor; remainder out. Throws nothing; caller
    // checks remainder when exactness matters.
    BigInt div_small(std::uint32_t d, std::uint32_t* rem) const;

    bool operator==(const BigInt& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool fits_u64() const;
    std::uint64_t to_u64() const;  // valid only if fits_u64()

    std::string str() const;
    std::size_t digits() const { return str().size(); }

private:
    void trim();
    std::vector<std::uint32_t> limbs_;  // little-endian, base 1e9
    static constexpr std::uint32_t kBase = 1000000000u;
};

}  // namespace dessin
