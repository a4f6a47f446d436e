#include "core/bigint.hpp"
#include "doctest.h"

using dessin::BigInt;

TEST_CASE("basic arithmetic and printing") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(1234567890123456789ULL).str() == "1234567890123456789");
    BigInt a(999999999);
    a.mul_small(999999999);
    CHECK(a.str() == "999999998000000001");
    CHECK((BigInt(7) * BigInt(6)).str() == "42");
    CHECK((BigInt(10).pow(20) + BigInt(5)).str() == "100000000000000000005");
    CHECK(BigInt(2).pow(64).minus_one().str() == "18446744073709551615");
}

TEST_CASE("factorials") {
    CHECK(BigInt::factorial(15).str() == "1307674368000");
    std::uint32_t rem = 0;
    CHECK(BigInt::factorial(15).div_small(2, &rem).str() == "653837184000");
    CHECK(rem == 0);
    // |A_108| has 174 decimal digits
    CHECK(BigInt::factorial(108).div_small(2, &rem).digits() == 174);
}

TEST_CASE("division with remainder") {
    std::uint32_t rem = 0;
    BigInt q = BigInt(1093).div_small(84, &rem);
    CHECK(q.str() == "13");
    CHECK(rem == 1);
    CHECK(BigInt::from_decimal("653837184000") == BigInt(653837184000ULL));
}

TEST_CASE("comparisons") {
    CHECK(BigInt(41) < BigInt(42));
    CHECK_FALSE(BigInt(42) < BigInt(42));
    CHECK(BigInt(42) <= BigInt(42));
    CHECK(BigInt(999999999999ULL).fits_u64());
    CHECK_FALSE(BigInt::factorial(30).fits_u64());
    CHECK(BigInt(123456789).to_u64() == 123456789);
}
