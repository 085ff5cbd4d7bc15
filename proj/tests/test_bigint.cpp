#include <cstdint>

#include "doctest.h"
#include "pauliray/bigint.hpp"

using pauliray::BigUint;

TEST_CASE("small values round-trip through to_string") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1).to_string() == "1");
    CHECK(BigUint(4294967296ull).to_string() == "4294967296");
    CHECK(BigUint(18446744073709551615ull).to_string() == "18446744073709551615");
}

TEST_CASE("equality against raw 64-bit values") {
    CHECK(BigUint(42) == 42ull);
    CHECK_FALSE(BigUint(42) == 43ull);
    CHECK(BigUint(89181388800ull) == 89181388800ull);
}

TEST_CASE("products match known factorials") {
    // 20! fits in 64 bits; 25! does not.
    BigUint f(1);
    for (std::uint64_t k = 2; k <= 20; ++k) f.mul(k);
    CHECK(f == 2432902008176640000ull);
    for (std::uint64_t k = 21; k <= 25; ++k) f.mul(k);
    CHECK(f.to_string() == "15511210043330985984000000");
}

TEST_CASE("shl agrees with repeated doubling") {
    BigUint a(1);
    a.shl(100);
    BigUint b(1);
    for (int k = 0; k < 100; ++k) b.mul(2);
    CHECK(a == b);
    CHECK(a.to_string() == "1267650600228229401496703205376");
}

TEST_CASE("multiplying by zero collapses to zero") {
    BigUint a(123456789);
    a.mul(0);
    CHECK(a == 0ull);
    CHECK(a.to_string() == "0");
}
