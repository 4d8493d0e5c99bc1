#include <doctest.h>

#include "fsc/bigint.hpp"

using fsc::BigUint;

TEST_CASE("binomial small values") {
    CHECK(BigUint::binomial(0, 0).to_u64() == 1);
    CHECK(BigUint::binomial(4, 1).to_u64() == 4);
    CHECK(BigUint::binomial(5, 2).to_u64() == 10);
    CHECK(BigUint::binomial(23, 11).to_u64() == 1352078);
    CHECK(BigUint::binomial(3, 5).is_zero());
}

TEST_CASE("binomial matches Pascal recurrence") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        for (std::uint64_t k = 1; k < n; ++k) {
            BigUint lhs = BigUint::binomial(n, k);
            BigUint rhs = BigUint::binomial(n - 1, k - 1) + BigUint::binomial(n - 1, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("large binomial decimal expansion") {
    CHECK(BigUint::binomial(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("multiply and divide round-trip") {
    BigUint v = BigUint::binomial(80, 40);
    BigUint w = v;
    w.mul_u64(123456789ull);
    CHECK(w.div_u64(123456789ull) == 0);
    CHECK(w == v);
}

TEST_CASE("big product and addition") {
    BigUint a = BigUint::pow(10, 30);
    BigUint b = BigUint::pow(10, 30);
    CHECK((a * b).to_string() == "1" + std::string(60, '0'));
    BigUint c = a + b;
    CHECK(c.to_string() == "2" + std::string(30, '0'));
}

TEST_CASE("comparisons") {
    CHECK(BigUint(5) < BigUint(7));
    CHECK(BigUint::pow(2, 100) > BigUint::pow(2, 99));
    CHECK(BigUint(0).is_zero());
    CHECK(BigUint::pow(7, 0).to_u64() == 1);
}

TEST_CASE("double conversion") {
    CHECK(BigUint(1ull << 52).to_double() == doctest::Approx(4503599627370496.0));
    const double r = BigUint::ratio(BigUint(3), BigUint(4));
    CHECK(r == doctest::Approx(0.75).epsilon(1e-15));
    // Ratio of two ~166-bit values.
    const double big = BigUint::ratio(BigUint::pow(3, 100), BigUint::pow(3, 100).mul_u64(2));
    CHECK(big == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("bit length") {
    CHECK(BigUint(0).bit_length() == 0);
    CHECK(BigUint(1).bit_length() == 1);
    CHECK(BigUint(255).bit_length() == 8);
    CHECK(BigUint::pow(2, 64).bit_length() == 65);
}
