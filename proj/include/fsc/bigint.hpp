#ifndef FSC_BIGINT_HPP
#define FSC_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fsc {

// Unsigned arbitrary-precision integer, little-endian 64-bit limbs.
// Covers what the counting layer needs: binomial coefficients, sums and
// products of counts, exact comparisons, and decimal/double conversion.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v);  // NOLINT: implicit by design

    static BigUint binomial(std::uint64_t n, std::uint64_t k);
    static BigUint pow(std::uint64_t base, std::uint64_t exp);

    BigUint& operator+=(const BigUint& other);
    BigUint operator+(const BigUint& other) const;
    BigUint operator*(const BigUint& other) const;
    BigUint& mul_u64(std::uint64_t m);
    // In-place exact or truncating division by a small divisor; returns the
    // remainder. Divisor must be nonzero.
    std::uint64_t div_u64(std::uint64_t d);

    int compare(const BigUint& other) const;
    bool operator==(const BigUint& other) const { return compare(other) == 0; }
    bool operator!=(const BigUint& other) const { return compare(other) != 0; }
    bool operator<(const BigUint& other) const { return compare(other) < 0; }
    bool operator<=(const BigUint& other) const { return compare(other) <= 0; }
    bool operator>(const BigUint& other) const { return compare(other) > 0; }
    bool operator>=(const BigUint& other) const { return compare(other) >= 0; }

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const;  // throws if the value does not fit

    std::size_t bit_length() const;
    double to_double() const;       // nearest double, may be +inf for huge values
    long double log2l() const;      // -inf for zero
    // num/den as a double; both must be nonzero unless num is zero.
    static double ratio(const BigUint& num, const BigUint& den);

    std::string to_string() const;  // decimal

  private:
    void trim();
    std::vector<std::uint64_t> limbs_;  // empty represents zero
};

}  // namespace fsc

#endif
