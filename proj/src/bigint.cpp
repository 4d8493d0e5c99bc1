#include "fsc/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fsc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint::BigUint(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& other) {
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u128 s = (u128)limbs_[i] + carry;
        if (i < other.limbs_.size()) s += other.limbs_[i];
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint BigUint::operator+(const BigUint& other) const {
    BigUint r = *this;
    r += other;
    return r;
}

BigUint BigUint::operator*(const BigUint& other) const {
    if (is_zero() || other.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            u128 cur = (u128)limbs_[i] * other.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = (u64)cur;
            carry = (u64)(cur >> 64);
        }
        r.limbs_[i + other.limbs_.size()] += carry;
    }
    r.trim();
    return r;
}

BigUint& BigUint::mul_u64(u64 m) {
    if (m == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 cur = (u128)limb * m + carry;
        limb = (u64)cur;
        carry = (u64)(cur >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

u64 BigUint::div_u64(u64 d) {
    if (d == 0) throw std::domain_error("BigUint: division by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = (u64)(cur / d);
        rem = cur % d;
    }
    trim();
    return (u64)rem;
}

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

u64 BigUint::to_u64() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() > 1) throw std::overflow_error("BigUint: value exceeds 64 bits");
    return limbs_[0];
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    u64 top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 64;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigUint::to_double() const {
    if (limbs_.empty()) return 0.0;
    long double acc = 0.0L;
    // Only the top two limbs affect the double mantissa.
    std::size_t first = limbs_.size() > 2 ? limbs_.size() - 2 : 0;
    for (std::size_t i = limbs_.size(); i-- > first;)
        acc = acc * 18446744073709551616.0L + (long double)limbs_[i];
    return (double)std::ldexp(acc, (int)(first * 64));
}

long double BigUint::log2l() const {
    if (limbs_.empty()) return -std::numeric_limits<long double>::infinity();
    long double acc = 0.0L;
    std::size_t first = limbs_.size() > 2 ? limbs_.size() - 2 : 0;
    for (std::size_t i = limbs_.size(); i-- > first;)
        acc = acc * 18446744073709551616.0L + (long double)limbs_[i];
    return std::log2(acc) + (long double)(first * 64);
}

double BigUint::ratio(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw std::domain_error("BigUint::ratio: zero denominator");
    if (num.is_zero()) return 0.0;
    return (double)std::exp2(num.log2l() - den.log2l());
}

BigUint BigUint::binomial(u64 n, u64 k) {
    if (k > n) return BigUint();
    if (k > n - k) k = n - k;
    BigUint r(1);
    for (u64 i = 1; i <= k; ++i) {
        r.mul_u64(n - k + i);
        r.div_u64(i);  // exact at every step: r holds binomial(n-k+i, i)
    }
    return r;
}

BigUint BigUint::pow(u64 base, u64 exp) {
    BigUint r(1);
    for (u64 i = 0; i < exp; ++i) r.mul_u64(base);
    return r;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        u64 rem = tmp.div_u64(1000000000ull);
        std::string chunk = std::to_string(rem);
        if (!tmp.is_zero()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return out;
}

}  // namespace fsc
