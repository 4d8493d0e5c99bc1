#include "fsc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fsc::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> round_once(const std::array<std::uint32_t, 4>& x,
                                               const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = (std::uint64_t)kMul0 * x[0];
    const std::uint64_t p1 = (std::uint64_t)kMul1 * x[2];
    return {(std::uint32_t)(p1 >> 32) ^ x[1] ^ k[0], (std::uint32_t)p1,
            (std::uint32_t)(p0 >> 32) ^ x[3] ^ k[1], (std::uint32_t)p0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
    ctr = round_once(ctr, key);
    for (int r = 1; r < 10; ++r) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
        ctr = round_once(ctr, key);
    }
    return ctr;
}

std::uint64_t Stream::next_u64() {
    const std::array<std::uint32_t, 4> ctr = {
        (std::uint32_t)member_, (std::uint32_t)(member_ >> 32),
        (std::uint32_t)draw_, (std::uint32_t)(draw_ >> 32)};
    const std::array<std::uint32_t, 2> key = {(std::uint32_t)seed_,
                                              (std::uint32_t)(seed_ >> 32)};
    ++draw_;
    const auto out = philox4x32(ctr, key);
    return (std::uint64_t)out[0] | ((std::uint64_t)out[1] << 32);
}

double Stream::next_double() {
    return (double)(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Stream::bounded(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("rng::Stream::bounded: n must be positive");
    // Lemire's multiply-shift with rejection of the biased sliver.
    unsigned __int128 m = (unsigned __int128)next_u64() * n;
    std::uint64_t lo = (std::uint64_t)m;
    if (lo < n) {
        const std::uint64_t threshold = (0 - n) % n;
        while (lo < threshold) {
            m = (unsigned __int128)next_u64() * n;
            lo = (std::uint64_t)m;
        }
    }
    return (std::uint64_t)(m >> 64);
}

double Stream::next_normal() {
    const double u = next_double();
    const double v = next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u));  // u in [0,1) keeps the log finite
    return r * std::cos(2.0 * M_PI * v);
}

std::uint64_t Stream::next_poisson(double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("rng::Stream::next_poisson: bad mean");
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = 1.0;
    for (;;) {
        prod *= next_double();
        if (prod <= limit) return k;
        ++k;
    }
}

}  // namespace fsc::rng
