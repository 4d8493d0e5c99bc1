#ifndef FSC_PATTERNS_HPP
#define FSC_PATTERNS_HPP

#include <cstdint>
#include <vector>

#include "fsc/bigint.hpp"

namespace fsc {

// Per-mode photon-loss counts; labels one Kraus operator of the loss channel.
struct LossPattern {
    std::vector<std::int32_t> r;
    std::int64_t weight = 0;  // cached sum of r

    static LossPattern make(std::vector<std::int32_t> r);
    int q() const { return (int)r.size(); }
    bool operator==(const LossPattern& o) const { return r == o.r; }
};

// All patterns of weight <= t on q modes, in the fixed order used everywhere:
// weight-major, canonical composition order within each weight. Throws
// CapExceeded when the count would exceed `cap`.
std::vector<LossPattern> enumerate_patterns(int q, std::int64_t t, std::uint64_t cap);

// Exact count of the above (equals the Kraus count of the truncated channel).
BigUint pattern_count(int q, std::int64_t t);

// Pattern at position `index` of the same order, without enumerating.
// Requires pattern_count(q, t) to fit in 64 bits.
LossPattern unrank_pattern(int q, std::int64_t t, std::uint64_t index);

}  // namespace fsc

#endif
