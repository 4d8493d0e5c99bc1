#include "fsc/patterns.hpp"

#include <string>

#include "fsc/errors.hpp"
#include "fsc/simplex.hpp"

namespace fsc {

LossPattern LossPattern::make(std::vector<std::int32_t> r) {
    LossPattern p;
    std::int64_t w = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0) throw ValidationError("LossPattern: negative entry at index " +
                                            std::to_string(i));
        w += r[i];
    }
    p.r = std::move(r);
    p.weight = w;
    return p;
}

BigUint pattern_count(int q, std::int64_t t) {
    if (q < 1) throw ValidationError("pattern_count: q must be >= 1");
    if (t < 0) throw ValidationError("pattern_count: t must be >= 0");
    BigUint total;
    for (std::int64_t w = 0; w <= t; ++w)
        total += BigUint::binomial((std::uint64_t)(w + q - 1), (std::uint64_t)(q - 1));
    return total;
}

std::vector<LossPattern> enumerate_patterns(int q, std::int64_t t, std::uint64_t cap) {
    const BigUint count = pattern_count(q, t);
    if (count > BigUint(cap))
        throw CapExceeded("enumerate_patterns: " + count.to_string() +
                          " patterns exceed the cap of " + std::to_string(cap));
    std::vector<LossPattern> out;
    out.reserve((std::size_t)count.to_u64());
    for (std::int64_t w = 0; w <= t; ++w) {
        enumerate_simplex(SimplexShape(q, w), [&](const SimplexPoint& p) {
            out.push_back(LossPattern::make(p.coords()));
        }, cap);
    }
    return out;
}

LossPattern unrank_pattern(int q, std::int64_t t, std::uint64_t index) {
    const BigUint total = pattern_count(q, t);
    if (!total.fits_u64() || index >= total.to_u64())
        throw ValidationError("unrank_pattern: index out of range");
    std::int64_t w = 0;
    for (;; ++w) {
        const std::uint64_t at_w =
            BigUint::binomial((std::uint64_t)(w + q - 1), (std::uint64_t)(q - 1)).to_u64();
        if (index < at_w) break;
        index -= at_w;
    }
    // Within weight w, compositions are ordered by ascending leading entry.
    std::vector<std::int32_t> r(q, 0);
    std::int64_t rem = w;
    for (int pos = 0; pos < q - 1; ++pos) {
        for (std::int32_t v = 0;; ++v) {
            if (v > rem) throw std::logic_error("unrank_pattern: rank bookkeeping broke");
            const std::uint64_t with_v =
                BigUint::binomial((std::uint64_t)(rem - v + q - pos - 2),
                                  (std::uint64_t)(q - pos - 2)).to_u64();
            if (index < with_v) {
                r[pos] = v;
                rem -= v;
                break;
            }
            index -= with_v;
        }
    }
    r[q - 1] = (std::int32_t)rem;
    return LossPattern::make(std::move(r));
}

}  // namespace fsc
