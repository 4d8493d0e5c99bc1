#include "fsc/simplex.hpp"

#include <numeric>
#include <string>

#include "fsc/errors.hpp"

namespace fsc {

SimplexShape::SimplexShape(int q_, std::int64_t N_) : q(q_), N(N_) {
    if (q < 1) throw ValidationError("SimplexShape: q must be >= 1");
    if (N < 0) throw ValidationError("SimplexShape: N must be >= 0");
}

SimplexPoint SimplexPoint::make(std::vector<std::int32_t> coords) {
    if (coords.empty()) throw ValidationError("SimplexPoint: needs at least one mode");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0)
            throw ValidationError("SimplexPoint: negative entry at index " + std::to_string(i));
        total += coords[i];
    }
    SimplexPoint p;
    p.coords_ = std::move(coords);
    p.total_ = total;
    return p;
}

std::int64_t l1_distance(const SimplexPoint& a, const SimplexPoint& b) {
    if (!(a.shape() == b.shape()))
        throw ValidationError("l1_distance: points have different shapes");
    std::int64_t sum = 0;
    const auto& x = a.coords();
    const auto& y = b.coords();
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += std::abs((std::int64_t)x[i] - (std::int64_t)y[i]);
    return sum / 2;
}

BigUint simplex_size(const SimplexShape& shape) {
    return BigUint::binomial((std::uint64_t)(shape.N + shape.q - 1),
                             (std::uint64_t)(shape.q - 1));
}

void enumerate_simplex(const SimplexShape& shape,
                       const std::function<void(const SimplexPoint&)>& visit,
                       std::uint64_t cap) {
    const BigUint size = simplex_size(shape);
    if (size > BigUint(cap))
        throw CapExceeded("enumerate_simplex: simplex has " + size.to_string() +
                          " points, cap is " + std::to_string(cap));
    if (shape.N > INT32_MAX) throw ValidationError("enumerate_simplex: N too large");
    const int q = shape.q;
    std::vector<std::int32_t> x(q, 0);
    x[q - 1] = (std::int32_t)shape.N;
    for (;;) {
        visit(SimplexPoint::make(x));
        if (x[0] == shape.N) break;
        // Successor in canonical order: bump the deepest position that still
        // has mass strictly to its right, then flush the remainder to the end.
        int i = q - 2;
        std::int64_t right = x[q - 1];
        while (right == 0) {
            --i;
            right = x[i + 1];
        }
        x[i] += 1;
        for (int k = i + 1; k < q; ++k) x[k] = 0;
        x[q - 1] = (std::int32_t)(right - 1);
    }
}

std::vector<SimplexPoint> enumerate_simplex_vec(const SimplexShape& shape, std::uint64_t cap) {
    std::vector<SimplexPoint> out;
    enumerate_simplex(shape, [&](const SimplexPoint& p) { out.push_back(p); }, cap);
    return out;
}

int support_size(const SimplexPoint& p) {
    int s = 0;
    for (auto c : p.coords())
        if (c != 0) ++s;
    return s;
}

std::int32_t inf_norm(const SimplexPoint& p) {
    std::int32_t m = 0;
    for (auto c : p.coords()) m = std::max(m, c);
    return m;
}

BigUint ball_volume_bound(const SimplexPoint& center, std::int64_t radius) {
    if (radius < 0 || radius > center.total())
        throw ValidationError("ball_volume_bound: radius must be in [0, N]");
    const std::uint64_t m = (std::uint64_t)support_size(center);
    const std::uint64_t q = (std::uint64_t)center.q();
    BigUint total;
    for (std::int64_t j = 0; j <= radius; ++j) {
        const std::uint64_t uj = (std::uint64_t)j;
        // j = 0 contributes 1 even for an all-zero center (m = 0).
        BigUint inner = (m == 0 && uj == 0) ? BigUint(1) : BigUint::binomial(uj + m - 1, m - 1);
        total += inner * BigUint::binomial(uj + q - 1, q - 1);
    }
    return total;
}

BigUint sum_prod_binom(const SimplexShape& shape, const std::vector<std::int32_t>& r) {
    if ((int)r.size() != shape.q)
        throw ValidationError("sum_prod_binom: pattern length must equal q");
    std::int64_t weight = 0;
    for (auto v : r) {
        if (v < 0) throw ValidationError("sum_prod_binom: negative pattern entry");
        weight += v;
    }
    return BigUint::binomial((std::uint64_t)(shape.N + shape.q - 1),
                             (std::uint64_t)(weight + shape.q - 1));
}

}  // namespace fsc
