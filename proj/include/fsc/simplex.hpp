#ifndef FSC_SIMPLEX_HPP
#define FSC_SIMPLEX_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "fsc/bigint.hpp"

namespace fsc {

// The discrete simplex S(q, N): occupancy vectors of q modes with total
// excitation N. Points double as classical codewords and as Fock basis labels.

struct SimplexShape {
    int q = 1;           // number of modes, >= 1
    std::int64_t N = 0;  // total excitation, >= 0

    SimplexShape() = default;
    SimplexShape(int q_, std::int64_t N_);
    bool operator==(const SimplexShape& o) const { return q == o.q && N == o.N; }
};

class SimplexPoint {
  public:
    // Validates entries (all >= 0) and caches the total excitation.
    static SimplexPoint make(std::vector<std::int32_t> coords);

    const std::vector<std::int32_t>& coords() const { return coords_; }
    std::int32_t operator[](std::size_t i) const { return coords_[i]; }
    int q() const { return (int)coords_.size(); }
    std::int64_t total() const { return total_; }
    SimplexShape shape() const { return SimplexShape((int)coords_.size(), total_); }

    bool operator==(const SimplexPoint& o) const { return coords_ == o.coords_; }
    bool operator<(const SimplexPoint& o) const { return coords_ < o.coords_; }

  private:
    std::vector<std::int32_t> coords_;
    std::int64_t total_ = 0;
};

// Halved l1 metric. Always an integer for points of equal shape (both sides
// sum to N); the diameter of S(q, N) is N. Throws on shape mismatch.
std::int64_t l1_distance(const SimplexPoint& a, const SimplexPoint& b);

// |S(q, N)| = binomial(N + q - 1, q - 1), exactly.
BigUint simplex_size(const SimplexShape& shape);

constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Visits every point of the simplex exactly once, in the fixed canonical
// order (ascending by leading coordinate, e.g. (0,2),(1,1),(2,0)). All
// brute-force oracles in the test suite rely on this order being stable.
// Throws CapExceeded if the simplex has more than `cap` points.
void enumerate_simplex(const SimplexShape& shape,
                       const std::function<void(const SimplexPoint&)>& visit,
                       std::uint64_t cap = kDefaultEnumerationCap);

std::vector<SimplexPoint> enumerate_simplex_vec(const SimplexShape& shape,
                                                std::uint64_t cap = kDefaultEnumerationCap);

int support_size(const SimplexPoint& p);
std::int32_t inf_norm(const SimplexPoint& p);

// Upper bound on the number of simplex points within distance `radius` of
// `center`, from the support-splitting count
//   sum_{j<=radius} binomial(j+m-1, m-1) * binomial(j+q-1, q-1),
// with m the support size of the center. Not the exact ball volume.
BigUint ball_volume_bound(const SimplexPoint& center, std::int64_t radius);

// sum over n in S(q, N) of prod_i binomial(n_i, r_i)
//   = binomial(N + q - 1, |r| + q - 1).
// Closed form; tests check it against direct summation over the simplex.
BigUint sum_prod_binom(const SimplexShape& shape, const std::vector<std::int32_t>& r);

}  // namespace fsc

#endif
