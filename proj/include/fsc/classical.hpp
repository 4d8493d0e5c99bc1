#ifndef FSC_CLASSICAL_HPP
#define FSC_CLASSICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsc/simplex.hpp"

namespace fsc {

// Classical l1 codes on the simplex: the two random ensembles, the greedy
// construction on the typical subset, exact distance verification, and
// occupancy statistics.

enum class EnsembleTag { uniform, multinomial, greedy_gv, explicit_words };

std::string to_string(EnsembleTag tag);
EnsembleTag ensemble_from_string(const std::string& s);

struct ClassicalCode {
    SimplexShape shape;
    std::vector<SimplexPoint> words;
    EnsembleTag ensemble = EnsembleTag::explicit_words;
    std::optional<double> alpha;                    // q/N design ratio when supplied
    std::optional<std::uint64_t> seed;              // absent for explicit codes
    std::optional<std::int64_t> claimed_distance;

    std::size_t size() const { return words.size(); }
};

// Membership window for the "typical" subset the greedy construction scans:
//   | support(n)/N - alpha/(1+alpha) | <= N^(-1/2+xi)   and
//   inf_norm(n) <= (1+eps) * log_{1+alpha} N.
struct TypicalityParams {
    double alpha = 1.0;  // > 0
    double eps = 1.0;    // > 0, inf-norm slack
    double xi = 0.25;    // in (0, 1/2), support-window exponent

    TypicalityParams() = default;
    TypicalityParams(double alpha_, double eps_, double xi_);
    double inf_norm_cap(std::int64_t N) const;
};

// L i.i.d. points, each uniform on the simplex, via q-1 distinct separators
// among {1, ..., N+q-1}. Word w uses RNG stream (seed, w); deterministic
// regardless of sampling order.
ClassicalCode sample_uniform(const SimplexShape& shape, std::size_t L, std::uint64_t seed);

// L i.i.d. occupancy vectors of N uniform bin choices (Multinomial(q, N)).
ClassicalCode sample_multinomial(const SimplexShape& shape, std::size_t L, std::uint64_t seed);

// Exact minimum pairwise halved-l1 distance, O(L^2 q). Needs >= 2 words.
std::int64_t min_distance(const ClassicalCode& code);

// True iff both typicality constraints hold. Needs N >= 2 so the logs exist.
bool typicality_check(const SimplexPoint& p, const TypicalityParams& params);

// Greedy scan over the (optionally typicality-filtered) simplex: accept a
// point iff its distance to every accepted point is >= t. Scan order is the
// canonical enumeration order, shuffled when order_seed is given. The result
// is maximal under that scan. Throws CapExceeded for simplexes beyond `cap`
// (use the random ensembles or greedy_gv_sampled there).
ClassicalCode greedy_gv(const SimplexShape& shape, std::int64_t t,
                        const std::optional<TypicalityParams>& params,
                        std::optional<std::uint64_t> order_seed,
                        std::uint64_t cap = kDefaultEnumerationCap);

// Rejection-sampling fallback for simplexes too large to enumerate: proposes
// random typical points and keeps those at distance >= t from all accepted.
// The returned claimed_distance still has to be verified by min_distance
// when L^2 is feasible; callers must otherwise flag it unverified.
ClassicalCode greedy_gv_sampled(const SimplexShape& shape, std::int64_t t,
                                const TypicalityParams& params, std::uint64_t seed,
                                std::size_t proposals, std::size_t max_words);

struct OccupancyStats {
    std::int32_t max_inf_norm = 0;
    double mean_support_fraction = 0.0;  // mean of support(n)/q
    double fraction_exceeding = 0.0;     // fraction of words with inf_norm > B
};

OccupancyStats occupancy_stats(const ClassicalCode& code, std::int32_t B);

struct PairwiseDistanceStats {
    double mean = 0.0;
    std::int64_t min = 0;
    std::int64_t max = 0;
    double normalized_mean = 0.0;  // mean / N
};

PairwiseDistanceStats pairwise_distance_stats(const ClassicalCode& code);

}  // namespace fsc

#endif
