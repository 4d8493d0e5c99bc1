#ifndef FSC_CERTIFY_HPP
#define FSC_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "fsc/bigint.hpp"
#include "fsc/fock.hpp"
#include "fsc/patterns.hpp"

namespace fsc::cert {

// Certification of a Fock code against the truncated loss channel: exact
// orthogonality from the classical distance, closed-form diagonal
// expectations, the lambda reference vector, and the resulting guarantee
//   eps_certified = sqrt(K * M * eps_max),
// converted to a full-channel statement via eps_to_ad.
//
// Kraus normalization: the truncated channel divides the quadratic form by
// p(N, t) exactly once, so its operators are A_r / sqrt(p) and every diagonal
// expectation here carries a single 1/p factor.

enum class LambdaMode { analytic_uniform, analytic_multinomial, empirical_code_mean };

std::string to_string(LambdaMode mode);
LambdaMode lambda_mode_from_string(const std::string& s);

enum class OrthoVerdict { proved_by_distance, brute_force_verified, failed };

std::string to_string(OrthoVerdict v);

struct OrthoWitness {
    std::size_t word_a = 0, word_b = 0;   // word indices in the classical code
    std::vector<std::int32_t> r_a, r_b;   // loss patterns with n_a - r_a == n_b - r_b
    std::string describe() const;
};

struct OrthoResult {
    OrthoVerdict verdict = OrthoVerdict::brute_force_verified;
    std::optional<OrthoWitness> witness;  // present iff verdict == failed
    std::optional<std::int64_t> min_distance;  // absent for single-word codes
};

// Orthogonality of the KL off-terms for all loss patterns of weight <= t.
// A retained word pair at distance d <= t yields the explicit collision
// r_a = n_a - min(n_a, n_b), r_b = n_b - min(n_a, n_b) of weight d, so the
// verdict is exact: proved_by_distance iff the retained minimum distance is
// >= t+1, failed (with that witness) otherwise; single-word codes are
// verified directly.
OrthoResult orthogonality_check(const FockCode& fc, std::int64_t t);

// Y_r(n) = (1/p) (1-gamma)^(N-w) gamma^w prod_i binomial(n_i, r_i), the
// diagonal weight one word contributes. Factors are accumulated in a
// mode-order-independent way so permuted (word, pattern) pairs give exactly
// equal doubles.
double word_weight(const SimplexPoint& n, const LossPattern& r, double gamma, double p);

// Mean of Y_r over one block: the diagonal expectation <c_i| Ar~' Ar~ |c_i>.
double diag_expectation(const FockCode& fc, int block, const LossPattern& r, double gamma,
                        double p);

// Reference weights lambda_r.
//   analytic uniform:      E[prod binomial] = sum_prod_binom / |S(q,N)|
//   analytic multinomial:  E[prod binomial] = binomial(N,w) * multinom(r) * q^(-w)
//   empirical:             mean of Y_r over all retained words
double lambda_analytic(const LossPattern& r, const SimplexShape& shape, double gamma, double p,
                       LambdaMode mode);
double lambda_empirical(const FockCode& fc, const LossPattern& r, double gamma, double p);

constexpr std::uint64_t kDefaultPatternCap = 10'000'000;

// Maximum deviation |diag - lambda| over all blocks and patterns of weight
// <= t. This is the concentration quantity itself; it does not presuppose
// orthogonality and is also used for ensemble trend studies on codes that
// fail the distance gate.
struct DeviationStats {
    double eps_max = 0.0;
    std::uint64_t patterns_enumerated = 0;
    double lambda_sum = 0.0;
};

DeviationStats deviation_stats(const FockCode& fc, std::int64_t t, double gamma,
                               LambdaMode mode, std::uint64_t pattern_cap = kDefaultPatternCap);

struct CertReport {
    int K = 0;
    std::int64_t T = 0;
    int q = 0;
    std::int64_t N = 0;
    std::int64_t t = 0;
    double gamma = 0.0;
    BigUint M;  // Kraus count of the truncated channel
    OrthoResult orthogonality;
    LambdaMode lambda_mode = LambdaMode::analytic_uniform;
    double lambda_sum = 0.0;
    double eps_max = 0.0;
    double eps_certified = 0.0;  // sqrt(K * M * eps_max)
    double p_loss = 0.0;
    double eps_ad = 0.0;         // eps_to_ad(eps_certified, p_loss)
    std::uint64_t patterns_enumerated = 0;
    std::size_t discarded_words = 0;
};

// Full certification: refuses (CertificationRefused with the witness) when
// orthogonality fails, refuses (CapExceeded) when the pattern count exceeds
// the cap. Otherwise enumerates every pattern of weight <= t and assembles
// the report. Bit-reproducible on identical inputs.
CertReport certify(const FockCode& fc, std::int64_t t, double gamma, LambdaMode mode,
                   std::uint64_t pattern_cap = kDefaultPatternCap);

struct EpsEstimate {
    double eps_max_lower_bound = 0.0;
    std::uint64_t patterns_sampled = 0;
    bool exhaustive = false;
};

// Sampled stand-in for certify's eps_max when the pattern set is too large:
// max deviation over `sample_count` uniformly drawn patterns. A lower bound,
// never a certificate. Enumerates exhaustively when sample_count >= M.
EpsEstimate estimate_eps(const FockCode& fc, std::int64_t t, double gamma, LambdaMode mode,
                         std::uint64_t sample_count, std::uint64_t seed);

// K^3 M^2 <= L^(1-eps), log-domain with an exact big-integer comparison when
// eps == 0 or the logs are too close to call.
bool feasibility_check(std::uint64_t L, std::uint64_t K, const BigUint& M, double epsilon);

}  // namespace fsc::cert

#endif
