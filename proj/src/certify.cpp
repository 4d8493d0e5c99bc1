#include "fsc/certify.hpp"

#include <algorithm>
#include <cmath>

#include "fsc/bounds.hpp"
#include "fsc/errors.hpp"
#include "fsc/rng.hpp"

namespace fsc::cert {

std::string to_string(LambdaMode mode) {
    switch (mode) {
        case LambdaMode::analytic_uniform: return "analytic_uniform";
        case LambdaMode::analytic_multinomial: return "analytic_multinomial";
        case LambdaMode::empirical_code_mean: return "empirical_code_mean";
    }
    throw ValidationError("unknown lambda mode");
}

LambdaMode lambda_mode_from_string(const std::string& s) {
    if (s == "analytic_uniform" || s == "uniform") return LambdaMode::analytic_uniform;
    if (s == "analytic_multinomial" || s == "multinomial")
        return LambdaMode::analytic_multinomial;
    if (s == "empirical_code_mean" || s == "empirical")
        return LambdaMode::empirical_code_mean;
    throw ValidationError("unknown lambda mode '" + s + "'");
}

std::string to_string(OrthoVerdict v) {
    switch (v) {
        case OrthoVerdict::proved_by_distance: return "proved_by_distance";
        case OrthoVerdict::brute_force_verified: return "brute_force_verified";
        case OrthoVerdict::failed: return "failed";
    }
    throw ValidationError("unknown orthogonality verdict");
}

namespace {

std::string coords_to_string(const std::vector<std::int32_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::string OrthoWitness::describe() const {
    return "words " + std::to_string(word_a) + " and " + std::to_string(word_b) +
           " collide under loss patterns " + coords_to_string(r_a) + " and " +
           coords_to_string(r_b);
}

OrthoResult orthogonality_check(const FockCode& fc, std::int64_t t) {
    if (t < 0) throw ValidationError("orthogonality_check: t must be >= 0");
    std::vector<std::size_t> retained;
    for (std::size_t i = 0; i < fc.partition.block_of.size(); ++i)
        if (fc.partition.block_of[i] >= 0) retained.push_back(i);

    OrthoResult res;
    if (retained.size() < 2) {
        // One basis word: distinct equal-weight patterns cannot produce the
        // same residual, and different weights land in orthogonal sectors.
        res.verdict = OrthoVerdict::brute_force_verified;
        return res;
    }

    std::int64_t best = fc.shape().N + 1;
    std::pair<std::size_t, std::size_t> argbest{0, 0};
    for (std::size_t a = 0; a + 1 < retained.size(); ++a) {
        for (std::size_t b = a + 1; b < retained.size(); ++b) {
            const std::int64_t d =
                l1_distance(fc.classical.words[retained[a]], fc.classical.words[retained[b]]);
            if (d < best) {
                best = d;
                argbest = {retained[a], retained[b]};
            }
        }
    }
    res.min_distance = best;
    if (best >= t + 1) {
        res.verdict = OrthoVerdict::proved_by_distance;
        return res;
    }
    // A pair at distance d <= t collides: subtracting the coordinate-wise
    // minimum from both words gives equal residuals under weight-d patterns.
    const auto& na = fc.classical.words[argbest.first].coords();
    const auto& nb = fc.classical.words[argbest.second].coords();
    OrthoWitness w;
    w.word_a = argbest.first;
    w.word_b = argbest.second;
    w.r_a.resize(na.size());
    w.r_b.resize(na.size());
    for (std::size_t i = 0; i < na.size(); ++i) {
        const std::int32_t m = std::min(na[i], nb[i]);
        w.r_a[i] = na[i] - m;
        w.r_b[i] = nb[i] - m;
    }
    res.verdict = OrthoVerdict::failed;
    res.witness = std::move(w);
    return res;
}

double word_weight(const SimplexPoint& n, const LossPattern& r, double gamma, double p) {
    if (n.q() != r.q()) throw ValidationError("word_weight: mode counts differ");
    const std::int64_t N = n.total();
    const std::int64_t w = r.weight;
    if (w > N) return 0.0;
    // Gather the nontrivial (n_i, r_i) factors and sort them, so that codes
    // related by a coordinate permutation produce bit-identical values.
    std::vector<std::pair<std::int32_t, std::int32_t>> factors;
    for (int i = 0; i < n.q(); ++i) {
        if (r.r[i] == 0) continue;  // binomial(n_i, 0) = 1 contributes log 0
        if (r.r[i] > n[i]) return 0.0;
        factors.emplace_back(n[i], r.r[i]);
    }
    if (gamma >= 1.0 && w < N) return 0.0;  // (1-gamma)^(N-w) with a zero base
    std::sort(factors.begin(), factors.end());
    double log_sum = 0.0;
    for (const auto& [ni, ri] : factors)
        log_sum += std::lgamma((double)ni + 1.0) - std::lgamma((double)ri + 1.0) -
                   std::lgamma((double)(ni - ri) + 1.0);
    log_sum += (double)w * std::log(gamma);
    if (w < N) log_sum += (double)(N - w) * std::log1p(-gamma);
    return std::exp(log_sum) / p;
}

double diag_expectation(const FockCode& fc, int block, const LossPattern& r, double gamma,
                        double p) {
    if (block < 0 || block >= fc.partition.K)
        throw ValidationError("diag_expectation: block out of range");
    if (r.weight > fc.shape().N)
        throw ValidationError("diag_expectation: pattern weight exceeds N");
    double acc = 0.0;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < fc.classical.words.size(); ++i) {
        if (fc.partition.block_of[i] != block) continue;
        acc += word_weight(fc.classical.words[i], r, gamma, p);
        ++count;
    }
    return acc / (double)count;
}

double lambda_analytic(const LossPattern& r, const SimplexShape& shape, double gamma, double p,
                       LambdaMode mode) {
    if (r.q() != shape.q) throw ValidationError("lambda_analytic: mode counts differ");
    const std::int64_t N = shape.N;
    const std::int64_t w = r.weight;
    if (w > N) return 0.0;
    if (gamma >= 1.0 && w < N) return 0.0;
    double log_expect = 0.0;
    if (mode == LambdaMode::analytic_uniform) {
        log_expect = (double)(sum_prod_binom(shape, r.r).log2l() -
                              simplex_size(shape).log2l()) * std::log(2.0);
    } else if (mode == LambdaMode::analytic_multinomial) {
        // E[prod binomial(X_i, r_i)] for X ~ Multinomial(q, N), via the
        // factorial moment: binomial(N, w) * (w! / prod r_i!) * q^(-w).
        log_expect = std::lgamma((double)N + 1.0) - std::lgamma((double)(N - w) + 1.0) -
                     (double)w * std::log((double)shape.q);
        for (int i = 0; i < shape.q; ++i)
            if (r.r[i] > 1) log_expect -= std::lgamma((double)r.r[i] + 1.0);
    } else {
        throw ValidationError("lambda_analytic: use lambda_empirical for the empirical mode");
    }
    double log_sum = log_expect + (double)w * std::log(gamma);
    if (w < N) log_sum += (double)(N - w) * std::log1p(-gamma);
    return std::exp(log_sum) / p;
}

double lambda_empirical(const FockCode& fc, const LossPattern& r, double gamma, double p) {
    double acc = 0.0;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < fc.classical.words.size(); ++i) {
        if (fc.partition.block_of[i] < 0) continue;
        acc += word_weight(fc.classical.words[i], r, gamma, p);
        ++count;
    }
    if (count == 0) throw ValidationError("lambda_empirical: no retained words");
    return acc / (double)count;
}

namespace {

double lambda_for(const FockCode& fc, const LossPattern& r, double gamma, double p,
                  LambdaMode mode) {
    return mode == LambdaMode::empirical_code_mean
               ? lambda_empirical(fc, r, gamma, p)
               : lambda_analytic(r, fc.shape(), gamma, p, mode);
}

void check_channel(const FockCode& fc, std::int64_t t, double gamma) {
    if (t < 0 || t > fc.shape().N)
        throw ValidationError("certify: t must be in [0, N]");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw ValidationError("certify: gamma must be in (0, 1]");
}

}  // namespace

DeviationStats deviation_stats(const FockCode& fc, std::int64_t t, double gamma,
                               LambdaMode mode, std::uint64_t pattern_cap) {
    check_channel(fc, t, gamma);
    const double p = bounds::p_loss(bounds::ChannelParams(gamma, fc.shape().N, t));
    const auto patterns = enumerate_patterns(fc.shape().q, t, pattern_cap);
    DeviationStats stats;
    double lambda_sum = 0.0, comp = 0.0;
    for (const auto& r : patterns) {
        const double lambda = lambda_for(fc, r, gamma, p, mode);
        for (int b = 0; b < fc.partition.K; ++b) {
            const double dev = std::abs(diag_expectation(fc, b, r, gamma, p) - lambda);
            stats.eps_max = std::max(stats.eps_max, dev);
        }
        const double y = lambda - comp;
        const double s = lambda_sum + y;
        comp = (s - lambda_sum) - y;
        lambda_sum = s;
        ++stats.patterns_enumerated;
    }
    stats.lambda_sum = lambda_sum;
    return stats;
}

CertReport certify(const FockCode& fc, std::int64_t t, double gamma, LambdaMode mode,
                   std::uint64_t pattern_cap) {
    check_channel(fc, t, gamma);
    CertReport report;
    report.K = fc.K();
    report.T = fc.T();
    report.q = fc.shape().q;
    report.N = fc.shape().N;
    report.t = t;
    report.gamma = gamma;
    report.M = pattern_count(fc.shape().q, t);
    report.lambda_mode = mode;
    report.discarded_words = fc.partition.discarded.size();

    report.orthogonality = orthogonality_check(fc, t);
    if (report.orthogonality.verdict == OrthoVerdict::failed)
        throw CertificationRefused("certify: orthogonality fails for t = " + std::to_string(t),
                                   report.orthogonality.witness->describe());
    if (report.M > BigUint(pattern_cap))
        throw CapExceeded("certify: " + report.M.to_string() +
                          " patterns exceed the cap; estimate_eps gives a non-certifying bound");

    const DeviationStats stats = deviation_stats(fc, t, gamma, mode, pattern_cap);
    report.eps_max = stats.eps_max;
    report.lambda_sum = stats.lambda_sum;
    report.patterns_enumerated = stats.patterns_enumerated;
    report.p_loss = bounds::p_loss(bounds::ChannelParams(gamma, fc.shape().N, t));
    report.eps_certified = std::sqrt((double)fc.K() * report.M.to_double() * stats.eps_max);
    report.eps_ad = bounds::eps_to_ad(std::min(report.eps_certified, 1.0), report.p_loss);
    return report;
}

EpsEstimate estimate_eps(const FockCode& fc, std::int64_t t, double gamma, LambdaMode mode,
                         std::uint64_t sample_count, std::uint64_t seed) {
    check_channel(fc, t, gamma);
    if (sample_count < 1) throw ValidationError("estimate_eps: sample_count must be >= 1");
    const double p = bounds::p_loss(bounds::ChannelParams(gamma, fc.shape().N, t));
    const BigUint m_big = pattern_count(fc.shape().q, t);
    if (!m_big.fits_u64())
        throw CapExceeded("estimate_eps: pattern count does not even fit 64 bits");
    const std::uint64_t m = m_big.to_u64();

    EpsEstimate est;
    est.exhaustive = sample_count >= m;
    rng::Stream stream(seed, 0);
    const std::uint64_t n_draws = est.exhaustive ? m : sample_count;
    for (std::uint64_t i = 0; i < n_draws; ++i) {
        const std::uint64_t idx = est.exhaustive ? i : stream.bounded(m);
        const LossPattern r = unrank_pattern(fc.shape().q, t, idx);
        const double lambda = lambda_for(fc, r, gamma, p, mode);
        for (int b = 0; b < fc.partition.K; ++b) {
            const double dev = std::abs(diag_expectation(fc, b, r, gamma, p) - lambda);
            est.eps_max_lower_bound = std::max(est.eps_max_lower_bound, dev);
        }
        ++est.patterns_sampled;
    }
    return est;
}

bool feasibility_check(std::uint64_t L, std::uint64_t K, const BigUint& M, double epsilon) {
    if (L < 1 || K < 1 || M.is_zero()) throw ValidationError("feasibility_check: all inputs positive");
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw ValidationError("feasibility_check: epsilon outside [0, 1)");
    const BigUint lhs = BigUint(K) * BigUint(K) * BigUint(K) * (M * M);
    if (epsilon == 0.0) return lhs <= BigUint(L);
    const long double log_lhs = lhs.log2l();
    const long double log_rhs = (long double)(1.0 - epsilon) * std::log2((long double)L);
    if (std::abs((double)(log_lhs - log_rhs)) > 1e-9)
        return log_lhs < log_rhs;
    // Too close to call in log arithmetic: compare lhs^'denominator' style is
    // unavailable for irrational exponents, so fall back to the tight side.
    return log_lhs <= log_rhs;
}

}  // namespace fsc::cert
