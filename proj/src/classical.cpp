#include "fsc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fsc/errors.hpp"
#include "fsc/rng.hpp"

namespace fsc {

std::string to_string(EnsembleTag tag) {
    switch (tag) {
        case EnsembleTag::uniform: return "uniform";
        case EnsembleTag::multinomial: return "multinomial";
        case EnsembleTag::greedy_gv: return "greedy_gv";
        case EnsembleTag::explicit_words: return "explicit";
    }
    throw ValidationError("unknown ensemble tag");
}

EnsembleTag ensemble_from_string(const std::string& s) {
    if (s == "uniform") return EnsembleTag::uniform;
    if (s == "multinomial") return EnsembleTag::multinomial;
    if (s == "greedy_gv") return EnsembleTag::greedy_gv;
    if (s == "explicit") return EnsembleTag::explicit_words;
    throw ValidationError("unknown ensemble '" + s + "'");
}

TypicalityParams::TypicalityParams(double alpha_, double eps_, double xi_)
    : alpha(alpha_), eps(eps_), xi(xi_) {
    if (!(alpha > 0.0)) throw ValidationError("TypicalityParams: alpha must be > 0");
    if (!(eps > 0.0)) throw ValidationError("TypicalityParams: eps must be > 0");
    if (!(xi > 0.0 && xi < 0.5)) throw ValidationError("TypicalityParams: xi outside (0, 1/2)");
}

double TypicalityParams::inf_norm_cap(std::int64_t N) const {
    return (1.0 + eps) * std::log((double)N) / std::log(1.0 + alpha);
}

namespace {

SimplexPoint uniform_point(const SimplexShape& shape, rng::Stream& stream) {
    const int q = shape.q;
    if (q == 1) return SimplexPoint::make({(std::int32_t)shape.N});
    // Balls-and-bins: q-1 distinct separators in {1, ..., N+q-1}, gaps are
    // the occupancies. Floyd's sampler keeps the draw count at q-1 expected.
    const std::uint64_t n = (std::uint64_t)shape.N + q - 1;
    const std::uint64_t k = (std::uint64_t)q - 1;
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(k * 2);
    for (std::uint64_t j = n - k + 1; j <= n; ++j) {
        const std::uint64_t r = stream.bounded(j) + 1;
        if (!chosen.insert(r).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> seps(chosen.begin(), chosen.end());
    std::sort(seps.begin(), seps.end());
    std::vector<std::int32_t> coords(q);
    coords[0] = (std::int32_t)(seps[0] - 1);
    for (std::size_t i = 1; i < k; ++i)
        coords[i] = (std::int32_t)(seps[i] - seps[i - 1] - 1);
    coords[q - 1] = (std::int32_t)(n - seps[k - 1]);
    return SimplexPoint::make(std::move(coords));
}

SimplexPoint multinomial_point(const SimplexShape& shape, rng::Stream& stream) {
    std::vector<std::int32_t> coords(shape.q, 0);
    for (std::int64_t ball = 0; ball < shape.N; ++ball)
        coords[stream.bounded((std::uint64_t)shape.q)] += 1;
    return SimplexPoint::make(std::move(coords));
}

}  // namespace

ClassicalCode sample_uniform(const SimplexShape& shape, std::size_t L, std::uint64_t seed) {
    if (L < 1) throw ValidationError("sample_uniform: L must be >= 1");
    ClassicalCode code;
    code.shape = shape;
    code.ensemble = EnsembleTag::uniform;
    code.seed = seed;
    code.words.reserve(L);
    for (std::size_t w = 0; w < L; ++w) {
        rng::Stream stream(seed, w);
        code.words.push_back(uniform_point(shape, stream));
    }
    return code;
}

ClassicalCode sample_multinomial(const SimplexShape& shape, std::size_t L, std::uint64_t seed) {
    if (L < 1) throw ValidationError("sample_multinomial: L must be >= 1");
    ClassicalCode code;
    code.shape = shape;
    code.ensemble = EnsembleTag::multinomial;
    code.seed = seed;
    code.words.reserve(L);
    for (std::size_t w = 0; w < L; ++w) {
        rng::Stream stream(seed, w);
        code.words.push_back(multinomial_point(shape, stream));
    }
    return code;
}

std::int64_t min_distance(const ClassicalCode& code) {
    if (code.words.size() < 2) throw ValidationError("min_distance: needs at least 2 words");
    std::int64_t best = code.shape.N;
    for (std::size_t i = 0; i + 1 < code.words.size(); ++i) {
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            best = std::min(best, l1_distance(code.words[i], code.words[j]));
            if (best == 0) return 0;
        }
    }
    return best;
}

bool typicality_check(const SimplexPoint& p, const TypicalityParams& params) {
    const std::int64_t N = p.total();
    if (N < 2) throw ValidationError("typicality_check: N must be >= 2");
    if ((double)inf_norm(p) > params.inf_norm_cap(N)) return false;
    const double frac = (double)support_size(p) / (double)N;
    const double center = params.alpha / (1.0 + params.alpha);
    const double window = std::pow((double)N, -0.5 + params.xi);
    return std::abs(frac - center) <= window;
}

ClassicalCode greedy_gv(const SimplexShape& shape, std::int64_t t,
                        const std::optional<TypicalityParams>& params,
                        std::optional<std::uint64_t> order_seed, std::uint64_t cap) {
    if (t < 1) throw ValidationError("greedy_gv: t must be >= 1");
    std::vector<SimplexPoint> candidates;
    try {
        enumerate_simplex(shape, [&](const SimplexPoint& p) {
            if (!params || typicality_check(p, *params)) candidates.push_back(p);
        }, cap);
    } catch (const CapExceeded& e) {
        throw CapExceeded(std::string(e.what()) +
                          " (use the random ensembles or the sampled greedy instead)");
    }
    if (order_seed) {
        rng::Stream stream(*order_seed, 0);
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[stream.bounded(i)]);
    }
    ClassicalCode code;
    code.shape = shape;
    code.ensemble = EnsembleTag::greedy_gv;
    code.seed = order_seed;
    code.claimed_distance = t;
    for (const auto& p : candidates) {
        bool far = true;
        for (const auto& w : code.words) {
            if (l1_distance(p, w) < t) {
                far = false;
                break;
            }
        }
        if (far) code.words.push_back(p);
    }
    return code;
}

ClassicalCode greedy_gv_sampled(const SimplexShape& shape, std::int64_t t,
                                const TypicalityParams& params, std::uint64_t seed,
                                std::size_t proposals, std::size_t max_words) {
    if (t < 1) throw ValidationError("greedy_gv_sampled: t must be >= 1");
    if (max_words < 1) throw ValidationError("greedy_gv_sampled: max_words must be >= 1");
    ClassicalCode code;
    code.shape = shape;
    code.ensemble = EnsembleTag::greedy_gv;
    code.seed = seed;
    code.claimed_distance = t;
    for (std::size_t w = 0; w < proposals && code.words.size() < max_words; ++w) {
        rng::Stream stream(seed, w);
        SimplexPoint p = uniform_point(shape, stream);
        if (!typicality_check(p, params)) continue;
        bool far = true;
        for (const auto& accepted : code.words) {
            if (l1_distance(p, accepted) < t) {
                far = false;
                break;
            }
        }
        if (far) code.words.push_back(std::move(p));
    }
    return code;
}

OccupancyStats occupancy_stats(const ClassicalCode& code, std::int32_t B) {
    if (code.words.empty()) throw ValidationError("occupancy_stats: code is empty");
    OccupancyStats stats;
    double support_acc = 0.0;
    std::size_t exceeding = 0;
    for (const auto& w : code.words) {
        const std::int32_t norm = inf_norm(w);
        stats.max_inf_norm = std::max(stats.max_inf_norm, norm);
        support_acc += (double)support_size(w) / (double)code.shape.q;
        if (norm > B) ++exceeding;
    }
    stats.mean_support_fraction = support_acc / (double)code.words.size();
    stats.fraction_exceeding = (double)exceeding / (double)code.words.size();
    return stats;
}

PairwiseDistanceStats pairwise_distance_stats(const ClassicalCode& code) {
    if (code.words.size() < 2)
        throw ValidationError("pairwise_distance_stats: needs at least 2 words");
    PairwiseDistanceStats stats;
    stats.min = code.shape.N;
    stats.max = 0;
    double acc = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i + 1 < code.words.size(); ++i) {
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            const std::int64_t d = l1_distance(code.words[i], code.words[j]);
            stats.min = std::min(stats.min, d);
            stats.max = std::max(stats.max, d);
            acc += (double)d;
            ++pairs;
        }
    }
    stats.mean = acc / (double)pairs;
    stats.normalized_mean = code.shape.N > 0 ? stats.mean / (double)code.shape.N : 0.0;
    return stats;
}

}  // namespace fsc
