#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "fsc/bounds.hpp"
#include "fsc/classical.hpp"
#include "fsc/errors.hpp"

using namespace fsc;

namespace {

// Independent second implementation for cross-checking min_distance.
std::int64_t min_distance_oracle(const ClassicalCode& code) {
    std::int64_t best = code.shape.N;
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        for (std::size_t j = 0; j < code.words.size(); ++j) {
            if (i == j) continue;
            std::int64_t acc = 0;
            for (int m = 0; m < code.shape.q; ++m)
                acc += std::abs((std::int64_t)code.words[i][(std::size_t)m] -
                                (std::int64_t)code.words[j][(std::size_t)m]);
            best = std::min(best, acc / 2);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("samplers are deterministic in (shape, L, seed)") {
    const SimplexShape shape(6, 6);
    const auto a = sample_uniform(shape, 32, 7);
    const auto b = sample_uniform(shape, 32, 7);
    REQUIRE(a.words.size() == b.words.size());
    for (std::size_t i = 0; i < a.words.size(); ++i) CHECK(a.words[i] == b.words[i]);

    const auto c = sample_multinomial(shape, 32, 7);
    const auto d = sample_multinomial(shape, 32, 7);
    for (std::size_t i = 0; i < c.words.size(); ++i) CHECK(c.words[i] == d.words[i]);

    const auto e = sample_uniform(shape, 32, 8);
    bool same = true;
    for (std::size_t i = 0; i < a.words.size(); ++i)
        if (!(a.words[i] == e.words[i])) same = false;
    CHECK_FALSE(same);
}

TEST_CASE("sampler outputs satisfy the point invariants") {
    for (const auto& code : {sample_uniform(SimplexShape(5, 9), 64, 1),
                             sample_multinomial(SimplexShape(5, 9), 64, 1)}) {
        for (const auto& w : code.words) {
            CHECK(w.q() == 5);
            CHECK(w.total() == 9);
        }
    }
}

TEST_CASE("uniform sampler hits the exact uniform law on two points") {
    const auto code = sample_uniform(SimplexShape(2, 1), 40000, 3);
    std::size_t first = 0;
    for (const auto& w : code.words)
        if (w[0] == 1) ++first;
    const double sigma = std::sqrt(40000.0 * 0.25);
    CHECK(std::abs((double)first - 20000.0) <= 3.0 * sigma);
}

TEST_CASE("uniform sampler is uniform across a six-point simplex") {
    const auto code = sample_uniform(SimplexShape(3, 2), 60000, 5);
    std::map<std::vector<std::int32_t>, int> counts;
    for (const auto& w : code.words) counts[w.coords()]++;
    CHECK(counts.size() == 6);
    const double expect = 10000.0;
    const double sigma = std::sqrt(60000.0 * (1.0 / 6.0) * (5.0 / 6.0));
    for (const auto& [k, v] : counts) CHECK(std::abs((double)v - expect) <= 3.0 * sigma);
}

TEST_CASE("multinomial degenerate shapes") {
    const auto one_mode = sample_multinomial(SimplexShape(1, 7), 10, 2);
    for (const auto& w : one_mode.words) CHECK(w.coords() == std::vector<std::int32_t>{7});

    const auto one_ball = sample_multinomial(SimplexShape(4, 1), 50, 2);
    for (const auto& w : one_ball.words) {
        CHECK(inf_norm(w) == 1);
        CHECK(support_size(w) == 1);
    }
}

TEST_CASE("multinomial marginal mean at q = 2") {
    const int N = 64, L = 20000;
    const auto code = sample_multinomial(SimplexShape(2, N), L, 11);
    double acc = 0.0;
    for (const auto& w : code.words) acc += w[0];
    const double mean = acc / L;
    const double sigma = std::sqrt((double)N * 0.25 / L);
    CHECK(std::abs(mean - N / 2.0) <= 3.0 * sigma);
}

TEST_CASE("min_distance examples and oracle") {
    ClassicalCode two;
    two.shape = SimplexShape(2, 3);
    two.words = {SimplexPoint::make({3, 0}), SimplexPoint::make({0, 3})};
    CHECK(min_distance(two) == 3);

    ClassicalCode dup;
    dup.shape = SimplexShape(2, 3);
    dup.words = {SimplexPoint::make({2, 1}), SimplexPoint::make({2, 1})};
    CHECK(min_distance(dup) == 0);

    ClassicalCode single;
    single.shape = SimplexShape(2, 3);
    single.words = {SimplexPoint::make({3, 0})};
    CHECK_THROWS_AS(min_distance(single), ValidationError);

    const auto random = sample_uniform(SimplexShape(3, 4), 100, 21);
    CHECK(min_distance(random) == min_distance_oracle(random));
}

TEST_CASE("adding words never increases the distance") {
    auto code = sample_uniform(SimplexShape(3, 5), 10, 31);
    std::int64_t prev = min_distance(code);
    const auto extra = sample_uniform(SimplexShape(3, 5), 30, 32);
    for (const auto& w : extra.words) {
        code.words.push_back(w);
        const std::int64_t d = min_distance(code);
        CHECK(d <= prev);
        prev = d;
    }
}

TEST_CASE("typicality check") {
    // All mass on one mode: the inf-norm cap kills it.
    std::vector<std::int32_t> spike(8, 0);
    spike[0] = 100;
    CHECK_FALSE(typicality_check(SimplexPoint::make(spike), TypicalityParams(1.0, 1.0, 0.25)));

    // A constructed typical point: support floor(N*alpha/(1+alpha)), entries <= cap.
    const int N = 100;
    const TypicalityParams params(1.0, 1.0, 0.25);
    std::vector<std::int32_t> flat(100, 0);
    for (int i = 0; i < 50; ++i) flat[(std::size_t)i] = 2;
    CHECK(typicality_check(SimplexPoint::make(flat), params));

    CHECK_THROWS_AS(typicality_check(SimplexPoint::make({1, 0}), params), ValidationError);
    (void)N;
}

TEST_CASE("most uniform samples are typical at alpha = 1") {
    const int N = 10000;
    const auto code = sample_uniform(SimplexShape(N, N), 200, 17);
    const TypicalityParams params(1.0, 1.0, 0.25);
    std::size_t pass = 0;
    for (const auto& w : code.words)
        if (typicality_check(w, params)) ++pass;
    CHECK((double)pass / 200.0 >= 0.9);
}

TEST_CASE("greedy on the 3-point simplex") {
    // Default scan order accepts (0,2) then (2,0); (1,1) is within distance 1
    // of both, so it can never join a 2-word code.
    const auto code = greedy_gv(SimplexShape(2, 2), 2, std::nullopt, std::nullopt);
    REQUIRE(code.words.size() == 2);
    CHECK(code.words[0].coords() == std::vector<std::int32_t>{0, 2});
    CHECK(code.words[1].coords() == std::vector<std::int32_t>{2, 0});

    // Any scan order yields a maximal code: either both extremes or the center.
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto c = greedy_gv(SimplexShape(2, 2), 2, std::nullopt, seed);
        const bool extremes = c.words.size() == 2;
        const bool center = c.words.size() == 1 &&
                            c.words[0].coords() == std::vector<std::int32_t>{1, 1};
        CHECK((extremes || center));
    }
}

TEST_CASE("greedy output is pairwise separated, typical, and maximal") {
    const SimplexShape shape(3, 9);
    const TypicalityParams params(0.34, 2.5, 0.45);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto code = greedy_gv(shape, 3, params, seed);
        REQUIRE(code.words.size() >= 1);
        if (code.words.size() >= 2) CHECK(min_distance(code) >= 3);
        for (const auto& w : code.words) CHECK(typicality_check(w, params));
        // Maximality: every typical point sits within distance t-1 of the code.
        enumerate_simplex(shape, [&](const SimplexPoint& p) {
            if (!typicality_check(p, params)) return;
            bool covered = false;
            for (const auto& w : code.words)
                if (l1_distance(p, w) < 3 || p == w) covered = true;
            CHECK(covered);
        });
    }
}

TEST_CASE("greedy with t = 1 returns every typical point") {
    const auto all = greedy_gv(SimplexShape(3, 4), 1, std::nullopt, std::nullopt);
    CHECK(all.words.size() == simplex_size(SimplexShape(3, 4)).to_u64());
}

TEST_CASE("greedy size respects the counting bound") {
    const SimplexShape shape(3, 8);
    const auto code = greedy_gv(shape, 3, std::nullopt, std::nullopt);
    // |code| * max ball bound >= |simplex| since the scan is maximal.
    BigUint max_ball;
    enumerate_simplex(shape, [&](const SimplexPoint& p) {
        const BigUint b = ball_volume_bound(p, 2);
        if (b > max_ball) max_ball = b;
    });
    BigUint lhs(code.words.size());
    CHECK(lhs * max_ball >= simplex_size(shape));
}

TEST_CASE("greedy cap refusal") {
    CHECK_THROWS_AS(greedy_gv(SimplexShape(20, 40), 3, std::nullopt, std::nullopt, 100000),
                    CapExceeded);
}

TEST_CASE("sampled greedy fallback") {
    const SimplexShape shape(40, 40);
    const TypicalityParams params(1.0, 1.5, 0.33);
    const auto code = greedy_gv_sampled(shape, 6, params, 9, 4000, 32);
    CHECK(code.words.size() >= 2);
    CHECK(min_distance(code) >= 6);
    for (const auto& w : code.words) CHECK(typicality_check(w, params));
}

TEST_CASE("occupancy stats") {
    ClassicalCode code;
    code.shape = SimplexShape(4, 4);
    code.words = {SimplexPoint::make({1, 1, 1, 1})};
    const auto stats = occupancy_stats(code, 3);
    CHECK(stats.max_inf_norm == 1);
    CHECK(stats.mean_support_fraction == 1.0);
    CHECK(stats.fraction_exceeding == 0.0);

    code.words.push_back(SimplexPoint::make({4, 0, 0, 0}));
    const auto stats2 = occupancy_stats(code, 3);
    CHECK(stats2.max_inf_norm == 4);
    CHECK(stats2.fraction_exceeding == 0.5);

    // The greedy filter enforces the inf-norm cap by construction.
    const TypicalityParams params(0.34, 2.5, 0.45);
    const auto greedy = greedy_gv(SimplexShape(3, 9), 2, params, std::nullopt);
    const auto gs = occupancy_stats(greedy, 100);
    CHECK((double)gs.max_inf_norm <= params.inf_norm_cap(9));
}

TEST_CASE("pairwise distance stats") {
    ClassicalCode code;
    code.shape = SimplexShape(2, 3);
    code.words = {SimplexPoint::make({2, 1}), SimplexPoint::make({2, 1})};
    const auto same = pairwise_distance_stats(code);
    CHECK(same.mean == 0.0);
    CHECK(same.min == 0);

    code.words = {SimplexPoint::make({3, 0}), SimplexPoint::make({0, 3})};
    const auto far = pairwise_distance_stats(code);
    CHECK(far.mean == 3.0);
    CHECK(far.max == 3);
    CHECK(far.normalized_mean == 1.0);
}

TEST_CASE("multinomial mean pairwise distance approaches the Bessel constant") {
    const int N = 300;
    const auto code = sample_multinomial(SimplexShape(N, N), 200, 23);
    const auto stats = pairwise_distance_stats(code);
    CHECK(std::abs(stats.normalized_mean - bounds::delta_alpha_bessel(1.0)) <= 0.02);
}
