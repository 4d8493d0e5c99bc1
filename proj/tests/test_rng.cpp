#include <doctest.h>

#include <cmath>
#include <vector>

#include "fsc/rng.hpp"

using fsc::rng::Stream;

TEST_CASE("philox4x32-10 known answers") {
    // Reference vectors from the Random123 test suite.
    auto zeros = fsc::rng::philox4x32({0, 0, 0, 0}, {0, 0});
    CHECK(zeros[0] == 0x6627e8d5u);
    CHECK(zeros[1] == 0xe169c58du);
    CHECK(zeros[2] == 0xbc57ac4cu);
    CHECK(zeros[3] == 0x9b00dbd8u);

    auto ones = fsc::rng::philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                     {0xffffffffu, 0xffffffffu});
    CHECK(ones[0] == 0x408f276du);
    CHECK(ones[1] == 0x41c83b0eu);
    CHECK(ones[2] == 0xa20bc7c6u);
    CHECK(ones[3] == 0x6d5451fdu);

    auto pi = fsc::rng::philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                   {0xa4093822u, 0x299f31d0u});
    CHECK(pi[0] == 0xd16cfe09u);
    CHECK(pi[1] == 0x94fdccebu);
    CHECK(pi[2] == 0x5001e420u);
    CHECK(pi[3] == 0x24126ea1u);
}

TEST_CASE("streams are pure functions of (seed, member, draw)") {
    Stream a(42, 7), b(42, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Stream c(42, 8);
    Stream d(43, 7);
    Stream e(42, 7);
    bool all_equal_c = true, all_equal_d = true;
    for (int i = 0; i < 16; ++i) {
        const std::uint64_t base = e.next_u64();
        if (c.next_u64() != base) all_equal_c = false;
        if (d.next_u64() != base) all_equal_d = false;
    }
    CHECK_FALSE(all_equal_c);
    CHECK_FALSE(all_equal_d);
}

TEST_CASE("next_double lands in [0,1)") {
    Stream s(1, 0);
    for (int i = 0; i < 10000; ++i) {
        const double u = s.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("bounded draws are uniform within 3 sigma") {
    Stream s(2024, 0);
    const int n = 6;
    const int draws = 60000;
    std::vector<int> counts(n, 0);
    for (int i = 0; i < draws; ++i) counts[(std::size_t)s.bounded(n)]++;
    const double expect = (double)draws / n;
    const double sigma = std::sqrt((double)draws * (1.0 / n) * (1.0 - 1.0 / n));
    for (int c : counts) CHECK(std::abs((double)c - expect) <= 3.0 * sigma);
}

TEST_CASE("bounded rejects zero") {
    Stream s(0, 0);
    CHECK_THROWS(s.bounded(0));
}

TEST_CASE("normal moments") {
    Stream s(5, 1);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = s.next_normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sum2 / n - 1.0) < 0.02);
}

TEST_CASE("poisson mean") {
    Stream s(6, 2);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += (double)s.next_poisson(1.0);
    CHECK(std::abs(sum / n - 1.0) < 0.02);
}
