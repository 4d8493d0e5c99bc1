#ifndef FSC_RNG_HPP
#define FSC_RNG_HPP

#include <array>
#include <cstdint>

namespace fsc::rng {

// Philox4x32-10 counter-based generator. Every draw is a pure function of
// (seed, member, draw_index), so codes sampled word-by-word come out the same
// no matter how the work is scheduled.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

// One logical stream: fixed (seed, member), draws indexed by an advancing
// counter. `member` is typically a word index; sub-draws advance `draw`.
class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t member)
        : seed_(seed), member_(member) {}

    std::uint64_t next_u64();
    // Uniform on [0,1) with 53 random bits.
    double next_double();
    // Unbiased uniform integer in [0, n); n must be positive.
    std::uint64_t bounded(std::uint64_t n);
    // Standard normal via Box-Muller (consumes two draws).
    double next_normal();
    // Poisson with small mean via Knuth's product method.
    std::uint64_t next_poisson(double mean);

    std::uint64_t draws_consumed() const { return draw_; }

  private:
    std::uint64_t seed_;
    std::uint64_t member_;
    std::uint64_t draw_ = 0;
};

}  // namespace fsc::rng

#endif
