#pragma once

#include <cstdint>

namespace twitdyn {

/// SplitMix64 output function (Steele, Lea, Flood 2014). Bijective on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Advances a SplitMix64 state and returns the next output.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    state += 0x9e3779b97f4a7c15ULL;
    return mix64(state);
}

/// xoshiro256** 1.0 (Blackman, Vigna). The four state words are filled from a
/// SplitMix64 sequence started at `seed`, the usual xoshiro seeding.
///
/// This is the only generator used by the library, so results are
/// bit-identical across compilers and standard libraries.
class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed = 0) noexcept;

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// One Bernoulli draw. Consumes a number only when 0 < p < 1.
    bool bernoulli(double p) noexcept {
        if (p <= 0.0)
            return false;
        if (p >= 1.0)
            return true;
        return uniform() < p;
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/// Seed of the stream owned by one user within one run:
/// mix64(run_seed ^ mix64(user_key + 0x9e3779b97f4a7c15)).
/// `user_key` is the user's external id, so relabelling users does not
/// change the numbers any user sees.
constexpr std::uint64_t user_stream_seed(std::uint64_t run_seed, std::uint64_t user_key) noexcept {
    return mix64(run_seed ^ mix64(user_key + 0x9e3779b97f4a7c15ULL));
}

} // namespace twitdyn
