#include "twitdyn/rng.hpp"

namespace twitdyn {

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : s_)
        word = splitmix64(sm);
}

} // namespace twitdyn
