#pragma once

#include "twitdyn/behavior.hpp"
#include "twitdyn/network.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace twitdyn {

inline constexpr int kFirstDay = -7;
inline constexpr int kLastDay = 7;
inline constexpr std::size_t kWindowDays = 15;
inline constexpr std::size_t kPeakIndex = 7;

constexpr std::size_t day_index(int day) noexcept { return static_cast<std::size_t>(day - kFirstDay); }
constexpr int index_day(std::size_t index) noexcept { return static_cast<int>(index) + kFirstDay; }

/// The 15 simulated days -7..7 around the peak, and the first day on which
/// anything can happen.
struct SimulationWindow {
    int start_offset = 0;

    static SimulationWindow for_delta_t(int delta_t);
    static constexpr std::array<int, kWindowDays> days() noexcept {
        std::array<int, kWindowDays> d{};
        for (std::size_t i = 0; i < kWindowDays; ++i)
            d[i] = index_day(i);
        return d;
    }
};

using DaySeries = std::array<double, kWindowDays>;

/// Per-day activities (originals + retweets) and distinct active users.
/// Integral for single runs, ensemble means otherwise.
struct ActivityProfile {
    DaySeries activities{};
    DaySeries distinct_users{};
    static constexpr std::size_t peak_offset_index = kPeakIndex;

    double total_activities() const noexcept;
    bool operator==(const ActivityProfile&) const = default;
};

/// Runs the day-by-day model over a fixed network.
///
/// Every day d in [-delta_t, 7] each user is updated from the state at the
/// end of day d-1 only:
///  1. exposure with probability activeness * coverage(d); if exposed, one
///     original tweet with probability clamp(sigma * tau(d) - hesitancy);
///  2. leaders whose last activity day lies in (own last activity, d) form
///     the recent set; if their follower mass passes the retweet gate, nu
///     Bernoulli(r) retweets are drawn, with r chosen so that at least one
///     retweet happens with probability clamp(sigma * tau(d) - hesitancy);
///  3. any activity sets the user's last activity day to d.
///
/// Each user draws from a private xoshiro256** stream seeded by
/// user_stream_seed(seed, external id), so results do not depend on the
/// order users are visited in or on threading.
class Simulator {
  public:
    explicit Simulator(const FollowNetwork& net);

    ActivityProfile run(const ModelParams& params, std::uint64_t seed) const;

    /// Mean over runs with seeds base_seed + 0 .. base_seed + runs - 1.
    ActivityProfile run_ensemble(const ModelParams& params, std::uint64_t base_seed, int runs,
                                 int threads = 1) const;

    const FollowNetwork& network() const noexcept { return *net_; }

  private:
    const FollowNetwork* net_;
    std::vector<double> activeness_;
    std::vector<double> hesitancy_;
    std::vector<double> influence_;
    std::vector<double> followers_;
};

ActivityProfile run_simulation(const FollowNetwork& net, const ModelParams& params,
                               std::uint64_t seed);

ActivityProfile run_ensemble(const FollowNetwork& net, const ModelParams& params,
                             std::uint64_t base_seed, int runs, int threads = 1);

/// "day,activities,distinct_users" followed by 15 rows, day -7..7.
void write_profile_csv(std::ostream& out, const ActivityProfile& profile);

} // namespace twitdyn
