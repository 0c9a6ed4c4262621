#include "twitdyn/engine.hpp"

#include "parallel.hpp"
#include "twitdyn/errors.hpp"
#include "twitdyn/rng.hpp"

#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>

namespace twitdyn {

namespace {

constexpr int kNever = std::numeric_limits<int>::min() / 2;

} // namespace

SimulationWindow SimulationWindow::for_delta_t(int delta_t) {
    if (delta_t < 0 || delta_t > -kFirstDay)
        throw DomainError("delta_t must lie in [0, 7]");
    return SimulationWindow{-delta_t};
}

double ActivityProfile::total_activities() const noexcept {
    return std::accumulate(activities.begin(), activities.end(), 0.0);
}

Simulator::Simulator(const FollowNetwork& net) : net_(&net) {
    const std::size_t n = net.user_count();
    activeness_.resize(n);
    hesitancy_.resize(n);
    influence_.resize(n);
    followers_.resize(n);
    for (UserId u = 0; u < n; ++u) {
        const UserTraits t = user_traits(net, u);
        activeness_[u] = t.activeness;
        hesitancy_[u] = t.hesitancy;
        influence_[u] = t.influence;
        followers_[u] = static_cast<double>(t.f);
    }
}

ActivityProfile Simulator::run(const ModelParams& params, std::uint64_t seed) const {
    validate(params);
    const FollowNetwork& net = *net_;
    const std::size_t n = net.user_count();
    const SimulationWindow window = SimulationWindow::for_delta_t(params.delta_t);

    std::vector<Xoshiro256ss> streams;
    streams.reserve(n);
    for (UserId u = 0; u < n; ++u)
        streams.emplace_back(user_stream_seed(seed, net.external_id(u)));

    std::vector<int> last(n, kNever);
    std::vector<int> next_last(n, kNever);

    ActivityProfile profile;
    for (int day = window.start_offset; day <= kLastDay; ++day) {
        const double x = static_cast<double>(day);
        const double tau = interest(x, params.lambda);
        const double coverage = media_coverage(params, x);
        double activities = 0.0;
        double active_users = 0.0;

        for (UserId u = 0; u < n; ++u) {
            // Tweeting and retweeting share the same probability.
            const double act_prob = action_probability(params.sigma, tau, hesitancy_[u]);
            if (act_prob <= 0.0)
                continue;
            Xoshiro256ss& rng = streams[u];
            std::int64_t posts = 0;

            if (rng.bernoulli(activeness_[u] * coverage) && rng.bernoulli(act_prob))
                ++posts;

            const auto lead = net.leaders(u);
            if (!lead.empty()) {
                const int since = last[u];
                std::int64_t recent = 0;
                double mass = 0.0;
                for (UserId j : lead) {
                    if (last[j] > since) {
                        ++recent;
                        mass += followers_[j];
                    }
                }
                if (retweet_gate(mass, params.eta_star, influence_[u])) {
                    const std::int64_t nu =
                        retweet_count(recent, mass, params.eta_star, influence_[u]);
                    const double r = per_retweet_probability(act_prob, nu);
                    for (std::int64_t k = 0; k < nu; ++k)
                        posts += rng.bernoulli(r) ? 1 : 0;
                }
            }

            if (posts > 0) {
                next_last[u] = day;
                activities += static_cast<double>(posts);
                active_users += 1.0;
            }
        }
        last = next_last;
        profile.activities[day_index(day)] = activities;
        profile.distinct_users[day_index(day)] = active_users;
    }
    return profile;
}

ActivityProfile Simulator::run_ensemble(const ModelParams& params, std::uint64_t base_seed, int runs,
                                        int threads) const {
    if (runs < 1)
        throw DomainError("ensemble needs runs >= 1");
    validate(params);
    std::vector<ActivityProfile> per_run(static_cast<std::size_t>(runs));
    detail::parallel_for(per_run.size(), threads, [&](std::size_t r) {
        per_run[r] = run(params, base_seed + static_cast<std::uint64_t>(r));
    });

    // Reduce in run order so the result is independent of scheduling.
    ActivityProfile mean;
    for (const auto& p : per_run)
        for (std::size_t d = 0; d < kWindowDays; ++d) {
            mean.activities[d] += p.activities[d];
            mean.distinct_users[d] += p.distinct_users[d];
        }
    const double scale = static_cast<double>(runs);
    for (std::size_t d = 0; d < kWindowDays; ++d) {
        mean.activities[d] /= scale;
        mean.distinct_users[d] /= scale;
    }
    return mean;
}

ActivityProfile run_simulation(const FollowNetwork& net, const ModelParams& params,
                               std::uint64_t seed) {
    return Simulator(net).run(params, seed);
}

ActivityProfile run_ensemble(const FollowNetwork& net, const ModelParams& params,
                             std::uint64_t base_seed, int runs, int threads) {
    return Simulator(net).run_ensemble(params, base_seed, runs, threads);
}

void write_profile_csv(std::ostream& out, const ActivityProfile& profile) {
    out << "day,activities,distinct_users\n";
    char buf[96];
    for (std::size_t i = 0; i < kWindowDays; ++i) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", index_day(i), profile.activities[i],
                      profile.distinct_users[i]);
        out << buf;
    }
}

} // namespace twitdyn
