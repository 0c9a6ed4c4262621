#pragma once

#include "twitdyn/network.hpp"

#include <cstdint>
#include <functional>
#include <span>

namespace twitdyn {

/// Media coverage as a function of days since the peak. An empty function
/// means coverage is 1 on every simulated day.
using MediaCoverage = std::function<double(double)>;

struct ModelParams {
    double lambda = 0.0;   ///< decay rate of interest after the peak
    double eta_star = 1.0; ///< spreading threshold, in units of mean leader influence
    int delta_t = 0;       ///< days before the peak at which injection starts
    double sigma = 1.0;    ///< topic interest
    MediaCoverage media_coverage{};
};

/// Throws DomainError unless lambda >= 0, eta_star >= 1, 0 <= delta_t <= 7,
/// 0 <= sigma <= 1, all finite.
void validate(const ModelParams& params);

/// Static per-user quantities derived from the network.
struct UserTraits {
    std::int64_t f = 0;
    std::int64_t l = 0;
    double activeness = 0.0;
    double hesitancy = 1.0;
    double influence = 0.0;
};

/// (f / f_max) * (1 - l / (l_max + f)). Throws DomainError if f_max == 0.
double activeness(std::int64_t f, std::int64_t l, std::int64_t f_max, std::int64_t l_max);

/// 1 / (l + f + 1).
double hesitancy(std::int64_t l, std::int64_t f);

/// Level of interest: 1 up to the peak, exp(-lambda x) after it.
double interest(double days_since_peak, double lambda);

double media_coverage(const ModelParams& params, double days_since_peak);

/// activeness * coverage(x).
double exposure_probability(double activeness, double days_since_peak, const ModelParams& params);

/// sigma * tau - hesitancy clamped to [0, 1]. Shared by tweeting and retweeting.
double action_probability(double sigma, double tau, double hesitancy);

/// Sum of follower counts over `recently_active_leaders`.
/// Throws ContractViolation if any id is not a leader of `user`.
double exposure_mass(const FollowNetwork& net, UserId user,
                     std::span<const UserId> recently_active_leaders);

/// y >= eta_star * influence, and y > 0.
bool retweet_gate(double y, double eta_star, double influence);

/// floor(sqrt((eta_i / eta_star) * (y / (eta_star * influence)))), at least 1.
/// Returns 1 when influence is 0.
std::int64_t retweet_count(std::int64_t eta_i, double y, double eta_star, double influence);

/// Per-trial probability r such that n independent trials give at least one
/// success with probability r_total: 1 - (1 - r_total)^(1/n).
double per_retweet_probability(double r_total, std::int64_t n);

/// Computes the traits of one user. Users of a network without followers
/// (f_max == 0) have zero activeness.
UserTraits user_traits(const FollowNetwork& net, UserId user);

} // namespace twitdyn
