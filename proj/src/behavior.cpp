#include "twitdyn/behavior.hpp"

#include "twitdyn/errors.hpp"

#include <algorithm>
#include <cmath>

namespace twitdyn {

void validate(const ModelParams& p) {
    if (!std::isfinite(p.lambda) || p.lambda < 0.0)
        throw DomainError("lambda must be finite and >= 0");
    if (!std::isfinite(p.eta_star) || p.eta_star < 1.0)
        throw DomainError("eta_star must be finite and >= 1");
    if (p.delta_t < 0 || p.delta_t > 7)
        throw DomainError("delta_t must lie in [0, 7]");
    if (!(p.sigma >= 0.0 && p.sigma <= 1.0))
        throw DomainError("sigma must lie in [0, 1]");
}

double activeness(std::int64_t f, std::int64_t l, std::int64_t f_max, std::int64_t l_max) {
    if (f_max <= 0)
        throw DomainError("activeness needs f_max >= 1");
    const double followers = static_cast<double>(f) / static_cast<double>(f_max);
    const std::int64_t denom = l_max + f;
    const double reliance =
        denom == 0 ? 1.0 : 1.0 - static_cast<double>(l) / static_cast<double>(denom);
    return followers * reliance;
}

double hesitancy(std::int64_t l, std::int64_t f) { return 1.0 / static_cast<double>(l + f + 1); }

double interest(double x, double lambda) { return x <= 0.0 ? 1.0 : std::exp(-lambda * x); }

double media_coverage(const ModelParams& params, double x) {
    return params.media_coverage ? params.media_coverage(x) : 1.0;
}

double exposure_probability(double a, double x, const ModelParams& params) {
    return a * media_coverage(params, x);
}

double action_probability(double sigma, double tau, double hes) {
    return std::clamp(sigma * tau - hes, 0.0, 1.0);
}

double exposure_mass(const FollowNetwork& net, UserId user,
                     std::span<const UserId> recently_active_leaders) {
    std::int64_t mass = 0;
    for (UserId j : recently_active_leaders) {
        if (!net.is_leader_of(user, j))
            throw ContractViolation("user " + std::to_string(j) + " is not a leader of user " +
                                    std::to_string(user));
        mass += net.follower_count(j);
    }
    return static_cast<double>(mass);
}

bool retweet_gate(double y, double eta_star, double influence) {
    return y > 0.0 && y >= eta_star * influence;
}

std::int64_t retweet_count(std::int64_t eta_i, double y, double eta_star, double influence) {
    if (influence <= 0.0)
        return 1;
    const double ratio = (static_cast<double>(eta_i) / eta_star) * (y / (eta_star * influence));
    const auto n = static_cast<std::int64_t>(std::floor(std::sqrt(ratio)));
    return std::max<std::int64_t>(n, 1);
}

double per_retweet_probability(double r_total, std::int64_t n) {
    if (n <= 1 || r_total <= 0.0)
        return std::max(r_total, 0.0);
    if (r_total >= 1.0)
        return 1.0;
    return -std::expm1(std::log1p(-r_total) / static_cast<double>(n));
}

UserTraits user_traits(const FollowNetwork& net, UserId user) {
    UserTraits t;
    t.f = net.follower_count(user);
    t.l = net.leader_count(user);
    t.activeness = net.f_max() > 0 ? activeness(t.f, t.l, net.f_max(), net.l_max()) : 0.0;
    t.hesitancy = hesitancy(t.l, t.f);
    t.influence = net.influence(user);
    return t;
}

} // namespace twitdyn
