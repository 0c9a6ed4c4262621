#include "twitdyn/fitter.hpp"

#include "parallel.hpp"
#include "twitdyn/errors.hpp"
#include "twitdyn/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace twitdyn {

std::vector<double> make_axis(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw DomainError("axis bounds must be finite");
    if (step <= 0.0)
        throw DomainError("axis step must be > 0");
    if (stop < start)
        throw DomainError("axis stop must be >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> axis;
    axis.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double v = start + static_cast<double>(k) * step;
        axis.push_back(std::round(v * 1e9) / 1e9);
    }
    return axis;
}

GridSpec GridSpec::defaults() {
    GridSpec g;
    g.lambda_axis = make_axis(0.0, 4.0, 0.1);
    g.eta_axis = make_axis(1.0, 60.0, 1.0);
    for (int dt = 0; dt <= 7; ++dt)
        g.dt_axis.push_back(dt);
    g.runs = 50;
    return g;
}

ModelParams GridSpec::at(std::size_t index) const {
    const std::size_t nl = lambda_axis.size();
    const std::size_t ne = eta_axis.size();
    ModelParams p;
    p.lambda = lambda_axis[index % nl];
    p.eta_star = eta_axis[(index / nl) % ne];
    p.delta_t = dt_axis[index / (nl * ne)];
    return p;
}

namespace {

template <class T>
void check_ascending(const std::vector<T>& axis, const char* name) {
    if (axis.empty())
        throw DomainError(std::string(name) + " axis is empty");
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (!(axis[i - 1] < axis[i]))
            throw DomainError(std::string(name) + " axis must be strictly ascending");
}

double parse_number(std::string_view text, std::string_view item) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw DomainError("bad number '" + std::string(text) + "' in grid item '" +
                          std::string(item) + "'");
    return v;
}

} // namespace

void GridSpec::validate() const {
    check_ascending(lambda_axis, "lambda");
    check_ascending(eta_axis, "eta");
    check_ascending(dt_axis, "dt");
    if (lambda_axis.front() < 0.0)
        throw DomainError("lambda axis must be >= 0");
    if (eta_axis.front() < 1.0)
        throw DomainError("eta axis must be >= 1");
    if (dt_axis.front() < 0 || dt_axis.back() > 7)
        throw DomainError("dt axis must lie in [0, 7]");
    if (runs < 1)
        throw DomainError("runs must be >= 1");
}

GridSpec parse_grid(std::string_view text, const GridSpec& base) {
    GridSpec grid = base;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text.remove_prefix(comma == std::string_view::npos ? text.size() : comma + 1);
        if (item.empty())
            continue;

        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw DomainError("grid item '" + std::string(item) + "' lacks '='");
        const std::string_view key = item.substr(0, eq);
        std::string_view range = item.substr(eq + 1);

        double bounds[3] = {0.0, 0.0, 1.0};
        int parts = 0;
        while (parts < 3) {
            const auto colon = range.find(':');
            bounds[parts++] = parse_number(range.substr(0, colon), item);
            if (colon == std::string_view::npos)
                break;
            range.remove_prefix(colon + 1);
            if (parts == 3)
                throw DomainError("grid item '" + std::string(item) + "' has too many fields");
        }
        if (parts == 1)
            bounds[1] = bounds[0];
        const auto axis = make_axis(bounds[0], bounds[1], bounds[2]);

        if (key == "lambda") {
            grid.lambda_axis = axis;
        } else if (key == "eta" || key == "eta_star") {
            grid.eta_axis = axis;
        } else if (key == "dt" || key == "delta_t") {
            grid.dt_axis.clear();
            for (double v : axis) {
                if (v != std::round(v))
                    throw DomainError("dt axis must be integral");
                grid.dt_axis.push_back(static_cast<int>(v));
            }
        } else {
            throw DomainError("unknown grid key '" + std::string(key) + "'");
        }
    }
    grid.validate();
    return grid;
}

ObjectiveRule parse_objective_rule(const std::string& name) {
    if (name == "max")
        return ObjectiveRule::max;
    if (name == "mean")
        return ObjectiveRule::mean;
    throw DomainError("objective must be 'max' or 'mean'");
}

double combine_objective(double delta_tweets, double delta_users, ObjectiveRule rule) {
    return rule == ObjectiveRule::max ? std::max(delta_tweets, delta_users)
                                      : 0.5 * (delta_tweets + delta_users);
}

bool better_fit(const ScanPoint& a, const ScanPoint& b) noexcept {
    if (a.objective != b.objective)
        return a.objective < b.objective;
    if (a.eta_star != b.eta_star)
        return a.eta_star < b.eta_star;
    if (a.lambda != b.lambda)
        return a.lambda < b.lambda;
    return a.delta_t < b.delta_t;
}

std::uint64_t ensemble_seed(std::uint64_t base_seed, double lambda, double eta_star, int delta_t) {
    const auto lk = static_cast<std::uint64_t>(std::llround(lambda * 1e6));
    const auto ek = static_cast<std::uint64_t>(std::llround(eta_star * 1e6));
    const auto dk = static_cast<std::uint64_t>(delta_t);
    return mix64(base_seed ^ mix64(lk ^ mix64(ek ^ mix64(dk))));
}

ScanPoint score_point(const Simulator& sim, const FractionProfile& target_tweets,
                      const FractionProfile& target_users, double lambda, double eta_star,
                      int delta_t, int runs, std::uint64_t base_seed, const ScanOptions& options) {
    ModelParams params;
    params.lambda = lambda;
    params.eta_star = eta_star;
    params.delta_t = delta_t;
    const ActivityProfile mean =
        sim.run_ensemble(params, ensemble_seed(base_seed, lambda, eta_star, delta_t), runs);

    ScanPoint pt;
    pt.lambda = lambda;
    pt.eta_star = eta_star;
    pt.delta_t = delta_t;
    pt.delta_tweets = distance(normalize(mean.activities), target_tweets, options.theta);
    pt.delta_users = distance(normalize(mean.distinct_users), target_users, options.theta);
    pt.objective = combine_objective(pt.delta_tweets, pt.delta_users, options.objective);
    return pt;
}

FitResult grid_scan(const Simulator& sim, const FractionProfile& target_tweets,
                    const FractionProfile& target_users, const GridSpec& grid,
                    std::uint64_t base_seed, const ScanOptions& options) {
    grid.validate();
    for (const FractionProfile* t : {&target_tweets, &target_users}) {
        if (t->size() != kWindowDays)
            throw DomainError("target profile must span 15 days");
        if (t->degenerate())
            throw DomainError("target profile is all zero");
    }

    std::vector<ScanPoint> points(grid.size());
    detail::parallel_for(points.size(), options.threads, [&](std::size_t i) {
        const ModelParams p = grid.at(i);
        points[i] = score_point(sim, target_tweets, target_users, p.lambda, p.eta_star, p.delta_t,
                                grid.runs, base_seed, options);
    });

    const ScanPoint best = *std::min_element(points.begin(), points.end(), better_fit);
    FitResult result;
    result.params.lambda = best.lambda;
    result.params.eta_star = best.eta_star;
    result.params.delta_t = best.delta_t;
    result.delta_tweets = best.delta_tweets;
    result.delta_users = best.delta_users;
    result.objective = best.objective;
    result.good = is_good_fit(best.delta_tweets, best.delta_users);
    if (options.keep_scan)
        result.scan = std::move(points);
    return result;
}

FitResult grid_scan(const FollowNetwork& net, const FractionProfile& target_tweets,
                    const FractionProfile& target_users, const GridSpec& grid,
                    std::uint64_t base_seed, const ScanOptions& options) {
    const Simulator sim(net);
    return grid_scan(sim, target_tweets, target_users, grid, base_seed, options);
}

bool is_good_fit(double delta_tweets, double delta_users) noexcept {
    return delta_tweets <= kGoodFitThreshold && delta_users <= kGoodFitThreshold;
}

bool is_good_fit(const FitResult& result) noexcept {
    return is_good_fit(result.delta_tweets, result.delta_users);
}

} // namespace twitdyn
