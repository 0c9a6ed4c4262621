#pragma once

#include "twitdyn/behavior.hpp"
#include "twitdyn/engine.hpp"
#include "twitdyn/metric.hpp"
#include "twitdyn/network.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twitdyn {

inline constexpr double kGoodFitThreshold = 0.08;

/// Inclusive arithmetic axis start, start + step, ... <= stop. Values are
/// computed as start + k * step and rounded to 1e-9 so that axes built
/// with different endpoints share bit-identical points.
std::vector<double> make_axis(double start, double stop, double step);

/// Axes of the (lambda, eta_star, delta_t) scan.
struct GridSpec {
    std::vector<double> lambda_axis;
    std::vector<double> eta_axis;
    std::vector<int> dt_axis;
    int runs = 50;

    /// lambda 0..4 step 0.1, eta_star 1..60 step 1, delta_t 0..7, 50 runs.
    static GridSpec defaults();

    std::size_t size() const noexcept {
        return lambda_axis.size() * eta_axis.size() * dt_axis.size();
    }

    /// Triplet number `index`; delta_t varies slowest, lambda fastest.
    ModelParams at(std::size_t index) const;

    /// Throws DomainError on empty or non-ascending axes, values outside
    /// the model's parameter ranges, or runs < 1.
    void validate() const;
};

/// Parses "lambda=0:4:0.1,eta=1:60:1,dt=0:7". Each item is key=start[:stop[:step]]
/// with step defaulting to 1; keys lambda, eta (or eta_star), dt (or delta_t).
/// Axes not mentioned are taken from `base`.
GridSpec parse_grid(std::string_view text, const GridSpec& base = GridSpec::defaults());

enum class ObjectiveRule { max, mean };

ObjectiveRule parse_objective_rule(const std::string& name);

double combine_objective(double delta_tweets, double delta_users, ObjectiveRule rule);

struct ScanPoint {
    double lambda = 0.0;
    double eta_star = 1.0;
    int delta_t = 0;
    double delta_tweets = 0.0;
    double delta_users = 0.0;
    double objective = 0.0;
};

/// Total order used to pick the best point: lower objective, then smaller
/// eta_star, smaller lambda, smaller delta_t.
bool better_fit(const ScanPoint& a, const ScanPoint& b) noexcept;

struct FitResult {
    ModelParams params;
    double delta_tweets = 0.0;
    double delta_users = 0.0;
    double objective = 0.0;
    bool good = false;
    std::vector<ScanPoint> scan; ///< every grid point, when requested
};

struct ScanOptions {
    double theta = kDefaultTheta;
    ObjectiveRule objective = ObjectiveRule::max;
    int threads = 1;
    bool keep_scan = false;
};

/// Seed of the ensemble evaluated at one triplet. Depends only on the base
/// seed and the triplet values (lambda and eta_star in units of 1e-6), so
/// a point gets the same ensemble in every grid that contains it.
std::uint64_t ensemble_seed(std::uint64_t base_seed, double lambda, double eta_star, int delta_t);

/// Scores one triplet: ensemble of grid.runs simulations, both series
/// normalized and compared to the targets.
ScanPoint score_point(const Simulator& sim, const FractionProfile& target_tweets,
                      const FractionProfile& target_users, double lambda, double eta_star,
                      int delta_t, int runs, std::uint64_t base_seed, const ScanOptions& options);

/// Exhaustive scan; returns the best point under better_fit.
/// Throws DomainError if either target is degenerate or not 15 days long.
FitResult grid_scan(const Simulator& sim, const FractionProfile& target_tweets,
                    const FractionProfile& target_users, const GridSpec& grid,
                    std::uint64_t base_seed, const ScanOptions& options = {});

FitResult grid_scan(const FollowNetwork& net, const FractionProfile& target_tweets,
                    const FractionProfile& target_users, const GridSpec& grid,
                    std::uint64_t base_seed, const ScanOptions& options = {});

bool is_good_fit(double delta_tweets, double delta_users) noexcept;
bool is_good_fit(const FitResult& result) noexcept;

} // namespace twitdyn
