#pragma once

#include "twitdyn/classify.hpp"
#include "twitdyn/engine.hpp"
#include "twitdyn/fitter.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace twitdyn {

/// Empirical 15-day series of one hashtag, day offsets -7..7.
struct HashtagRecord {
    std::string name;
    DaySeries tweets{};
    DaySeries users{};
};

/// Reads either of two layouts:
///   "day,tweets,users"               nonnegative integer counts
///   "day,activities,distinct_users"  nonnegative reals (engine output)
/// followed by exactly 15 rows with day = -7..7 in ascending order and
/// users <= tweets on every row. Violations throw ParseError naming the line.
HashtagRecord read_hashtag_csv(std::istream& in, std::string name);
HashtagRecord read_hashtag_csv_file(const std::string& path);

/// Fit report with keys hashtag, lambda, eta_star, delta_t, delta_tweets,
/// delta_users, objective, good, class (in that order).
std::string fit_report_json(const std::string& hashtag, const FitResult& result,
                            const ClassLabel& label);

/// "lambda,eta_star,delta_t,delta_tweets,delta_users", one row per point.
void write_scan_csv(std::ostream& out, std::span<const ScanPoint> points);

struct FittedParams {
    double lambda = 0.0;
    double eta_star = 1.0;
    int delta_t = 0;
};

/// Reads lambda, eta_star and delta_t from a fit report.
/// Throws ParseError on malformed JSON or missing keys.
FittedParams read_fit_json(std::istream& in);

} // namespace twitdyn
