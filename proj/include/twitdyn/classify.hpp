#pragma once

#include "twitdyn/metric.hpp"

#include <string>
#include <string_view>

namespace twitdyn {

/// Where the activity concentrates: After, Before, on the Peak day, or
/// Symmetric around it.
enum class MajorClass { A, B, P, S };

enum class SubCluster { high_eta, low_eta, none };

struct ClassLabel {
    MajorClass major = MajorClass::S;
    SubCluster sub = SubCluster::none;

    /// "S", "A+", "A-", "B+", "B-", "P+", "P-" (+ is the high-eta subcluster).
    std::string to_string() const;
    static ClassLabel parse(std::string_view text);

    bool operator==(const ClassLabel&) const = default;
};

std::string to_string(MajorClass major);

struct ClassBoundaries {
    double lambda_split = 2.0;
    double eta_split = 30.0;
    int dt_anticipated = 2; ///< delta_t >= this counts as anticipated
    double peak_frac = 0.60;
    double side_frac = 0.25;

    void validate() const;
};

/// Label from fitted parameters:
///   S  if lambda < lambda_split, eta < eta_split, delta_t >= dt_anticipated
///   P  if lambda >= lambda_split and delta_t < dt_anticipated
///   B  if delta_t >= dt_anticipated (and not S)
///   A  otherwise.
/// A/B/P split into high-eta (eta >= eta_split) and low-eta subclusters.
/// Throws DomainError for lambda < 0, eta_star < 1 or delta_t outside [0, 7].
ClassLabel classify_params(double lambda, double eta_star, int delta_t,
                           const ClassBoundaries& b = {});

/// Major class from the shape of a 15-day profile (day 0 at index 7).
/// Throws DomainError for degenerate profiles or other lengths.
MajorClass classify_profile(const FractionProfile& p, const ClassBoundaries& b = {});

} // namespace twitdyn
