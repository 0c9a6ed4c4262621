#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace twitdyn {

inline constexpr double kDefaultTheta = 0.04;

/// Per-day share of a total. Either sums to 1 or is all zero (degenerate,
/// produced from an all-zero series).
class FractionProfile {
  public:
    FractionProfile() = default;

    /// Takes fractions as given. Throws DomainError if any entry is negative
    /// or the entries neither sum to 1 (within 1e-12) nor are all zero.
    static FractionProfile from_fractions(std::vector<double> fractions);

    std::span<const double> fractions() const noexcept { return fractions_; }
    std::size_t size() const noexcept { return fractions_.size(); }
    double operator[](std::size_t i) const noexcept { return fractions_[i]; }
    bool degenerate() const noexcept { return degenerate_; }

  private:
    friend FractionProfile normalize(std::span<const double> counts);

    std::vector<double> fractions_;
    bool degenerate_ = true;
};

/// Divides every entry by the total. Throws DomainError on negative or
/// non-finite entries.
FractionProfile normalize(std::span<const double> counts);

/// (1/N) sqrt(sum_i ((p_i - q_i) / max(p_i, q_i))^2) over the days with
/// p_i + q_i > theta. Throws DomainError on length mismatch, empty
/// profiles or negative theta.
double distance(const FractionProfile& p, const FractionProfile& q, double theta = kDefaultTheta);

} // namespace twitdyn
