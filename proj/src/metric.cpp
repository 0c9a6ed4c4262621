#include "twitdyn/metric.hpp"

#include "twitdyn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace twitdyn {

FractionProfile FractionProfile::from_fractions(std::vector<double> fractions) {
    double total = 0.0;
    for (double f : fractions) {
        if (!std::isfinite(f) || f < 0.0)
            throw DomainError("fractions must be finite and nonnegative");
        total += f;
    }
    const bool zero = total == 0.0;
    if (!zero && std::abs(total - 1.0) > 1e-12)
        throw DomainError("fractions must sum to 1");
    FractionProfile p;
    p.fractions_ = std::move(fractions);
    p.degenerate_ = zero;
    return p;
}

FractionProfile normalize(std::span<const double> counts) {
    double total = 0.0;
    for (double c : counts) {
        if (!std::isfinite(c) || c < 0.0)
            throw DomainError("counts must be finite and nonnegative");
        total += c;
    }
    FractionProfile p;
    p.fractions_.assign(counts.begin(), counts.end());
    p.degenerate_ = total == 0.0;
    if (!p.degenerate_)
        for (double& f : p.fractions_)
            f /= total;
    return p;
}

double distance(const FractionProfile& p, const FractionProfile& q, double theta) {
    if (p.size() != q.size())
        throw DomainError("profiles differ in length");
    if (p.size() == 0)
        throw DomainError("profiles are empty");
    if (!(theta >= 0.0))
        throw DomainError("theta must be >= 0");

    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double a = p[i];
        const double b = q[i];
        // Also drops a == b == 0 since theta >= 0.
        if (a + b <= theta)
            continue;
        const double rel = (a - b) / std::max(a, b);
        sum += rel * rel;
    }
    return std::sqrt(sum) / static_cast<double>(p.size());
}

} // namespace twitdyn
