#include "twitdyn/classify.hpp"

#include "twitdyn/engine.hpp"
#include "twitdyn/errors.hpp"

#include <cmath>

namespace twitdyn {

std::string to_string(MajorClass major) {
    switch (major) {
    case MajorClass::A:
        return "A";
    case MajorClass::B:
        return "B";
    case MajorClass::P:
        return "P";
    case MajorClass::S:
        return "S";
    }
    return "?";
}

std::string ClassLabel::to_string() const {
    std::string s = twitdyn::to_string(major);
    if (sub == SubCluster::high_eta)
        s += '+';
    else if (sub == SubCluster::low_eta)
        s += '-';
    return s;
}

ClassLabel ClassLabel::parse(std::string_view text) {
    if (text == "S")
        return {MajorClass::S, SubCluster::none};
    if (text.size() == 2 && (text[1] == '+' || text[1] == '-')) {
        const SubCluster sub = text[1] == '+' ? SubCluster::high_eta : SubCluster::low_eta;
        switch (text[0]) {
        case 'A':
            return {MajorClass::A, sub};
        case 'B':
            return {MajorClass::B, sub};
        case 'P':
            return {MajorClass::P, sub};
        default:
            break;
        }
    }
    throw DomainError("unknown class label '" + std::string(text) + "'");
}

void ClassBoundaries::validate() const {
    if (!(lambda_split > 0.0) || !(eta_split > 0.0) || dt_anticipated <= 0 ||
        !(peak_frac > 0.0) || !(side_frac > 0.0))
        throw DomainError("class boundaries must be positive");
}

ClassLabel classify_params(double lambda, double eta_star, int delta_t, const ClassBoundaries& b) {
    b.validate();
    if (!std::isfinite(lambda) || lambda < 0.0 || !std::isfinite(eta_star) || eta_star < 1.0 ||
        delta_t < 0 || delta_t > 7)
        throw DomainError("parameters outside the model range");

    const bool fast_decay = lambda >= b.lambda_split;
    const bool high_eta = eta_star >= b.eta_split;
    const bool anticipated = delta_t >= b.dt_anticipated;
    const SubCluster sub = high_eta ? SubCluster::high_eta : SubCluster::low_eta;

    if (!fast_decay && !high_eta && anticipated)
        return {MajorClass::S, SubCluster::none};
    if (fast_decay && !anticipated)
        return {MajorClass::P, sub};
    if (anticipated)
        return {MajorClass::B, sub};
    return {MajorClass::A, sub};
}

MajorClass classify_profile(const FractionProfile& p, const ClassBoundaries& b) {
    b.validate();
    if (p.size() != kWindowDays)
        throw DomainError("profile must span 15 days");
    if (p.degenerate())
        throw DomainError("profile is all zero");

    double before = 0.0;
    double after = 0.0;
    for (std::size_t i = 0; i < kPeakIndex; ++i)
        before += p[i];
    for (std::size_t i = kPeakIndex + 1; i < kWindowDays; ++i)
        after += p[i];
    const double peak = p[kPeakIndex];

    if (peak >= b.peak_frac)
        return MajorClass::P;
    if (after >= b.side_frac && before < b.side_frac)
        return MajorClass::A;
    if (before >= b.side_frac && after < b.side_frac)
        return MajorClass::B;
    return MajorClass::S;
}

} // namespace twitdyn
