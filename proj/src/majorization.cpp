#include "swlab/majorization.hpp"

#include <stdexcept>

namespace swlab {

const char* to_string(MajorizationVerdict v) {
    switch (v) {
        case MajorizationVerdict::Less: return "Less";
        case MajorizationVerdict::Greater: return "Greater";
        case MajorizationVerdict::Equal: return "Equal";
        case MajorizationVerdict::Incomparable: return "Incomparable";
    }
    return "?";
}

std::vector<long long> cumulative(const AlphaArray& a) {
    std::vector<long long> sums(a.alpha.size());
    long long running = 0;
    for (size_t j = 0; j < a.alpha.size(); ++j) {
        running += a.alpha[j];
        sums[j] = running;
    }
    return sums;
}

MajorizationVerdict compare(const AlphaArray& a, const AlphaArray& b) {
    if (a.n != b.n)
        throw std::invalid_argument("compare: node counts differ");
    const auto sa = cumulative(a);
    const auto sb = cumulative(b);
    if (!sa.empty() && !sb.empty() && sa.back() != sb.back())
        throw std::invalid_argument("compare: totals differ (corrupt alpha array)");

    bool a_below = false;  // some S_k(a) < S_k(b)
    bool a_above = false;
    for (size_t k = 0; k < sa.size(); ++k) {
        if (sa[k] < sb[k]) a_below = true;
        else if (sa[k] > sb[k]) a_above = true;
    }
    if (a_below && a_above) return MajorizationVerdict::Incomparable;
    if (a_below) return MajorizationVerdict::Less;
    if (a_above) return MajorizationVerdict::Greater;
    return MajorizationVerdict::Equal;
}

LorenzCurve lorenz_curve(const AlphaArray& a) {
    LorenzCurve curve;
    const auto sums = cumulative(a);
    const double total = sums.empty() ? 1.0 : static_cast<double>(sums.back());
    const double span = a.n > 1 ? a.n - 1 : 1;
    curve.points.reserve(sums.size() + 1);
    curve.points.emplace_back(0.0, 0.0);
    for (size_t k = 0; k < sums.size(); ++k)
        curve.points.emplace_back((k + 1) / span, sums[k] / total);
    return curve;
}

bool smaller_world_than(const AlphaArray& x, const AlphaArray& y) {
    return compare(x, y) == MajorizationVerdict::Less;
}

}  // namespace swlab
