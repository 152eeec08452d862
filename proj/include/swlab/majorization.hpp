#pragma once

#include <utility>
#include <vector>

#include "swlab/stats.hpp"

namespace swlab {

enum class MajorizationVerdict { Less, Greater, Equal, Incomparable };

const char* to_string(MajorizationVerdict v);

/// Partial sums S_k = alpha_1 + ... + alpha_k in natural distance order,
/// k = 1..n-1. The last entry equals n(n-1)/2.
std::vector<long long> cumulative(const AlphaArray& a);

/// Majorization order on equal-n alpha arrays via cumulative-sum dominance
/// in distance-index order. Less means every S_k(a) <= S_k(b) with at least
/// one strict inequality. Throws on mismatched node counts or totals.
MajorizationVerdict compare(const AlphaArray& a, const AlphaArray& b);

/// Piecewise-linear curve through (k/(n-1), S_k / S_total), k = 0..n-1,
/// from (0,0) to (1,1). compare(a,b) == Less iff b's curve is nowhere below
/// a's with some strict gap.
struct LorenzCurve {
    std::vector<std::pair<double, double>> points;
};
LorenzCurve lorenz_curve(const AlphaArray& a);

/// True iff y describes the smaller world: x's array is strictly majorized
/// by y's (compare(x, y) == Less).
bool smaller_world_than(const AlphaArray& x, const AlphaArray& y);

}  // namespace swlab
