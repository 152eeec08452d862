#include "swlab/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "swlab/stats.hpp"

namespace swlab {
namespace closed_forms {

Rational star_mean(int n) {
    if (n < 2) throw std::invalid_argument("star_mean: n must be >= 2");
    return Rational(2LL * (n - 1), n);
}

double star_median(int n) {
    if (n < 2) throw std::invalid_argument("star_median: n must be >= 2");
    if (n <= 3) return 1.0;
    if (n == 4) return 1.5;
    return 2.0;
}

ChainStats chain_stats(int n) {
    if (n < 2) throw std::invalid_argument("chain_stats: n must be >= 2");
    // The chain's distance histogram is alpha_k = n - k, k = 1..n-1; the
    // exact median falls out of the shared order-statistic rule.
    AlphaArray a;
    a.n = n;
    a.alpha.resize(n - 1);
    for (int k = 1; k < n; ++k) a.alpha[k - 1] = n - k;
    ChainStats s{
        n - 1,
        Rational(n + 1, 3),
        median_distance(a),
        n * (1.0 - std::sqrt(2.0) / 2.0),
    };
    return s;
}

Rational chain_star_mean(long long p, long long q) {
    if (p < 1 || q < 0 || p + q < 2)
        throw std::invalid_argument("chain_star_mean: need p >= 1, q >= 0, p+q >= 2");
    long long num = 6 * q * (q - 1) + (p - 1) * p * (p + 1) + 3 * p * q * (p + 1);
    long long den = 3 * (p + q) * (p + q - 1);
    return Rational(num, den);
}

bool chain_star_median_bound(long long p, long long q) {
    if (p < 1 || q < 0)
        throw std::invalid_argument("chain_star_median_bound: need p >= 1, q >= 0");
    return 2 * q * (q - 1) > (p + q) * (p + q - 1);
}

int layered_diameter(int steps) {
    if (steps < 1) throw std::invalid_argument("layered_diameter: steps must be >= 1");
    return 2 * steps;
}

double er_mean_prediction(double n, double z) {
    if (n < 2) throw std::invalid_argument("er_mean_prediction: n must be >= 2");
    if (z <= 1) throw std::invalid_argument("er_mean_prediction: z must be > 1");
    return std::log(n) / std::log(z);
}

double web_mean_prediction(double n) {
    if (n < 1) throw std::invalid_argument("web_mean_prediction: n must be >= 1");
    return 0.35 + 2.0 * std::log10(n);
}

}  // namespace closed_forms
}  // namespace swlab
