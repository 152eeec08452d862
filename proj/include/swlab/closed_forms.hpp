#pragma once

#include "swlab/rational.hpp"

namespace swlab {
namespace closed_forms {

/// Mean distance of the n-node star: 2(n-1)/n.
Rational star_mean(int n);

/// Median distance of the n-node star: 1 for n <= 3, 1.5 for n = 4, 2 after.
double star_median(int n);

struct ChainStats {
    int diameter;           // n - 1
    Rational mean;          // (n + 1) / 3
    double median_exact;    // from the chain histogram alpha_k = n - k
    double median_approx;   // n (1 - sqrt(2)/2)
};
ChainStats chain_stats(int n);

/// Mean distance of chain_star(p, q):
/// (6q(q-1) + (p-1)p(p+1) + 3pq(p+1)) / (3(p+q)(p+q-1)).
Rational chain_star_mean(long long p, long long q);

/// Certificate that the chain_star(p, q) median is at most 2:
/// true iff 2q(q-1) > (p+q)(p+q-1).
bool chain_star_median_bound(long long p, long long q);

/// Diameter of the layered construction after `steps` steps: 2*steps.
int layered_diameter(int steps);

/// Erdos-Renyi mean-distance prediction ln(n)/ln(z).
double er_mean_prediction(double n, double z);

/// 1999 Web-crawl mean-distance fit 0.35 + 2*log10(n). Convenience constant
/// formula only; no data behind it.
double web_mean_prediction(double n);

}  // namespace closed_forms
}  // namespace swlab
