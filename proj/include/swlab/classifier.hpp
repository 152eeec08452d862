#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "swlab/generators.hpp"

namespace swlab {

enum class StatKind { Diameter, Average, Median };
enum class VerdictKind { UltraSmall, Small, NotSmall, Inconclusive };

const char* to_string(StatKind s);
const char* to_string(VerdictKind v);

/// A parameterized generator family plus the size schedule the classifier
/// walks. Random families additionally carry a seed list.
struct FamilySpec {
    enum class Family {
        Complete,
        Star,
        Chain,
        ChainStarSqrt,     // p = floor(sqrt(N)), q = N - p
        ChainStarQuarter,  // p = max(1, N/4), q = N - p
        ErdosRenyi,
        BarabasiAlbert,
        Layered,
    };

    Family family = Family::Complete;
    std::vector<long long> sizes;   // strictly increasing target node counts
    std::vector<uint64_t> seeds;    // random families only

    double er_z = 6.0;
    int ba_v = 3;
    int ba_m = 2;

    // Layered families are scheduled by step count; sizes are derived.
    LayeredSpec::Kind layered_kind = LayeredSpec::Kind::Geometric;
    long long layered_param = 2;
    std::vector<int> layered_steps;

    bool is_random() const {
        return family == Family::ErdosRenyi || family == Family::BarabasiAlbert;
    }
    std::string name() const;
    void validate() const;

    /// Target node counts, resolving layered step schedules.
    std::vector<long long> schedule() const;
};

struct RatioPoint {
    long long target_n = 0;
    double realized_n = 0;  // seed-mean giant-component size for ER
    double stat = 0;        // seed-mean statistic
    double ratio = 0;       // seed-mean of stat / ln(realized n)
    double ratio_min = 0;
    double ratio_max = 0;
};

struct RatioSeries {
    std::string family;
    StatKind stat = StatKind::Diameter;
    std::vector<RatioPoint> points;
};

RatioSeries ratio_series(const FamilySpec& spec, StatKind stat);

/// Finite-sample surrogate for the limit verdict; every knob is explicit.
struct Thresholds {
    int window = 4;           // trailing points examined
    double tol_conv = 0.10;   // relative spread treated as converged
    double tol_zero = 0.05;   // fitted limit below this is ultra-small
    double div_factor = 3.0;  // whole-series ratio growth treated as divergence
    double tol_fit = 0.05;    // relative residual for the 1/ln N tail fit
};

struct Classification {
    VerdictKind verdict = VerdictKind::Inconclusive;
    double c_estimate = 0;     // meaningful for Small / UltraSmall
    double stat_spread = 0;    // relative spread of the raw statistic (window)
    double ratio_spread = 0;   // relative spread of the ratio (window)
    double fit_intercept = 0;  // ratio ~ C + b/ln N extrapolation
    double fit_residual = 0;   // relative RMS residual of that fit
    double series_growth = 0;  // last ratio / first ratio over the full series
};

Classification classify(const RatioSeries& series, const Thresholds& policy);

/// Analytic small-world-in-diameter test for a layered term sequence:
/// looks for a grid value b > 1 with b^n / sum_{i<=n} a_i <= 1 + epsilon
/// across the tail window [n_max/2, n_max], compared in log domain.
struct SwdCriterion {
    bool is_swd = false;
    double witness_b = 0;  // largest qualifying grid value when is_swd
};
SwdCriterion swd_criterion_layered(const std::function<double(int)>& term,
                                   int n_max, std::vector<double> b_grid,
                                   double epsilon);
std::vector<double> default_b_grid();

/// Classifies all three statistics and checks the one-way hierarchy
/// (diameter small => average small => median small).
struct HierarchyReport {
    Classification diameter;
    Classification average;
    Classification median;
    bool conclusive = false;  // no Inconclusive verdict among the three
    bool consistent = false;
    std::string note;
};
HierarchyReport hierarchy_check(const FamilySpec& spec, const Thresholds& policy);

}  // namespace swlab
