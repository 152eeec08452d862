#include "swlab/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swlab/stats.hpp"

namespace swlab {

const char* to_string(StatKind s) {
    switch (s) {
        case StatKind::Diameter: return "diameter";
        case StatKind::Average: return "average";
        case StatKind::Median: return "median";
    }
    return "?";
}

const char* to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::UltraSmall: return "UltraSmall";
        case VerdictKind::Small: return "Small";
        case VerdictKind::NotSmall: return "NotSmall";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string FamilySpec::name() const {
    switch (family) {
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::Chain: return "chain";
        case Family::ChainStarSqrt: return "chain-star-sqrt";
        case Family::ChainStarQuarter: return "chain-star-quarter";
        case Family::ErdosRenyi: return "erdos-renyi(z=" + std::to_string(er_z) + ")";
        case Family::BarabasiAlbert:
            return "barabasi-albert(v=" + std::to_string(ba_v) +
                   ",m=" + std::to_string(ba_m) + ")";
        case Family::Layered: return "layered";
    }
    return "?";
}

std::vector<long long> FamilySpec::schedule() const {
    if (family == Family::Layered) {
        std::vector<long long> out;
        out.reserve(layered_steps.size());
        for (int steps : layered_steps) {
            LayeredSpec ls;
            ls.kind = layered_kind;
            ls.param = layered_param;
            ls.steps = steps;
            out.push_back(ls.node_count());
        }
        return out;
    }
    return sizes;
}

void FamilySpec::validate() const {
    const auto sched = schedule();
    if (sched.size() < 4)
        throw std::invalid_argument("FamilySpec: schedule needs at least 4 sizes");
    for (size_t i = 1; i < sched.size(); ++i)
        if (sched[i] <= sched[i - 1])
            throw std::invalid_argument("FamilySpec: sizes must be strictly increasing");
    if (is_random() && seeds.size() < 2)
        throw std::invalid_argument("FamilySpec: random families need >= 2 seeds");
}

namespace {

double stat_value(const DistanceSummary& s, StatKind stat) {
    switch (stat) {
        case StatKind::Diameter: return static_cast<double>(s.diameter);
        case StatKind::Average: return s.mean.to_double();
        case StatKind::Median: return s.median;
    }
    return 0;
}

struct Sample {
    double stat;
    double realized_n;
};

Sample one_sample(const FamilySpec& spec, long long target, int size_index,
                  uint64_t seed, StatKind stat) {
    switch (spec.family) {
        case FamilySpec::Family::Complete: {
            auto s = summarize(complete(static_cast<int>(target)));
            return {stat_value(s, stat), static_cast<double>(target)};
        }
        case FamilySpec::Family::Star: {
            auto s = summarize(star(static_cast<int>(target)));
            return {stat_value(s, stat), static_cast<double>(target)};
        }
        case FamilySpec::Family::Chain: {
            auto s = summarize(chain(static_cast<int>(target)));
            return {stat_value(s, stat), static_cast<double>(target)};
        }
        case FamilySpec::Family::ChainStarSqrt: {
            int p = static_cast<int>(std::sqrt(static_cast<double>(target)));
            while (static_cast<long long>(p + 1) * (p + 1) <= target) ++p;
            auto s = summarize(chain_star(p, static_cast<int>(target) - p));
            return {stat_value(s, stat), static_cast<double>(target)};
        }
        case FamilySpec::Family::ChainStarQuarter: {
            int p = std::max(1, static_cast<int>(target / 4));
            auto s = summarize(chain_star(p, static_cast<int>(target) - p));
            return {stat_value(s, stat), static_cast<double>(target)};
        }
        case FamilySpec::Family::ErdosRenyi: {
            auto er = erdos_renyi(static_cast<int>(target), spec.er_z, seed);
            auto s = summarize(er.graph);
            return {stat_value(s, stat), static_cast<double>(er.realized_n)};
        }
        case FamilySpec::Family::BarabasiAlbert: {
            int steps = static_cast<int>(target) - spec.ba_v;
            if (steps < 1)
                throw std::invalid_argument("FamilySpec: BA size below seed network");
            auto s = summarize(barabasi_albert(spec.ba_v, spec.ba_m, steps, seed));
            return {stat_value(s, stat), static_cast<double>(target)};
        }
        case FamilySpec::Family::Layered: {
            LayeredSpec ls;
            ls.kind = spec.layered_kind;
            ls.param = spec.layered_param;
            ls.steps = spec.layered_steps[size_index];
            auto s = summarize(layered(ls));
            return {stat_value(s, stat), static_cast<double>(ls.node_count())};
        }
    }
    throw std::logic_error("FamilySpec: bad family");
}

}  // namespace

RatioSeries ratio_series(const FamilySpec& spec, StatKind stat) {
    spec.validate();
    const auto sched = spec.schedule();
    RatioSeries series;
    series.family = spec.name();
    series.stat = stat;
    series.points.reserve(sched.size());

    for (size_t i = 0; i < sched.size(); ++i) {
        const long long target = sched[i];
        std::vector<uint64_t> seeds =
            spec.is_random() ? spec.seeds : std::vector<uint64_t>{0};
        RatioPoint point;
        point.target_n = target;
        point.ratio_min = std::numeric_limits<double>::infinity();
        point.ratio_max = -std::numeric_limits<double>::infinity();
        try {
            for (uint64_t seed : seeds) {
                Sample sample = one_sample(spec, target, static_cast<int>(i), seed, stat);
                double r = sample.stat / std::log(sample.realized_n);
                point.stat += sample.stat;
                point.realized_n += sample.realized_n;
                point.ratio += r;
                point.ratio_min = std::min(point.ratio_min, r);
                point.ratio_max = std::max(point.ratio_max, r);
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("ratio_series: generation failed at size " +
                                     std::to_string(target) + ": " + e.what());
        }
        const double k = static_cast<double>(seeds.size());
        point.stat /= k;
        point.realized_n /= k;
        point.ratio /= k;
        series.points.push_back(point);
    }
    return series;
}

Classification classify(const RatioSeries& series, const Thresholds& policy) {
    const auto& pts = series.points;
    if (static_cast<int>(pts.size()) < policy.window)
        throw std::invalid_argument("classify: need at least " +
                                    std::to_string(policy.window) + " points");

    const size_t w0 = pts.size() - policy.window;
    Classification out;
    out.series_growth = pts.back().ratio / pts.front().ratio;

    auto rel_spread = [&](auto get) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0;
        for (size_t i = w0; i < pts.size(); ++i) {
            double v = get(pts[i]);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        double mean = sum / policy.window;
        return mean == 0 ? 0.0 : (hi - lo) / mean;
    };
    out.stat_spread = rel_spread([](const RatioPoint& p) { return p.stat; });
    out.ratio_spread = rel_spread([](const RatioPoint& p) { return p.ratio; });

    // Least-squares fit ratio = C + b * (1 / ln N) over the window; for a
    // statistic converging to s* the ratio is asymptotically linear in
    // 1/ln N with intercept equal to the limit of the ratio.
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = w0; i < pts.size(); ++i) {
            double x = 1.0 / std::log(pts[i].realized_n);
            double y = pts[i].ratio;
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double k = policy.window;
        double denom = k * sxx - sx * sx;
        double slope = denom == 0 ? 0 : (k * sxy - sx * sy) / denom;
        out.fit_intercept = (sy - slope * sx) / k;
        double ss = 0;
        for (size_t i = w0; i < pts.size(); ++i) {
            double x = 1.0 / std::log(pts[i].realized_n);
            double r = pts[i].ratio - (out.fit_intercept + slope * x);
            ss += r * r;
        }
        double mean_y = sy / k;
        out.fit_residual = mean_y == 0 ? 0 : std::sqrt(ss / k) / mean_y;
    }

    // A statistic that has stopped moving over geometric size growth is
    // bounded at this scale: the ratio limit is zero.
    if (out.stat_spread < policy.tol_conv) {
        out.verdict = VerdictKind::UltraSmall;
        out.c_estimate = 0.0;
        return out;
    }

    bool window_increasing = true;
    for (size_t i = w0 + 1; i < pts.size(); ++i)
        if (pts[i].ratio <= pts[i - 1].ratio) window_increasing = false;
    if (window_increasing && out.series_growth > policy.div_factor) {
        out.verdict = VerdictKind::NotSmall;
        out.c_estimate = std::numeric_limits<double>::infinity();
        return out;
    }

    if (out.fit_residual < policy.tol_fit || out.ratio_spread < policy.tol_conv) {
        double c = out.fit_residual < policy.tol_fit
                       ? std::max(0.0, out.fit_intercept)
                       : [&] {
                             double sum = 0;
                             for (size_t i = w0; i < pts.size(); ++i)
                                 sum += pts[i].ratio;
                             return sum / policy.window;
                         }();
        out.c_estimate = c;
        out.verdict = c < policy.tol_zero ? VerdictKind::UltraSmall
                                          : VerdictKind::Small;
        return out;
    }

    out.verdict = VerdictKind::Inconclusive;
    return out;
}

std::vector<double> default_b_grid() {
    std::vector<double> grid;
    for (int i = 21; i <= 60; ++i) grid.push_back(i * 0.05);  // 1.05 .. 3.00
    return grid;
}

SwdCriterion swd_criterion_layered(const std::function<double(int)>& term,
                                   int n_max, std::vector<double> b_grid,
                                   double epsilon) {
    if (n_max < 8) throw std::invalid_argument("swd_criterion_layered: n_max >= 8");
    if (epsilon <= 0) throw std::invalid_argument("swd_criterion_layered: epsilon > 0");
    for (double b : b_grid)
        if (b <= 1.0)
            throw std::invalid_argument("swd_criterion_layered: grid values must be > 1");

    // log(sum_{i=0}^{n} a_i) with a_0 = 1, accumulated in log domain so
    // geometric sequences cannot overflow.
    std::vector<double> log_sum(n_max + 1);
    log_sum[0] = 0.0;
    for (int i = 1; i <= n_max; ++i) {
        double la = std::log(term(i));
        double hi = std::max(log_sum[i - 1], la);
        double lo = std::min(log_sum[i - 1], la);
        log_sum[i] = hi + std::log1p(std::exp(lo - hi));
    }

    std::sort(b_grid.begin(), b_grid.end(), std::greater<>());
    const double slack = std::log1p(epsilon);
    const int tail_begin = n_max / 2;
    for (double b : b_grid) {
        bool ok = true;
        for (int n = tail_begin; n <= n_max; ++n) {
            if (n * std::log(b) - log_sum[n] > slack) {
                ok = false;
                break;
            }
        }
        if (ok) return {true, b};
    }
    return {false, std::numeric_limits<double>::quiet_NaN()};
}

HierarchyReport hierarchy_check(const FamilySpec& spec, const Thresholds& policy) {
    HierarchyReport report;
    report.diameter = classify(ratio_series(spec, StatKind::Diameter), policy);
    report.average = classify(ratio_series(spec, StatKind::Average), policy);
    report.median = classify(ratio_series(spec, StatKind::Median), policy);

    auto small = [](const Classification& c) {
        return c.verdict == VerdictKind::UltraSmall || c.verdict == VerdictKind::Small;
    };
    auto inconclusive = [](const Classification& c) {
        return c.verdict == VerdictKind::Inconclusive;
    };

    if (inconclusive(report.diameter) || inconclusive(report.average) ||
        inconclusive(report.median)) {
        report.conclusive = false;
        report.consistent = true;
        report.note = "warning: inconclusive verdict, hierarchy not checkable";
        return report;
    }
    report.conclusive = true;
    bool d_implies_a = !small(report.diameter) || small(report.average);
    bool a_implies_md = !small(report.average) || small(report.median);
    report.consistent = d_implies_a && a_implies_md;
    if (!report.consistent)
        report.note = "error: verdicts violate diameter => average => median";
    return report;
}

}  // namespace swlab
