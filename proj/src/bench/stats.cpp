#include "oracleforge/bench/stats.hpp"

#include <algorithm>
#include <cmath>

namespace oracleforge::stats {

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw Error("quantile of an empty sample");
    if (sorted.size() == 1) return sorted[0];
    double h = static_cast<double>(sorted.size() - 1) * p;
    auto lo = static_cast<std::size_t>(h);
    if (lo >= sorted.size() - 1) return sorted[sorted.size() - 1];
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

SummaryStats summarize(std::span<const double> samples) {
    if (samples.empty()) throw Error("summarize: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    SummaryStats stats;
    stats.n = sorted.size();
    double sum = 0.0;
    for (double v : sorted) sum += v;
    stats.mean = sum / static_cast<double>(stats.n);
    if (stats.n > 1) {
        double ss = 0.0;
        for (double v : sorted) {
            double d = v - stats.mean;
            ss += d * d;
        }
        stats.std = std::sqrt(ss / static_cast<double>(stats.n - 1));
    }
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.q25 = quantile_sorted(sorted, 0.25);
    stats.q50 = quantile_sorted(sorted, 0.50);
    stats.q75 = quantile_sorted(sorted, 0.75);
    return stats;
}

BoxPlotData boxplot(std::span<const double> samples) {
    if (samples.empty()) throw Error("boxplot: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    BoxPlotData box;
    box.q25 = quantile_sorted(sorted, 0.25);
    box.q50 = quantile_sorted(sorted, 0.50);
    box.q75 = quantile_sorted(sorted, 0.75);
    double iqr = box.q75 - box.q25;
    double lo_fence = box.q25 - 1.5 * iqr;
    double hi_fence = box.q75 + 1.5 * iqr;

    box.lower_whisker = box.q25;
    box.upper_whisker = box.q75;
    for (double v : sorted) {
        if (v >= lo_fence) {
            box.lower_whisker = v;
            break;
        }
    }
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        if (*it <= hi_fence) {
            box.upper_whisker = *it;
            break;
        }
    }
    for (double v : sorted) {
        if (v < lo_fence || v > hi_fence) box.outliers.push_back(v);
    }
    return box;
}

void CostModel::validate() const {
    if (!(eur_per_eth > 0) || !(reference_gas_price_gwei > 0) || !(observed_mean_gas_price_eth > 0)) {
        throw ConfigError("cost model: all rates must be positive");
    }
}

double to_eur(double gas, double gas_price_wei, const CostModel& model) {
    return gas * gas_price_wei * 1e-18 * model.eur_per_eth;
}

double to_eur_at_reference(double gas, const CostModel& model) {
    return to_eur(gas, model.reference_gas_price_gwei * 1e9, model);
}

} // namespace oracleforge::stats
