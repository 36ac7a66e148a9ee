#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oracleforge/common.hpp"

namespace oracleforge::stats {

struct SummaryStats {
    std::size_t n = 0;
    double mean = 0.0;
    double std = 0.0; // sample standard deviation (n-1 denominator)
    double min = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

// Quantile by linear interpolation between order statistics of a sorted
// sample: h = (n-1)p, x = x[floor(h)] + frac(h) * (x[floor(h)+1] - x[floor(h)]).
double quantile_sorted(std::span<const double> sorted, double p);

// Throws Error on an empty sample.
SummaryStats summarize(std::span<const double> samples);

struct BoxPlotData {
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double lower_whisker = 0.0; // smallest sample within 1.5 IQR below q25
    double upper_whisker = 0.0; // largest sample within 1.5 IQR above q75
    std::vector<double> outliers;
};

// Tukey box plot: whiskers reach the most extreme samples within 1.5 IQR of
// the quartiles; everything beyond is an outlier.
BoxPlotData boxplot(std::span<const double> samples);

struct CostModel {
    double eur_per_eth = 144.86;
    double reference_gas_price_gwei = 8.5;
    double observed_mean_gas_price_eth = 7.45e-10; // Ether per gas

    std::uint64_t observed_gas_price_wei() const {
        return static_cast<std::uint64_t>(observed_mean_gas_price_eth * 1e18 + 0.5);
    }
    void validate() const;
};

// euro = gas * gas_price[wei] * 1e-18 * eur_per_eth
double to_eur(double gas, double gas_price_wei, const CostModel& model);
// Same at the model's reference gas price (gwei).
double to_eur_at_reference(double gas, const CostModel& model);

} // namespace oracleforge::stats
