#pragma once

#include <string>

#include <json.hpp>

#include "oracleforge/bench/measurement.hpp"
#include "oracleforge/runtime.hpp"

namespace oracleforge::bench {

struct MetricSummary {
    std::string name; // dt_seconds, gas_used, cost_eur
    stats::SummaryStats stats;
};

struct BenchmarkResult {
    oracle::PatternKind pattern = oracle::PatternKind::PullInbound;
    std::size_t requested = 0;
    std::size_t failures = 0;
    std::vector<Measurement> measurements;
    std::vector<MetricSummary> metrics;
};

// Drives n invocations of the pattern's standard workload against a fresh
// environment built from the config. Deterministic under a virtual clock
// and fixed seed. Failed invocations are excluded from the measurements and
// counted in `failures`.
BenchmarkResult run_benchmark(oracle::PatternKind pattern, std::size_t n, const RunConfig& config);

// Summaries grouped by (pattern, metric); usable on freshly produced or
// re-read measurements alike.
std::vector<MetricSummary> summarize_measurements(std::span<const Measurement> measurements);

nlohmann::ordered_json summary_json(const BenchmarkResult& result);
std::string summary_table(std::span<const Measurement> measurements);
nlohmann::ordered_json boxplot_json(std::span<const Measurement> measurements);

} // namespace oracleforge::bench
