#include "oracleforge/bench/benchmark.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "oracleforge/codec.hpp"
#include "oracleforge/contracts.hpp"
#include "oracleforge/offchain/scan_feed.hpp"

namespace oracleforge::bench {

using oracle::PatternKind;

namespace {

struct Workload {
    runtime::Environment env;
    std::size_t chunk;

    Workload(const RunConfig& config, std::size_t n)
        : env(config),
          chunk(config.benchmark.pipeline ? std::min(config.benchmark.pipeline_depth, n)
                                          : std::size_t{1}) {}
};

Measurement inbound_measurement(runtime::Environment& env, PatternKind pattern,
                                const oracle::SubmitRecord& submitted) {
    auto receipt = env.chain().get_receipt(submitted.tx_hash);
    if (!receipt) throw Error("benchmark: transaction still pending after mining");
    Measurement m;
    m.pattern = pattern;
    m.kind = MeasurementKind::TxHashLatency;
    m.t1 = submitted.t1;
    m.t2 = submitted.t2;
    m.t3 = receipt->block_timestamp;
    m.dt = submitted.t2 - submitted.t1;
    m.gas_used = receipt->gas_used;
    m.gas_price_wei = env.gas_price_wei();
    m.cost_eur = stats::to_eur(static_cast<double>(receipt->gas_used),
                               static_cast<double>(env.gas_price_wei()), env.config().cost);
    m.validate();
    return m;
}

BenchmarkResult bench_pull_inbound(std::size_t n, const RunConfig& config) {
    Workload w(config, n);
    auto oracle = w.env.make_pull_inbound();
    auto buyer = w.env.facade_for("buyer-bench");
    auto tax_ids = w.env.credit_directory().tax_ids();

    std::uint32_t order_id = 1;
    std::size_t done = 0;
    while (done < n) {
        std::size_t batch = std::min(w.chunk, n - done);
        for (std::size_t i = 0; i < batch; ++i) {
            OrderPlacement order{order_id, tax_ids[(order_id - 1) % tax_ids.size()],
                                 "Bench Buyer Ltd"};
            buyer->submit(contracts::kCreditOrdersAddress, codec::encode_order_placement(order));
            ++order_id;
        }
        w.env.chain().mine_next_block(); // emits the request events
        oracle->poll();                  // responds to each
        w.env.chain().mine_next_block(); // includes the responses
        done += batch;
    }

    BenchmarkResult result;
    result.pattern = PatternKind::PullInbound;
    result.requested = n;
    for (const auto& submitted : oracle->submissions()) {
        result.measurements.push_back(inbound_measurement(w.env, PatternKind::PullInbound, submitted));
    }
    result.failures = oracle->dead_letters().size() + oracle->skipped().size();
    return result;
}

BenchmarkResult bench_push_inbound(std::size_t n, const RunConfig& config) {
    Workload w(config, n);
    auto queue = std::make_shared<oracle::ScanQueue>();
    auto oracle = w.env.make_push_inbound(queue);
    auto scans = offchain::emit_scans(n, config.chain.seed);

    std::size_t done = 0;
    while (done < n) {
        std::size_t batch = std::min(w.chunk, n - done);
        for (std::size_t i = 0; i < batch; ++i) queue->push(scans[done + i]);
        oracle->poll();
        w.env.chain().mine_next_block();
        done += batch;
    }

    BenchmarkResult result;
    result.pattern = PatternKind::PushInbound;
    result.requested = n;
    for (const auto& submitted : oracle->submissions()) {
        result.measurements.push_back(inbound_measurement(w.env, PatternKind::PushInbound, submitted));
    }
    result.failures = oracle->rejections().size();
    return result;
}

BenchmarkResult bench_pull_outbound(std::size_t n, const RunConfig& config) {
    Workload w(config, n);

    // Constant retrieval state: a few records for one order, mined up front.
    auto seeder = w.env.facade_for("scanner-seed");
    for (std::uint32_t i = 0; i < 3; ++i) {
        ScanRecord record{1, "steel bolts", 100 + i, config.oracle.location,
                          quantize_us(w.env.clock().now())};
        seeder->submit(contracts::kGoodsTrackingAddress, codec::encode_scan_payload(record));
    }
    w.env.chain().mine_next_block();

    auto oracle = w.env.make_pull_outbound();
    BenchmarkResult result;
    result.pattern = PatternKind::PullOutbound;
    result.requested = n;
    for (std::size_t i = 0; i < n; ++i) {
        double t1 = w.env.clock().now();
        oracle::CorrelatedRequest request{"trace-" + std::to_string(i),
                                          nlohmann::json{{"order_id", 1}}, t1};
        auto response = oracle->run_pull_outbound(request);
        double t2 = w.env.clock().now();
        if (!response.ok) {
            ++result.failures;
            continue;
        }
        Measurement m;
        m.pattern = PatternKind::PullOutbound;
        m.kind = MeasurementKind::ReadLatency;
        m.t1 = t1;
        m.t2 = t2;
        m.dt = t2 - t1;
        m.validate();
        result.measurements.push_back(m);
    }
    return result;
}

BenchmarkResult bench_push_outbound(std::size_t n, const RunConfig& config) {
    Workload w(config, n);
    auto oracle = w.env.make_push_outbound();
    auto producer = w.env.facade_for("scanner-bench");
    auto scans = offchain::emit_scans(n, config.chain.seed);

    std::size_t done = 0;
    while (done < n) {
        std::size_t batch = std::min(w.chunk, n - done);
        for (std::size_t i = 0; i < batch; ++i) {
            const auto& scan = scans[done + i];
            ScanRecord record{scan.order_id, scan.item_name, scan.quantity,
                              config.oracle.location, quantize_us(w.env.clock().now())};
            producer->submit(contracts::kGoodsTrackingAddress, codec::encode_scan_payload(record));
        }
        w.env.chain().mine_next_block();
        oracle->poll();
        done += batch;
    }

    BenchmarkResult result;
    result.pattern = PatternKind::PushOutbound;
    result.requested = n;
    std::map<std::string, const oracle::SubmitRecord*> by_hash;
    for (const auto& submitted : producer->records()) {
        by_hash[submitted.tx_hash.hex()] = &submitted;
    }
    for (const auto& delivery : oracle->deliveries()) {
        auto receipt = w.env.chain().get_receipt(delivery.tx_hash);
        if (!receipt) throw Error("benchmark: event from an unmined transaction");
        Measurement m;
        m.pattern = PatternKind::PushOutbound;
        m.kind = MeasurementKind::TxMinedLatency;
        if (auto it = by_hash.find(delivery.tx_hash.hex()); it != by_hash.end()) {
            m.t1 = it->second->t1;
            m.t2 = it->second->t2;
        }
        m.t3 = receipt->block_timestamp;
        m.t4 = delivery.t4;
        m.dt = delivery.t4 - receipt->block_timestamp;
        m.validate();
        result.measurements.push_back(m);
    }
    result.failures = oracle->dead_letters().size() + oracle->skipped().size();
    return result;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct MetricColumn {
    std::string pattern;
    std::string metric;
    std::vector<double> values;
};

std::vector<MetricColumn> collect_columns(std::span<const Measurement> measurements) {
    std::vector<MetricColumn> columns;
    auto column = [&](const std::string& pattern, const std::string& metric) -> MetricColumn& {
        for (auto& c : columns) {
            if (c.pattern == pattern && c.metric == metric) return c;
        }
        columns.push_back(MetricColumn{pattern, metric, {}});
        return columns.back();
    };
    for (const auto& m : measurements) {
        std::string pattern(oracle::to_string(m.pattern));
        column(pattern, "dt_seconds").values.push_back(m.dt);
        if (m.gas_used) {
            column(pattern, "gas_used").values.push_back(static_cast<double>(*m.gas_used));
        }
        if (m.cost_eur) column(pattern, "cost_eur").values.push_back(*m.cost_eur);
    }
    return columns;
}

} // namespace

BenchmarkResult run_benchmark(PatternKind pattern, std::size_t n, const RunConfig& config) {
    if (n < 1) throw Error("benchmark: n must be >= 1");
    BenchmarkResult result;
    switch (pattern) {
        case PatternKind::PullInbound: result = bench_pull_inbound(n, config); break;
        case PatternKind::PushInbound: result = bench_push_inbound(n, config); break;
        case PatternKind::PullOutbound: result = bench_pull_outbound(n, config); break;
        case PatternKind::PushOutbound: result = bench_push_outbound(n, config); break;
    }
    result.metrics = summarize_measurements(result.measurements);
    return result;
}

std::vector<MetricSummary> summarize_measurements(std::span<const Measurement> measurements) {
    std::vector<MetricSummary> out;
    for (const auto& column : collect_columns(measurements)) {
        if (column.values.empty()) continue;
        out.push_back(MetricSummary{column.pattern + "/" + column.metric,
                                    stats::summarize(column.values)});
    }
    return out;
}

nlohmann::ordered_json summary_json(const BenchmarkResult& result) {
    nlohmann::ordered_json doc;
    doc["pattern"] = std::string(oracle::to_string(result.pattern));
    doc["requested"] = result.requested;
    doc["completed"] = result.measurements.size();
    doc["failures"] = result.failures;
    nlohmann::ordered_json metrics;
    for (const auto& metric : result.metrics) {
        // strip the "pattern/" prefix for the single-pattern report
        auto name = metric.name.substr(metric.name.find('/') + 1);
        metrics[name] = {{"n", metric.stats.n},       {"mean", metric.stats.mean},
                         {"std", metric.stats.std},   {"min", metric.stats.min},
                         {"q25", metric.stats.q25},   {"q50", metric.stats.q50},
                         {"q75", metric.stats.q75},   {"max", metric.stats.max}};
    }
    doc["metrics"] = metrics;
    return doc;
}

std::string summary_table(std::span<const Measurement> measurements) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-14s %-12s %7s %12s %12s %12s %12s %12s %12s %12s\n",
                  "pattern", "metric", "n", "mean", "std", "min", "q25", "q50", "q75", "max");
    out << line;
    for (const auto& column : collect_columns(measurements)) {
        auto s = stats::summarize(column.values);
        std::snprintf(line, sizeof(line),
                      "%-14s %-12s %7zu %12s %12s %12s %12s %12s %12s %12s\n",
                      column.pattern.c_str(), column.metric.c_str(), s.n,
                      format_number(s.mean).c_str(), format_number(s.std).c_str(),
                      format_number(s.min).c_str(), format_number(s.q25).c_str(),
                      format_number(s.q50).c_str(), format_number(s.q75).c_str(),
                      format_number(s.max).c_str());
        out << line;
    }
    return out.str();
}

nlohmann::ordered_json boxplot_json(std::span<const Measurement> measurements) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& column : collect_columns(measurements)) {
        auto box = stats::boxplot(column.values);
        doc.push_back({{"pattern", column.pattern},
                       {"metric", column.metric},
                       {"n", column.values.size()},
                       {"q25", box.q25},
                       {"q50", box.q50},
                       {"q75", box.q75},
                       {"lower_whisker", box.lower_whisker},
                       {"upper_whisker", box.upper_whisker},
                       {"outliers", box.outliers}});
    }
    return doc;
}

} // namespace oracleforge::bench
