#pragma once

#include <string>

#include <json.hpp>

#include "oracleforge/bench/stats.hpp"
#include "oracleforge/chain/types.hpp"

namespace oracleforge {

struct OracleConfig {
    std::string location = "AT-1"; // enrichment site code stamped onto scans
    int retry_attempts = 3;
    double retry_backoff_initial = 0.5;
    double retry_backoff_multiplier = 2.0;
    std::string credit_fixture; // path to a profiles JSON; empty = built-in fixture
    double outage_start = -1.0; // credit-service outage, simulation seconds
    double outage_duration = 0.0;
};

struct ServiceConfig {
    int credit_port = 0; // 0 = pick a free port
    int erp_port = 0;
};

struct BenchmarkConfig {
    std::string pattern = "pull-inbound";
    std::size_t n = 100;
    bool pipeline = false;       // submit batches instead of one tx per block
    std::size_t pipeline_depth = 8;
};

struct OutputConfig {
    std::string csv = "bench.csv";
    std::string summary = "bench.summary.json";
};

struct RunConfig {
    chain::ChainConfig chain;
    stats::CostModel cost;
    OracleConfig oracle;
    ServiceConfig services;
    BenchmarkConfig benchmark;
    OutputConfig output;

    void validate() const; // throws ConfigError

    // Strict parse: unknown keys anywhere in the document are rejected.
    static RunConfig from_json(const nlohmann::json& doc);
    static RunConfig from_file(const std::string& path);
    nlohmann::ordered_json to_json() const;
};

} // namespace oracleforge
