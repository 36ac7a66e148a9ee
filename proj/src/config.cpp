#include "oracleforge/config.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>

namespace oracleforge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void check_keys(const json& obj, const std::string& section,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError("config: section '" + section + "' must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!ok.count(it.key())) {
            throw ConfigError("config: unknown key '" + it.key() + "' in section '" + section + "'");
        }
    }
}

template <typename T>
void get_if(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) obj.at(key).get_to(out);
}

void parse_chain(const json& obj, chain::ChainConfig& cfg) {
    check_keys(obj, "chain",
               {"seed", "mean_interblock", "submit_latency_mean", "submit_latency_std",
                "submit_latency_min", "read_latency_mean", "read_latency_std", "read_latency_min",
                "event_propagation_mean", "tail_probability", "tail_multiplier", "clock_mode"});
    get_if(obj, "seed", cfg.seed);
    get_if(obj, "mean_interblock", cfg.mean_interblock);
    get_if(obj, "submit_latency_mean", cfg.submit_latency_mean);
    get_if(obj, "submit_latency_std", cfg.submit_latency_std);
    get_if(obj, "submit_latency_min", cfg.submit_latency_min);
    get_if(obj, "read_latency_mean", cfg.read_latency_mean);
    get_if(obj, "read_latency_std", cfg.read_latency_std);
    get_if(obj, "read_latency_min", cfg.read_latency_min);
    get_if(obj, "event_propagation_mean", cfg.event_propagation_mean);
    get_if(obj, "tail_probability", cfg.tail_probability);
    get_if(obj, "tail_multiplier", cfg.tail_multiplier);
    if (obj.contains("clock_mode")) {
        auto mode = obj.at("clock_mode").get<std::string>();
        if (mode == "virtual") cfg.clock_mode = ClockMode::Virtual;
        else if (mode == "realtime") cfg.clock_mode = ClockMode::Realtime;
        else throw ConfigError("config: clock_mode must be 'virtual' or 'realtime'");
    }
}

void parse_cost(const json& obj, stats::CostModel& cost) {
    check_keys(obj, "cost",
               {"eur_per_eth", "reference_gas_price_gwei", "observed_mean_gas_price_eth"});
    get_if(obj, "eur_per_eth", cost.eur_per_eth);
    get_if(obj, "reference_gas_price_gwei", cost.reference_gas_price_gwei);
    get_if(obj, "observed_mean_gas_price_eth", cost.observed_mean_gas_price_eth);
}

void parse_oracle(const json& obj, OracleConfig& oracle) {
    check_keys(obj, "oracle",
               {"location", "retry_attempts", "retry_backoff_initial", "retry_backoff_multiplier",
                "credit_fixture", "outage_start", "outage_duration"});
    get_if(obj, "location", oracle.location);
    get_if(obj, "retry_attempts", oracle.retry_attempts);
    get_if(obj, "retry_backoff_initial", oracle.retry_backoff_initial);
    get_if(obj, "retry_backoff_multiplier", oracle.retry_backoff_multiplier);
    get_if(obj, "credit_fixture", oracle.credit_fixture);
    get_if(obj, "outage_start", oracle.outage_start);
    get_if(obj, "outage_duration", oracle.outage_duration);
}

void parse_services(const json& obj, ServiceConfig& services) {
    check_keys(obj, "services", {"credit_port", "erp_port"});
    get_if(obj, "credit_port", services.credit_port);
    get_if(obj, "erp_port", services.erp_port);
}

void parse_benchmark(const json& obj, BenchmarkConfig& bench) {
    check_keys(obj, "benchmark", {"pattern", "n", "pipeline", "pipeline_depth"});
    get_if(obj, "pattern", bench.pattern);
    get_if(obj, "n", bench.n);
    get_if(obj, "pipeline", bench.pipeline);
    get_if(obj, "pipeline_depth", bench.pipeline_depth);
}

void parse_output(const json& obj, OutputConfig& output) {
    check_keys(obj, "output", {"csv", "summary"});
    get_if(obj, "csv", output.csv);
    get_if(obj, "summary", output.summary);
}

} // namespace

void RunConfig::validate() const {
    chain.validate();
    cost.validate();
    if (oracle.location.empty()) throw ConfigError("config: oracle.location must not be empty");
    if (oracle.retry_attempts < 1) throw ConfigError("config: oracle.retry_attempts must be >= 1");
    if (oracle.retry_backoff_initial <= 0 || oracle.retry_backoff_multiplier < 1) {
        throw ConfigError("config: oracle retry backoff must be positive and non-shrinking");
    }
    if (services.credit_port < 0 || services.credit_port > 65535 || services.erp_port < 0 ||
        services.erp_port > 65535) {
        throw ConfigError("config: service ports must be in [0, 65535]");
    }
    if (benchmark.n < 1) throw ConfigError("config: benchmark.n must be >= 1");
    if (benchmark.pipeline_depth < 1) throw ConfigError("config: benchmark.pipeline_depth must be >= 1");
    if (output.csv.empty() || output.summary.empty()) {
        throw ConfigError("config: output paths must not be empty");
    }
}

RunConfig RunConfig::from_json(const json& doc) {
    check_keys(doc, "(root)", {"chain", "cost", "oracle", "services", "benchmark", "output"});
    RunConfig config;
    if (doc.contains("chain")) parse_chain(doc.at("chain"), config.chain);
    if (doc.contains("cost")) parse_cost(doc.at("cost"), config.cost);
    if (doc.contains("oracle")) parse_oracle(doc.at("oracle"), config.oracle);
    if (doc.contains("services")) parse_services(doc.at("services"), config.services);
    if (doc.contains("benchmark")) parse_benchmark(doc.at("benchmark"), config.benchmark);
    if (doc.contains("output")) parse_output(doc.at("output"), config.output);
    config.validate();
    return config;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("config: " + path + ": " + e.what());
    }
    RunConfig config = from_json(doc);
    // fixture paths resolve relative to the config file, not the cwd
    if (!config.oracle.credit_fixture.empty()) {
        std::filesystem::path fixture(config.oracle.credit_fixture);
        if (fixture.is_relative()) {
            config.oracle.credit_fixture =
                (std::filesystem::path(path).parent_path() / fixture).string();
        }
    }
    return config;
}

ordered_json RunConfig::to_json() const {
    ordered_json doc;
    doc["chain"] = {{"seed", chain.seed},
                    {"mean_interblock", chain.mean_interblock},
                    {"submit_latency_mean", chain.submit_latency_mean},
                    {"submit_latency_std", chain.submit_latency_std},
                    {"submit_latency_min", chain.submit_latency_min},
                    {"read_latency_mean", chain.read_latency_mean},
                    {"read_latency_std", chain.read_latency_std},
                    {"read_latency_min", chain.read_latency_min},
                    {"event_propagation_mean", chain.event_propagation_mean},
                    {"tail_probability", chain.tail_probability},
                    {"tail_multiplier", chain.tail_multiplier},
                    {"clock_mode", chain.clock_mode == ClockMode::Virtual ? "virtual" : "realtime"}};
    doc["cost"] = {{"eur_per_eth", cost.eur_per_eth},
                   {"reference_gas_price_gwei", cost.reference_gas_price_gwei},
                   {"observed_mean_gas_price_eth", cost.observed_mean_gas_price_eth}};
    doc["oracle"] = {{"location", oracle.location},
                     {"retry_attempts", oracle.retry_attempts},
                     {"retry_backoff_initial", oracle.retry_backoff_initial},
                     {"retry_backoff_multiplier", oracle.retry_backoff_multiplier},
                     {"credit_fixture", oracle.credit_fixture},
                     {"outage_start", oracle.outage_start},
                     {"outage_duration", oracle.outage_duration}};
    doc["services"] = {{"credit_port", services.credit_port}, {"erp_port", services.erp_port}};
    doc["benchmark"] = {{"pattern", benchmark.pattern},
                        {"n", benchmark.n},
                        {"pipeline", benchmark.pipeline},
                        {"pipeline_depth", benchmark.pipeline_depth}};
    doc["output"] = {{"csv", output.csv}, {"summary", output.summary}};
    return doc;
}

} // namespace oracleforge
