#include "oracleforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "oracleforge/bench/benchmark.hpp"
#include "oracleforge/scenario/scenarios.hpp"

namespace oracleforge::cli {

namespace {

RunConfig load_config(const std::string& config_flag) {
    if (!config_flag.empty()) return RunConfig::from_file(config_flag);
    if (const char* env = std::getenv("ORACLEFORGE_CONFIG"); env && *env) {
        return RunConfig::from_file(env);
    }
    return RunConfig{};
}

std::string summary_path_for(const std::string& csv_path) {
    std::string stem = csv_path;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
        stem.resize(stem.size() - 4);
    }
    return stem + ".summary.json";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
}

struct CommonFlags {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool realtime = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("--config", config_path, "Config file (JSON); falls back to $ORACLEFORGE_CONFIG");
        cmd.add_option("--seed", seed, "Chain seed override")->each([this](const std::string&) {
            seed_set = true;
        });
        cmd.add_flag("--realtime", realtime, "Wall-clock sleeps instead of the virtual clock");
    }

    RunConfig resolve() const {
        RunConfig config = load_config(config_path);
        if (seed_set) config.chain.seed = seed;
        if (realtime) config.chain.clock_mode = ClockMode::Realtime;
        return config;
    }
};

int cmd_bench(const CommonFlags& common, const std::string& pattern_flag, std::uint64_t n_flag,
              bool n_set, const std::string& out_flag, bool pipeline_flag) {
    RunConfig config = common.resolve();
    if (!pattern_flag.empty()) config.benchmark.pattern = pattern_flag;
    if (n_set) config.benchmark.n = n_flag;
    if (pipeline_flag) config.benchmark.pipeline = true;
    if (!out_flag.empty()) {
        config.output.csv = out_flag;
        config.output.summary = summary_path_for(out_flag);
    }
    config.validate();

    auto pattern = oracle::parse_pattern(config.benchmark.pattern);
    if (!pattern) {
        throw ConfigError("unknown pattern '" + config.benchmark.pattern +
                          "' (expected pull-inbound, push-inbound, pull-outbound or push-outbound)");
    }

    auto result = bench::run_benchmark(*pattern, config.benchmark.n, config);
    bench::write_csv_file(config.output.csv, result.measurements);
    write_text_file(config.output.summary, bench::summary_json(result).dump(2) + "\n");

    std::cout << bench::summary_table(result.measurements);
    std::cout << "failures: " << result.failures << "\n";
    std::cout << "csv: " << config.output.csv << "\n";
    std::cout << "summary: " << config.output.summary << "\n";
    return 0;
}

int cmd_demo(const CommonFlags& common, const std::string& scenario_name, std::uint64_t scans,
             std::uint64_t restart_after, std::uint32_t order_id, const std::string& buyer,
             const std::string& out_flag) {
    RunConfig config = common.resolve();
    config.validate();
    runtime::Environment env(config);

    scenario::ScenarioResult result;
    if (scenario_name == "credit-check") {
        scenario::CreditCheckOptions options;
        options.order_id = order_id;
        options.buyer_tax_id = buyer;
        result = scenario::run_credit_check(env, options);
    } else {
        scenario::QrTraceOptions options;
        options.scans = scans;
        options.restart_listener_after = restart_after;
        result = scenario::run_qr_trace(env, options);
    }

    std::string text = result.to_json().dump(2) + "\n";
    std::cout << text;
    if (!out_flag.empty()) write_text_file(out_flag, text);
    return 0;
}

int cmd_report(const std::string& csv_path, const std::string& format, const std::string& out_flag) {
    auto measurements = bench::read_csv_file(csv_path);
    std::string text;
    if (format == "table") {
        text = bench::summary_table(measurements);
    } else {
        text = bench::boxplot_json(measurements).dump(2) + "\n";
    }
    std::cout << text;
    if (!out_flag.empty()) write_text_file(out_flag, text);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Oracle integration patterns on a deterministic simulated chain"};
    app.require_subcommand(1);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run a pattern benchmark and write CSV + summary");
    CommonFlags bench_common;
    bench_common.attach(*bench_cmd);
    std::string pattern_flag;
    std::uint64_t n_flag = 0;
    bool n_set = false;
    std::string bench_out;
    bool pipeline_flag = false;
    bench_cmd->add_option("--pattern", pattern_flag,
                          "pull-inbound | push-inbound | pull-outbound | push-outbound");
    bench_cmd->add_option("--n", n_flag, "Number of invocations")->each([&n_set](const std::string&) {
        n_set = true;
    });
    bench_cmd->add_option("--out", bench_out, "CSV output path");
    bench_cmd->add_flag("--pipeline", pipeline_flag, "Batch submissions instead of one tx per block");

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "Run an end-to-end use case and print its result");
    CommonFlags demo_common;
    demo_common.attach(*demo_cmd);
    std::string scenario_name;
    std::uint64_t scans = 10;
    std::uint64_t restart_after = 0;
    std::uint32_t order_id = 42;
    std::string buyer = "AT-123";
    std::string demo_out;
    demo_cmd->add_option("scenario", scenario_name, "credit-check | qr-trace")
        ->required()
        ->check(CLI::IsMember({"credit-check", "qr-trace"}));
    demo_cmd->add_option("--scans", scans, "qr-trace: number of scans");
    demo_cmd->add_option("--restart-after", restart_after,
                         "qr-trace: force a listener restart after this many deliveries");
    demo_cmd->add_option("--order", order_id, "credit-check: order id");
    demo_cmd->add_option("--buyer", buyer, "credit-check: buyer tax id");
    demo_cmd->add_option("--out", demo_out, "Also write the result JSON here");

    // report
    auto* report_cmd = app.add_subcommand("report", "Summarize a benchmark CSV");
    std::string csv_path;
    std::string format = "table";
    std::string report_out;
    report_cmd->add_option("csv", csv_path, "CSV produced by bench")->required();
    report_cmd->add_option("--format", format, "table | boxplot")
        ->check(CLI::IsMember({"table", "boxplot"}));
    report_cmd->add_option("--out", report_out, "Also write the report here");

    std::vector<std::string> argv_storage;
    argv_storage.push_back("oracleforge");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, returns 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bench_cmd) {
            return cmd_bench(bench_common, pattern_flag, n_flag, n_set, bench_out, pipeline_flag);
        }
        if (*demo_cmd) {
            return cmd_demo(demo_common, scenario_name, scans, restart_after, order_id, buyer,
                            demo_out);
        }
        if (*report_cmd) {
            return cmd_report(csv_path, format, report_out);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const scenario::ScenarioError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace oracleforge::cli
