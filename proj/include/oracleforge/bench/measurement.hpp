#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oracleforge/bench/stats.hpp"
#include "oracleforge/oracle/patterns.hpp"

namespace oracleforge::bench {

enum class MeasurementKind { TxHashLatency, TxMinedLatency, ReadLatency };

std::string_view to_string(MeasurementKind kind);
std::optional<MeasurementKind> parse_measurement_kind(std::string_view name);

// One timed (and, for inbound patterns, costed) oracle invocation.
//   t1  submission start          t2  tx-hash receipt
//   t3  including block timestamp t4  off-chain event receipt
// dt is t2-t1 for the hash latency, t4-t3 for the mined latency, and the
// call round trip for reads. Gas fields are present for inbound patterns
// only.
struct Measurement {
    oracle::PatternKind pattern = oracle::PatternKind::PullInbound;
    MeasurementKind kind = MeasurementKind::TxHashLatency;
    std::optional<double> t1;
    std::optional<double> t2;
    std::optional<double> t3;
    std::optional<double> t4;
    double dt = 0.0;
    std::optional<std::uint64_t> gas_used;
    std::optional<std::uint64_t> gas_price_wei;
    std::optional<double> cost_eur;

    // Recomputes dt from the stored timestamps and checks dt >= 0; throws
    // Error on a violation (e.g. t2 < t1 from clock misuse).
    void validate() const;
};

inline constexpr std::string_view kCsvHeader =
    "pattern,kind,t1,t2,t3,t4,dt_seconds,gas_used,gas_price_wei,cost_eur";

void write_csv(std::ostream& out, std::span<const Measurement> measurements);
void write_csv_file(const std::string& path, std::span<const Measurement> measurements);

class CsvError : public Error {
public:
    using Error::Error;
};

// Throws CsvError naming the offending 1-based line.
std::vector<Measurement> read_csv(std::istream& in);
std::vector<Measurement> read_csv_file(const std::string& path);

} // namespace oracleforge::bench
