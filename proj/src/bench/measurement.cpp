#include "oracleforge/bench/measurement.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace oracleforge::bench {

std::string_view to_string(MeasurementKind kind) {
    switch (kind) {
        case MeasurementKind::TxHashLatency: return "tx_hash_latency";
        case MeasurementKind::TxMinedLatency: return "tx_mined_latency";
        case MeasurementKind::ReadLatency: return "read_latency";
    }
    return "unknown";
}

std::optional<MeasurementKind> parse_measurement_kind(std::string_view name) {
    if (name == "tx_hash_latency") return MeasurementKind::TxHashLatency;
    if (name == "tx_mined_latency") return MeasurementKind::TxMinedLatency;
    if (name == "read_latency") return MeasurementKind::ReadLatency;
    return std::nullopt;
}

void Measurement::validate() const {
    if (!(dt >= 0.0)) throw Error("measurement: dt must be >= 0");
    auto recheck = [this](const std::optional<double>& from, const std::optional<double>& to,
                          const char* what) {
        if (!from || !to) throw Error(std::string("measurement: missing timestamps for ") + what);
        if (*to < *from) throw Error(std::string("measurement: reversed timestamps for ") + what);
        if (std::abs((*to - *from) - dt) > 1e-9) {
            throw Error(std::string("measurement: dt does not recompute from ") + what);
        }
    };
    switch (kind) {
        case MeasurementKind::TxHashLatency:
        case MeasurementKind::ReadLatency: recheck(t1, t2, "t1->t2"); break;
        case MeasurementKind::TxMinedLatency: recheck(t3, t4, "t3->t4"); break;
    }
    if (gas_used && *gas_used == 0) throw Error("measurement: zero gas on an inbound invocation");
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void append_cell(std::string& row, const std::optional<double>& v) {
    row.push_back(',');
    if (v) row += format_double(*v);
}

void append_cell(std::string& row, const std::optional<std::uint64_t>& v) {
    row.push_back(',');
    if (v) row += std::to_string(*v);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell.push_back(c);
        }
    }
    cells.push_back(cell);
    return cells;
}

double parse_double_cell(const std::string& cell, std::size_t line_no) {
    double v = 0.0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw CsvError("csv line " + std::to_string(line_no) + ": bad number '" + cell + "'");
    }
    return v;
}

std::uint64_t parse_u64_cell(const std::string& cell, std::size_t line_no) {
    std::uint64_t v = 0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw CsvError("csv line " + std::to_string(line_no) + ": bad integer '" + cell + "'");
    }
    return v;
}

} // namespace

void write_csv(std::ostream& out, std::span<const Measurement> measurements) {
    out << kCsvHeader << '\n';
    for (const auto& m : measurements) {
        std::string row;
        row += to_string(m.pattern);
        row.push_back(',');
        row += to_string(m.kind);
        append_cell(row, m.t1);
        append_cell(row, m.t2);
        append_cell(row, m.t3);
        append_cell(row, m.t4);
        row.push_back(',');
        row += format_double(m.dt);
        append_cell(row, m.gas_used);
        append_cell(row, m.gas_price_wei);
        append_cell(row, m.cost_eur);
        out << row << '\n';
    }
}

void write_csv_file(const std::string& path, std::span<const Measurement> measurements) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_csv(out, measurements);
}

std::vector<Measurement> read_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw CsvError("csv line 1: missing header");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw CsvError("csv line 1: unexpected header '" + line + "'");

    std::vector<Measurement> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != 10) {
            throw CsvError("csv line " + std::to_string(line_no) + ": expected 10 columns, got " +
                           std::to_string(cells.size()));
        }
        Measurement m;
        auto pattern = oracle::parse_pattern(cells[0]);
        if (!pattern) {
            throw CsvError("csv line " + std::to_string(line_no) + ": unknown pattern '" + cells[0] +
                           "'");
        }
        m.pattern = *pattern;
        auto kind = parse_measurement_kind(cells[1]);
        if (!kind) {
            throw CsvError("csv line " + std::to_string(line_no) + ": unknown kind '" + cells[1] +
                           "'");
        }
        m.kind = *kind;
        if (!cells[2].empty()) m.t1 = parse_double_cell(cells[2], line_no);
        if (!cells[3].empty()) m.t2 = parse_double_cell(cells[3], line_no);
        if (!cells[4].empty()) m.t3 = parse_double_cell(cells[4], line_no);
        if (!cells[5].empty()) m.t4 = parse_double_cell(cells[5], line_no);
        m.dt = parse_double_cell(cells[6], line_no);
        if (!cells[7].empty()) m.gas_used = parse_u64_cell(cells[7], line_no);
        if (!cells[8].empty()) m.gas_price_wei = parse_u64_cell(cells[8], line_no);
        if (!cells[9].empty()) m.cost_eur = parse_double_cell(cells[9], line_no);
        out.push_back(m);
    }
    if (out.empty()) throw CsvError("csv has a header but no measurement rows");
    return out;
}

std::vector<Measurement> read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError("cannot open " + path);
    return read_csv(in);
}

} // namespace oracleforge::bench
