#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "oracleforge/bench/measurement.hpp"
#include "oracleforge/bench/stats.hpp"
#include "oracleforge/sampling.hpp"

using namespace oracleforge;
using namespace oracleforge::stats;

namespace reference {

// Deliberately naive re-implementations, kept independent of the library
// code they check.

double quantile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    double idx = p * static_cast<double>(v.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(idx));
    auto hi = static_cast<std::size_t>(std::ceil(idx));
    double w = idx - std::floor(idx);
    return v[lo] * (1.0 - w) + v[hi] * w;
}

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

struct Box {
    double lo_whisker, hi_whisker;
    std::vector<double> outliers;
};

Box box(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double q25 = quantile(v, 0.25), q75 = quantile(v, 0.75);
    double lo = q25 - 1.5 * (q75 - q25), hi = q75 + 1.5 * (q75 - q25);
    Box b{q25, q75, {}};
    bool first_in = false;
    for (double x : v) {
        if (x < lo || x > hi) {
            b.outliers.push_back(x);
        } else {
            if (!first_in) {
                b.lo_whisker = x;
                first_in = true;
            }
            b.hi_whisker = x;
        }
    }
    return b;
}

} // namespace reference

namespace {

bool close(double a, double b, double rel = 1e-9) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-30});
    return std::abs(a - b) / scale < rel;
}

} // namespace

TEST_CASE("summarize: singleton sample") {
    std::vector<double> v{5.0};
    auto s = summarize(v);
    CHECK(s.n == 1);
    CHECK(s.mean == 5.0);
    CHECK(s.std == 0.0);
    CHECK(s.min == 5.0);
    CHECK(s.q25 == 5.0);
    CHECK(s.q50 == 5.0);
    CHECK(s.q75 == 5.0);
    CHECK(s.max == 5.0);
}

TEST_CASE("summarize: interpolated quartiles of [1,2,3,4]") {
    std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    auto s = summarize(v);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.q25 == doctest::Approx(1.75)); // 1 + 0.75*(2-1), by hand
    CHECK(s.q50 == doctest::Approx(2.5));
    CHECK(s.q75 == doctest::Approx(3.25)); // 3 + 0.25*(4-3), by hand
}

TEST_CASE("summarize and boxplot refuse empty samples") {
    std::vector<double> none;
    CHECK_THROWS_AS(summarize(none), Error);
    CHECK_THROWS_AS(boxplot(none), Error);
}

TEST_CASE("summarize matches the naive reference on 1000 random vectors") {
    SampleStream stream(424242);
    for (int iter = 0; iter < 1000; ++iter) {
        auto n = stream.uniform_int(1, 80);
        std::vector<double> v;
        for (std::uint64_t i = 0; i < n; ++i) {
            v.push_back(stream.normal(0.0, 100.0) + stream.exponential(10.0));
        }
        auto s = summarize(v);
        REQUIRE(close(s.mean, reference::mean(v)));
        REQUIRE(close(s.std, reference::sample_std(v)));
        REQUIRE(close(s.q25, reference::quantile(v, 0.25)));
        REQUIRE(close(s.q50, reference::quantile(v, 0.50)));
        REQUIRE(close(s.q75, reference::quantile(v, 0.75)));
        REQUIRE(s.min <= s.q25);
        REQUIRE(s.q25 <= s.q50);
        REQUIRE(s.q50 <= s.q75);
        REQUIRE(s.q75 <= s.max);
    }
}

TEST_CASE("summarize over 10k samples agrees with the reference") {
    SampleStream stream(7);
    std::vector<double> v;
    for (int i = 0; i < 10'000; ++i) v.push_back(stream.exponential(13.0));
    auto s = summarize(v);
    CHECK(close(s.mean, reference::mean(v)));
    CHECK(close(s.std, reference::sample_std(v)));
    CHECK(close(s.q50, reference::quantile(v, 0.5)));
}

TEST_CASE("boxplot: degenerate and hand-checked fences") {
    std::vector<double> flat{1.0, 1.0, 1.0, 1.0};
    auto b = boxplot(flat);
    CHECK(b.q25 == 1.0);
    CHECK(b.q75 == 1.0);
    CHECK(b.outliers.empty());
    CHECK(b.lower_whisker == 1.0);
    CHECK(b.upper_whisker == 1.0);

    // q25=1.75, q75=27.25, IQR=25.5, upper fence 65.5: only 100 lies beyond
    std::vector<double> skewed{1.0, 2.0, 3.0, 100.0};
    auto s = boxplot(skewed);
    REQUIRE(s.outliers.size() == 1);
    CHECK(s.outliers[0] == 100.0);
    CHECK(s.upper_whisker == 3.0);
    CHECK(s.lower_whisker == 1.0);
}

TEST_CASE("boxplot matches the naive reference on random vectors") {
    SampleStream stream(555);
    for (int iter = 0; iter < 1000; ++iter) {
        auto n = stream.uniform_int(4, 60);
        std::vector<double> v;
        for (std::uint64_t i = 0; i < n; ++i) v.push_back(stream.exponential(5.0));
        auto mine = boxplot(v);
        auto ref = reference::box(v);
        REQUIRE(close(mine.lower_whisker, ref.lo_whisker));
        REQUIRE(close(mine.upper_whisker, ref.hi_whisker));
        REQUIRE(mine.outliers.size() == ref.outliers.size());
    }
}

TEST_CASE("to_eur: zero, frozen reference points, linearity") {
    CostModel model; // 144.86 EUR/ETH, 8.5 Gwei reference
    CHECK(to_eur(0, 8.5e9, model) == 0.0);

    // 22,770 * 8.5e-9 ETH * 144.86 EUR = 0.0280369..., computed by hand
    CHECK(std::abs(to_eur(22'770, 8.5e9, model) - 0.0280369287) < 1e-9);
    CHECK(std::abs(to_eur(22'770, 8.5e9, model) - 0.02804) < 1e-5);
    // 44,827 * 8.5e-9 * 144.86 = 0.0551959...
    CHECK(std::abs(to_eur(44'827, 8.5e9, model) - 0.0551959334) < 1e-9);
    CHECK(std::abs(to_eur(44'827, 8.5e9, model) - 0.05519) < 1e-5);
    CHECK(to_eur_at_reference(22'770, model) == to_eur(22'770, 8.5e9, model));

    SampleStream stream(99);
    for (int i = 0; i < 100; ++i) {
        double gas = stream.uniform01() * 1e6;
        double price = stream.uniform01() * 1e10;
        REQUIRE(close(to_eur(2 * gas, price, model), 2 * to_eur(gas, price, model), 1e-12));
        REQUIRE(close(to_eur(gas, 3 * price, model), 3 * to_eur(gas, price, model), 1e-12));
    }

    CostModel bad;
    bad.eur_per_eth = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("measurement invariants: dt recomputes from stamps") {
    bench::Measurement m;
    m.pattern = oracle::PatternKind::PushInbound;
    m.kind = bench::MeasurementKind::TxHashLatency;
    m.t1 = 10.0;
    m.t2 = 10.5;
    m.dt = 0.5;
    m.gas_used = 45'000;
    CHECK_NOTHROW(m.validate());

    SUBCASE("reversed clock stamps are rejected") {
        m.t2 = 9.0;
        m.dt = 0.0;
        CHECK_THROWS_AS(m.validate(), Error);
    }
    SUBCASE("dt must match its own timestamps") {
        m.dt = 0.75;
        CHECK_THROWS_AS(m.validate(), Error);
    }
    SUBCASE("mined latency validates t3->t4") {
        m.kind = bench::MeasurementKind::TxMinedLatency;
        m.t3 = 100.0;
        m.t4 = 113.0;
        m.dt = 13.0;
        CHECK_NOTHROW(m.validate());
        m.t4 = 99.0;
        m.dt = 0.0;
        CHECK_THROWS_AS(m.validate(), Error);
    }
}

TEST_CASE("csv round trip preserves every field") {
    std::vector<bench::Measurement> rows;
    bench::Measurement a;
    a.pattern = oracle::PatternKind::PullInbound;
    a.kind = bench::MeasurementKind::TxHashLatency;
    a.t1 = 1.25;
    a.t2 = 1.75;
    a.t3 = 14.0;
    a.dt = 0.5;
    a.gas_used = 22'770;
    a.gas_price_wei = 745'000'000;
    a.cost_eur = 0.00245735;
    rows.push_back(a);
    bench::Measurement b;
    b.pattern = oracle::PatternKind::PullOutbound;
    b.kind = bench::MeasurementKind::ReadLatency;
    b.t1 = 2.0;
    b.t2 = 2.12;
    b.dt = 0.12;
    rows.push_back(b);

    std::ostringstream out;
    bench::write_csv(out, rows);
    std::istringstream in(out.str());
    auto parsed = bench::read_csv(in);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].pattern == a.pattern);
    CHECK(parsed[0].t1 == a.t1);
    CHECK(parsed[0].gas_used == a.gas_used);
    CHECK(parsed[0].cost_eur == a.cost_eur);
    CHECK_FALSE(parsed[0].t4.has_value());
    CHECK(parsed[1].kind == bench::MeasurementKind::ReadLatency);
    CHECK_FALSE(parsed[1].gas_used.has_value());
}

TEST_CASE("csv parser names the offending line") {
    auto error_of = [](const std::string& text) -> std::string {
        std::istringstream in(text);
        try {
            bench::read_csv(in);
        } catch (const bench::CsvError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(error_of("not,a,header\n").find("line 1") != std::string::npos);
    CHECK(error_of(std::string(bench::kCsvHeader) +
                   "\npull-inbound,tx_hash_latency,1,2,,,x,,,\n")
              .find("line 2") != std::string::npos);
    CHECK_FALSE(error_of(std::string(bench::kCsvHeader) + "\n").empty()); // header but no rows
}
