#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "oracleforge/clock.hpp"
#include "oracleforge/digest.hpp"
#include "oracleforge/sampling.hpp"

using namespace oracleforge;

TEST_CASE("digest256 is stable and input-sensitive") {
    auto a = digest256("hello");
    auto b = digest256("hello");
    auto c = digest256("hellp");
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.hex().size() == 66);
    CHECK(a.hex().substr(0, 2) == "0x");
    CHECK(Hash256::from_hex(a.hex()) == a);
}

TEST_CASE("digest256 disperses across small inputs") {
    // No collisions over a few thousand short strings.
    std::set<std::string> seen;
    for (int i = 0; i < 5000; ++i) {
        seen.insert(digest256("key-" + std::to_string(i)).hex());
    }
    CHECK(seen.size() == 5000);
}

TEST_CASE("id_word round-trips the trailing integer") {
    auto w = id_word(123456789);
    CHECK(id_word_value(w) == 123456789);
    CHECK(w.bytes[0] == 0);
}

TEST_CASE("virtual clock advances only when slept on") {
    VirtualClock clock;
    CHECK(clock.now() == 0.0);
    clock.sleep_for(1.5);
    CHECK(clock.now() == doctest::Approx(1.5));
    clock.sleep_until(1.0); // in the past: no-op
    CHECK(clock.now() == doctest::Approx(1.5));
    clock.sleep_until(4.0);
    CHECK(clock.now() == doctest::Approx(4.0));
}

TEST_CASE("sample stream is seed-deterministic") {
    SampleStream a(42), b(42), c(43);
    bool all_equal = true;
    bool any_diff_seed = false;
    for (int i = 0; i < 100; ++i) {
        double va = a.uniform01();
        if (va != b.uniform01()) all_equal = false;
        if (va != c.uniform01()) any_diff_seed = true;
        CHECK(va >= 0.0);
        CHECK(va < 1.0);
    }
    CHECK(all_equal);
    CHECK(any_diff_seed);
}

TEST_CASE("exponential sampler converges to its mean") {
    SampleStream stream(7);
    double sum = 0.0;
    const int n = 10'000;
    for (int i = 0; i < n; ++i) sum += stream.exponential(13.0);
    double mean = sum / n;
    CHECK(mean > 12.5);
    CHECK(mean < 13.5);
}

TEST_CASE("normal sampler hits mean and spread") {
    SampleStream stream(9);
    double sum = 0.0, ss = 0.0;
    const int n = 20'000;
    for (int i = 0; i < n; ++i) {
        double v = stream.normal(0.5, 0.05);
        sum += v;
        ss += v * v;
    }
    double mean = sum / n;
    double var = ss / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(std::sqrt(var) == doctest::Approx(0.05).epsilon(0.05));
}

TEST_CASE("latency model clamps at the minimum and applies the tail") {
    LatencyModel model{0.50, 0.05, 0.46, 0.02, 4.0};
    SampleStream stream(11);
    int tails = 0;
    const int n = 20'000;
    for (int i = 0; i < n; ++i) {
        double v = model.sample(stream);
        CHECK(v >= 0.46);
        if (v > 1.5) ++tails;
    }
    // tail probability 2%: expect roughly 400 inflated samples
    CHECK(tails > 250);
    CHECK(tails < 550);
}
