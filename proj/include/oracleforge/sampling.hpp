#pragma once

#include <cstdint>
#include <random>

namespace oracleforge {

// Seeded sample source. All distributions are hand-derived from uniform
// draws with a fixed draw count per call, so a given seed produces the same
// stream on every platform and the stream position depends only on the
// sequence of calls.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1). One draw.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [lo, hi]. One draw.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    // Exponential with the given mean. One draw.
    double exponential(double mean);

    // Normal via Box-Muller. Exactly two draws.
    double normal(double mean, double stddev);

private:
    std::mt19937_64 engine_;
};

// Round-trip latency model: a normal sample clamped below at `min`, with a
// small probability of a heavy-tail multiplier. Exactly three draws per
// sample.
struct LatencyModel {
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double tail_probability = 0.0;
    double tail_multiplier = 1.0;

    double sample(SampleStream& stream) const;
};

} // namespace oracleforge
