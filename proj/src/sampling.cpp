#include "oracleforge/sampling.hpp"

#include <cmath>

namespace oracleforge {

std::uint64_t SampleStream::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    // Scaling a single draw keeps the draw count fixed; the bias is far
    // below anything a simulation at this scale can observe.
    std::uint64_t span = hi - lo + 1;
    return lo + static_cast<std::uint64_t>(uniform01() * static_cast<double>(span));
}

double SampleStream::exponential(double mean) {
    // -mean * ln(1 - U) with U in [0, 1); log1p keeps the argument nonzero.
    return -mean * std::log1p(-uniform01());
}

double SampleStream::normal(double mean, double stddev) {
    double u1 = 1.0 - uniform01(); // (0, 1], safe for log
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

double LatencyModel::sample(SampleStream& stream) const {
    double v = stream.normal(mean, stddev);
    if (v < min) v = min;
    double tail = stream.uniform01();
    if (tail < tail_probability) v *= tail_multiplier;
    return v;
}

} // namespace oracleforge
