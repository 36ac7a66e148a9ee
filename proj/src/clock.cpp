#include "oracleforge/clock.hpp"

#include <thread>

namespace oracleforge {

void RealtimeClock::sleep_for(double seconds) {
    if (seconds <= 0) return;
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
}

std::unique_ptr<Clock> make_clock(ClockMode mode) {
    if (mode == ClockMode::Realtime) return std::make_unique<RealtimeClock>();
    return std::make_unique<VirtualClock>();
}

} // namespace oracleforge
