#pragma once

#include <chrono>
#include <memory>
#include <mutex>

namespace oracleforge {

enum class ClockMode { Virtual, Realtime };

// Simulation time source, in seconds since simulation start. The virtual
// implementation advances only when something sleeps on it, which makes
// every latency in the system an explicit, seeded sample instead of a
// scheduler artifact.
class Clock {
public:
    virtual ~Clock() = default;

    virtual double now() const = 0;
    virtual void sleep_for(double seconds) = 0;

    // Sleep until the given absolute time; a target in the past is a no-op.
    void sleep_until(double t) {
        double dt = t - now();
        if (dt > 0) sleep_for(dt);
    }
};

class VirtualClock final : public Clock {
public:
    double now() const override {
        std::lock_guard lock(mu_);
        return now_;
    }
    void sleep_for(double seconds) override {
        std::lock_guard lock(mu_);
        if (seconds > 0) now_ += seconds;
    }

private:
    mutable std::mutex mu_;
    double now_ = 0.0;
};

class RealtimeClock final : public Clock {
public:
    RealtimeClock() : start_(std::chrono::steady_clock::now()) {}

    double now() const override {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    void sleep_for(double seconds) override;

private:
    std::chrono::steady_clock::time_point start_;
};

std::unique_ptr<Clock> make_clock(ClockMode mode);

} // namespace oracleforge
