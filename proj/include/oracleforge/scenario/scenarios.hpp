#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oracleforge/runtime.hpp"

namespace oracleforge::scenario {

// Outcome of one end-to-end run. Step labels follow the figure numbering of
// the use case being executed; every on-chain step's artifact is its
// receipted transaction hash.
struct ScenarioResult {
    std::vector<std::string> steps_completed;
    std::vector<std::pair<std::string, std::string>> artifacts; // step -> artifact
    double wall_time = 0.0;
    std::string status; // order-visible | order-withheld | verification-failed | completed

    void add(const std::string& step, const std::string& artifact);
    nlohmann::ordered_json to_json() const;
};

// A broken run (conservation violation, missing event, ...). Defined
// negative outcomes like a withheld order are statuses, not errors.
class ScenarioError : public Error {
public:
    ScenarioError(std::string step, const std::string& message)
        : Error("scenario failed at step " + step + ": " + message), step_(std::move(step)) {}
    const std::string& step() const { return step_; }

private:
    std::string step_;
};

struct CreditCheckOptions {
    std::uint32_t order_id = 42;
    std::string buyer_tax_id = "AT-123";
    std::string buyer_name; // empty: looked up from the fixture, else a placeholder
};

// Order placement -> request event -> pull-inbound oracle -> credit service
// -> response transaction -> manufacturer read.
ScenarioResult run_credit_check(runtime::Environment& env, const CreditCheckOptions& options);

struct QrTraceOptions {
    std::size_t scans = 10;
    std::size_t restart_listener_after = 0; // ERP deliveries; 0 = never restart
    std::size_t batch = 10;                 // scans per mined block
};

// Each scan: push-inbound transaction -> chain event -> push-outbound ERP
// delivery, then a pull-outbound trace per order. Asserts conservation:
// scans = transactions = events = ERP messages = successful traces.
ScenarioResult run_qr_trace(runtime::Environment& env, const QrTraceOptions& options);

} // namespace oracleforge::scenario
