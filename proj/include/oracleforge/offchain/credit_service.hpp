#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracleforge/domain.hpp"

namespace oracleforge::offchain {

// Fixture-backed credit directory. Profiles carry a score; creditworthy is
// derived against the threshold at load time, so the two can never drift
// apart.
class CreditDirectory {
public:
    static CreditDirectory from_json(const nlohmann::json& doc);
    static CreditDirectory from_file(const std::string& path);
    static CreditDirectory builtin_default();

    std::optional<CreditProfile> lookup(const std::string& tax_id) const;
    std::size_t size() const { return profiles_.size(); }
    int threshold() const { return threshold_; }
    std::vector<std::string> tax_ids() const;

private:
    int threshold_ = 50;
    std::map<std::string, CreditProfile> profiles_;
};

// Simulated service outage, expressed against the simulation clock. A
// negative start means no outage.
struct OutageWindow {
    double start = -1.0;
    double duration = 0.0;

    bool active(double now) const {
        return start >= 0.0 && now >= start && now < start + duration;
    }
};

} // namespace oracleforge::offchain
