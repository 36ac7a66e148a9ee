#pragma once

#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "oracleforge/domain.hpp"

namespace oracleforge::offchain {

// Idempotent ERP message store. A message is identified by its on-chain
// source (tx_hash, log_index); replays are acknowledged without storing.
class ErpStore {
public:
    // Returns true when the message was stored, false when it was a
    // duplicate of an already-stored source.
    bool receive(const ErpMessage& message);

    std::vector<ErpMessage> dump() const; // insertion order
    std::size_t size() const;
    bool contains(const Hash256& tx_hash, std::uint32_t log_index) const;

private:
    mutable std::mutex mu_;
    std::vector<ErpMessage> messages_;
    std::set<std::pair<std::string, std::uint32_t>> seen_;
};

} // namespace oracleforge::offchain
