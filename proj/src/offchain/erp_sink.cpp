#include "oracleforge/offchain/erp_sink.hpp"

namespace oracleforge::offchain {

bool ErpStore::receive(const ErpMessage& message) {
    std::lock_guard lock(mu_);
    if (!seen_.emplace(message.tx_hash.hex(), message.log_index).second) return false;
    messages_.push_back(message);
    return true;
}

std::vector<ErpMessage> ErpStore::dump() const {
    std::lock_guard lock(mu_);
    return messages_;
}

std::size_t ErpStore::size() const {
    std::lock_guard lock(mu_);
    return messages_.size();
}

bool ErpStore::contains(const Hash256& tx_hash, std::uint32_t log_index) const {
    std::lock_guard lock(mu_);
    return seen_.count({tx_hash.hex(), log_index}) > 0;
}

} // namespace oracleforge::offchain
