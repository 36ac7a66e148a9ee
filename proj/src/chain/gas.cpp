#include "oracleforge/chain/gas.hpp"

namespace oracleforge::chain {

std::uint64_t calldata_gas(const Bytes& payload, const GasSchedule& schedule) {
    std::uint64_t gas = 0;
    for (auto byte : payload) {
        gas += byte == 0 ? schedule.calldata_zero_byte : schedule.calldata_nonzero_byte;
    }
    return gas;
}

std::uint64_t compute_gas(const Transaction& tx, const Effects& effects, const GasSchedule& schedule) {
    std::uint64_t gas = schedule.tx_base;
    gas += calldata_gas(tx.payload, schedule);
    for (const auto& write : effects.storage_writes) {
        gas += write.is_new_slot ? schedule.sstore_new : schedule.sstore_update;
    }
    for (const auto& log : effects.logs) {
        gas += schedule.log_base;
        gas += schedule.log_topic * log.topics.size();
        gas += schedule.log_data_byte * log.data.size();
    }
    gas += effects.execution_gas;
    return gas;
}

} // namespace oracleforge::chain
