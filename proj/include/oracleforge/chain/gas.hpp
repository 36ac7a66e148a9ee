#pragma once

#include "oracleforge/chain/types.hpp"

namespace oracleforge::chain {

// Total gas for a transaction with the given declared effects:
//   tx_base
// + per calldata byte (nonzero / zero rate)
// + per storage write (new slot / update rate)
// + per log (base + per topic + per data byte)
// + the handler's fixed execution gas.
std::uint64_t compute_gas(const Transaction& tx, const Effects& effects, const GasSchedule& schedule);

std::uint64_t calldata_gas(const Bytes& payload, const GasSchedule& schedule);

} // namespace oracleforge::chain
