#pragma once

#include <cstdint>
#include <vector>

#include "oracleforge/domain.hpp"

namespace oracleforge::offchain {

// Deterministic stream of valid raw scans: sequential order ids starting at
// first_order_id, item names and quantities drawn from a seeded stream.
std::vector<RawScan> emit_scans(std::size_t n, std::uint64_t seed,
                                std::uint32_t first_order_id = 1);

} // namespace oracleforge::offchain
