#include "oracleforge/offchain/scan_feed.hpp"

#include <array>

#include "oracleforge/sampling.hpp"

namespace oracleforge::offchain {

namespace {
// Item-name lengths are what drive the calldata variance of scan
// transactions; this mix centers the registered-scan gas cost where the
// shipped goods contract is tuned to sit.
constexpr std::array<const char*, 10> kItems = {
    "nuts",      "bolts",     "rivets",    "washers",   "bearings",
    "brackets",  "couplings", "gear sets", "axle pins", "steel bolts",
};
} // namespace

std::vector<RawScan> emit_scans(std::size_t n, std::uint64_t seed, std::uint32_t first_order_id) {
    SampleStream stream(seed);
    std::vector<RawScan> scans;
    scans.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RawScan scan;
        scan.order_id = first_order_id + static_cast<std::uint32_t>(i);
        scan.item_name = kItems[stream.uniform_int(0, kItems.size() - 1)];
        scan.quantity = static_cast<std::uint32_t>(stream.uniform_int(1, 500));
        scans.push_back(std::move(scan));
    }
    return scans;
}

} // namespace oracleforge::offchain
