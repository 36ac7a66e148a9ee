#pragma once

#include <cstdint>
#include <string>

#include "oracleforge/digest.hpp"

namespace oracleforge {

// Seeded profile served by the credit-assessment service. creditworthy is
// derived from score against the directory's threshold at load time.
struct CreditProfile {
    std::string tax_id;
    std::string name;
    bool creditworthy = false;
    int score = 0;
};

// What the scanner device actually produces. Location and timestamp are
// added later by the oracle controller.
struct RawScan {
    std::uint32_t order_id = 0;
    std::string item_name;
    std::uint32_t quantity = 0;
};

struct ScanRecord {
    std::uint32_t order_id = 0;
    std::string item_name;
    std::uint32_t quantity = 0;
    std::string location;
    double scanned_at = 0.0; // seconds, microsecond-quantized

    bool operator==(const ScanRecord&) const = default;
};

struct ErpMessage {
    Hash256 tx_hash;
    std::uint32_t log_index = 0;
    ScanRecord record;
    double received_at = 0.0;
};

struct OrderPlacement {
    std::uint32_t order_id = 0;
    std::string tax_id;
    std::string buyer_name;

    bool operator==(const OrderPlacement&) const = default;
};

struct CreditResponse {
    std::uint32_t order_id = 0;
    bool creditworthy = false;

    bool operator==(const CreditResponse&) const = default;
};

// Quantize a timestamp to whole microseconds so encoded records round-trip
// exactly.
double quantize_us(double seconds);

} // namespace oracleforge
