#pragma once

#include <span>
#include <string_view>

#include "oracleforge/common.hpp"
#include "oracleforge/digest.hpp"
#include "oracleforge/domain.hpp"

// Canonical wire layout shared by the modeled contracts and the oracle
// controllers.
//
// Transaction payloads start with a 4-byte ASCII selector:
//   "ORDR"  place order        hex6 order_id | len8 tax_id | len8 buyer_name
//   "CRED"  credit response    hex6 order_id | 1 byte 'Y' or 'N'
//   "SCAN"  register scan      hex6 order_id | hex4 quantity | hex12 scanned_at_us
//                              | len8 item_name | len8 location
// Read-only query payloads:
//   "GETO"  order by id        hex6 order_id   (returns JSON, empty if absent)
//   "TRAC"  trace records      hex6 order_id   (returns JSON array)
//
// Event topic[0] is the digest of the event name; topic[1] carries the
// order id. Event data uses the same fixed-width-hex / length-prefixed
// field scheme as the payloads. Numbers are zero-padded lowercase hex,
// strings are 1..255 printable ASCII bytes behind a 1-byte length, so every
// encoded byte is nonzero and a payload's calldata gas depends only on its
// length.
namespace oracleforge::codec {

inline constexpr std::string_view kSelPlaceOrder = "ORDR";
inline constexpr std::string_view kSelCreditResponse = "CRED";
inline constexpr std::string_view kSelRegisterScan = "SCAN";
inline constexpr std::string_view kSelGetOrder = "GETO";
inline constexpr std::string_view kSelTraceOrder = "TRAC";

inline constexpr std::uint32_t kMaxOrderId = 0xFFFFFF;  // hex6
inline constexpr std::uint32_t kMaxQuantity = 0xFFFF;   // hex4
inline constexpr std::size_t kMaxStringField = 255;

Hash256 credit_check_requested_topic(); // "CreditCheckRequested"
Hash256 goods_registered_topic();       // "GoodsRegistered"
Hash256 order_topic(std::uint32_t order_id);

std::string_view selector_of(const Bytes& payload); // throws CodecError if too short

Bytes encode_order_placement(const OrderPlacement& order);
OrderPlacement decode_order_placement(const Bytes& payload);

// Event data for CreditCheckRequested (the placement minus the selector).
Bytes encode_credit_request_data(const OrderPlacement& order);
OrderPlacement decode_credit_request_data(const Bytes& data);

Bytes encode_credit_response(const CreditResponse& response);
CreditResponse decode_credit_response(const Bytes& payload);

Bytes encode_scan_payload(const ScanRecord& record);
ScanRecord decode_scan_payload(const Bytes& payload);

// Event data for GoodsRegistered (the scan record minus the selector).
Bytes encode_goods_event_data(const ScanRecord& record);
ScanRecord decode_goods_event_data(const Bytes& data);

Bytes encode_order_query(std::uint32_t order_id);  // GETO
Bytes encode_trace_query(std::uint32_t order_id);  // TRAC
std::uint32_t decode_order_id_query(const Bytes& payload, std::string_view expected_selector);

} // namespace oracleforge::codec
