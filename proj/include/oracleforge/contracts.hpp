#pragma once

#include "oracleforge/chain/types.hpp"

namespace oracleforge::contracts {

inline constexpr const char* kCreditOrdersAddress = "0xc0de000000000000000000000000000000000001";
inline constexpr const char* kGoodsTrackingAddress = "0xc0de000000000000000000000000000000000002";

// Fixed execution gas per code path. The credit-response constant is chosen
// so a response transaction always costs exactly 22,770 gas (21,000 base +
// 11 nonzero calldata bytes + 1,022); the scan constant puts a typical
// registration around 45.2k gas including its new storage slot and event.
inline constexpr std::uint64_t kOrderPlacementExecGas = 500;
inline constexpr std::uint64_t kCreditResponseExecGas = 1'022;
inline constexpr std::uint64_t kScanExecGas = 102;

// Order book with oracle-driven creditworthiness gating.
//   ORDR: stores the order (hidden), emits CreditCheckRequested.
//   CRED: applies the oracle verdict; no storage write, no event.
//   GETO: returns the order as JSON when visible, a withheld stub when the
//         verdict was negative or is pending, empty bytes when absent.
chain::ContractBehavior credit_orders_contract();

// Goods registry for scan records.
//   SCAN: appends the record (one new storage slot), emits GoodsRegistered.
//   TRAC: returns all records for an order id as a JSON array.
chain::ContractBehavior goods_tracking_contract();

} // namespace oracleforge::contracts
