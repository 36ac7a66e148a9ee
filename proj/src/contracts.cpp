#include "oracleforge/contracts.hpp"

#include <algorithm>

#include <json.hpp>

#include "oracleforge/codec.hpp"
#include "oracleforge/json_support.hpp"

namespace oracleforge::contracts {

namespace {

using nlohmann::json;
using chain::ContractState;
using chain::Effects;
using chain::RevertError;

std::string order_key(std::uint32_t order_id) {
    Bytes hex;
    // reuse codec's zero-padded hex via the query encoder, minus selector
    Bytes q = codec::encode_order_query(order_id);
    return "order/" + std::string(q.begin() + 4, q.end());
}

Bytes json_bytes(const json& j) {
    std::string s = j.dump();
    return Bytes(s.begin(), s.end());
}

json parse_json(const Bytes& b) {
    return json::parse(std::string(b.begin(), b.end()));
}

Effects handle_place_order(const Bytes& payload, const ContractState& state) {
    OrderPlacement order = codec::decode_order_placement(payload);
    std::string key = order_key(order.order_id);

    json record{{"order_id", order.order_id},
                {"tax_id", order.tax_id},
                {"buyer_name", order.buyer_name},
                {"visible", false},
                {"verdict", "pending"}};

    Effects fx;
    fx.execution_gas = kOrderPlacementExecGas;
    fx.storage_writes.push_back({key, state.storage.count(key) == 0, payload});
    fx.logs.push_back({{codec::credit_check_requested_topic(), codec::order_topic(order.order_id)},
                       codec::encode_credit_request_data(order)});
    fx.state_update[key] = json_bytes(record);
    return fx;
}

Effects handle_credit_response(const Bytes& payload, const ContractState& state) {
    CreditResponse response = codec::decode_credit_response(payload);
    std::string key = order_key(response.order_id);
    auto it = state.kv.find(key);
    if (it == state.kv.end()) {
        throw RevertError("credit response for unknown order", kCreditResponseExecGas);
    }
    json record = parse_json(it->second);
    record["visible"] = response.creditworthy;
    record["verdict"] = response.creditworthy ? "creditworthy" : "rejected";

    Effects fx;
    fx.execution_gas = kCreditResponseExecGas;
    fx.state_update[key] = json_bytes(record);
    return fx;
}

Effects handle_get_order(const Bytes& payload, const ContractState& state) {
    std::uint32_t order_id = codec::decode_order_id_query(payload, codec::kSelGetOrder);
    Effects fx;
    auto it = state.kv.find(order_key(order_id));
    if (it == state.kv.end()) return fx; // absent: empty return data
    json record = parse_json(it->second);
    if (record.value("visible", false)) {
        fx.return_data = it->second;
    } else {
        fx.return_data = json_bytes(json{{"order_id", order_id}, {"visible", false}});
    }
    return fx;
}

std::string padded_seq(std::uint64_t seq) {
    std::string s = std::to_string(seq);
    return std::string(12 - std::min<std::size_t>(12, s.size()), '0') + s;
}

Effects handle_register_scan(const Bytes& payload, const ContractState& state) {
    ScanRecord record = codec::decode_scan_payload(payload);

    std::uint64_t seq = 0;
    if (auto it = state.kv.find("seq"); it != state.kv.end()) {
        seq = std::stoull(std::string(it->second.begin(), it->second.end()));
    }
    Bytes event_data = codec::encode_goods_event_data(record);

    Effects fx;
    fx.execution_gas = kScanExecGas;
    std::string slot = "rec/" + padded_seq(seq);
    fx.storage_writes.push_back({slot, state.storage.count(slot) == 0, event_data});
    fx.logs.push_back({{codec::goods_registered_topic(), codec::order_topic(record.order_id)},
                       event_data});
    fx.state_update[order_key(record.order_id) + "/" + padded_seq(seq)] = event_data;
    std::string next = std::to_string(seq + 1);
    fx.state_update["seq"] = Bytes(next.begin(), next.end());
    return fx;
}

Effects handle_trace(const Bytes& payload, const ContractState& state) {
    std::uint32_t order_id = codec::decode_order_id_query(payload, codec::kSelTraceOrder);
    std::string prefix = order_key(order_id) + "/";

    json records = json::array();
    for (auto it = state.kv.lower_bound(prefix); it != state.kv.end(); ++it) {
        if (it->first.compare(0, prefix.size(), prefix) != 0) break;
        records.push_back(json(codec::decode_goods_event_data(it->second)));
    }
    Effects fx;
    fx.return_data = json_bytes(records);
    return fx;
}

} // namespace

chain::ContractBehavior credit_orders_contract() {
    chain::ContractBehavior behavior;
    behavior.address = kCreditOrdersAddress;
    behavior.handler = [](const Bytes& payload, const ContractState& state) -> Effects {
        auto sel = codec::selector_of(payload);
        if (sel == codec::kSelPlaceOrder) return handle_place_order(payload, state);
        if (sel == codec::kSelCreditResponse) return handle_credit_response(payload, state);
        if (sel == codec::kSelGetOrder) return handle_get_order(payload, state);
        throw RevertError("unknown selector for order contract", 0);
    };
    return behavior;
}

chain::ContractBehavior goods_tracking_contract() {
    chain::ContractBehavior behavior;
    behavior.address = kGoodsTrackingAddress;
    behavior.handler = [](const Bytes& payload, const ContractState& state) -> Effects {
        auto sel = codec::selector_of(payload);
        if (sel == codec::kSelRegisterScan) return handle_register_scan(payload, state);
        if (sel == codec::kSelTraceOrder) return handle_trace(payload, state);
        throw RevertError("unknown selector for goods contract", 0);
    };
    return behavior;
}

} // namespace oracleforge::contracts
