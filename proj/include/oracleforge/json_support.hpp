#pragma once

#include <json.hpp>

#include "oracleforge/domain.hpp"

// ADL serializers shared by the services, the modeled contracts and the
// CLI. Templated on the json type so both json and ordered_json work.
namespace oracleforge {

template <typename J>
void to_json(J& j, const ScanRecord& r) {
    j = J{{"order_id", r.order_id},
          {"item_name", r.item_name},
          {"quantity", r.quantity},
          {"location", r.location},
          {"scanned_at", r.scanned_at}};
}

template <typename J>
void from_json(const J& j, ScanRecord& r) {
    j.at("order_id").get_to(r.order_id);
    j.at("item_name").get_to(r.item_name);
    j.at("quantity").get_to(r.quantity);
    j.at("location").get_to(r.location);
    j.at("scanned_at").get_to(r.scanned_at);
}

template <typename J>
void to_json(J& j, const CreditProfile& p) {
    j = J{{"tax_id", p.tax_id},
          {"name", p.name},
          {"creditworthy", p.creditworthy},
          {"score", p.score}};
}

template <typename J>
void from_json(const J& j, CreditProfile& p) {
    j.at("tax_id").get_to(p.tax_id);
    j.at("name").get_to(p.name);
    j.at("creditworthy").get_to(p.creditworthy);
    j.at("score").get_to(p.score);
}

template <typename J>
void to_json(J& j, const ErpMessage& m) {
    j = J{{"tx_hash", m.tx_hash.hex()},
          {"log_index", m.log_index},
          {"record", m.record},
          {"received_at", m.received_at}};
}

template <typename J>
void from_json(const J& j, ErpMessage& m) {
    m.tx_hash = Hash256::from_hex(j.at("tx_hash").template get<std::string>());
    j.at("log_index").get_to(m.log_index);
    j.at("record").get_to(m.record);
    if (j.contains("received_at")) j.at("received_at").get_to(m.received_at);
}

} // namespace oracleforge
