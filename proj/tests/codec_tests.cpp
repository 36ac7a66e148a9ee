#include <doctest.h>

#include <json.hpp>

#include "oracleforge/chain/chain.hpp"
#include "oracleforge/codec.hpp"
#include "oracleforge/contracts.hpp"
#include "oracleforge/runtime.hpp"
#include "oracleforge/sampling.hpp"
#include "support.hpp"

using namespace oracleforge;
using nlohmann::json;

namespace {

std::string random_name(SampleStream& stream, std::size_t min_len, std::size_t max_len) {
    static constexpr char chars[] = "abcdefghijklmnopqrstuvwxyz- 0123456789";
    auto len = stream.uniform_int(min_len, max_len);
    std::string name;
    for (std::uint64_t i = 0; i < len; ++i) {
        name.push_back(chars[stream.uniform_int(0, sizeof(chars) - 2)]);
    }
    return name;
}

} // namespace

TEST_CASE("codec round trips randomized records") {
    SampleStream stream(31337);
    for (int iter = 0; iter < 500; ++iter) {
        SUBCASE("") {}
        OrderPlacement order;
        order.order_id = static_cast<std::uint32_t>(stream.uniform_int(1, codec::kMaxOrderId));
        order.tax_id = random_name(stream, 1, 20);
        order.buyer_name = random_name(stream, 1, 60);
        CHECK(codec::decode_order_placement(codec::encode_order_placement(order)) == order);
        CHECK(codec::decode_credit_request_data(codec::encode_credit_request_data(order)) == order);

        CreditResponse response;
        response.order_id = order.order_id;
        response.creditworthy = stream.uniform01() < 0.5;
        CHECK(codec::decode_credit_response(codec::encode_credit_response(response)) == response);

        ScanRecord record;
        record.order_id = order.order_id;
        record.item_name = random_name(stream, 1, 40);
        record.quantity = static_cast<std::uint32_t>(stream.uniform_int(1, codec::kMaxQuantity));
        record.location = random_name(stream, 1, 30);
        record.scanned_at = static_cast<double>(stream.uniform_int(0, 1'000'000'000'000ull)) / 1e6;
        CHECK(codec::decode_scan_payload(codec::encode_scan_payload(record)) == record);
        CHECK(codec::decode_goods_event_data(codec::encode_goods_event_data(record)) == record);
    }
}

TEST_CASE("credit responses have a constant 11-byte all-nonzero layout") {
    for (std::uint32_t order : {1u, 42u, 0xabcdeu, codec::kMaxOrderId}) {
        for (bool verdict : {true, false}) {
            auto payload = codec::encode_credit_response({order, verdict});
            CHECK(payload.size() == 11);
            for (auto b : payload) CHECK(b != 0);
        }
    }
}

TEST_CASE("scan payloads contain no zero bytes") {
    auto payload = codec::encode_scan_payload({7, "steel bolts", 500, "AT-1", 0.0});
    CHECK(payload.size() == 4 + 6 + 4 + 12 + 1 + 11 + 1 + 4);
    for (auto b : payload) CHECK(b != 0);
}

TEST_CASE("codec rejects out-of-range and malformed inputs") {
    CHECK_THROWS_AS(codec::encode_credit_response({0, true}), CodecError);
    CHECK_THROWS_AS(codec::encode_scan_payload({1, "", 5, "AT-1", 0.0}), CodecError);
    CHECK_THROWS_AS(codec::encode_scan_payload({1, "x", 0x10000, "AT-1", 0.0}), CodecError);
    CHECK_THROWS_AS(codec::encode_scan_payload({1, std::string(300, 'a'), 5, "AT-1", 0.0}),
                    CodecError);
    CHECK_THROWS_AS(codec::encode_scan_payload({1, std::string(1, '\n'), 5, "AT-1", 0.0}),
                    CodecError);

    auto good = codec::encode_credit_response({9, true});
    good.push_back('x');
    CHECK_THROWS_AS(codec::decode_credit_response(good), CodecError);
    good.pop_back();
    good.back() = 'Q';
    CHECK_THROWS_AS(codec::decode_credit_response(good), CodecError);
    CHECK_THROWS_AS(codec::decode_scan_payload(to_bytes("SC")), CodecError);
    CHECK_THROWS_AS(codec::decode_scan_payload(to_bytes("CRED000009Y")), CodecError);
}

TEST_CASE("order contract: placement stores a hidden order and emits the request event") {
    chain::ChainConfig config;
    chain::SimChain chain(config);
    chain.register_behavior(contracts::credit_orders_contract());
    auto sub = chain.subscribe(runtime::Environment::credit_request_filter());

    OrderPlacement order{42, "AT-123", "Alpenstahl Handel GmbH"};
    chain::Transaction tx;
    tx.sender = "buyer";
    tx.to = contracts::kCreditOrdersAddress;
    tx.payload = codec::encode_order_placement(order);
    tx.nonce = 0;
    chain.submit_transaction(tx);
    chain.mine_next_block();

    auto ev = sub->next();
    REQUIRE(ev.has_value());
    CHECK(ev->event.topics.size() == 2);
    CHECK(ev->event.topics[0] == codec::credit_check_requested_topic());
    CHECK(id_word_value(ev->event.topics[1]) == 42);
    CHECK(codec::decode_credit_request_data(ev->event.data) == order);

    // pending orders are withheld from reads
    auto read = chain.call(contracts::kCreditOrdersAddress, codec::encode_order_query(42));
    auto doc = json::parse(std::string(read.begin(), read.end()));
    CHECK(doc.at("visible") == false);

    // absent orders return empty bytes
    CHECK(chain.call(contracts::kCreditOrdersAddress, codec::encode_order_query(77)).empty());
}

TEST_CASE("order contract: verdicts gate visibility; unknown orders revert") {
    chain::ChainConfig config;
    chain::SimChain chain(config);
    chain.register_behavior(contracts::credit_orders_contract());

    auto place = [&](std::uint32_t id, std::uint64_t nonce) {
        chain::Transaction tx;
        tx.sender = "buyer";
        tx.to = contracts::kCreditOrdersAddress;
        tx.payload = codec::encode_order_placement({id, "AT-123", "Someone"});
        tx.nonce = nonce;
        chain.submit_transaction(tx);
    };
    auto respond = [&](std::uint32_t id, bool ok, std::uint64_t nonce) {
        chain::Transaction tx;
        tx.sender = "oracle";
        tx.to = contracts::kCreditOrdersAddress;
        tx.payload = codec::encode_credit_response({id, ok});
        tx.nonce = nonce;
        return chain.submit_transaction(tx);
    };

    place(1, 0);
    place(2, 1);
    chain.mine_next_block();
    auto ok_hash = respond(1, true, 0);
    auto no_hash = respond(2, false, 1);
    auto orphan = respond(999, true, 2);
    chain.mine_next_block();

    CHECK(chain.get_receipt(ok_hash)->status == chain::TxStatus::Success);
    CHECK(chain.get_receipt(ok_hash)->gas_used == 22'770);
    CHECK(chain.get_receipt(no_hash)->gas_used == 22'770);
    CHECK(chain.get_receipt(orphan)->status == chain::TxStatus::Reverted);

    auto visible = json::parse(to_string_view_copy(
        chain.call(contracts::kCreditOrdersAddress, codec::encode_order_query(1))));
    CHECK(visible.at("visible") == true);
    CHECK(visible.at("verdict") == "creditworthy");
    auto withheld = json::parse(to_string_view_copy(
        chain.call(contracts::kCreditOrdersAddress, codec::encode_order_query(2))));
    CHECK(withheld.at("visible") == false);
}

TEST_CASE("goods contract: every scan costs a new slot and lands near the tuned gas point") {
    chain::ChainConfig config;
    chain::SimChain chain(config);
    chain.register_behavior(contracts::goods_tracking_contract());

    ScanRecord record{7, "steel bolts", 500, "AT-1", 1.5};
    chain::Transaction tx;
    tx.sender = "oracle";
    tx.to = contracts::kGoodsTrackingAddress;
    tx.payload = codec::encode_scan_payload(record);
    tx.nonce = 0;
    auto h1 = chain.submit_transaction(tx);
    tx.payload = codec::encode_scan_payload({8, "nuts", 3, "AT-1", 2.5});
    tx.nonce = 1;
    auto h2 = chain.submit_transaction(tx);
    chain.mine_next_block();

    // 44,323 fixed + 76 per item+location byte (hand sum of the schedule)
    CHECK(chain.get_receipt(h1)->gas_used == 44'323 + 76 * (11 + 4));
    CHECK(chain.get_receipt(h2)->gas_used == 44'323 + 76 * (4 + 4));

    auto records = json::parse(to_string_view_copy(
        chain.call(contracts::kGoodsTrackingAddress, codec::encode_trace_query(7))));
    REQUIRE(records.size() == 1);
    CHECK(records[0].at("item_name") == "steel bolts");
    CHECK(records[0].at("location") == "AT-1");
}
