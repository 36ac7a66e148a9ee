#include <doctest.h>

#include <atomic>

#include <httplib.h>
#include <json.hpp>

#include "oracleforge/json_support.hpp"
#include "oracleforge/offchain/credit_service.hpp"
#include "oracleforge/offchain/erp_sink.hpp"
#include "oracleforge/offchain/http_services.hpp"
#include "oracleforge/offchain/scan_feed.hpp"
#include "support.hpp"

using namespace oracleforge;
using namespace oracleforge::offchain;
using nlohmann::json;

TEST_CASE("credit directory derives creditworthiness from score and threshold") {
    auto dir = CreditDirectory::from_json(json{
        {"threshold", 60},
        {"profiles",
         {{{"tax_id", "A"}, {"name", "Above"}, {"score", 60}},
          {{"tax_id", "B"}, {"name", "Below"}, {"score", 59}}}},
    });
    CHECK(dir.lookup("A")->creditworthy);
    CHECK_FALSE(dir.lookup("B")->creditworthy);
    CHECK_FALSE(dir.lookup("C").has_value());

    SUBCASE("duplicate tax ids and bad scores are load errors") {
        CHECK_THROWS_AS(CreditDirectory::from_json(json{
                            {"profiles",
                             {{{"tax_id", "A"}, {"name", "x"}, {"score", 1}},
                              {{"tax_id", "A"}, {"name", "y"}, {"score", 2}}}},
                        }),
                        ConfigError);
        CHECK_THROWS_AS(CreditDirectory::from_json(json{
                            {"profiles", {{{"tax_id", "A"}, {"name", "x"}, {"score", 101}}}},
                        }),
                        ConfigError);
    }
    SUBCASE("fixture files load the same way") {
        auto path = testsupport::temp_path("credit_fixture.json");
        testsupport::spit(path, json{{"threshold", 50},
                                     {"profiles",
                                      {{{"tax_id", "AT-123"}, {"name", "Fixture"}, {"score", 80}}}}}
                                    .dump());
        auto from_file = CreditDirectory::from_file(path.string());
        CHECK(from_file.lookup("AT-123")->creditworthy);
        CHECK_THROWS_AS(CreditDirectory::from_file("/nonexistent/file.json"), ConfigError);
    }
}

TEST_CASE("builtin credit fixture has both verdicts available") {
    auto dir = CreditDirectory::builtin_default();
    CHECK(dir.size() >= 4);
    CHECK(dir.lookup("AT-123")->creditworthy);
    CHECK(dir.lookup("AT-123")->score == 80);
    CHECK_FALSE(dir.lookup("AT-987")->creditworthy);
}

TEST_CASE("credit HTTP service: fixture echo, not-found, and outage window") {
    std::atomic<double> fake_now{0.0};
    CreditHttpService service(CreditDirectory::builtin_default(),
                              [&fake_now] { return fake_now.load(); },
                              OutageWindow{10.0, 1.2});
    service.start(0);
    httplib::Client client(service.base_url());

    auto ok = client.Get("/credit/AT-123");
    REQUIRE(ok);
    CHECK(ok->status == 200);
    auto profile = json::parse(ok->body).get<CreditProfile>();
    CHECK(profile.creditworthy);
    CHECK(profile.score == 80);

    auto missing = client.Get("/credit/XX-000");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    fake_now = 10.5; // inside the outage window
    auto during = client.Get("/credit/AT-123");
    REQUIRE(during);
    CHECK(during->status == 503);

    fake_now = 11.3; // window elapsed: service is reachable again
    auto after = client.Get("/credit/AT-123");
    REQUIRE(after);
    CHECK(after->status == 200);
}

TEST_CASE("scan feed is deterministic and always valid") {
    CHECK(emit_scans(0, 1).empty());
    auto a = emit_scans(2437, 42);
    auto b = emit_scans(2437, 42);
    auto c = emit_scans(100, 43);
    CHECK(a.size() == 2437);
    REQUIRE(b.size() == a.size());
    bool identical = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].order_id != b[i].order_id || a[i].item_name != b[i].item_name ||
            a[i].quantity != b[i].quantity) {
            identical = false;
        }
        CHECK(a[i].order_id == i + 1);
        CHECK_FALSE(a[i].item_name.empty());
        CHECK(a[i].quantity >= 1);
    }
    CHECK(identical);
    CHECK(c[0].order_id == 1);
}

TEST_CASE("erp store deduplicates by (tx_hash, log_index) and keeps insertion order") {
    ErpStore store;
    ErpMessage m1;
    m1.tx_hash = digest256("tx-1");
    m1.log_index = 0;
    m1.record = {1, "nuts", 2, "AT-1", 0.5};
    ErpMessage m2 = m1;
    m2.log_index = 1;

    CHECK(store.receive(m1));
    CHECK(store.receive(m2));
    CHECK_FALSE(store.receive(m1)); // replay acknowledged, nothing stored
    CHECK(store.size() == 2);
    auto dump = store.dump();
    CHECK(dump[0].log_index == 0);
    CHECK(dump[1].log_index == 1);
    CHECK(store.contains(m1.tx_hash, 0));
    CHECK_FALSE(store.contains(m1.tx_hash, 9));
}

TEST_CASE("erp store holds 438 distinct deliveries") {
    ErpStore store;
    for (int i = 0; i < 438; ++i) {
        ErpMessage m;
        m.tx_hash = digest256("tx-" + std::to_string(i));
        m.log_index = 0;
        m.record = {static_cast<std::uint32_t>(i + 1), "bolts", 1, "AT-1", 0.0};
        CHECK(store.receive(m));
    }
    CHECK(store.size() == 438);
}

TEST_CASE("erp HTTP service: store, replay-ack, dump and malformed bodies") {
    auto store = std::make_shared<ErpStore>();
    std::atomic<double> fake_now{99.5};
    ErpHttpService service(store, [&fake_now] { return fake_now.load(); });
    service.start(0);
    httplib::Client client(service.base_url());

    ErpMessage message;
    message.tx_hash = digest256("tx-http");
    message.log_index = 3;
    message.record = {7, "steel bolts", 500, "AT-1", 1.5};

    auto first = client.Post("/erp/messages", json(message).dump(), "application/json");
    REQUIRE(first);
    CHECK(first->status == 200);
    CHECK(json::parse(first->body).at("stored") == true);

    auto replay = client.Post("/erp/messages", json(message).dump(), "application/json");
    REQUIRE(replay);
    CHECK(json::parse(replay->body).at("stored") == false);
    CHECK(store->size() == 1);

    auto dump = client.Get("/erp/messages");
    REQUIRE(dump);
    auto listed = json::parse(dump->body);
    REQUIRE(listed.size() == 1);
    CHECK(listed[0].at("record").at("order_id") == 7);
    CHECK(listed[0].at("received_at") == doctest::Approx(99.5));

    auto bad = client.Post("/erp/messages", "{not json", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);
    auto incomplete = client.Post("/erp/messages", R"({"tx_hash": "0xzz"})", "application/json");
    REQUIRE(incomplete);
    CHECK(incomplete->status == 400);
    CHECK(store->size() == 1);
}
