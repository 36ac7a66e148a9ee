#include "oracleforge/scenario/scenarios.hpp"

#include "oracleforge/codec.hpp"
#include "oracleforge/contracts.hpp"
#include "oracleforge/offchain/scan_feed.hpp"

namespace oracleforge::scenario {

using nlohmann::json;
using nlohmann::ordered_json;

void ScenarioResult::add(const std::string& step, const std::string& artifact) {
    steps_completed.push_back(step);
    artifacts.emplace_back(step, artifact);
}

ordered_json ScenarioResult::to_json() const {
    ordered_json doc;
    doc["status"] = status;
    doc["wall_time"] = wall_time;
    doc["steps_completed"] = steps_completed;
    ordered_json arts;
    for (const auto& [step, artifact] : artifacts) arts[step] = artifact;
    doc["artifacts"] = arts;
    return doc;
}

ScenarioResult run_credit_check(runtime::Environment& env, const CreditCheckOptions& options) {
    ScenarioResult result;
    double t0 = env.clock().now();

    std::string buyer_name = options.buyer_name;
    if (buyer_name.empty()) {
        auto profile = env.credit_directory().lookup(options.buyer_tax_id);
        buyer_name = profile ? profile->name : "Unknown Buyer Ltd";
    }
    OrderPlacement order{options.order_id, options.buyer_tax_id, buyer_name};

    auto oracle = env.make_pull_inbound();
    auto buyer = env.facade_for("buyer-" + options.buyer_tax_id);

    result.add("1:order-placed", json{{"order_id", order.order_id},
                                      {"tax_id", order.tax_id},
                                      {"buyer_name", order.buyer_name}}
                                     .dump());

    auto submitted =
        buyer->submit(contracts::kCreditOrdersAddress, codec::encode_order_placement(order));
    env.chain().mine_next_block();
    result.add("2:order-tx-mined", submitted.tx_hash.hex());

    auto delivered = oracle->listener().next();
    if (!delivered) throw ScenarioError("3:request-event-received", "no request event was published");
    result.add("3:request-event-received",
               delivered->event.tx_hash.hex() + "#" + std::to_string(delivered->event.log_index));

    auto response_hash = oracle->run_pull_inbound(delivered->event);
    if (!response_hash) {
        const auto& dead = oracle->dead_letters();
        std::string reason = dead.empty() ? "request skipped" : dead.back().reason;
        result.add("4:credit-api-unreachable", reason);
        result.status = "verification-failed";
        result.wall_time = env.clock().now() - t0;
        return result;
    }
    result.add("4:credit-api-called", order.tax_id);

    const auto& record = oracle->responses().at(std::to_string(order.order_id));
    result.add("5:response-processed", record.creditworthy ? "creditworthy" : "not creditworthy");

    env.chain().mine_next_block();
    auto receipt = env.chain().get_receipt(*response_hash);
    if (!receipt) throw ScenarioError("6:response-tx-mined", "response transaction not mined");
    result.add("6:response-tx-mined", response_hash->hex());

    Bytes read = env.chain().call(contracts::kCreditOrdersAddress,
                                  codec::encode_order_query(order.order_id));
    std::string body(read.begin(), read.end());
    if (body.empty()) throw ScenarioError("7:order-accessed", "order record missing");
    bool visible = json::parse(body).value("visible", false);
    result.add("7:order-accessed", body);

    result.status = visible ? "order-visible" : "order-withheld";
    result.wall_time = env.clock().now() - t0;
    return result;
}

ScenarioResult run_qr_trace(runtime::Environment& env, const QrTraceOptions& options) {
    ScenarioResult result;
    double t0 = env.clock().now();

    auto scans = offchain::emit_scans(options.scans, env.config().chain.seed);
    auto queue = std::make_shared<oracle::ScanQueue>();
    auto push_in = env.make_push_inbound(queue);
    auto push_out = env.make_push_outbound();
    auto pull_out = env.make_pull_outbound();

    result.add("1:package-scanned", std::to_string(scans.size()) + " scans");
    result.add("2:qr-decoded", "order id, item name, quantity");

    std::size_t restarts = 0;
    std::size_t batch = options.batch < 1 ? 1 : options.batch;
    std::size_t done = 0;
    while (done < scans.size()) {
        std::size_t count = std::min(batch, scans.size() - done);
        for (std::size_t i = 0; i < count; ++i) queue->push(scans[done + i]);
        push_in->poll();
        env.chain().mine_next_block();
        push_out->poll();
        done += count;

        if (options.restart_listener_after > 0 && restarts == 0 &&
            push_out->deliveries().size() >= options.restart_listener_after) {
            // Simulated listener crash: the replacement re-subscribes from
            // genesis and replays everything it may have missed.
            push_out->restart(0);
            ++restarts;
        }
    }
    while (env.chain().mempool_size() > 0) {
        env.chain().mine_next_block();
        push_out->poll();
    }
    push_out->poll();

    result.add("3:update-received", std::to_string(options.scans) + " updates");
    std::size_t txs = push_in->submissions().size();
    result.add("4:scan-tx-mined",
               txs == 0 ? "none" : std::to_string(txs) + " txs, first " +
                                       push_in->submissions().front().tx_hash.hex());
    result.add("5a:event-received", std::to_string(env.chain().events_emitted()) + " events");
    result.add("6a:erp-delivered", std::to_string(env.erp_store().size()) + " messages");

    std::size_t found = 0;
    for (const auto& scan : scans) {
        oracle::CorrelatedRequest request{"trace-" + std::to_string(scan.order_id),
                                          json{{"order_id", scan.order_id}}, env.clock().now()};
        auto response = pull_out->run_pull_outbound(request);
        if (!response.ok) {
            throw ScenarioError("6b:request-handler-invoked", response.error);
        }
        if (!response.body.at("records").empty()) ++found;
    }
    result.add("5b:trace-requested", std::to_string(scans.size()) + " trace queries");
    result.add("6b:request-handler-invoked", "pull-outbound handler");
    result.add("7b:chain-query-executed", contracts::kGoodsTrackingAddress);
    result.add("8b:records-found", std::to_string(found) + " orders with records");
    result.add("9b:records-returned", "full data record per order");
    if (restarts > 0) result.add("listener-restarts", std::to_string(restarts));

    if (txs != options.scans) {
        throw ScenarioError("4:scan-tx-mined", "expected " + std::to_string(options.scans) +
                                                   " transactions, saw " + std::to_string(txs));
    }
    if (env.chain().events_emitted() != options.scans) {
        throw ScenarioError("5a:event-received", "event count does not match scan count");
    }
    if (env.erp_store().size() != options.scans) {
        throw ScenarioError("6a:erp-delivered", "expected " + std::to_string(options.scans) +
                                                    " ERP messages, saw " +
                                                    std::to_string(env.erp_store().size()));
    }
    if (found != scans.size()) {
        throw ScenarioError("8b:records-found", "a trace query found no record");
    }

    result.status = "completed";
    result.wall_time = env.clock().now() - t0;
    return result;
}

} // namespace oracleforge::scenario
