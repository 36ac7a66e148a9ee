#include "oracleforge/oracle/patterns.hpp"

#include "oracleforge/codec.hpp"
#include "oracleforge/json_support.hpp"

namespace oracleforge::oracle {

using nlohmann::json;

std::string_view to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::PullInbound: return "pull-inbound";
        case PatternKind::PushInbound: return "push-inbound";
        case PatternKind::PullOutbound: return "pull-outbound";
        case PatternKind::PushOutbound: return "push-outbound";
    }
    return "unknown";
}

std::optional<PatternKind> parse_pattern(std::string_view name) {
    if (name == "pull-inbound") return PatternKind::PullInbound;
    if (name == "push-inbound") return PatternKind::PushInbound;
    if (name == "pull-outbound") return PatternKind::PullOutbound;
    if (name == "push-outbound") return PatternKind::PushOutbound;
    return std::nullopt;
}

void validate_participants(PatternKind kind, const ParticipantSet& p) {
    struct Roles {
        bool event_listener, update_listener, offchain_retriever, onchain_retriever, facade,
            transmitter;
    };
    Roles wanted{};
    switch (kind) {
        case PatternKind::PullInbound: wanted = {true, false, true, false, true, false}; break;
        case PatternKind::PushInbound: wanted = {false, true, false, false, true, false}; break;
        case PatternKind::PullOutbound: wanted = {false, false, false, true, false, false}; break;
        case PatternKind::PushOutbound: wanted = {true, false, false, false, false, true}; break;
    }
    auto check = [&](bool want, bool have, const char* role) {
        if (want && !have) {
            throw Error(std::string(to_string(kind)) + " oracle requires the " + role);
        }
        if (!want && have) {
            throw Error(std::string(to_string(kind)) + " oracle must not be wired to the " + role);
        }
    };
    check(wanted.event_listener, p.event_listener != nullptr, "event listener");
    check(wanted.update_listener, p.update_listener != nullptr, "update listener");
    check(wanted.offchain_retriever, p.offchain_state_retriever != nullptr,
          "off-chain state retriever");
    check(wanted.onchain_retriever, p.onchain_state_retriever != nullptr,
          "on-chain state retriever");
    check(wanted.facade, p.blockchain_facade != nullptr, "blockchain facade");
    check(wanted.transmitter, p.offchain_transmitter != nullptr, "off-chain transmitter");
}

// ---- pull-based inbound ------------------------------------------------------

PullInboundOracle::PullInboundOracle(Clock& clock, ParticipantSet participants,
                                     chain::Address response_contract, RetryPolicy retry)
    : clock_(clock),
      listener_(participants.event_listener),
      retriever_(participants.offchain_state_retriever),
      facade_(participants.blockchain_facade),
      response_contract_(std::move(response_contract)),
      retry_(retry) {
    validate_participants(PatternKind::PullInbound, participants);
}

std::optional<Hash256> PullInboundOracle::run_pull_inbound(const chain::LogEvent& request_event) {
    OrderPlacement order;
    try {
        order = codec::decode_credit_request_data(request_event.data);
    } catch (const CodecError& e) {
        skipped_.push_back({"request event " + request_event.tx_hash.hex(), e.what(), clock_.now()});
        return std::nullopt;
    }

    if (order.order_id < 1) {
        skipped_.push_back({"request event " + request_event.tx_hash.hex(),
                            "order_id must be >= 1", clock_.now()});
        return std::nullopt;
    }

    std::string correlation_id = std::to_string(order.order_id);
    if (responses_.count(correlation_id)) return std::nullopt; // duplicate delivery

    CreditLookup lookup;
    double backoff = retry_.initial_backoff;
    for (int attempt = 1;; ++attempt) {
        lookup = retriever_->fetch_credit(order.tax_id);
        if (lookup.status != CreditLookup::Status::Unavailable) break;
        if (attempt >= retry_.attempts) {
            dead_letters_.push_back({correlation_id, lookup.error, attempt, clock_.now()});
            return std::nullopt;
        }
        clock_.sleep_for(backoff);
        backoff *= retry_.backoff_multiplier;
    }

    // A definitive not-found is a verdict, not an outage: the buyer cannot
    // be verified, so the order stays withheld.
    bool creditworthy =
        lookup.status == CreditLookup::Status::Ok && lookup.profile.creditworthy;

    SubmitRecord submitted =
        facade_->submit(response_contract_,
                        codec::encode_credit_response({order.order_id, creditworthy}));
    responses_[correlation_id] =
        ResponseRecord{order.order_id, request_event.tx_hash, submitted.tx_hash, creditworthy};
    return submitted.tx_hash;
}

int PullInboundOracle::poll() {
    int processed = 0;
    while (auto delivered = listener_->next()) {
        run_pull_inbound(delivered->event);
        ++processed;
    }
    return processed;
}

// ---- push-based inbound ------------------------------------------------------

PushInboundOracle::PushInboundOracle(Clock& clock, ParticipantSet participants,
                                     chain::Address contract, std::string location)
    : clock_(clock),
      updates_(participants.update_listener),
      facade_(participants.blockchain_facade),
      contract_(std::move(contract)),
      location_(std::move(location)) {
    validate_participants(PatternKind::PushInbound, participants);
}

std::optional<Hash256> PushInboundOracle::run_push_inbound(const RawScan& update) {
    std::string reason;
    if (update.order_id < 1) {
        reason = "order_id must be >= 1";
    } else if (update.order_id > codec::kMaxOrderId) {
        reason = "order_id out of range";
    } else if (update.item_name.empty()) {
        reason = "item_name must not be empty";
    } else if (update.quantity < 1) {
        reason = "quantity must be >= 1";
    } else if (update.quantity > codec::kMaxQuantity) {
        reason = "quantity out of range";
    }
    if (!reason.empty()) {
        rejections_.push_back({update, reason, clock_.now()});
        return std::nullopt;
    }

    ScanRecord record;
    record.order_id = update.order_id;
    record.item_name = update.item_name;
    record.quantity = update.quantity;
    record.location = location_;
    record.scanned_at = quantize_us(clock_.now());

    Bytes payload;
    try {
        payload = codec::encode_scan_payload(record);
    } catch (const CodecError& e) {
        // unencodable names (non-printable, oversized) are rejections too
        rejections_.push_back({update, e.what(), clock_.now()});
        return std::nullopt;
    }
    SubmitRecord submitted = facade_->submit(contract_, payload);
    ++submitted_;
    return submitted.tx_hash;
}

int PushInboundOracle::poll() {
    int processed = 0;
    while (auto update = updates_->next_update()) {
        run_push_inbound(*update);
        ++processed;
    }
    return processed;
}

// ---- pull-based outbound -----------------------------------------------------

PullOutboundOracle::PullOutboundOracle(ParticipantSet participants, chain::Address contract)
    : retriever_(participants.onchain_state_retriever), contract_(std::move(contract)) {
    validate_participants(PatternKind::PullOutbound, participants);
}

TraceResult PullOutboundOracle::run_pull_outbound(const CorrelatedRequest& request) {
    TraceResult result;
    std::int64_t order_id = 0;
    if (request.payload.is_object() && request.payload.contains("order_id") &&
        request.payload.at("order_id").is_number_integer()) {
        order_id = request.payload.at("order_id").get<std::int64_t>();
    }
    if (order_id < 1 || order_id > codec::kMaxOrderId) {
        result.error = "malformed query: payload requires an order_id in [1, 16777215]";
        return result;
    }

    Bytes raw;
    try {
        raw = retriever_->query(contract_,
                                codec::encode_trace_query(static_cast<std::uint32_t>(order_id)));
    } catch (const chain::QueryError& e) {
        result.error = std::string("query rejected: ") + e.what();
        return result;
    }

    result.ok = true;
    result.body = json{{"correlation_id", request.correlation_id},
                       {"order_id", order_id},
                       {"records", json::parse(std::string(raw.begin(), raw.end()))}};
    return result;
}

// ---- push-based outbound -----------------------------------------------------

PushOutboundOracle::PushOutboundOracle(Clock& clock, ParticipantSet participants, RetryPolicy retry)
    : clock_(clock),
      listener_(participants.event_listener),
      transmitter_(participants.offchain_transmitter),
      retry_(retry) {
    validate_participants(PatternKind::PushOutbound, participants);
}

std::optional<DeliveryRecord> PushOutboundOracle::run_push_outbound(
    const chain::DeliveredEvent& delivered) {
    const chain::LogEvent& event = delivered.event;
    auto key = std::make_pair(event.tx_hash.hex(), event.log_index);
    if (seen_.count(key)) return std::nullopt; // replayed event

    ScanRecord record;
    try {
        record = codec::decode_goods_event_data(event.data);
    } catch (const CodecError& e) {
        skipped_.push_back({"event " + event.tx_hash.hex() + "#" + std::to_string(event.log_index),
                            e.what(), clock_.now()});
        return std::nullopt;
    }

    ErpMessage message;
    message.tx_hash = event.tx_hash;
    message.log_index = event.log_index;
    message.record = record;
    message.received_at = delivered.received_at;

    std::string error;
    double backoff = retry_.initial_backoff;
    for (int attempt = 1;; ++attempt) {
        if (transmitter_->deliver(message, error)) break;
        if (attempt >= retry_.attempts) {
            dead_letters_.push_back({key.first + "#" + std::to_string(key.second), error, attempt,
                                     clock_.now()});
            return std::nullopt;
        }
        clock_.sleep_for(backoff);
        backoff *= retry_.backoff_multiplier;
    }

    seen_.insert(key);
    DeliveryRecord delivery{event.tx_hash, event.log_index, record, delivered.received_at};
    deliveries_.push_back(delivery);
    return delivery;
}

int PushOutboundOracle::poll() {
    int processed = 0;
    while (auto delivered = listener_->next()) {
        run_push_outbound(*delivered);
        ++processed;
    }
    return processed;
}

void PushOutboundOracle::restart(std::uint64_t from_block) {
    listener_->restart(from_block);
}

} // namespace oracleforge::oracle
