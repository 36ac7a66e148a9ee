#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oracleforge/clock.hpp"
#include "oracleforge/oracle/participants.hpp"

namespace oracleforge::oracle {

enum class PatternKind { PullInbound, PushInbound, PullOutbound, PushOutbound };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> parse_pattern(std::string_view name);

struct RetryPolicy {
    int attempts = 3;
    double initial_backoff = 0.5;
    double backoff_multiplier = 2.0;
};

struct DeadLetter {
    std::string correlation_id;
    std::string reason;
    int attempts = 0;
    double at = 0.0;
};

struct SkipDiagnostic {
    std::string context;
    std::string reason;
    double at = 0.0;
};

struct RejectedUpdate {
    RawScan scan;
    std::string reason;
    double at = 0.0;
};

// A logical off-chain request flowing through a controller; the correlation
// id survives the full round trip.
struct CorrelatedRequest {
    std::string correlation_id;
    nlohmann::json payload;
    double received_at = 0.0;
};

// All roles an oracle could be wired from. Each pattern uses exactly the
// participants of its interaction diagram; validate_participants enforces
// both the required and the forbidden set.
struct ParticipantSet {
    std::shared_ptr<EventListener> event_listener;
    std::shared_ptr<UpdateListener> update_listener;
    std::shared_ptr<OffchainStateRetriever> offchain_state_retriever;
    std::shared_ptr<OnchainStateRetriever> onchain_state_retriever;
    std::shared_ptr<BlockchainFacade> blockchain_facade;
    std::shared_ptr<OffchainTransmitter> offchain_transmitter;
};

void validate_participants(PatternKind kind, const ParticipantSet& participants);

// ---- pull-based inbound ------------------------------------------------------
//
// Request event from the chain -> controller decodes -> off-chain state
// retriever fetches -> facade submits exactly one response transaction per
// correlation id (the order id; the request tx hash is kept in the response
// record).

struct ResponseRecord {
    std::uint32_t order_id = 0;
    Hash256 request_tx_hash;
    Hash256 response_tx_hash;
    bool creditworthy = false;
};

class PullInboundOracle {
public:
    PullInboundOracle(Clock& clock, ParticipantSet participants, chain::Address response_contract,
                      RetryPolicy retry = {});

    // Processes one request event end to end. Returns the response tx hash,
    // or nullopt when the event was a duplicate, undecodable, or the
    // retrieval dead-lettered.
    std::optional<Hash256> run_pull_inbound(const chain::LogEvent& request_event);

    // Drains every available event from the listener.
    int poll();

    const std::map<std::string, ResponseRecord>& responses() const { return responses_; }
    const std::vector<SubmitRecord>& submissions() const { return facade_->records(); }
    const std::vector<DeadLetter>& dead_letters() const { return dead_letters_; }
    const std::vector<SkipDiagnostic>& skipped() const { return skipped_; }
    EventListener& listener() { return *listener_; }

private:
    Clock& clock_;
    std::shared_ptr<EventListener> listener_;
    std::shared_ptr<OffchainStateRetriever> retriever_;
    std::shared_ptr<BlockchainFacade> facade_;
    chain::Address response_contract_;
    RetryPolicy retry_;

    std::map<std::string, ResponseRecord> responses_; // correlation id -> record
    std::vector<DeadLetter> dead_letters_;
    std::vector<SkipDiagnostic> skipped_;
};

// ---- push-based inbound ------------------------------------------------------
//
// Off-chain update -> controller validates and enriches with location and
// timestamp -> facade submits one transaction that stores the state and
// emits an event.

class PushInboundOracle {
public:
    PushInboundOracle(Clock& clock, ParticipantSet participants, chain::Address contract,
                      std::string location);

    std::optional<Hash256> run_push_inbound(const RawScan& update);
    int poll();

    const std::vector<RejectedUpdate>& rejections() const { return rejections_; }
    const std::vector<SubmitRecord>& submissions() const { return facade_->records(); }
    std::uint64_t submitted_count() const { return submitted_; }

private:
    Clock& clock_;
    std::shared_ptr<UpdateListener> updates_;
    std::shared_ptr<BlockchainFacade> facade_;
    chain::Address contract_;
    std::string location_;

    std::vector<RejectedUpdate> rejections_;
    std::uint64_t submitted_ = 0;
};

// ---- pull-based outbound -----------------------------------------------------
//
// Off-chain request -> controller turns it into a chain query -> on-chain
// state retriever executes the read -> controller shapes the full record
// set for the caller. This class is the off-chain request handler.

struct TraceResult {
    bool ok = false;
    std::string error;
    nlohmann::json body;
};

class PullOutboundOracle {
public:
    PullOutboundOracle(ParticipantSet participants, chain::Address contract);

    TraceResult run_pull_outbound(const CorrelatedRequest& request);

private:
    std::shared_ptr<OnchainStateRetriever> retriever_;
    chain::Address contract_;
};

// ---- push-based outbound -----------------------------------------------------
//
// Chain event -> controller decodes -> off-chain transmitter delivers to
// the sink exactly once per (tx_hash, log_index), surviving listener
// restarts within a run.

struct DeliveryRecord {
    Hash256 tx_hash;
    std::uint32_t log_index = 0;
    ScanRecord record;
    double t4 = 0.0; // event receipt time
};

class PushOutboundOracle {
public:
    PushOutboundOracle(Clock& clock, ParticipantSet participants, RetryPolicy retry = {});

    std::optional<DeliveryRecord> run_push_outbound(const chain::DeliveredEvent& delivered);
    int poll();
    void restart(std::uint64_t from_block);

    const std::vector<DeliveryRecord>& deliveries() const { return deliveries_; }
    const std::vector<DeadLetter>& dead_letters() const { return dead_letters_; }
    const std::vector<SkipDiagnostic>& skipped() const { return skipped_; }
    std::size_t pending() const { return listener_->pending(); }

private:
    Clock& clock_;
    std::shared_ptr<EventListener> listener_;
    std::shared_ptr<OffchainTransmitter> transmitter_;
    RetryPolicy retry_;

    std::set<std::pair<std::string, std::uint32_t>> seen_;
    std::vector<DeliveryRecord> deliveries_;
    std::vector<DeadLetter> dead_letters_;
    std::vector<SkipDiagnostic> skipped_;
};

} // namespace oracleforge::oracle
