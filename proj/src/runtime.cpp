#include "oracleforge/runtime.hpp"

#include "oracleforge/codec.hpp"
#include "oracleforge/contracts.hpp"

namespace oracleforge::runtime {

Environment::Environment(RunConfig config) : config_(std::move(config)) {
    config_.validate();
    chain_ = std::make_unique<chain::SimChain>(config_.chain);
    chain_->register_behavior(contracts::credit_orders_contract());
    chain_->register_behavior(contracts::goods_tracking_contract());

    auto directory = config_.oracle.credit_fixture.empty()
                         ? offchain::CreditDirectory::builtin_default()
                         : offchain::CreditDirectory::from_file(config_.oracle.credit_fixture);
    offchain::OutageWindow outage{config_.oracle.outage_start, config_.oracle.outage_duration};
    offchain::TimeSource time_source = [clock = &chain_->clock()] { return clock->now(); };

    credit_service_ = std::make_unique<offchain::CreditHttpService>(std::move(directory),
                                                                    time_source, outage);
    credit_service_->start(config_.services.credit_port);

    erp_store_ = std::make_shared<offchain::ErpStore>();
    erp_service_ = std::make_unique<offchain::ErpHttpService>(erp_store_, time_source);
    erp_service_->start(config_.services.erp_port);
}

Environment::~Environment() = default;

oracle::RetryPolicy Environment::retry_policy() const {
    return oracle::RetryPolicy{config_.oracle.retry_attempts, config_.oracle.retry_backoff_initial,
                               config_.oracle.retry_backoff_multiplier};
}

std::shared_ptr<oracle::ChainFacade> Environment::facade_for(const chain::AccountId& account) {
    return std::make_shared<oracle::ChainFacade>(*chain_, account, gas_price_wei());
}

chain::EventFilter Environment::credit_request_filter() {
    return chain::EventFilter{contracts::kCreditOrdersAddress,
                              codec::credit_check_requested_topic()};
}

chain::EventFilter Environment::goods_registered_filter() {
    return chain::EventFilter{contracts::kGoodsTrackingAddress, codec::goods_registered_topic()};
}

std::unique_ptr<oracle::PullInboundOracle> Environment::make_pull_inbound() {
    oracle::ParticipantSet participants;
    participants.event_listener =
        std::make_shared<oracle::ChainEventListener>(*chain_, credit_request_filter());
    participants.offchain_state_retriever =
        std::make_shared<oracle::HttpCreditRetriever>(credit_url());
    participants.blockchain_facade = facade_for("oracle-pull-inbound");
    return std::make_unique<oracle::PullInboundOracle>(chain_->clock(), std::move(participants),
                                                       contracts::kCreditOrdersAddress,
                                                       retry_policy());
}

std::unique_ptr<oracle::PushInboundOracle> Environment::make_push_inbound(
    std::shared_ptr<oracle::ScanQueue> updates) {
    oracle::ParticipantSet participants;
    participants.update_listener = std::move(updates);
    participants.blockchain_facade = facade_for("oracle-push-inbound");
    return std::make_unique<oracle::PushInboundOracle>(chain_->clock(), std::move(participants),
                                                       contracts::kGoodsTrackingAddress,
                                                       config_.oracle.location);
}

std::unique_ptr<oracle::PullOutboundOracle> Environment::make_pull_outbound() {
    oracle::ParticipantSet participants;
    participants.onchain_state_retriever = std::make_shared<oracle::ChainStateRetriever>(*chain_);
    return std::make_unique<oracle::PullOutboundOracle>(std::move(participants),
                                                        contracts::kGoodsTrackingAddress);
}

std::unique_ptr<oracle::PushOutboundOracle> Environment::make_push_outbound() {
    oracle::ParticipantSet participants;
    participants.event_listener =
        std::make_shared<oracle::ChainEventListener>(*chain_, goods_registered_filter());
    participants.offchain_transmitter = std::make_shared<oracle::HttpErpTransmitter>(erp_url());
    return std::make_unique<oracle::PushOutboundOracle>(chain_->clock(), std::move(participants),
                                                        retry_policy());
}

} // namespace oracleforge::runtime
