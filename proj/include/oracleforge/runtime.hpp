#pragma once

#include <memory>

#include "oracleforge/chain/chain.hpp"
#include "oracleforge/config.hpp"
#include "oracleforge/offchain/http_services.hpp"
#include "oracleforge/oracle/patterns.hpp"

namespace oracleforge::runtime {

// One fully wired world: the simulated chain with both demo contracts
// registered, the credit and ERP services listening on localhost, and
// factories for the four oracles bound to them over HTTP. Scenarios and
// benchmarks run on top of this.
class Environment {
public:
    explicit Environment(RunConfig config);
    ~Environment();
    Environment(const Environment&) = delete;
    Environment& operator=(const Environment&) = delete;

    const RunConfig& config() const { return config_; }
    chain::SimChain& chain() { return *chain_; }
    Clock& clock() { return chain_->clock(); }

    offchain::ErpStore& erp_store() { return *erp_store_; }
    const offchain::CreditDirectory& credit_directory() const {
        return credit_service_->directory();
    }
    std::string credit_url() const { return credit_service_->base_url(); }
    std::string erp_url() const { return erp_service_->base_url(); }

    oracle::RetryPolicy retry_policy() const;
    std::uint64_t gas_price_wei() const { return config_.cost.observed_gas_price_wei(); }

    // Facade over the chain for a named account (buyer, scanner device, ...).
    std::shared_ptr<oracle::ChainFacade> facade_for(const chain::AccountId& account);

    std::unique_ptr<oracle::PullInboundOracle> make_pull_inbound();
    std::unique_ptr<oracle::PushInboundOracle> make_push_inbound(
        std::shared_ptr<oracle::ScanQueue> updates);
    std::unique_ptr<oracle::PullOutboundOracle> make_pull_outbound();
    std::unique_ptr<oracle::PushOutboundOracle> make_push_outbound();

    static chain::EventFilter credit_request_filter();
    static chain::EventFilter goods_registered_filter();

private:
    RunConfig config_;
    std::unique_ptr<chain::SimChain> chain_;
    std::shared_ptr<offchain::ErpStore> erp_store_;
    std::unique_ptr<offchain::CreditHttpService> credit_service_;
    std::unique_ptr<offchain::ErpHttpService> erp_service_;
};

} // namespace oracleforge::runtime
