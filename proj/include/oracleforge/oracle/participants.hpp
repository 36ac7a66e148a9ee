#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "oracleforge/chain/chain.hpp"
#include "oracleforge/domain.hpp"

namespace httplib {
class Client;
}

namespace oracleforge::oracle {

// ---- role interfaces -------------------------------------------------------
//
// One interface per structural role, so a pattern is wired from exactly the
// participants its interaction diagram names and tests can instrument any
// edge.

struct SubmitRecord {
    Hash256 tx_hash;
    double t1 = 0.0; // submission start
    double t2 = 0.0; // hash receipt
};

class EventListener {
public:
    virtual ~EventListener() = default;
    virtual std::optional<chain::DeliveredEvent> next() = 0;
    virtual std::optional<chain::DeliveredEvent> try_next() = 0;
    virtual void restart(std::uint64_t from_block) = 0;
    virtual std::size_t pending() const = 0;
};

class UpdateListener {
public:
    virtual ~UpdateListener() = default;
    virtual std::optional<RawScan> next_update() = 0;
    virtual std::size_t pending() const = 0;
};

struct CreditLookup {
    enum class Status { Ok, NotFound, Unavailable };
    Status status = Status::Unavailable;
    CreditProfile profile;
    std::string error;
};

class OffchainStateRetriever {
public:
    virtual ~OffchainStateRetriever() = default;
    virtual CreditLookup fetch_credit(const std::string& tax_id) = 0;
};

class OnchainStateRetriever {
public:
    virtual ~OnchainStateRetriever() = default;
    virtual Bytes query(const chain::Address& address, const Bytes& payload) = 0;
};

class BlockchainFacade {
public:
    virtual ~BlockchainFacade() = default;
    virtual SubmitRecord submit(const chain::Address& to, const Bytes& payload) = 0;
    virtual const std::vector<SubmitRecord>& records() const = 0;
};

class OffchainTransmitter {
public:
    virtual ~OffchainTransmitter() = default;
    // Returns false and fills `error` when the sink could not be reached.
    virtual bool deliver(const ErpMessage& message, std::string& error) = 0;
};

// ---- chain-backed implementations ------------------------------------------

class ChainEventListener final : public EventListener {
public:
    ChainEventListener(chain::SimChain& chain, chain::EventFilter filter);

    std::optional<chain::DeliveredEvent> next() override;
    std::optional<chain::DeliveredEvent> try_next() override;
    // Drops the live subscription and re-subscribes with history replayed
    // from the given block, as a restarted listener process would.
    void restart(std::uint64_t from_block) override;
    std::size_t pending() const override;

private:
    chain::SimChain& chain_;
    chain::EventFilter filter_;
    std::shared_ptr<chain::Subscription> subscription_;
};

class ScanQueue final : public UpdateListener {
public:
    void push(const RawScan& scan);
    std::optional<RawScan> next_update() override;
    std::size_t pending() const override;

private:
    mutable std::mutex mu_;
    std::deque<RawScan> queue_;
};

class ChainStateRetriever final : public OnchainStateRetriever {
public:
    explicit ChainStateRetriever(chain::SimChain& chain) : chain_(chain) {}
    Bytes query(const chain::Address& address, const Bytes& payload) override;

private:
    chain::SimChain& chain_;
};

// Submits transactions for one account, tracking nonces through the chain
// and stamping each round trip.
class ChainFacade final : public BlockchainFacade {
public:
    ChainFacade(chain::SimChain& chain, chain::AccountId account, std::uint64_t gas_price_wei);

    SubmitRecord submit(const chain::Address& to, const Bytes& payload) override;
    const std::vector<SubmitRecord>& records() const override { return records_; }
    std::uint64_t gas_price() const { return gas_price_; }

private:
    chain::SimChain& chain_;
    chain::AccountId account_;
    std::uint64_t gas_price_;
    std::vector<SubmitRecord> records_;
};

// ---- HTTP-backed off-chain edges -------------------------------------------

class HttpCreditRetriever final : public OffchainStateRetriever {
public:
    explicit HttpCreditRetriever(const std::string& base_url);
    ~HttpCreditRetriever();
    CreditLookup fetch_credit(const std::string& tax_id) override;

private:
    std::unique_ptr<httplib::Client> client_;
};

class HttpErpTransmitter final : public OffchainTransmitter {
public:
    explicit HttpErpTransmitter(const std::string& base_url);
    ~HttpErpTransmitter();
    bool deliver(const ErpMessage& message, std::string& error) override;

private:
    std::unique_ptr<httplib::Client> client_;
};

} // namespace oracleforge::oracle
