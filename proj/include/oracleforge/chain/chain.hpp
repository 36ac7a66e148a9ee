#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "oracleforge/chain/gas.hpp"
#include "oracleforge/chain/types.hpp"
#include "oracleforge/sampling.hpp"

namespace oracleforge::chain {

struct EventFilter {
    std::optional<Address> address;
    std::optional<Hash256> first_topic;

    bool matches(const LogEvent& ev) const {
        if (address && ev.contract != *address) return false;
        if (first_topic && (ev.topics.empty() || ev.topics[0] != *first_topic)) return false;
        return true;
    }
};

struct DeliveredEvent {
    LogEvent event;
    double available_at = 0.0; // when propagation completed
    double received_at = 0.0;  // when the subscriber actually took it
};

// Per-subscriber event queue. Events land here when their block is mined
// and become visible once the propagation delay has elapsed; next() blocks
// (advancing the virtual clock) until the head event is visible.
class Subscription {
public:
    std::optional<DeliveredEvent> next();     // nullopt when the queue is empty
    std::optional<DeliveredEvent> try_next(); // nullopt when nothing is visible yet
    std::size_t pending() const;
    void close();
    bool closed() const;

private:
    friend class SimChain;
    explicit Subscription(Clock& clock) : clock_(&clock) {}

    struct Queued {
        LogEvent event;
        double available_at;
    };

    void enqueue(const LogEvent& ev, double available_at);

    Clock* clock_;
    std::function<bool(const LogEvent&)> filter_matches_;
    mutable std::mutex mu_;
    std::deque<Queued> queue_;
    bool closed_ = false;
};

// Deterministic in-process ledger: mempool, block production with sampled
// inter-block intervals, gas metering against a declared fee schedule, an
// ordered event log, and read-only state queries. All latencies are drawn
// from one seeded stream, so a virtual-clock run is a pure function of
// (config, workload).
class SimChain {
public:
    explicit SimChain(ChainConfig config, GasSchedule schedule = {});

    Clock& clock() { return *clock_; }
    const ChainConfig& config() const { return config_; }
    const GasSchedule& schedule() const { return schedule_; }

    void register_behavior(ContractBehavior behavior);
    bool has_behavior(const Address& address) const;

    std::uint64_t next_nonce(const AccountId& sender) const;

    // Round trip to the node: samples the submission latency, validates the
    // transaction and enqueues it. Returns the deterministic content hash.
    Hash256 submit_transaction(const Transaction& tx);

    // Read-only call against committed state. Samples the read latency,
    // consumes no ledger gas.
    Bytes call(const Address& address, const Bytes& payload);

    // Waits one sampled inter-block interval, then drains the mempool into a
    // block, executes behaviors, meters gas, and publishes events to
    // subscribers after a sampled propagation delay. The block timestamp is
    // the time mining began.
    Block mine_next_block();

    // nullopt while the transaction is still pending; throws for a hash that
    // was never issued by submit_transaction.
    std::optional<TransactionReceipt> get_receipt(const Hash256& tx_hash) const;

    std::shared_ptr<Subscription> subscribe(EventFilter filter);
    // Same, but first replays stored events from blocks >= from_block.
    std::shared_ptr<Subscription> subscribe_from(EventFilter filter, std::uint64_t from_block);

    // Historical log scan (read-only query; samples the read latency).
    std::vector<LogEvent> get_logs(const EventFilter& filter, std::uint64_t from_block,
                                   std::uint64_t to_block);

    std::uint64_t height() const;
    Block block_at(std::uint64_t number) const;
    std::size_t mempool_size() const;
    std::uint64_t transactions_included() const;
    std::uint64_t events_emitted() const;

private:
    struct StoredEvent {
        LogEvent event;
        double available_at;
    };

    void execute_transaction(const Transaction& tx, const Hash256& hash, Block& block,
                             std::uint32_t& log_index, std::vector<StoredEvent>& out_events);

    ChainConfig config_;
    GasSchedule schedule_;
    std::unique_ptr<Clock> clock_;

    mutable std::mutex mu_;
    SampleStream rng_;
    LatencyModel submit_latency_;
    LatencyModel read_latency_;

    std::unordered_map<Address, ContractBehavior> behaviors_;
    std::unordered_map<Address, ContractState> states_;
    std::unordered_map<AccountId, std::uint64_t> nonces_;

    std::vector<Transaction> mempool_; // arrival order, FIFO per sender by construction
    std::unordered_map<Hash256, std::optional<TransactionReceipt>, Hash256Hasher> receipts_;

    std::vector<Block> blocks_; // blocks_[0] is the genesis block
    std::vector<StoredEvent> event_log_;
    std::vector<std::weak_ptr<Subscription>> subscriptions_;

    std::uint64_t included_count_ = 0;
};

} // namespace oracleforge::chain
