#include "oracleforge/chain/chain.hpp"

#include <algorithm>
#include <cstring>

namespace oracleforge::chain {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string("chain config: ") + name + " must be > 0");
}

void append_u64(Bytes& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void append_field(Bytes& out, const Bytes& field) {
    append_u64(out, field.size());
    out.insert(out.end(), field.begin(), field.end());
}

void append_field(Bytes& out, const std::string& field) {
    append_u64(out, field.size());
    out.insert(out.end(), field.begin(), field.end());
}

Hash256 transaction_hash(const Transaction& tx) {
    Bytes enc;
    enc.reserve(64 + tx.payload.size());
    append_field(enc, std::string("tx"));
    append_field(enc, tx.sender);
    append_field(enc, tx.to);
    append_field(enc, tx.payload);
    append_u64(enc, tx.gas_price);
    append_u64(enc, tx.nonce);
    return digest256(enc);
}

Hash256 block_digest(const Block& block) {
    Bytes enc;
    append_field(enc, std::string("block"));
    append_u64(enc, block.number);
    std::uint64_t ts_bits;
    static_assert(sizeof(ts_bits) == sizeof(block.timestamp));
    std::memcpy(&ts_bits, &block.timestamp, sizeof(ts_bits));
    append_u64(enc, ts_bits);
    enc.insert(enc.end(), block.parent_hash.bytes.begin(), block.parent_hash.bytes.end());
    for (const auto& h : block.transactions) enc.insert(enc.end(), h.bytes.begin(), h.bytes.end());
    return digest256(enc);
}

} // namespace

void ChainConfig::validate() const {
    require_positive(mean_interblock, "mean_interblock");
    require_positive(submit_latency_mean, "submit_latency_mean");
    require_positive(submit_latency_std, "submit_latency_std");
    require_positive(submit_latency_min, "submit_latency_min");
    require_positive(read_latency_mean, "read_latency_mean");
    require_positive(read_latency_std, "read_latency_std");
    require_positive(read_latency_min, "read_latency_min");
    require_positive(event_propagation_mean, "event_propagation_mean");
    if (tail_probability < 0.0 || tail_probability >= 1.0) {
        throw ConfigError("chain config: tail_probability must be in [0, 1)");
    }
    if (tail_multiplier < 1.0) {
        throw ConfigError("chain config: tail_multiplier must be >= 1");
    }
}

void Subscription::enqueue(const LogEvent& ev, double available_at) {
    std::lock_guard lock(mu_);
    if (closed_) return;
    queue_.push_back(Queued{ev, available_at});
}

std::optional<DeliveredEvent> Subscription::next() {
    Queued head{{}, 0.0};
    {
        std::lock_guard lock(mu_);
        if (queue_.empty()) return std::nullopt;
        head = queue_.front();
        queue_.pop_front();
    }
    clock_->sleep_until(head.available_at);
    return DeliveredEvent{head.event, head.available_at, clock_->now()};
}

std::optional<DeliveredEvent> Subscription::try_next() {
    std::lock_guard lock(mu_);
    if (queue_.empty() || queue_.front().available_at > clock_->now()) return std::nullopt;
    Queued head = queue_.front();
    queue_.pop_front();
    return DeliveredEvent{head.event, head.available_at, clock_->now()};
}

std::size_t Subscription::pending() const {
    std::lock_guard lock(mu_);
    return queue_.size();
}

void Subscription::close() {
    std::lock_guard lock(mu_);
    closed_ = true;
    queue_.clear();
}

bool Subscription::closed() const {
    std::lock_guard lock(mu_);
    return closed_;
}

SimChain::SimChain(ChainConfig config, GasSchedule schedule)
    : config_(config),
      schedule_(schedule),
      clock_(make_clock(config.clock_mode)),
      rng_(config.seed) {
    config_.validate();
    submit_latency_ = LatencyModel{config_.submit_latency_mean, config_.submit_latency_std,
                                   config_.submit_latency_min, config_.tail_probability,
                                   config_.tail_multiplier};
    read_latency_ = LatencyModel{config_.read_latency_mean, config_.read_latency_std,
                                 config_.read_latency_min, config_.tail_probability,
                                 config_.tail_multiplier};
    Block genesis;
    genesis.number = 0;
    genesis.timestamp = 0.0;
    blocks_.push_back(genesis);
}

void SimChain::register_behavior(ContractBehavior behavior) {
    std::lock_guard lock(mu_);
    if (behavior.address.empty() || !behavior.handler) {
        throw ChainError("behavior needs an address and a handler");
    }
    behaviors_[behavior.address] = std::move(behavior);
}

bool SimChain::has_behavior(const Address& address) const {
    std::lock_guard lock(mu_);
    return behaviors_.count(address) > 0;
}

std::uint64_t SimChain::next_nonce(const AccountId& sender) const {
    std::lock_guard lock(mu_);
    auto it = nonces_.find(sender);
    return it == nonces_.end() ? 0 : it->second;
}

Hash256 SimChain::submit_transaction(const Transaction& tx) {
    double latency;
    Hash256 hash;
    {
        std::lock_guard lock(mu_);
        if (!behaviors_.count(tx.to)) {
            throw UnknownAddressError("submit: no behavior registered at " + tx.to);
        }
        std::uint64_t expected = 0;
        if (auto it = nonces_.find(tx.sender); it != nonces_.end()) expected = it->second;
        if (tx.nonce != expected) {
            throw NonceError("submit: sender " + tx.sender + " expected nonce " +
                             std::to_string(expected) + ", got " + std::to_string(tx.nonce));
        }
        hash = transaction_hash(tx);
        nonces_[tx.sender] = expected + 1;
        mempool_.push_back(tx);
        receipts_.emplace(hash, std::nullopt);
        latency = submit_latency_.sample(rng_);
    }
    clock_->sleep_for(latency);
    return hash;
}

Bytes SimChain::call(const Address& address, const Bytes& payload) {
    double latency;
    const ContractBehavior* behavior = nullptr;
    ContractState state_copy;
    {
        std::lock_guard lock(mu_);
        auto it = behaviors_.find(address);
        if (it == behaviors_.end()) {
            throw UnknownAddressError("call: no behavior registered at " + address);
        }
        behavior = &it->second;
        state_copy = states_[address];
        latency = read_latency_.sample(rng_);
    }
    clock_->sleep_for(latency);
    try {
        return behavior->handler(payload, state_copy).return_data;
    } catch (const QueryError&) {
        throw;
    } catch (const RevertError& e) {
        throw QueryError(std::string("call rejected: ") + e.what());
    }
}

Block SimChain::mine_next_block() {
    double interval;
    double t_start;
    {
        std::lock_guard lock(mu_);
        t_start = clock_->now();
        interval = rng_.exponential(config_.mean_interblock);
    }
    clock_->sleep_for(interval);

    Block block;
    std::vector<StoredEvent> produced;
    {
        std::lock_guard lock(mu_);
        block.number = blocks_.back().number + 1;
        block.timestamp = t_start;
        block.parent_hash = block_digest(blocks_.back());

        std::vector<Transaction> pending;
        pending.swap(mempool_);
        std::uint32_t log_index = 0;
        for (const auto& tx : pending) {
            Hash256 hash = transaction_hash(tx);
            block.transactions.push_back(hash);
            execute_transaction(tx, hash, block, log_index, produced);
        }
        blocks_.push_back(block);
        included_count_ += block.transactions.size();

        double mined_at = clock_->now();
        for (auto& stored : produced) {
            stored.available_at = mined_at + rng_.exponential(config_.event_propagation_mean);
            event_log_.push_back(stored);
        }

        std::size_t live = 0;
        for (auto& weak : subscriptions_) {
            auto sub = weak.lock();
            if (!sub || sub->closed()) continue;
            subscriptions_[live++] = weak;
        }
        subscriptions_.resize(live);
        for (const auto& stored : produced) {
            for (auto& weak : subscriptions_) {
                auto sub = weak.lock();
                if (!sub) continue;
                if (sub->filter_matches_ && sub->filter_matches_(stored.event)) {
                    sub->enqueue(stored.event, stored.available_at);
                }
            }
        }
    }
    return block;
}

void SimChain::execute_transaction(const Transaction& tx, const Hash256& hash, Block& block,
                                   std::uint32_t& log_index, std::vector<StoredEvent>& out_events) {
    auto behavior_it = behaviors_.find(tx.to);
    TransactionReceipt receipt;
    receipt.tx_hash = hash;
    receipt.block_number = block.number;
    receipt.block_timestamp = block.timestamp;

    if (behavior_it == behaviors_.end()) {
        // Behavior existed at submission; registry is append-only, so this
        // cannot happen, but keep the receipt contract intact regardless.
        receipt.status = TxStatus::Reverted;
        receipt.gas_used = schedule_.tx_base + calldata_gas(tx.payload, schedule_);
        receipts_[hash] = receipt;
        return;
    }

    ContractState& state = states_[tx.to];
    try {
        Effects effects = behavior_it->second.handler(tx.payload, state);
        receipt.gas_used = compute_gas(tx, effects, schedule_);
        receipt.status = TxStatus::Success;
        for (const auto& write : effects.storage_writes) state.storage[write.slot] = write.value;
        for (const auto& [key, value] : effects.state_update) state.kv[key] = value;
        for (const auto& emit : effects.logs) {
            LogEvent ev;
            ev.contract = tx.to;
            ev.topics = emit.topics;
            ev.data = emit.data;
            ev.block_number = block.number;
            ev.tx_hash = hash;
            ev.log_index = log_index++;
            out_events.push_back(StoredEvent{std::move(ev), 0.0});
        }
    } catch (const RevertError& e) {
        Effects burned;
        burned.execution_gas = e.execution_gas();
        receipt.gas_used = compute_gas(tx, burned, schedule_);
        receipt.status = TxStatus::Reverted;
    }
    receipts_[hash] = receipt;
}

std::optional<TransactionReceipt> SimChain::get_receipt(const Hash256& tx_hash) const {
    std::lock_guard lock(mu_);
    auto it = receipts_.find(tx_hash);
    if (it == receipts_.end()) {
        throw UnknownHashError("get_receipt: unknown transaction hash " + tx_hash.hex());
    }
    return it->second;
}

std::shared_ptr<Subscription> SimChain::subscribe(EventFilter filter) {
    std::lock_guard lock(mu_);
    auto sub = std::shared_ptr<Subscription>(new Subscription(*clock_));
    sub->filter_matches_ = [filter](const LogEvent& ev) { return filter.matches(ev); };
    subscriptions_.push_back(sub);
    return sub;
}

std::shared_ptr<Subscription> SimChain::subscribe_from(EventFilter filter, std::uint64_t from_block) {
    std::lock_guard lock(mu_);
    auto sub = std::shared_ptr<Subscription>(new Subscription(*clock_));
    sub->filter_matches_ = [filter](const LogEvent& ev) { return filter.matches(ev); };
    double now = clock_->now();
    for (const auto& stored : event_log_) {
        if (stored.event.block_number >= from_block && filter.matches(stored.event)) {
            sub->enqueue(stored.event, now);
        }
    }
    subscriptions_.push_back(sub);
    return sub;
}

std::vector<LogEvent> SimChain::get_logs(const EventFilter& filter, std::uint64_t from_block,
                                         std::uint64_t to_block) {
    double latency;
    std::vector<LogEvent> out;
    {
        std::lock_guard lock(mu_);
        latency = read_latency_.sample(rng_);
        for (const auto& stored : event_log_) {
            if (stored.event.block_number < from_block || stored.event.block_number > to_block) continue;
            if (filter.matches(stored.event)) out.push_back(stored.event);
        }
    }
    clock_->sleep_for(latency);
    return out;
}

std::uint64_t SimChain::height() const {
    std::lock_guard lock(mu_);
    return blocks_.back().number;
}

Block SimChain::block_at(std::uint64_t number) const {
    std::lock_guard lock(mu_);
    if (number >= blocks_.size()) throw ChainError("block_at: no block " + std::to_string(number));
    return blocks_[number];
}

std::size_t SimChain::mempool_size() const {
    std::lock_guard lock(mu_);
    return mempool_.size();
}

std::uint64_t SimChain::transactions_included() const {
    std::lock_guard lock(mu_);
    return included_count_;
}

std::uint64_t SimChain::events_emitted() const {
    std::lock_guard lock(mu_);
    return event_log_.size();
}

} // namespace oracleforge::chain
