#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracleforge/clock.hpp"
#include "oracleforge/common.hpp"
#include "oracleforge/digest.hpp"

namespace oracleforge::chain {

using AccountId = std::string;
using Address = std::string;

struct ChainConfig {
    std::uint64_t seed = 1;

    double mean_interblock = 13.0;

    double submit_latency_mean = 0.50;
    double submit_latency_std = 0.05;
    double submit_latency_min = 0.46;

    double read_latency_mean = 0.12;
    double read_latency_std = 0.02;
    double read_latency_min = 0.11;

    double event_propagation_mean = 0.5;

    // Heavy-tail multiplier applied to a small fraction of round trips.
    double tail_probability = 0.02;
    double tail_multiplier = 4.0;

    ClockMode clock_mode = ClockMode::Virtual;

    void validate() const; // throws ConfigError on violated invariants
};

struct GasSchedule {
    std::uint64_t tx_base = 21'000;
    std::uint64_t calldata_nonzero_byte = 68;
    std::uint64_t calldata_zero_byte = 4;
    std::uint64_t sstore_new = 20'000;
    std::uint64_t sstore_update = 5'000;
    std::uint64_t log_base = 375;
    std::uint64_t log_topic = 375;
    std::uint64_t log_data_byte = 8;
};

struct Transaction {
    AccountId sender;
    Address to;
    Bytes payload;
    std::uint64_t gas_price = 0; // wei per gas
    std::uint64_t nonce = 0;
};

enum class TxStatus { Success, Reverted };

struct TransactionReceipt {
    Hash256 tx_hash;
    std::uint64_t block_number = 0;
    double block_timestamp = 0.0; // time mining of the including block began
    std::uint64_t gas_used = 0;
    TxStatus status = TxStatus::Success;
};

struct Block {
    std::uint64_t number = 0;
    double timestamp = 0.0;
    Hash256 parent_hash;
    std::vector<Hash256> transactions;
};

struct LogEvent {
    Address contract;
    std::vector<Hash256> topics; // topics[0] is the event signature
    Bytes data;
    std::uint64_t block_number = 0;
    Hash256 tx_hash;
    std::uint32_t log_index = 0; // within the block
};

struct StorageWrite {
    std::string slot;
    bool is_new_slot = false;
    Bytes value;
};

struct LogEmit {
    std::vector<Hash256> topics;
    Bytes data;
};

// Declared outcome of executing a contract code path. Gas derives from this
// plus the calldata; the key/value update is the modeled business state
// that read-only calls observe.
struct Effects {
    std::vector<StorageWrite> storage_writes;
    std::vector<LogEmit> logs;
    std::uint64_t execution_gas = 0;
    Bytes return_data;
    std::map<std::string, Bytes> state_update;
};

struct ContractState {
    std::map<std::string, Bytes> storage;
    std::map<std::string, Bytes> kv;
};

// Modeled contract: a pure handler from (payload, committed state) to
// declared effects. Handlers signal a rejected payload by throwing; on the
// transaction path that becomes a reverted receipt, on the read path a
// query error.
struct ContractBehavior {
    Address address;
    std::function<Effects(const Bytes& payload, const ContractState& state)> handler;
};

class ChainError : public Error {
public:
    using Error::Error;
};

class UnknownAddressError : public ChainError {
public:
    using ChainError::ChainError;
};

class NonceError : public ChainError {
public:
    using ChainError::ChainError;
};

class UnknownHashError : public ChainError {
public:
    using ChainError::ChainError;
};

class QueryError : public ChainError {
public:
    using ChainError::ChainError;
};

// Thrown by a behavior handler to revert the transaction; carries the gas
// burned by the failing code path.
class RevertError : public ChainError {
public:
    RevertError(std::string message, std::uint64_t execution_gas)
        : ChainError(std::move(message)), execution_gas_(execution_gas) {}
    std::uint64_t execution_gas() const { return execution_gas_; }

private:
    std::uint64_t execution_gas_;
};

} // namespace oracleforge::chain
