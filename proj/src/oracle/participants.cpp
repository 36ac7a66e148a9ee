#include "oracleforge/oracle/participants.hpp"

#include <httplib.h>
#include <json.hpp>

#include "oracleforge/json_support.hpp"

namespace oracleforge::oracle {

using nlohmann::json;

ChainEventListener::ChainEventListener(chain::SimChain& chain, chain::EventFilter filter)
    : chain_(chain), filter_(filter), subscription_(chain.subscribe(filter)) {}

std::optional<chain::DeliveredEvent> ChainEventListener::next() {
    return subscription_->next();
}

std::optional<chain::DeliveredEvent> ChainEventListener::try_next() {
    return subscription_->try_next();
}

void ChainEventListener::restart(std::uint64_t from_block) {
    subscription_->close();
    subscription_ = chain_.subscribe_from(filter_, from_block);
}

std::size_t ChainEventListener::pending() const {
    return subscription_->pending();
}

void ScanQueue::push(const RawScan& scan) {
    std::lock_guard lock(mu_);
    queue_.push_back(scan);
}

std::optional<RawScan> ScanQueue::next_update() {
    std::lock_guard lock(mu_);
    if (queue_.empty()) return std::nullopt;
    RawScan scan = queue_.front();
    queue_.pop_front();
    return scan;
}

std::size_t ScanQueue::pending() const {
    std::lock_guard lock(mu_);
    return queue_.size();
}

Bytes ChainStateRetriever::query(const chain::Address& address, const Bytes& payload) {
    return chain_.call(address, payload);
}

ChainFacade::ChainFacade(chain::SimChain& chain, chain::AccountId account, std::uint64_t gas_price_wei)
    : chain_(chain), account_(std::move(account)), gas_price_(gas_price_wei) {}

SubmitRecord ChainFacade::submit(const chain::Address& to, const Bytes& payload) {
    chain::Transaction tx;
    tx.sender = account_;
    tx.to = to;
    tx.payload = payload;
    tx.gas_price = gas_price_;
    tx.nonce = chain_.next_nonce(account_);

    SubmitRecord record;
    record.t1 = chain_.clock().now();
    record.tx_hash = chain_.submit_transaction(tx);
    record.t2 = chain_.clock().now();
    records_.push_back(record);
    return record;
}

namespace {
std::unique_ptr<httplib::Client> make_client(const std::string& base_url) {
    auto client = std::make_unique<httplib::Client>(base_url);
    client->set_connection_timeout(2, 0);
    client->set_read_timeout(5, 0);
    client->set_keep_alive(true);
    return client;
}
} // namespace

HttpCreditRetriever::HttpCreditRetriever(const std::string& base_url)
    : client_(make_client(base_url)) {}

HttpCreditRetriever::~HttpCreditRetriever() = default;

CreditLookup HttpCreditRetriever::fetch_credit(const std::string& tax_id) {
    CreditLookup result;
    auto res = client_->Get("/credit/" + tax_id);
    if (!res) {
        result.status = CreditLookup::Status::Unavailable;
        result.error = "connection error: " + httplib::to_string(res.error());
        return result;
    }
    if (res->status == 404) {
        result.status = CreditLookup::Status::NotFound;
        result.error = "unknown tax id";
        return result;
    }
    if (res->status != 200) {
        result.status = CreditLookup::Status::Unavailable;
        result.error = "service returned status " + std::to_string(res->status);
        return result;
    }
    try {
        result.profile = json::parse(res->body).get<CreditProfile>();
        result.status = CreditLookup::Status::Ok;
    } catch (const std::exception& e) {
        result.status = CreditLookup::Status::Unavailable;
        result.error = std::string("malformed service response: ") + e.what();
    }
    return result;
}

HttpErpTransmitter::HttpErpTransmitter(const std::string& base_url)
    : client_(make_client(base_url)) {}

HttpErpTransmitter::~HttpErpTransmitter() = default;

bool HttpErpTransmitter::deliver(const ErpMessage& message, std::string& error) {
    auto res = client_->Post("/erp/messages", json(message).dump(), "application/json");
    if (!res) {
        error = "connection error: " + httplib::to_string(res.error());
        return false;
    }
    if (res->status != 200) {
        error = "sink returned status " + std::to_string(res->status);
        return false;
    }
    return true;
}

} // namespace oracleforge::oracle
