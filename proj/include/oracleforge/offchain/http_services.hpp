#pragma once

#include <functional>
#include <memory>
#include <string>
#include <thread>

#include "oracleforge/offchain/credit_service.hpp"
#include "oracleforge/offchain/erp_sink.hpp"

namespace httplib {
class Server;
}

namespace oracleforge::offchain {

using TimeSource = std::function<double()>;

// Host for the two mock services:
//   GET  /credit/{tax_id}   -> profile JSON, 404 when unknown, 503 in outage
//   POST /erp/messages      -> {"stored": bool}, 400 on a malformed body
//   GET  /erp/messages      -> stored messages, insertion order
// Each service runs its own listener thread; port 0 picks a free port.
class HttpService {
public:
    HttpService();
    ~HttpService();
    HttpService(const HttpService&) = delete;
    HttpService& operator=(const HttpService&) = delete;

    void start(int port); // throws Error when the port cannot be bound
    void stop();
    int port() const { return port_; }
    std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

protected:
    std::unique_ptr<httplib::Server> server_;

private:
    std::thread listener_;
    int port_ = 0;
};

class CreditHttpService final : public HttpService {
public:
    CreditHttpService(CreditDirectory directory, TimeSource time_source, OutageWindow outage = {});

    const CreditDirectory& directory() const { return directory_; }

private:
    CreditDirectory directory_;
    TimeSource time_source_;
    OutageWindow outage_;
};

class ErpHttpService final : public HttpService {
public:
    // The store is shared so drivers can assert on sink contents directly.
    ErpHttpService(std::shared_ptr<ErpStore> store, TimeSource time_source);

    ErpStore& store() { return *store_; }

private:
    std::shared_ptr<ErpStore> store_;
    TimeSource time_source_;
};

} // namespace oracleforge::offchain
