#include "oracleforge/offchain/http_services.hpp"

#include <httplib.h>
#include <json.hpp>

#include "oracleforge/json_support.hpp"

namespace oracleforge::offchain {

using nlohmann::json;

HttpService::HttpService() : server_(std::make_unique<httplib::Server>()) {}

HttpService::~HttpService() {
    stop();
}

void HttpService::start(int port) {
    if (listener_.joinable()) throw Error("http service already started");
    if (port == 0) {
        port_ = server_->bind_to_any_port("127.0.0.1");
        if (port_ < 0) throw Error("http service: failed to bind to an ephemeral port");
    } else {
        if (!server_->bind_to_port("127.0.0.1", port)) {
            throw Error("http service: failed to bind port " + std::to_string(port));
        }
        port_ = port;
    }
    listener_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
}

void HttpService::stop() {
    if (listener_.joinable()) {
        server_->stop();
        listener_.join();
    }
}

CreditHttpService::CreditHttpService(CreditDirectory directory, TimeSource time_source,
                                     OutageWindow outage)
    : directory_(std::move(directory)), time_source_(std::move(time_source)), outage_(outage) {
    server_->Get("/credit/([^/]+)", [this](const httplib::Request& req, httplib::Response& res) {
        if (outage_.active(time_source_())) {
            res.status = 503;
            res.set_content(json{{"error", "service unavailable"}}.dump(), "application/json");
            return;
        }
        auto profile = directory_.lookup(req.matches[1]);
        if (!profile) {
            res.status = 404;
            res.set_content(json{{"error", "unknown tax id"}}.dump(), "application/json");
            return;
        }
        res.set_content(json(*profile).dump(), "application/json");
    });
}

ErpHttpService::ErpHttpService(std::shared_ptr<ErpStore> store, TimeSource time_source)
    : store_(std::move(store)), time_source_(std::move(time_source)) {
    server_->Post("/erp/messages", [this](const httplib::Request& req, httplib::Response& res) {
        ErpMessage message;
        try {
            json body = json::parse(req.body);
            body.at("tx_hash");
            body.at("log_index");
            body.at("record");
            message = body.get<ErpMessage>();
        } catch (const std::exception& e) {
            res.status = 400;
            res.set_content(json{{"error", e.what()}}.dump(), "application/json");
            return;
        }
        message.received_at = time_source_();
        bool stored = store_->receive(message);
        res.set_content(json{{"stored", stored}}.dump(), "application/json");
    });
    server_->Get("/erp/messages", [this](const httplib::Request&, httplib::Response& res) {
        json out = json::array();
        for (const auto& message : store_->dump()) out.push_back(json(message));
        res.set_content(out.dump(), "application/json");
    });
}

} // namespace oracleforge::offchain
