#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "oracleforge/config.hpp"
#include "oracleforge/oracle/patterns.hpp"

namespace testsupport {

inline oracleforge::RunConfig test_config(std::uint64_t seed) {
    oracleforge::RunConfig config;
    config.chain.seed = seed;
    return config;
}

inline std::filesystem::path temp_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "oracleforge-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// ---- scriptable test doubles -------------------------------------------------

class FakeCreditRetriever final : public oracleforge::oracle::OffchainStateRetriever {
public:
    std::map<std::string, oracleforge::CreditProfile> profiles;
    int fail_next = 0; // report Unavailable for this many calls
    int calls = 0;

    oracleforge::oracle::CreditLookup fetch_credit(const std::string& tax_id) override {
        using Lookup = oracleforge::oracle::CreditLookup;
        ++calls;
        Lookup result;
        if (fail_next > 0) {
            --fail_next;
            result.status = Lookup::Status::Unavailable;
            result.error = "scripted outage";
            return result;
        }
        auto it = profiles.find(tax_id);
        if (it == profiles.end()) {
            result.status = Lookup::Status::NotFound;
            result.error = "unknown tax id";
            return result;
        }
        result.status = Lookup::Status::Ok;
        result.profile = it->second;
        return result;
    }
};

class CollectingTransmitter final : public oracleforge::oracle::OffchainTransmitter {
public:
    std::vector<oracleforge::ErpMessage> delivered;
    int fail_next = 0;
    int calls = 0;

    bool deliver(const oracleforge::ErpMessage& message, std::string& error) override {
        ++calls;
        if (fail_next > 0) {
            --fail_next;
            error = "scripted sink outage";
            return false;
        }
        delivered.push_back(message);
        return true;
    }
};

// Interaction recorders wrapping real participants; used to assert that a
// pattern never touches a foreign role.
class CountingRetriever final : public oracleforge::oracle::OffchainStateRetriever {
public:
    explicit CountingRetriever(std::shared_ptr<OffchainStateRetriever> inner)
        : inner_(std::move(inner)) {}
    int calls = 0;
    oracleforge::oracle::CreditLookup fetch_credit(const std::string& tax_id) override {
        ++calls;
        return inner_->fetch_credit(tax_id);
    }

private:
    std::shared_ptr<OffchainStateRetriever> inner_;
};

class CountingTransmitter final : public oracleforge::oracle::OffchainTransmitter {
public:
    int calls = 0;
    bool deliver(const oracleforge::ErpMessage&, std::string&) override {
        ++calls;
        return true;
    }
};

class CountingUpdateListener final : public oracleforge::oracle::UpdateListener {
public:
    int calls = 0;
    std::optional<oracleforge::RawScan> next_update() override {
        ++calls;
        return std::nullopt;
    }
    std::size_t pending() const override { return 0; }
};

} // namespace testsupport
