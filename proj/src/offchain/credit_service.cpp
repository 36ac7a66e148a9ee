#include "oracleforge/offchain/credit_service.hpp"

#include <fstream>

namespace oracleforge::offchain {

using nlohmann::json;

CreditDirectory CreditDirectory::from_json(const json& doc) {
    CreditDirectory dir;
    if (!doc.is_object() || !doc.contains("profiles")) {
        throw ConfigError("credit fixture: expected {\"threshold\", \"profiles\"}");
    }
    dir.threshold_ = doc.value("threshold", 50);
    for (const auto& entry : doc.at("profiles")) {
        CreditProfile profile;
        profile.tax_id = entry.at("tax_id").get<std::string>();
        profile.name = entry.at("name").get<std::string>();
        profile.score = entry.at("score").get<int>();
        if (profile.score < 0 || profile.score > 100) {
            throw ConfigError("credit fixture: score out of [0,100] for " + profile.tax_id);
        }
        profile.creditworthy = profile.score >= dir.threshold_;
        if (!dir.profiles_.emplace(profile.tax_id, profile).second) {
            throw ConfigError("credit fixture: duplicate tax_id " + profile.tax_id);
        }
    }
    return dir;
}

CreditDirectory CreditDirectory::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("credit fixture: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("credit fixture: " + path + ": " + e.what());
    }
    return from_json(doc);
}

CreditDirectory CreditDirectory::builtin_default() {
    return from_json(json{
        {"threshold", 50},
        {"profiles",
         {{{"tax_id", "AT-123"}, {"name", "Alpenstahl Handel GmbH"}, {"score", 80}},
          {{"tax_id", "AT-987"}, {"name", "Donau Metallbau AG"}, {"score", 35}},
          {{"tax_id", "DE-555"}, {"name", "Rheinwerk Logistik"}, {"score", 64}},
          {{"tax_id", "IT-246"}, {"name", "Fabbrica Torino SpA"}, {"score", 50}},
          {{"tax_id", "CH-789"}, {"name", "Helvetia Components"}, {"score", 49}},
          {{"tax_id", "AT-321"}, {"name", "Steyr Industriebedarf"}, {"score", 72}}}},
    });
}

std::optional<CreditProfile> CreditDirectory::lookup(const std::string& tax_id) const {
    auto it = profiles_.find(tax_id);
    if (it == profiles_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> CreditDirectory::tax_ids() const {
    std::vector<std::string> ids;
    ids.reserve(profiles_.size());
    for (const auto& [id, profile] : profiles_) ids.push_back(id);
    return ids;
}

} // namespace oracleforge::offchain
