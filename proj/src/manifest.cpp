#include "gotobi/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "gotobi/sha256.hpp"

namespace gotobi {

namespace {

// The digest identifies the semantic run: what was computed (command,
// config, seed, generator) from what input content. Provenance-only fields
// (command-line echo, file paths, timestamp) stay out so reruns writing to
// different locations still produce identical data bytes.
nlohmann::json digest_body(const RunManifest& m) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const RunManifest::Input& in : m.inputs)
        inputs.push_back({{"role", in.role}, {"sha256", in.sha256}});
    nlohmann::json body = {
        {"tool_version", m.tool_version},
        {"command", m.command},
        {"rng", m.rng_id},
        {"config", m.config},
        {"inputs", inputs},
    };
    if (m.seed) body["seed"] = *m.seed;
    return body;
}

}  // namespace

std::string RunManifest::digest() const { return sha256_hex(digest_body(*this).dump()); }

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j = digest_body(*this);
    // Full provenance view: include sources alongside the digested content.
    nlohmann::json detailed = nlohmann::json::array();
    for (const Input& in : this->inputs)
        detailed.push_back({{"role", in.role}, {"source", in.source}, {"sha256", in.sha256}});
    j["inputs"] = detailed;
    j["command_line"] = command_line;
    j["digest"] = digest();
    j["created_utc"] = created_utc;
    return j;
}

std::string utc_now_rfc3339() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

}  // namespace gotobi
