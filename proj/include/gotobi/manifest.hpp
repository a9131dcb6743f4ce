#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gotobi {

inline constexpr const char* kToolVersion = "0.1.0";

// Provenance record attached to every run output. The digest covers the
// command, config, seed, and input digests but never the timestamp, so
// repeated runs with identical inputs produce identical digests (and
// byte-identical data files).
struct RunManifest {
    std::string tool_version = kToolVersion;
    std::string command;  // subcommand name
    std::string command_line;
    std::string rng_id;
    std::optional<std::uint64_t> seed;
    nlohmann::json config = nlohmann::json::object();

    struct Input {
        std::string role;    // "quotes", "holidays", ...
        std::string source;  // path or "bundled"
        std::string sha256;  // empty for bundled sources
    };
    std::vector<Input> inputs;

    std::string created_utc;  // RFC 3339, excluded from the digest

    std::string digest() const;
    nlohmann::json to_json() const;  // includes digest and created_utc
};

// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_now_rfc3339();

}  // namespace gotobi
