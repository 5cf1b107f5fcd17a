#pragma once

// Run configuration: a flat JSON object of numbers keyed by parameter name.
// Missing keys keep their defaults (the 1 / 0.01 / 0.5 / 2 / 50 / 1 well with
// omega = 1.6, lambda = 3.2, mass = hbar = 1).

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "error.hpp"
#include "spectrum.hpp"

namespace enu::config {

inline constexpr std::array<std::string_view, 10> kKeys{
    "V0", "V1", "V2", "a", "b", "alpha", "omega", "lambda", "mass", "hbar"};

/// Config failure with the offending key (may be empty) and byte offset
/// into the document (-1 when the value came from a flag).
class ConfigError : public Error {
public:
    ConfigError(ErrorCode code, std::string key, long position, const std::string& what)
        : Error(code, what), key_(std::move(key)), position_(position) {}

    const std::string& key() const noexcept { return key_; }
    long position() const noexcept { return position_; }

private:
    std::string key_;
    long position_;
};

struct RunConfig {
    ProblemSpec problem;
};

inline RunConfig default_config() {
    RunConfig cfg;
    cfg.problem.potential = {1.0, 0.01, 0.5, 2.0, 50.0, 1.0};
    cfg.problem.approx = {1.6, 3.2};
    cfg.problem.mass = 1.0;
    cfg.problem.hbar = 1.0;
    return cfg;
}

inline bool is_known_key(std::string_view key) {
    for (auto k : kKeys)
        if (k == key) return true;
    return false;
}

inline double& slot(RunConfig& cfg, std::string_view key) {
    auto& p = cfg.problem;
    if (key == "V0") return p.potential.V0;
    if (key == "V1") return p.potential.V1;
    if (key == "V2") return p.potential.V2;
    if (key == "a") return p.potential.a;
    if (key == "b") return p.potential.b;
    if (key == "alpha") return p.potential.alpha;
    if (key == "omega") return p.approx.omega;
    if (key == "lambda") return p.approx.lambda_adj;
    if (key == "mass") return p.mass;
    if (key == "hbar") return p.hbar;
    throw ConfigError(ErrorCode::UnknownKey, std::string(key), -1,
                      "unknown configuration key '" + std::string(key) + "'");
}

/// Rejects values violating the parameter invariants, naming the key.
inline void validate(const RunConfig& cfg, std::string_view text = {}) {
    auto position_of = [&](std::string_view key) -> long {
        const auto at = text.find("\"" + std::string(key) + "\"");
        return at == std::string_view::npos ? -1 : static_cast<long>(at);
    };
    auto fail = [&](std::string_view key, const std::string& why) {
        throw ConfigError(ErrorCode::InvalidValue, std::string(key), position_of(key),
                          "invalid value for '" + std::string(key) + "': " + why);
    };
    RunConfig copy = cfg;
    for (auto key : kKeys)
        if (!std::isfinite(slot(copy, key))) fail(key, "must be finite");
    const auto& p = cfg.problem;
    if (p.potential.b == 0.0) fail("b", "must be non-zero");
    if (!(p.potential.alpha > 0.0)) fail("alpha", "must be > 0");
    if (!(p.mass > 0.0)) fail("mass", "must be > 0");
    if (!(p.hbar > 0.0)) fail("hbar", "must be > 0");
}

/// Parses a config document on top of `base`. Whitespace-only text is an
/// empty document.
inline RunConfig parse_config(std::string_view text, RunConfig base = default_config()) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return base;

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(ErrorCode::ParseError, "", static_cast<long>(e.byte), e.what());
    }
    if (!doc.is_object())
        throw ConfigError(ErrorCode::ParseError, "", 0, "config must be a JSON object");

    for (const auto& [key, value] : doc.items()) {
        const auto at = text.find("\"" + key + "\"");
        const long position = at == std::string_view::npos ? -1 : static_cast<long>(at);
        if (!is_known_key(key))
            throw ConfigError(ErrorCode::UnknownKey, key, position,
                              "unknown configuration key '" + key + "'");
        if (!value.is_number())
            throw ConfigError(ErrorCode::InvalidValue, key, position,
                              "value for '" + key + "' must be a number");
        slot(base, key) = value.get<double>();
    }
    validate(base, text);
    return base;
}

inline RunConfig load_config(const std::string& path, RunConfig base = default_config()) {
    std::ifstream in(path);
    if (!in) throw ConfigError(ErrorCode::ParseError, "", -1, "cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

inline void apply_override(RunConfig& cfg, std::string_view key, double value) {
    slot(cfg, key) = value;
}

}  // namespace enu::config
