#include "radmax/config.hpp"

#include "radmax/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace radmax {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

void ExperimentConfig::require_seed() const {
    if (!has_seed)
        throw ConfigError("experiment '" + kind + "' is randomized and needs a seed");
}

double json_real(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        try {
            size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos == s.size()) return v;
        } catch (...) {
        }
        throw ConfigError("not a real number: '" + s + "'");
    }
    throw ConfigError("expected a number or \"inf\"");
}

double param_real(const nlohmann::json& params, const char* key, double fallback) {
    if (!params.contains(key)) return fallback;
    return json_real(params.at(key));
}

int param_int(const nlohmann::json& params, const char* key, int fallback) {
    if (!params.contains(key)) return fallback;
    const auto& v = params.at(key);
    if (!v.is_number_integer())
        throw ConfigError(std::string("expected an integer for '") + key + "'");
    return v.get<int>();
}

RadialProfile profile_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("profile description needs a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "piecewise_power") {
            std::vector<PowerPiece> pieces;
            for (const auto& p : j.at("pieces"))
                pieces.emplace_back(json_real(p.at("lo")), json_real(p.at("hi")),
                                    json_real(p.at("coeff")),
                                    json_real(p.at("exponent")));
            return RadialProfile::piecewise_power(std::move(pieces));
        }
        if (kind == "shifted")
            return RadialProfile::shifted(profile_from_json(j.at("base")),
                                          json_real(j.at("rho")));
        if (kind == "tabulated") {
            std::vector<double> radii, values;
            for (const auto& r : j.at("radii")) radii.push_back(json_real(r));
            for (const auto& v : j.at("values")) values.push_back(json_real(v));
            return RadialProfile::tabulated(std::move(radii), std::move(values));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad profile description: ") + e.what());
    }
    throw ConfigError("unknown profile kind '" + kind + "'");
}

std::vector<double> schedule_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw ConfigError("schedule must be a nonempty array");
    std::vector<double> out;
    for (const auto& v : j) out.push_back(json_real(v));
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (!(out[i] < out[i + 1]))
            throw ConfigError("schedule must be strictly ascending");
    return out;
}

ExperimentConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    ExperimentConfig cfg;
    if (!j.contains("experiment"))
        throw ConfigError("config needs an 'experiment' field");
    cfg.kind = j.at("experiment").get<std::string>();
    const auto& kinds = experiment_kinds();
    if (std::find(kinds.begin(), kinds.end(), cfg.kind) == kinds.end())
        throw ConfigError("unknown experiment kind '" + cfg.kind + "'");
    cfg.params = j;
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            throw ConfigError("seed must be an integer");
        cfg.seed = j.at("seed").get<std::uint64_t>();
        cfg.has_seed = true;
    }
    if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

} // namespace radmax
