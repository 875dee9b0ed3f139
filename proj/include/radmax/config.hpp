#pragma once

#include "radmax/profile.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace radmax {

// Experiment kinds accepted by the driver.
inline const std::vector<std::string>& experiment_kinds() {
    static const std::vector<std::string> kinds = {
        "a1-sweep", "growth",    "dimlimit", "weaktype",
        "kakeya-verify", "sharpness", "thm42",    "oracle-crosscheck"};
    return kinds;
}

struct ExperimentConfig {
    std::string kind;
    nlohmann::json params; // experiment-specific table (validated per kind)
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string out_path; // empty: <kind>.csv
    int threads = 0;      // 0: resolve from env / hardware

    void require_seed() const;
};

// Load and validate the top-level structure; throws ConfigError.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const nlohmann::json& j);

// real-number fields accept JSON numbers or the literal "inf"
double json_real(const nlohmann::json& j);
double param_real(const nlohmann::json& params, const char* key, double fallback);
int param_int(const nlohmann::json& params, const char* key, int fallback);

// profile description: {"kind": "piecewise_power", "pieces": [{lo, hi, coeff,
// exponent}...]} | {"kind": "shifted", "rho": r, "base": {...}} |
// {"kind": "tabulated", "radii": [...], "values": [...]}
RadialProfile profile_from_json(const nlohmann::json& j);

// nonempty ascending schedule
std::vector<double> schedule_from_json(const nlohmann::json& j);

} // namespace radmax
