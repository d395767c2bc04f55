#pragma once

// Run configuration: a JSON file with device / chain / frequency / grid /
// output blocks.  Device parameters carry unit tags and are converted to SI
// at parse time; all internal math is SI.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "masschain/analysis.hpp"
#include "masschain/contours.hpp"

namespace masschain {

struct DeviceConfig {
    std::string name;
    DeviceSpec spec;
    // Set for user-supplied rational admittances (layout "rational"); spec
    // is not populated in that case.
    std::optional<RationalAdmittance> rational;

    RationalAdmittance admittance() const { return rational ? *rational : spec.rational(); }
};

struct FrequencyBlock {
    double min = 0.0; // 0 -> default 1e-3 sqrt(k/m)
    double max = 0.0; // 0 -> default 1e3 sqrt(k/m)
    int points = 2000;
    bool log = true;
};

struct GridBlock {
    GridRegion region;
    int nx = 400, ny = 400;
    int n_max = 200;
    GridMetric metric = GridMetric::MaxF_i1;
    std::vector<int> i_list{1}; // for the single-i metric; one grid per entry
    std::vector<double> levels; // gamma values
};

struct MobiusBlock {
    Complex h{1.0, 0.0};
    int i_max = 5;
};

struct RunConfig {
    std::vector<DeviceConfig> devices; // first entry is "the" device
    double mass = 0.0;
    std::vector<int> n_list;
    std::vector<int> i_list;
    FrequencyBlock freq;
    GridBlock grid;
    MobiusBlock mobius;
    double omega1 = 0.0; // 0 -> default 0.5 sqrt(k/m)
    std::string out_prefix = "out";
    std::string format = "all"; // csv|json|svg|all
    int workers = 0;

    bool has_device() const { return !devices.empty(); }
    const DeviceConfig& device() const {
        if (devices.empty()) throw ConfigError("config: no device block");
        return devices.front();
    }
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// Unit tag -> SI factor; accepts {N/m, kN/m, N·s/m, kN·s/m, kg} and the
// ASCII spellings N.s/m / kN.s/m.
double unit_factor(const std::string& unit, const std::string& dimension);

std::vector<double> frequency_grid(const FrequencyBlock& f, double omega_char);

} // namespace masschain
