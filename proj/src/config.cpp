#include "masschain/config.hpp"

#include <cmath>
#include <fstream>

namespace masschain {

using nlohmann::json;

double unit_factor(const std::string& unit, const std::string& dimension) {
    if (dimension == "stiffness") {
        if (unit == "N/m") return 1.0;
        if (unit == "kN/m") return 1e3;
    } else if (dimension == "damping") {
        if (unit == "N·s/m" || unit == "N.s/m") return 1.0;
        if (unit == "kN·s/m" || unit == "kN.s/m") return 1e3;
    } else if (dimension == "mass" || dimension == "inertance") {
        if (unit == "kg") return 1.0;
    }
    throw ConfigError("config: unsupported unit '" + unit + "' for " + dimension);
}

namespace {

double quantity(const json& j, const std::string& key, const std::string& dimension,
                double fallback, bool required) {
    if (!j.contains(key)) {
        if (required) throw ConfigError("config: missing field '" + key + "'");
        return fallback;
    }
    const json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_object() && v.contains("value")) {
        const double raw = v.at("value").get<double>();
        if (v.contains("unit")) return raw * unit_factor(v.at("unit").get<std::string>(), dimension);
        return raw;
    }
    throw ConfigError("config: field '" + key + "' must be a number or {value, unit}");
}

Poly parse_poly(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ConfigError("config: rational device needs coefficient array '" + key + "'");
    std::vector<double> c;
    for (const auto& v : j.at(key)) c.push_back(v.get<double>());
    return Poly(std::move(c));
}

DeviceConfig parse_device(const json& j) {
    DeviceConfig dc;
    dc.name = j.value("name", "device");
    const std::string layout = j.value("layout", "L1");
    if (layout == "rational") {
        RationalAdmittance y{parse_poly(j, "num"), parse_poly(j, "den")};
        if (y.den.is_zero()) throw ConfigError("config: rational device denominator is zero");
        // Necessary condition only: Re Y(jw) >= 0 sampled on the axis.
        const PositiveRealResult pr = is_positive_real_on_axis(y, log_grid(1e-6, 1e6, 600));
        if (!pr.ok)
            throw ConfigError("config: rational admittance is not positive-real on the axis (Re Y < 0 at omega = " +
                              std::to_string(*pr.witness_omega) + ")");
        dc.rational = std::move(y);
        return dc;
    }
    if (layout == "L1")
        dc.spec.layout = Layout::L1;
    else if (layout == "L2")
        dc.spec.layout = Layout::L2;
    else
        throw ConfigError("config: unknown device layout '" + layout + "'");
    dc.spec.k = quantity(j, "k", "stiffness", 0.0, true);
    dc.spec.c = quantity(j, "c", "damping", 0.0, false);
    dc.spec.b = quantity(j, "b", "inertance", 0.0, false);
    dc.spec.validate();
    return dc;
}

GridMetric parse_metric(const std::string& s) {
    if (s == "abs_zeta") return GridMetric::AbsZeta;
    if (s == "abs_mu_plus_1") return GridMetric::AbsMuPlus1;
    if (s == "max_f_single_i") return GridMetric::MaxF_i1;
    if (s == "max_f_all_i") return GridMetric::MaxF_allI;
    throw ConfigError("config: unknown grid metric '" + s + "'");
}

} // namespace

RunConfig parse_config(const json& j) {
    RunConfig rc;
    try {
        if (j.contains("device")) rc.devices.push_back(parse_device(j.at("device")));
        if (j.contains("devices")) {
            for (const auto& d : j.at("devices")) rc.devices.push_back(parse_device(d));
        }
        rc.mass = quantity(j, "mass", "mass", 0.0, false);
        if (rc.has_device() && !(rc.mass > 0.0))
            throw ConfigError("config: mass must be positive when a device is given");

        if (j.contains("chain")) {
            const json& c = j.at("chain");
            if (c.contains("N")) {
                for (const auto& v : c.at("N")) rc.n_list.push_back(v.get<int>());
            }
            if (c.contains("i")) {
                for (const auto& v : c.at("i")) rc.i_list.push_back(v.get<int>());
            }
            for (int n : rc.n_list)
                if (n < 1) throw ConfigError("config: chain N entries must be >= 1");
            for (int i : rc.i_list)
                if (i < 1) throw ConfigError("config: chain i entries must be >= 1");
        }

        if (j.contains("frequency")) {
            const json& f = j.at("frequency");
            rc.freq.min = f.value("min", 0.0);
            rc.freq.max = f.value("max", 0.0);
            rc.freq.points = f.value("points", 2000);
            rc.freq.log = f.value("scale", std::string("log")) != "linear";
            if (rc.freq.points < 2) throw ConfigError("config: frequency points must be >= 2");
            if (rc.freq.min < 0.0 || (rc.freq.max != 0.0 && rc.freq.max <= rc.freq.min))
                throw ConfigError("config: invalid frequency range");
        }

        if (j.contains("grid")) {
            const json& g = j.at("grid");
            if (g.contains("re")) {
                rc.grid.region.re_min = g.at("re").at(0).get<double>();
                rc.grid.region.re_max = g.at("re").at(1).get<double>();
            }
            if (g.contains("im")) {
                rc.grid.region.im_min = g.at("im").at(0).get<double>();
                rc.grid.region.im_max = g.at("im").at(1).get<double>();
            }
            rc.grid.nx = g.value("nx", 400);
            rc.grid.ny = g.value("ny", 400);
            rc.grid.n_max = g.value("n_max", 200);
            if (g.contains("i_list")) {
                rc.grid.i_list.clear();
                for (const auto& v : g.at("i_list")) rc.grid.i_list.push_back(v.get<int>());
                if (rc.grid.i_list.empty()) throw ConfigError("config: grid i_list must be nonempty");
            } else {
                rc.grid.i_list = {g.value("i", 1)};
            }
            if (g.contains("metric")) rc.grid.metric = parse_metric(g.at("metric").get<std::string>());
            if (g.contains("levels")) {
                for (const auto& v : g.at("levels")) rc.grid.levels.push_back(v.get<double>());
            } else if (g.contains("levels_ln")) {
                for (const auto& v : g.at("levels_ln")) rc.grid.levels.push_back(std::exp(v.get<double>()));
            } else {
                // ln(gamma) = 0, 0.2, ..., 3.0
                for (int k = 0; k <= 15; ++k) rc.grid.levels.push_back(std::exp(0.2 * k));
            }
            if (rc.grid.nx < 2 || rc.grid.ny < 2) throw ConfigError("config: grid resolution must be >= 2x2");
            if (!(rc.grid.region.re_max > rc.grid.region.re_min) ||
                !(rc.grid.region.im_max > rc.grid.region.im_min))
                throw ConfigError("config: malformed grid region");
            if (rc.grid.n_max < 1) throw ConfigError("config: grid n_max must be >= 1");
            for (int i : rc.grid.i_list)
                if (i < 1) throw ConfigError("config: grid i entries must be >= 1");
        }

        if (j.contains("bound")) {
            rc.omega1 = j.at("bound").value("omega1", 0.0);
            if (rc.omega1 < 0.0) throw ConfigError("config: bound omega1 must be positive");
        }

        if (j.contains("mobius")) {
            const json& m = j.at("mobius");
            rc.mobius.h = Complex(m.value("h_re", 1.0), m.value("h_im", 0.0));
            rc.mobius.i_max = m.value("i_max", 5);
            if (rc.mobius.i_max < 1) throw ConfigError("config: mobius i_max must be >= 1");
        }

        if (j.contains("output")) {
            const json& o = j.at("output");
            rc.out_prefix = o.value("prefix", std::string("out"));
            rc.format = o.value("format", std::string("all"));
        }
        if (rc.format != "csv" && rc.format != "json" && rc.format != "svg" && rc.format != "all")
            throw ConfigError("config: format must be csv|json|svg|all");
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: parse failure: ") + e.what());
    }
    return parse_config(j);
}

std::vector<double> frequency_grid(const FrequencyBlock& f, double omega_char) {
    const double lo = f.min > 0.0 ? f.min : 1e-3 * omega_char;
    const double hi = f.max > 0.0 ? f.max : 1e3 * omega_char;
    if (!(hi > lo)) throw ConfigError("config: invalid frequency range");
    if (f.log) return log_grid(lo, hi, f.points);
    std::vector<double> g(static_cast<size_t>(f.points));
    for (int k = 0; k < f.points; ++k)
        g[static_cast<size_t>(k)] = lo + (hi - lo) * k / (f.points - 1);
    return g;
}

} // namespace masschain
