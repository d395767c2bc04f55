#include "masschain/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "masschain/svg.hpp"

namespace masschain {

using nlohmann::json;

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

namespace {

const char* kPalette[] = {"#1f6fb4", "#d1342f", "#2c8a4b", "#8452a0", "#b8860b", "#008b8b"};

std::ofstream open_out(const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + path + "'");
    return f;
}

bool want(const RunConfig& rc, const char* fmt) { return rc.format == "all" || rc.format == fmt; }

double omega_char(const DeviceConfig& dc, double mass) {
    if (!dc.rational) return std::sqrt(dc.spec.k / mass);
    try {
        return std::sqrt(spring_split(*dc.rational).k / mass);
    } catch (const Error&) {
        return 1.0;
    }
}

std::vector<double> decade_ticks(double lo, double hi) {
    std::vector<double> t;
    for (int e = static_cast<int>(std::floor(std::log10(lo))); std::pow(10.0, e) <= hi * 1.0001; ++e) {
        const double v = std::pow(10.0, e);
        if (v >= lo * 0.9999) t.push_back(v);
    }
    return t;
}

std::vector<double> linear_ticks(double lo, double hi, int n) {
    std::vector<double> t;
    for (int k = 0; k <= n; ++k) t.push_back(lo + (hi - lo) * k / n);
    return t;
}

json crossing_list(const StabilityReport& rep) {
    json arr = json::array();
    for (const auto& c : rep.crossings)
        arr.push_back({{"omega", c.omega}, {"h_re", c.h.real()}, {"h_im", c.h.imag()}});
    return arr;
}

} // namespace

json stability_to_json(const StabilityReport& rep) {
    return json{{"stable", rep.stable},
                {"undetermined", rep.undetermined},
                {"crossings", crossing_list(rep)},
                {"note", rep.note}};
}

json bound_to_json(const BoundReport& rep) {
    return json{{"taylor",
                 {{"c1", rep.taylor.c1},
                  {"c2", rep.taylor.c2},
                  {"c3", rep.taylor.c3},
                  {"c4", rep.taylor.c4},
                  {"omega0", rep.taylor.omega0},
                  {"omega1", rep.taylor.omega1}}},
                {"low_freq_bound", rep.low_freq_bound},
                {"A0", rep.a0},
                {"zeta0_mod", rep.zeta0_mod},
                {"high_freq_bound", rep.high_freq_bound},
                {"global_bound", rep.global_bound},
                {"empirical_sup", rep.empirical_sup},
                {"sound", rep.global_bound >= rep.empirical_sup}};
}

FigureArtifact emit_response(const RunConfig& rc) {
    if (!rc.has_device()) throw ConfigError("response: a device block is required");
    if (rc.n_list.empty()) throw ConfigError("response: chain block with a nonempty N list is required");
    const DeviceConfig& dc = rc.device();
    if (!dc.rational) dc.spec.validate();

    const StabilityReport st = stability_check(dc.admittance(), rc.mass);
    if (!st.stable) throw InstabilityError("response: device fails the stability condition");

    const double wc = omega_char(dc, rc.mass);
    const std::vector<double> omegas = frequency_grid(rc.freq, wc);
    const int n_top = *std::max_element(rc.n_list.begin(), rc.n_list.end());

    std::vector<std::vector<double>> columns(rc.n_list.size());
    std::vector<double> per_n(static_cast<size_t>(n_top));
    for (double w : omegas) {
        const Complex h = h_of_s(dc.admittance(), rc.mass, Complex(0.0, w));
        max_F_per_N(h, per_n);
        for (size_t k = 0; k < rc.n_list.size(); ++k)
            columns[k].push_back(per_n[static_cast<size_t>(rc.n_list[k] - 1)]);
    }

    FigureArtifact art;
    art.kind = "frequency_response";
    if (want(rc, "csv")) {
        const std::string path = rc.out_prefix + ".csv";
        std::ofstream f = open_out(path);
        f << "omega";
        for (int n : rc.n_list) f << ",maxF_N" << n;
        f << "\n";
        for (size_t r = 0; r < omegas.size(); ++r) {
            f << csv_num(omegas[r]);
            for (const auto& col : columns) f << "," << csv_num(col[r]);
            f << "\n";
        }
        art.data_files.push_back(path);
    }
    if (want(rc, "svg")) {
        double y_max = 0.0;
        for (const auto& col : columns) y_max = std::max(y_max, *std::max_element(col.begin(), col.end()));
        y_max = std::max(1.1, 1.05 * y_max);
        SvgCanvas svg(640, 420);
        svg.set_viewport(omegas.front(), omegas.back(), 0.0, y_max, rc.freq.log, false);
        svg.axes(rc.freq.log ? decade_ticks(omegas.front(), omegas.back())
                             : linear_ticks(omegas.front(), omegas.back(), 5),
                 linear_ticks(0.0, y_max, 5), "omega [rad/s]", "max_i |F_N(i)|");
        svg.line(omegas.front(), 1.0, omegas.back(), 1.0, {"#888888", 1.0, "4,3", "none"});
        for (size_t k = 0; k < columns.size(); ++k) {
            std::vector<std::pair<double, double>> pts(omegas.size());
            for (size_t r = 0; r < omegas.size(); ++r) pts[r] = {omegas[r], columns[k][r]};
            const std::string color = kPalette[k % 6];
            svg.polyline(pts, {color, 1.5, "", "none"});
            svg.legend_entry(static_cast<int>(k), "N = " + std::to_string(rc.n_list[k]), color);
        }
        const std::string path = rc.out_prefix + ".svg";
        open_out(path) << svg.str();
        art.svg_file = path;
    }
    return art;
}

namespace {

void render_contour_svg(const std::vector<GridResult>& grids,
                        const std::vector<std::pair<std::string, std::vector<std::pair<double, Complex>>>>& loci,
                        const std::string& path) {
    const GridRegion& rg = grids.front().region;
    SvgCanvas svg(620, 620.0 * (rg.im_max - rg.im_min) / (rg.re_max - rg.re_min) + 40.0);
    svg.set_viewport(rg.re_min, rg.re_max, rg.im_min, rg.im_max, false, false);
    svg.axes(linear_ticks(rg.re_min, rg.re_max, 4), linear_ticks(rg.im_min, rg.im_max, 4),
             "Re(g)", "Im(g)");
    // The cut: g real, Re g <= -1/4.
    if (rg.im_min < 0.0 && rg.im_max > 0.0 && rg.re_min < -0.25) {
        svg.line(rg.re_min, 0.0, -0.25, 0.0, {"#999999", 3.0, "", "none"});
        svg.circle(-0.25, 0.0, 3.0, "#999999");
    }
    for (size_t gi = 0; gi < grids.size(); ++gi) {
        const GridResult& grid = grids[gi];
        for (size_t lv = 0; lv < grid.contours.size(); ++lv) {
            const ContourLevel& cl = grid.contours[lv];
            // Shade from blue (low levels) to red (high levels); families of
            // grids (per-i curves) cycle the palette instead.
            char color[16];
            if (grids.size() > 1) {
                std::snprintf(color, sizeof color, "%s", kPalette[gi % 6]);
            } else {
                const int t = grid.contours.size() > 1
                                  ? static_cast<int>(255.0 * lv / (grid.contours.size() - 1))
                                  : 0;
                std::snprintf(color, sizeof color, "#%02x20%02x", t, 255 - t);
            }
            bool labelled = false;
            for (const Polyline& pl : cl.lines) {
                svg.polyline(pl, {color, 1.2, "", "none"});
                if (!labelled && pl.size() > 1) {
                    char label[48];
                    if (grids.size() > 1)
                        std::snprintf(label, sizeof label, "i=%d", grid.fixed_i);
                    else
                        std::snprintf(label, sizeof label, "ln g=%.2f", std::log(cl.level));
                    svg.text(pl.front().first, pl.front().second, label, 9.0, "start", color);
                    labelled = true;
                }
            }
        }
    }
    int slot = 0;
    for (const auto& [name, locus] : loci) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(locus.size());
        for (const auto& [w, g] : locus) {
            if (g.real() >= rg.re_min && g.real() <= rg.re_max && g.imag() >= rg.im_min &&
                g.imag() <= rg.im_max)
                pts.push_back({g.real(), g.imag()});
        }
        const std::string color = kPalette[slot % 6];
        svg.polyline(pts, {color, 2.0, "6,3", "none"});
        svg.legend_entry(slot, name, color);
        ++slot;
    }
    open_out(path) << svg.str();
}

} // namespace

FigureArtifact emit_contour(const RunConfig& rc) {
    const GridBlock& gb = rc.grid;
    // One grid per requested i for the single-i metric; other metrics do not
    // depend on i and use a single grid.
    std::vector<int> i_list = gb.i_list;
    if (gb.metric != GridMetric::MaxF_i1) i_list = {1};
    std::vector<GridResult> grids;
    grids.reserve(i_list.size());
    for (int i : i_list)
        grids.push_back(contour_grid(gb.region, gb.nx, gb.ny, gb.metric, gb.n_max, gb.levels,
                                     i, rc.workers));
    const GridResult& grid = grids.front();

    // Optional Nyquist overlay when device blocks are present.
    std::vector<std::pair<std::string, std::vector<std::pair<double, Complex>>>> loci;
    for (const DeviceConfig& dc : rc.devices) {
        const double wc = omega_char(dc, rc.mass);
        const std::vector<double> omegas = frequency_grid(rc.freq, wc);
        std::vector<std::pair<double, Complex>> locus;
        locus.reserve(omegas.size());
        for (double w : omegas)
            locus.emplace_back(w, g_of_s(dc.admittance(), rc.mass, Complex(0.0, w)));
        loci.emplace_back(dc.name, std::move(locus));
    }

    FigureArtifact art;
    art.kind = loci.empty() ? "contour_map" : "nyquist_overlay";
    if (want(rc, "csv")) {
        const std::string path = rc.out_prefix + "_grid.csv";
        std::ofstream f = open_out(path);
        const bool multi = grids.size() > 1;
        f << (multi ? "i,re_g,im_g,value\n" : "re_g,im_g,value\n");
        for (size_t gi = 0; gi < grids.size(); ++gi) {
            const GridResult& g = grids[gi];
            for (int iy = 0; iy < g.ny; ++iy)
                for (int ix = 0; ix < g.nx; ++ix) {
                    if (multi) f << i_list[gi] << ",";
                    f << csv_num(g.g_re(ix)) << "," << csv_num(g.g_im(iy)) << ","
                      << csv_num(g.value(ix, iy)) << "\n";
                }
        }
        art.data_files.push_back(path);
    }
    if (want(rc, "json")) {
        json jc;
        jc["metric"] = to_string(grid.metric);
        jc["n_max"] = grid.n_max;
        jc["region"] = {{"re", {grid.region.re_min, grid.region.re_max}},
                        {"im", {grid.region.im_min, grid.region.im_max}}};
        json sets = json::array();
        for (size_t gi = 0; gi < grids.size(); ++gi) {
            json levels = json::array();
            for (const ContourLevel& cl : grids[gi].contours) {
                json lines = json::array();
                for (const Polyline& pl : cl.lines) {
                    json pts = json::array();
                    for (const auto& [x, y] : pl) pts.push_back({x, y});
                    lines.push_back(std::move(pts));
                }
                levels.push_back({{"level", cl.level}, {"polylines", std::move(lines)}});
            }
            json entry = {{"contours", std::move(levels)}};
            if (grid.metric == GridMetric::MaxF_i1) entry["i"] = i_list[gi];
            sets.push_back(std::move(entry));
        }
        jc["grids"] = std::move(sets);
        if (!loci.empty()) {
            json jl = json::array();
            for (const auto& [name, locus] : loci) {
                json pts = json::array();
                for (const auto& [w, g] : locus) pts.push_back({w, g.real(), g.imag()});
                jl.push_back({{"name", name}, {"omega_re_im", std::move(pts)}});
            }
            jc["loci"] = std::move(jl);
        }
        const std::string path = rc.out_prefix + "_contours.json";
        open_out(path) << jc.dump(1) << "\n";
        art.data_files.push_back(path);
    }
    if (want(rc, "svg")) {
        const std::string path = rc.out_prefix + ".svg";
        render_contour_svg(grids, loci, path);
        art.svg_file = path;
    }
    return art;
}

FigureArtifact emit_nyquist(const RunConfig& rc) {
    if (!rc.has_device()) throw ConfigError("nyquist: a device block is required");
    FigureArtifact art;
    art.kind = "nyquist_overlay";

    std::vector<std::pair<std::string, std::vector<std::pair<double, Complex>>>> loci;
    for (const DeviceConfig& dc : rc.devices) {
        const double wc = omega_char(dc, rc.mass);
        const std::vector<double> omegas = frequency_grid(rc.freq, wc);
        std::vector<std::pair<double, Complex>> locus;
        locus.reserve(omegas.size());
        for (double w : omegas)
            locus.emplace_back(w, g_of_s(dc.admittance(), rc.mass, Complex(0.0, w)));
        loci.emplace_back(dc.name, std::move(locus));
    }

    if (want(rc, "csv")) {
        const std::string path = rc.out_prefix + ".csv";
        std::ofstream f = open_out(path);
        f << "device,omega,re_g,im_g\n";
        for (const auto& [name, locus] : loci)
            for (const auto& [w, g] : locus)
                f << name << "," << csv_num(w) << "," << csv_num(g.real()) << ","
                  << csv_num(g.imag()) << "\n";
        art.data_files.push_back(path);
    }
    if (want(rc, "svg")) {
        GridResult empty;
        empty.region = rc.grid.region;
        empty.nx = empty.ny = 2;
        empty.values.assign(4, 0.0);
        empty.excluded.assign(4, 0);
        const std::string path = rc.out_prefix + ".svg";
        render_contour_svg({empty}, loci, path);
        art.svg_file = path;
    }
    return art;
}

FigureArtifact emit_stability(const RunConfig& rc, std::ostream& out) {
    if (!rc.has_device()) throw ConfigError("stability: a device block is required");
    const DeviceConfig& dc = rc.device();
    const StabilityReport rep = dc.rational ? stability_check(*dc.rational, rc.mass)
                                            : stability_check(dc.spec, rc.mass);
    const json j = stability_to_json(rep);
    out << j.dump(1) << "\n";
    FigureArtifact art;
    art.kind = "stability_report";
    if (want(rc, "json")) {
        const std::string path = rc.out_prefix + "_stability.json";
        open_out(path) << j.dump(1) << "\n";
        art.data_files.push_back(path);
    }
    return art;
}

FigureArtifact emit_bound(const RunConfig& rc, std::ostream& out) {
    if (!rc.has_device()) throw ConfigError("bound: a device block is required");
    const DeviceConfig& dc = rc.device();
    BoundReport rep;
    if (dc.rational) {
        const SpringSplit sp = spring_split(*dc.rational);
        const double wc = std::sqrt(sp.k / rc.mass);
        rep = global_bound(*dc.rational, rc.mass, rc.omega1 > 0.0 ? rc.omega1 : 0.5 * wc, wc);
    } else if (rc.omega1 > 0.0) {
        dc.spec.validate();
        rep = global_bound(dc.spec.rational(), rc.mass, rc.omega1, std::sqrt(dc.spec.k / rc.mass));
    } else {
        rep = global_bound(dc.spec, rc.mass);
    }
    const json j = bound_to_json(rep);

    out << "taylor constants:\n";
    out << "  c1     = " << csv_num(rep.taylor.c1) << "  [s^2]\n";
    out << "  c2     = " << csv_num(rep.taylor.c2) << "  [s^3]\n";
    out << "  c3     = " << csv_num(rep.taylor.c3) << "\n";
    out << "  c4     = " << csv_num(rep.taylor.c4) << "\n";
    out << "  omega0 = " << csv_num(rep.taylor.omega0) << "  [rad/s]\n";
    out << "  omega1 = " << csv_num(rep.taylor.omega1) << "  [rad/s]\n";
    out << "bands:\n";
    out << "  low-frequency bound  = " << csv_num(rep.low_freq_bound) << "\n";
    out << "  A0                   = " << csv_num(rep.a0) << "\n";
    out << "  |zeta0|              = " << csv_num(rep.zeta0_mod) << "\n";
    out << "  high-frequency bound = " << csv_num(rep.high_freq_bound) << "\n";
    out << "global bound    = " << csv_num(rep.global_bound) << "\n";
    out << "empirical sup   = " << csv_num(rep.empirical_sup) << "  (i <= 5, N in {1,10,50,100,200})\n";
    out << "soundness " << (rep.global_bound >= rep.empirical_sup ? "PASS" : "FAIL") << "\n";

    FigureArtifact art;
    art.kind = "bound_table";
    if (want(rc, "json")) {
        const std::string path = rc.out_prefix + "_bound.json";
        open_out(path) << j.dump(1) << "\n";
        art.data_files.push_back(path);
    }
    return art;
}

FigureArtifact emit_fixed_point(const RunConfig& rc, std::ostream& out) {
    const MobiusData md = mobius_data(rc.mobius.h);
    json j;
    j["h"] = {md.h.real(), md.h.imag()};
    j["zeta"] = {md.zeta.real(), md.zeta.imag()};
    j["abs_zeta"] = std::abs(md.zeta);
    j["classification"] = to_string(md.classification);
    j["mu_plus_1"] = {md.mu_plus_1.real(), md.mu_plus_1.imag()};
    json fps = json::array();
    for (int i = 1; i <= rc.mobius.i_max; ++i) {
        const FixedPointPair fp = fixed_points(i, rc.mobius.h);
        fps.push_back({{"i", i},
                       {"mu_plus", {fp.mu_plus.real(), fp.mu_plus.imag()}},
                       {"mu_minus", {fp.mu_minus.real(), fp.mu_minus.imag()}}});
    }
    j["fixed_points"] = std::move(fps);
    out << j.dump(1) << "\n";

    FigureArtifact art;
    art.kind = "fixed_point_report";
    if (want(rc, "json")) {
        const std::string path = rc.out_prefix + "_fixed_point.json";
        open_out(path) << j.dump(1) << "\n";
        art.data_files.push_back(path);
    }
    return art;
}

FigureArtifact emit_dseq(const RunConfig& rc, std::ostream& out) {
    const DSequence d = d_seq(rc.mobius.h, rc.mobius.i_max);
    FigureArtifact art;
    art.kind = "d_sequence";
    std::string csv = "i,re_d,im_d\n";
    for (int i = -1; i <= d.i_max(); ++i) {
        csv += std::to_string(i);
        csv += ",";
        csv += csv_num(d[i].real());
        csv += ",";
        csv += csv_num(d[i].imag());
        csv += "\n";
    }
    out << csv;
    if (want(rc, "csv")) {
        const std::string path = rc.out_prefix + "_dseq.csv";
        open_out(path) << csv;
        art.data_files.push_back(path);
    }
    return art;
}

} // namespace masschain
