#include "masschain/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "masschain/artifacts.hpp"

namespace masschain {

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kInstability = 3;
constexpr int kHypotheses = 4;
constexpr int kNumerical = 5;

struct CommonFlags {
    std::string config_path;
    std::string out_prefix;
    std::string format;
    int workers = 0;
    int n_max = 0;
};

void add_common(CLI::App* cmd, CommonFlags& fl, bool config_required = true) {
    auto* opt = cmd->add_option("--config", fl.config_path, "path to the JSON run configuration");
    if (config_required) opt->required();
    cmd->add_option("--out", fl.out_prefix, "output path prefix");
    cmd->add_option("--workers", fl.workers, "worker thread count (0 = hardware)");
    cmd->add_option("--n-max", fl.n_max, "override grid/metric N_max");
    cmd->add_option("--format", fl.format, "csv|json|svg|all")
        ->check(CLI::IsMember({"csv", "json", "svg", "all"}));
}

RunConfig make_config(const CommonFlags& fl) {
    RunConfig rc = load_config(fl.config_path);
    if (!fl.out_prefix.empty()) rc.out_prefix = fl.out_prefix;
    if (!fl.format.empty()) rc.format = fl.format;
    if (fl.workers > 0) rc.workers = fl.workers;
    if (fl.n_max > 0) rc.grid.n_max = fl.n_max;
    return rc;
}

void report_files(const FigureArtifact& art, std::ostream& out) {
    for (const std::string& f : art.data_files) out << "wrote " << f << "\n";
    if (!art.svg_file.empty()) out << "wrote " << art.svg_file << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mass-chain disturbance amplification analysis"};
    app.require_subcommand(1);

    CommonFlags fl;
    std::string mode;
    for (const char* name : {"response", "contour", "nyquist", "stability", "bound",
                             "fixed-point", "dseq"}) {
        CLI::App* cmd = app.add_subcommand(name, "");
        add_common(cmd, fl);
        cmd->callback([&mode, name]() { mode = name; });
    }

    // CLI11 wants argv-style reversed vector of char*.
    std::vector<std::string> argv_store = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("masschain");
        for (const std::string& a : argv_store) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        const RunConfig rc = make_config(fl);
        FigureArtifact art;
        if (mode == "response")
            art = emit_response(rc);
        else if (mode == "contour")
            art = emit_contour(rc);
        else if (mode == "nyquist")
            art = emit_nyquist(rc);
        else if (mode == "stability")
            art = emit_stability(rc, out);
        else if (mode == "bound")
            art = emit_bound(rc, out);
        else if (mode == "fixed-point")
            art = emit_fixed_point(rc, out);
        else if (mode == "dseq")
            art = emit_dseq(rc, out);
        report_files(art, out);
        return kOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InstabilityError& e) {
        err << "instability: " << e.what() << "\n";
        return kInstability;
    } catch (const HypothesesError& e) {
        err << "bound hypotheses unmet: " << e.what() << "\n";
        return kHypotheses;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
}

} // namespace masschain
