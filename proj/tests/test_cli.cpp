#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "masschain/artifacts.hpp"
#include "masschain/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const char* kConfigDir = MASSCHAIN_CONFIG_DIR;

struct TmpDir {
    fs::path path;
    TmpDir() {
        path = fs::temp_directory_path() / fs::path("masschain_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TmpDir() { fs::remove_all(path); }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int rc = masschain::run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return rc;
}

json minimal_device2(const std::string& prefix) {
    return json{{"device",
                 {{"layout", "L1"},
                  {"k", {{"value", 1.7e5}, {"unit", "kN/m"}}},
                  {"c", {{"value", 6.0e3}, {"unit", "kN·s/m"}}}}},
                {"mass", 1.0e5},
                {"chain", {{"N", {1, 20}}}},
                {"frequency", {{"min", 1.0}, {"max", 200.0}, {"points", 120}}},
                {"output", {{"prefix", prefix}}}};
}

std::string write_config(const TmpDir& tmp, const std::string& name, const json& j) {
    const fs::path p = tmp.path / name;
    std::ofstream f(p);
    f << j.dump(2);
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("response artifact: csv columns, values, determinism") {
    TmpDir tmp;
    const std::string prefix = (tmp.path / "resp").string();
    const std::string cfg = write_config(tmp, "resp.json", minimal_device2(prefix));
    CHECK(run({"response", "--config", cfg}) == 0);

    const std::string csv = slurp(prefix + ".csv");
    CHECK(csv.rfind("omega,maxF_N1,maxF_N20\n", 0) == 0);
    // 120 data rows + header.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 121);
    // Device 2: every sampled value stays at or below 1.
    std::istringstream rows(csv);
    std::string line;
    std::getline(rows, line);
    while (std::getline(rows, line)) {
        const size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
        CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) <= 1.0 + 1e-9);
        CHECK(std::stod(line.substr(c2 + 1)) <= 1.0 + 1e-9);
    }
    const std::string svg1 = slurp(prefix + ".svg");
    CHECK(svg1.rfind("<svg", 0) == 0);

    // Re-running regenerates byte-identical artifacts.
    CHECK(run({"response", "--config", cfg}) == 0);
    CHECK(slurp(prefix + ".csv") == csv);
    CHECK(slurp(prefix + ".svg") == svg1);
}

TEST_CASE("unit conversion equivalence") {
    TmpDir tmp;
    json a = minimal_device2((tmp.path / "a").string());
    json b = a;
    b["device"]["k"] = 1.7e8;
    b["device"]["c"] = 6.0e6;
    b["output"]["prefix"] = (tmp.path / "b").string();
    CHECK(run({"response", "--config", write_config(tmp, "a.json", a)}) == 0);
    CHECK(run({"response", "--config", write_config(tmp, "b.json", b)}) == 0);
    CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
}

TEST_CASE("config errors exit with code 2") {
    TmpDir tmp;
    // Empty N list.
    json j = minimal_device2((tmp.path / "x").string());
    j["chain"]["N"] = json::array();
    CHECK(run({"response", "--config", write_config(tmp, "bad1.json", j)}) == 2);
    // Negative damping rejected at parse.
    json neg = minimal_device2((tmp.path / "y").string());
    neg["device"]["c"] = -5.0;
    CHECK(run({"stability", "--config", write_config(tmp, "bad2.json", neg)}) == 2);
    // Unknown unit.
    json uu = minimal_device2((tmp.path / "z").string());
    uu["device"]["k"] = {{"value", 1.0}, {"unit", "lbf/in"}};
    CHECK(run({"response", "--config", write_config(tmp, "bad3.json", uu)}) == 2);
    // Malformed region.
    json mr = minimal_device2((tmp.path / "w").string());
    mr["grid"] = {{"re", {0.5, -0.5}}, {"im", {-1.0, 1.0}}};
    CHECK(run({"contour", "--config", write_config(tmp, "bad4.json", mr)}) == 2);
    // Missing config file.
    CHECK(run({"response", "--config", (tmp.path / "nope.json").string()}) == 2);
    // Unknown flag.
    CHECK(run({"response", "--bogus"}) == 2);
}

TEST_CASE("instability exits with code 3 and bound hypotheses with 4") {
    TmpDir tmp;
    json spring{{"device", {{"layout", "L1"}, {"k", 1.7e8}}},
                {"mass", 1.0e5},
                {"chain", {{"N", {1, 5}}}},
                {"frequency", {{"min", 1.0}, {"max", 100.0}, {"points", 50}}},
                {"output", {{"prefix", (tmp.path / "s").string()}}}};
    const std::string cfg = write_config(tmp, "spring.json", spring);
    CHECK(run({"response", "--config", cfg}) == 3);
    CHECK(run({"bound", "--config", cfg}) == 4);
}

TEST_CASE("stability report JSON") {
    TmpDir tmp;
    json j = minimal_device2((tmp.path / "st").string());
    const std::string cfg = write_config(tmp, "st.json", j);
    std::string text;
    CHECK(run({"stability", "--config", cfg}, &text) == 0);
    const json rep = json::parse(text.substr(0, text.find("wrote ")));
    CHECK(rep.at("stable").get<bool>());
    CHECK(rep.at("crossings").empty());

    json spring{{"device", {{"layout", "L1"}, {"k", 1.7e8}}},
                {"mass", 1.0e5},
                {"output", {{"prefix", (tmp.path / "sp").string()}}}};
    std::string text2;
    CHECK(run({"stability", "--config", write_config(tmp, "sp.json", spring)}, &text2) == 0);
    const json rep2 = json::parse(text2.substr(0, text2.find("wrote ")));
    CHECK_FALSE(rep2.at("stable").get<bool>());
    CHECK(rep2.at("crossings").size() > 0);
}

TEST_CASE("bound report round-trips through JSON deterministically") {
    TmpDir tmp;
    json j = minimal_device2((tmp.path / "bd").string());
    const std::string cfg = write_config(tmp, "bd.json", j);
    CHECK(run({"bound", "--config", cfg}) == 0);
    const std::string first = slurp(tmp.path / "bd_bound.json");
    const json rep = json::parse(first);
    CHECK(rep.at("sound").get<bool>());
    CHECK(rep.at("global_bound").get<double>() >= rep.at("empirical_sup").get<double>());
    CHECK(run({"bound", "--config", cfg}) == 0);
    CHECK(slurp(tmp.path / "bd_bound.json") == first);
}

TEST_CASE("contour artifact on a coarse grid") {
    TmpDir tmp;
    json j{{"grid",
            {{"re", {-1.5, 0.5}},
             {"im", {-1.0, 1.0}},
             {"nx", 81},
             {"ny", 81},
             {"n_max", 60},
             {"metric", "abs_mu_plus_1"},
             {"levels", {1.0, 1.5}}}},
           {"output", {{"prefix", (tmp.path / "ct").string()}}}};
    const std::string cfg = write_config(tmp, "ct.json", j);
    CHECK(run({"contour", "--config", cfg}) == 0);
    CHECK(fs::exists(tmp.path / "ct_grid.csv"));
    CHECK(fs::exists(tmp.path / "ct_contours.json"));
    CHECK(fs::exists(tmp.path / "ct.svg"));
    const json contours = json::parse(slurp(tmp.path / "ct_contours.json"));
    CHECK(contours.at("metric") == "abs_mu_plus_1");
    bool some_line = false;
    for (const auto& g : contours.at("grids"))
        for (const auto& lv : g.at("contours"))
            if (!lv.at("polylines").empty()) some_line = true;
    CHECK(some_line);

    // Degenerate 2x2 grid is accepted and produces no contours.
    json tiny = j;
    tiny["grid"]["nx"] = 2;
    tiny["grid"]["ny"] = 2;
    tiny["output"]["prefix"] = (tmp.path / "tiny").string();
    CHECK(run({"contour", "--config", write_config(tmp, "tiny.json", tiny)}) == 0);
}

TEST_CASE("dseq and fixed-point subcommands") {
    TmpDir tmp;
    json j{{"mobius", {{"h_re", 1.0}, {"h_im", 0.0}, {"i_max", 3}}},
           {"output", {{"prefix", (tmp.path / "m").string()}}}};
    const std::string cfg = write_config(tmp, "m.json", j);
    std::string text;
    CHECK(run({"dseq", "--config", cfg}, &text) == 0);
    CHECK(text.find("i,re_d,im_d") != std::string::npos);
    CHECK(fs::exists(tmp.path / "m_dseq.csv"));

    std::string fp_text;
    CHECK(run({"fixed-point", "--config", cfg}, &fp_text) == 0);
    const json rep = json::parse(fp_text.substr(0, fp_text.find("wrote ")));
    CHECK(rep.at("classification") == "loxodromic");
    CHECK(rep.at("abs_zeta").get<double>() == doctest::Approx(0.3819660112501051));
}

TEST_CASE("format flag filters outputs") {
    TmpDir tmp;
    json j = minimal_device2((tmp.path / "fmt").string());
    const std::string cfg = write_config(tmp, "fmt.json", j);
    CHECK(run({"response", "--config", cfg, "--format", "csv"}) == 0);
    CHECK(fs::exists(tmp.path / "fmt.csv"));
    CHECK_FALSE(fs::exists(tmp.path / "fmt.svg"));
}

TEST_CASE("numerical failures exit with code 5") {
    TmpDir tmp;
    json j{{"mobius", {{"h_re", 1.0e12}, {"h_im", 0.0}, {"i_max", 60}}},
           {"output", {{"prefix", (tmp.path / "ov").string()}}}};
    CHECK(run({"dseq", "--config", write_config(tmp, "ov.json", j)}) == 5);
}

TEST_CASE("rational admittance device matches the layout device") {
    TmpDir tmp;
    json a = minimal_device2((tmp.path / "lay").string());
    json b = a;
    // Y(s) = (6e6 s + 1.7e8)/s, same as the L1 device in SI units.
    b["device"] = {{"layout", "rational"}, {"num", {1.7e8, 6.0e6}}, {"den", {0.0, 1.0}}};
    b["output"]["prefix"] = (tmp.path / "rat").string();
    CHECK(run({"response", "--config", write_config(tmp, "lay.json", a)}) == 0);
    CHECK(run({"response", "--config", write_config(tmp, "rat.json", b)}) == 0);
    CHECK(slurp(tmp.path / "lay.csv") == slurp(tmp.path / "rat.csv"));

    std::string text;
    CHECK(run({"stability", "--config", write_config(tmp, "rat2.json", b)}, &text) == 0);
    CHECK(json::parse(text.substr(0, text.find("wrote "))).at("stable").get<bool>());
}

TEST_CASE("nyquist artifact") {
    TmpDir tmp;
    json j{{"devices",
            {{{"name", "d2"},
              {"layout", "L1"},
              {"k", 1.7e8},
              {"c", 6.0e6}},
             {{"name", "d3"}, {"layout", "L2"}, {"k", 1.7e8}, {"c", 6.0e6}, {"b", 1.0e5}}}},
           {"mass", 1.0e5},
           {"frequency", {{"min", 1.0}, {"max", 1.0e4}, {"points", 200}}},
           {"output", {{"prefix", (tmp.path / "nyq").string()}}}};
    CHECK(run({"nyquist", "--config", write_config(tmp, "nyq.json", j)}) == 0);
    const std::string csv = slurp(tmp.path / "nyq.csv");
    CHECK(csv.rfind("device,omega,re_g,im_g\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 401);
    CHECK(fs::exists(tmp.path / "nyq.svg"));
}

TEST_CASE("shipped configs parse") {
    for (const auto& entry : fs::directory_iterator(kConfigDir)) {
        if (entry.path().extension() != ".json") continue;
        CHECK_NOTHROW(masschain::load_config(entry.path().string()));
    }
}

TEST_CASE("built binary runs end to end") {
    const char* bin = std::getenv("MASSCHAIN_BIN");
    if (!bin) return; // only under ctest
    TmpDir tmp;
    json j = minimal_device2((tmp.path / "bin").string());
    const std::string cfg = write_config(tmp, "bin.json", j);
    const std::string cmd = std::string("\"") + bin + "\" response --config " + cfg + " > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(tmp.path / "bin.csv"));
}
