#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "corrkit/gcorr.hpp"
#include "corrkit/io.hpp"
#include "corrkit/plot.hpp"
#include "corrkit/synth.hpp"

using namespace corrkit;

namespace {

const std::filesystem::path kData = CORRKIT_TEST_DATA_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "corrkit_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("synth then compute on a line") {
    const auto csv = scratch("line.csv");
    Run s = run({"synth", "--family", "line", "--n", "50", "--param", "a=2", "--param", "b=1", "--out", csv.string()});
    REQUIRE(s.code == 0);

    Run c = run({"compute", "--in", csv.string(), "--all", "--json"});
    REQUIRE(c.code == 0);
    const auto doc = nlohmann::json::parse(c.out);
    CHECK(doc["schema"] == "corrkit.compute/v1");
    CHECK(doc["omega_mode"] == "full");
    CHECK(doc["coefficients"]["r"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(doc["coefficients"]["kappa"] == 1.0);
    CHECK(doc["coefficients"]["omega"] == 1.0);

    Run text = run({"compute", "--in", csv.string(), "--coef", "omega,kappa"});
    CHECK(text.code == 0);
    CHECK(text.out.find("kappa") != std::string::npos);
    CHECK(text.out.find("omega") != std::string::npos);
    CHECK(text.out.find("rho") == std::string::npos);
}

TEST_CASE("compute split mode matches estimate_g") {
    const auto csv = scratch("noise.csv");
    REQUIRE(run({"synth", "--family", "noise", "--n", "50", "--seed", "4", "--out", csv.string()}).code == 0);
    Run c = run({"compute", "--in", csv.string(), "--coef", "omega", "--train", "30", "--eval", "20", "--iters",
                 "1000", "--seed", "9", "--json"});
    REQUIRE(c.code == 0);
    const auto doc = nlohmann::json::parse(c.out);
    const PairedSample s = load_paired(csv, DataFormat::csv, "x", "y");
    const SplitEstimate est = estimate_g(s, SplitPlan{30, 20, 1000, RngSeed{9}});
    CHECK(doc["coefficients"]["omega_mean"].get<double>() == est.omega_mean);
    CHECK(doc["coefficients"]["omega_stddev"].get<double>() == est.omega_stddev);
    CHECK(doc["seed"] == 9);

    Run text = run({"compute", "--in", csv.string(), "--coef", "omega", "--train", "30", "--iters", "10"});
    CHECK(text.code == 0);
    CHECK(text.out.find("omega_mean") != std::string::npos);
    CHECK(text.out.find("omega_stddev") != std::string::npos);

    CHECK(run({"compute", "--in", csv.string(), "--train", "50", "--eval", "20"}).code == 2);
}

TEST_CASE("seed fallback order") {
    const auto a = run({"synth", "--family", "noise", "--n", "10"});
    const auto b = run({"synth", "--family", "noise", "--n", "10", "--seed", "20240601"});
    CHECK(a.out == b.out);

    setenv("CORRKIT_SEED", "5", 1);
    const auto env = run({"synth", "--family", "noise", "--n", "10"});
    const auto explicit5 = run({"synth", "--family", "noise", "--n", "10", "--seed", "5"});
    const auto flag_wins = run({"synth", "--family", "noise", "--n", "10", "--seed", "20240601"});
    unsetenv("CORRKIT_SEED");
    CHECK(env.out == explicit5.out);
    CHECK(env.out != a.out);
    CHECK(flag_wins.out == a.out);

    std::ostringstream direct;
    write_paired_csv(direct, generate(FamilySpec{Family::noise, 10, kDefaultSeed, {}}));
    CHECK(a.out == direct.str());
}

TEST_CASE("constant y reports omega 0.5") {
    Run c = run({"compute", "--in", (kData / "const_y.csv").string(), "--coef", "omega"});
    CHECK(c.code == 0);
    CHECK(c.out.find("0.5") != std::string::npos);
    CHECK(c.out.find("Y constant: uncorrelated") != std::string::npos);

    Run r = run({"compute", "--in", (kData / "const_y.csv").string(), "--coef", "r"});
    CHECK(r.code == 2);
    CHECK(r.err.find("r:") != std::string::npos);
    CHECK(r.err.find("DegenerateVariance") != std::string::npos);
}

TEST_CASE("usage and data errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"compute"}).code == 1);
    CHECK(run({"compute", "--in", "x.csv", "--bogus"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"compute", "--in", (kData / "missing.csv").string()}).code == 2);
    CHECK(run({"compute", "--in", (kData / "nan_row3.csv").string()}).code == 2);
    CHECK(run({"synth", "--family", "spiral"}).code == 2);
    CHECK(run({"synth", "--family", "line", "--param", "a"}).code == 2);
    CHECK(run({"synth", "--family", "line", "--n", "2"}).code == 2);
    CHECK(run({"plot", "--out", scratch("x.svg").string()}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("panel subcommand") {
    const auto out = scratch("panel.csv");
    Run p = run({"panel", "--in", (kData / "machining.jsonl").string(), "--independents",
                 "speed,feed,rms,energy,counts", "--dependents", "ra", "--out", out.string()});
    REQUIRE(p.code == 0);
    const std::string csv = slurp(out);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

    Run j1 = run({"panel", "--in", (kData / "machining.jsonl").string(), "--independents", "speed,feed",
                  "--dependents", "ra", "--out-format", "json", "--train", "30", "--eval", "20", "--iters", "50"});
    Run j2 = run({"panel", "--in", (kData / "machining.jsonl").string(), "--independents", "speed,feed",
                  "--dependents", "ra", "--out-format", "json", "--train", "30", "--eval", "20", "--iters", "50",
                  "--threads", "2"});
    REQUIRE(j1.code == 0);
    CHECK(j1.out == j2.out);
    const auto doc = nlohmann::json::parse(j1.out);
    CHECK(doc["schema"] == "corrkit.panel/v1");
    CHECK(doc["metadata"]["omega_mode"] == "split");
    CHECK(doc["metadata"]["generated_at"].is_null());

    Run stamped = run({"panel", "--in", (kData / "machining.jsonl").string(), "--independents", "speed",
                       "--dependents", "ra", "--out-format", "json", "--timestamp"});
    CHECK(nlohmann::json::parse(stamped.out)["metadata"]["generated_at"].is_string());

    CHECK(run({"panel", "--in", (kData / "machining.jsonl").string(), "--independents", "nope", "--dependents",
               "ra"})
              .code == 2);
}

TEST_CASE("plot output") {
    const auto svg = scratch("sin.svg");
    REQUIRE(run({"plot", "--family", "sinusoid", "--n", "400", "--out", svg.string()}).code == 0);
    const std::string text = slurp(svg);
    CHECK(text.rfind("<svg", 0) == 0);
    CHECK(count(text, "<line") == 2);
    CHECK(count(text, "class=\"separator") == 2);

    const auto again = scratch("sin2.svg");
    REQUIRE(run({"plot", "--family", "sinusoid", "--n", "400", "--out", again.string()}).code == 0);
    CHECK(slurp(again) == text);

    // hetero_step reaches omega = 1: one diagonal pair of quadrants is empty.
    const PairedSample s = generate(FamilySpec{Family::hetero_step, 100, RngSeed{11}, {}});
    const GCorrFit fit = fit_g(s);
    const std::string hetero = render_g_plot(s, fit);
    CHECK(fit.omega == 1.0);
    const bool empty_anti = fit.counts.c1_minus == 0 && fit.counts.c2_plus == 0;
    CHECK(empty_anti);
    CHECK(hetero.find("C1- = 0") != std::string::npos);
    CHECK(hetero.find("C2+ = 0") != std::string::npos);

    CHECK(run({"plot", "--in", (kData / "const_y.csv").string(), "--out", scratch("c.svg").string()}).code == 2);
}
