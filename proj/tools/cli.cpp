#include "cli.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "corrkit/classic.hpp"
#include "corrkit/error.hpp"
#include "corrkit/gcorr.hpp"
#include "corrkit/harness.hpp"
#include "corrkit/io.hpp"
#include "corrkit/ncc.hpp"
#include "corrkit/plot.hpp"
#include "corrkit/synth.hpp"

namespace corrkit::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kCoefficientNames{"r", "rho", "tau", "kappa", "ncc", "omega"};

struct InputFlags {
    std::string path;
    std::string format;
    std::string x_col;
    std::string y_col;
};

struct SplitFlags {
    std::optional<std::size_t> train;
    std::optional<std::size_t> eval;
    std::size_t iterations = 10000;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

struct FamilyFlags {
    std::string family;
    std::size_t n = 100;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> params;
};

RngSeed resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return RngSeed{*flag};
    if (const char* env = std::getenv("CORRKIT_SEED")) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const auto value = std::stoull(text, &used);
            if (used == text.size()) return RngSeed{value};
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::InvalidArgument, "CORRKIT_SEED is not an unsigned integer");
    }
    return kDefaultSeed;
}

void add_input_flags(CLI::App& cmd, InputFlags& in, bool required) {
    auto* opt = cmd.add_option("--in", in.path, "input csv or jsonl file");
    if (required) opt->required();
    cmd.add_option("--format", in.format, "csv or jsonl (default: from the file extension)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd.add_option("--x", in.x_col, "independent column (default: first column)");
    cmd.add_option("--y", in.y_col, "dependent column (default: second column)");
}

void add_split_flags(CLI::App& cmd, SplitFlags& split) {
    cmd.add_option("--train", split.train, "training partition size; enables the repeated-split estimate of omega");
    cmd.add_option("--eval", split.eval, "evaluation partition size (default: n - train)");
    cmd.add_option("--iters", split.iterations, "number of random partitions")->capture_default_str();
    cmd.add_option("--seed", split.seed, "random seed (fallback: CORRKIT_SEED, then a fixed constant)");
    cmd.add_option("--threads", split.threads, "worker threads for the split estimate (0 = all cores)")
        ->capture_default_str();
}

void add_family_flags(CLI::App& cmd, FamilyFlags& fam) {
    cmd.add_option("--family", fam.family, "synthetic family");
    cmd.add_option("--n", fam.n, "number of points")->capture_default_str();
    cmd.add_option("--seed", fam.seed, "random seed (fallback: CORRKIT_SEED, then a fixed constant)");
    cmd.add_option("--param", fam.params, "family parameter as key=value (repeatable)");
}

std::optional<SplitPlan> make_plan(const SplitFlags& flags, std::size_t n) {
    if (!flags.train) {
        if (flags.eval) throw Error(ErrorCode::InvalidPlan, "--eval needs --train");
        return std::nullopt;
    }
    SplitPlan plan;
    plan.train_size = *flags.train;
    plan.eval_size = flags.eval ? *flags.eval : (n > *flags.train ? n - *flags.train : 0);
    plan.iterations = flags.iterations;
    plan.seed = resolve_seed(flags.seed);
    return plan;
}

FamilySpec make_family_spec(const FamilyFlags& flags) {
    FamilySpec spec;
    spec.family = parse_family(flags.family);
    spec.n = flags.n;
    spec.seed = resolve_seed(flags.seed);
    for (const auto& kv : flags.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidParams, "--param expects key=value, got '" + kv + "'");
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(kv.substr(eq + 1), &used);
            if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidParams, "--param value in '" + kv + "' is not a number");
        }
        spec.params[kv.substr(0, eq)] = value;
    }
    return spec;
}

PairedSample load_input(const InputFlags& in) {
    const DataFormat format = in.format.empty() ? format_from_path(in.path) : parse_format(in.format);
    const RawTable table = load_table(in.path, format);
    std::string x_col = in.x_col;
    std::string y_col = in.y_col;
    if (x_col.empty() || y_col.empty()) {
        if (table.header().size() < 2) throw Error(ErrorCode::MissingColumn, "input needs at least two columns");
        if (x_col.empty()) x_col = table.header()[0];
        if (y_col.empty()) y_col = table.header()[1];
    }
    return PairedSample(table.numeric_column(x_col), table.numeric_column(y_col));
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

std::vector<std::string> requested_coefficients(const std::vector<std::string>& coef, bool all) {
    if (all || coef.empty()) return kCoefficientNames;
    std::vector<std::string> picked;
    for (const auto& name : kCoefficientNames) {
        if (std::find(coef.begin(), coef.end(), name) != coef.end()) picked.push_back(name);
    }
    return picked;
}

int do_compute(const InputFlags& in, const SplitFlags& split_flags, const std::vector<std::string>& coef, bool all,
               std::size_t bins, bool json, std::ostream& out, std::ostream& err) {
    const PairedSample sample = load_input(in);
    PanelOptions options;
    options.bins = bins;
    options.split = make_plan(split_flags, sample.size());
    options.threads = split_flags.threads;
    if (options.split) validate_plan(*options.split, sample.size());
    const CoefficientPanel panel = compute_panel(sample, options);

    const std::map<std::string, const Coefficient*> by_name{
        {"r", &panel.r},         {"rho", &panel.rho}, {"tau", &panel.tau},
        {"kappa", &panel.kappa}, {"ncc", &panel.ncc}, {"omega", &panel.omega},
    };
    const auto names = requested_coefficients(coef, all);
    const bool split = options.split.has_value();
    auto key_of = [&](const std::string& name) { return split && name == "omega" ? std::string("omega_mean") : name; };

    int status = kOk;
    Json values = Json::object();
    Json notes = Json::object();
    for (const auto& name : names) {
        const Coefficient& c = *by_name.at(name);
        values[key_of(name)] = c.value ? Json(*c.value) : Json(nullptr);
        if (split && name == "omega") values["omega_stddev"] = panel.omega_sd ? Json(*panel.omega_sd) : Json(nullptr);
        if (!c.note.empty()) notes[name] = c.note;
        if (!c.valid()) {
            err << "error: " << name << ": " << c.note << '\n';
            status = kDataError;
        }
    }

    if (json) {
        Json doc = Json::object();
        doc["schema"] = "corrkit.compute/v1";
        doc["n"] = sample.size();
        doc["bins"] = bins;
        doc["omega_mode"] = split ? "split" : "full";
        if (split) {
            doc["train_size"] = options.split->train_size;
            doc["eval_size"] = options.split->eval_size;
            doc["iterations"] = options.split->iterations;
            doc["seed"] = options.split->seed.value;
        }
        doc["coefficients"] = std::move(values);
        doc["notes"] = std::move(notes);
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : values.items()) {
            out << std::left << std::setw(14) << key;
            out << (value.is_null() ? std::string("invalid") : format_real(value.get<double>()));
            if (notes.contains(key)) out << "  (" << notes[key].get<std::string>() << ')';
            out << '\n';
        }
    }
    return status;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"corrkit: correlation coefficients including g-correlation", "corrkit"};
    app.require_subcommand(1);

    InputFlags compute_in;
    SplitFlags compute_split;
    std::vector<std::string> coef;
    bool compute_all = false;
    std::size_t compute_bins = kDefaultNccBins;
    bool compute_json = false;
    auto* compute = app.add_subcommand("compute", "coefficients for one (x, y) pair");
    add_input_flags(*compute, compute_in, true);
    add_split_flags(*compute, compute_split);
    compute->add_option("--coef", coef, "coefficients to print: r,rho,tau,kappa,ncc,omega")
        ->delimiter(',')
        ->check(CLI::IsMember(kCoefficientNames));
    compute->add_flag("--all", compute_all, "print every coefficient");
    compute->add_option("--b", compute_bins, "NCC rank bins")->capture_default_str();
    compute->add_flag("--json", compute_json, "print the corrkit.compute/v1 json document");

    InputFlags panel_in;
    SplitFlags panel_split;
    std::vector<std::string> independents;
    std::vector<std::string> dependents;
    std::size_t panel_bins = kDefaultNccBins;
    std::string out_format = "csv";
    std::string panel_out;
    bool absolute = false;
    bool timestamp = false;
    auto* panel = app.add_subcommand("panel", "coefficient panel for every independent x dependent pair");
    panel->add_option("--in", panel_in.path, "input csv or jsonl table")->required();
    panel->add_option("--format", panel_in.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    panel->add_option("--independents", independents, "independent columns")->delimiter(',')->required();
    panel->add_option("--dependents", dependents, "dependent columns")->delimiter(',')->required();
    add_split_flags(*panel, panel_split);
    panel->add_option("--b", panel_bins, "NCC rank bins")->capture_default_str();
    panel->add_option("--out-format", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    panel->add_option("--out", panel_out, "output path (default: stdout)");
    panel->add_flag("--abs", absolute, "report absolute values of r, rho, tau, kappa");
    panel->add_flag("--timestamp", timestamp, "record the generation time in json metadata");

    FamilyFlags synth_family;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "write a synthetic family as csv");
    add_family_flags(*synth, synth_family);
    synth->get_option("--family")->required();
    synth->add_option("--out", synth_out, "output path (default: stdout)");

    InputFlags plot_in;
    FamilyFlags plot_family;
    std::string plot_out;
    auto* plot = app.add_subcommand("plot", "svg scatter with the fitted g-correlation separators");
    add_input_flags(*plot, plot_in, false);
    add_family_flags(*plot, plot_family);
    plot->add_option("--out", plot_out, "svg output path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*compute) {
            return do_compute(compute_in, compute_split, coef, compute_all, compute_bins, compute_json, out, err);
        }
        if (*panel) {
            ExperimentConfig config;
            config.input = panel_in.path;
            config.format = panel_in.format.empty() ? format_from_path(panel_in.path) : parse_format(panel_in.format);
            config.independents = independents;
            config.dependents = dependents;
            config.options.bins = panel_bins;
            config.options.threads = panel_split.threads;
            const RawTable table = load_table(config.input, config.format);
            config.options.split = make_plan(panel_split, table.row_count());
            PanelReport report = run_panel(table, config);
            if (timestamp) report.metadata.generated_at = utc_timestamp();
            write_output(panel_out, render_report(report, parse_report_format(out_format), RenderOptions{absolute}), out);
            return kOk;
        }
        if (*synth) {
            std::ostringstream csv;
            write_paired_csv(csv, generate(make_family_spec(synth_family)));
            write_output(synth_out, csv.str(), out);
            return kOk;
        }
        if (*plot) {
            const bool from_file = !plot_in.path.empty();
            if (from_file == !plot_family.family.empty()) {
                err << "usage error: plot needs exactly one of --in or --family\n";
                return kUsage;
            }
            const PairedSample sample = from_file ? load_input(plot_in) : generate(make_family_spec(plot_family));
            const GCorrFit fit = fit_g(sample);
            write_output(plot_out, render_g_plot(sample, fit), out);
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsage;
}

}  // namespace corrkit::cli
