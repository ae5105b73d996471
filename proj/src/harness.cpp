#include "corrkit/harness.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "corrkit/classic.hpp"
#include "corrkit/error.hpp"

namespace corrkit {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kSchema = "corrkit.panel/v1";

template <typename F>
Coefficient guarded(F&& compute) {
    try {
        return Coefficient{compute(), {}};
    } catch (const Error& e) {
        return Coefficient{std::nullopt, e.what()};
    }
}

struct NamedField {
    std::string_view name;
    Coefficient CoefficientPanel::*member;
};

constexpr NamedField kFields[] = {
    {"r", &CoefficientPanel::r},         {"rho", &CoefficientPanel::rho}, {"tau", &CoefficientPanel::tau},
    {"kappa", &CoefficientPanel::kappa}, {"ncc", &CoefficientPanel::ncc}, {"omega", &CoefficientPanel::omega},
};

bool is_signed(std::string_view name) { return name != "ncc" && name != "omega"; }

std::optional<double> shown(const Coefficient& c, std::string_view name, RenderOptions options) {
    if (!c.value) return std::nullopt;
    return options.absolute && is_signed(name) ? std::abs(*c.value) : *c.value;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::optional<double> parse_cell(const std::string& text) {
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw Error(ErrorCode::ParseError, "report cell '" + text + "' is not a number");
    }
    return value;
}

}  // namespace

CoefficientPanel compute_panel(const PairedSample& s, const PanelOptions& options) {
    CoefficientPanel panel;
    panel.r = guarded([&] { return pearson(s); });
    panel.rho = guarded([&] { return spearman(s); });
    panel.tau = guarded([&] { return kendall(s); });
    panel.kappa = guarded([&] { return fechner(s).kappa; });
    panel.ncc = guarded([&] { return ncc(s, options.bins); });
    if (options.split) {
        try {
            const SplitEstimate est = estimate_g(s, *options.split, options.threads);
            panel.omega = Coefficient{est.omega_mean, {}};
            panel.omega_sd = est.omega_stddev;
        } catch (const Error& e) {
            panel.omega = Coefficient{std::nullopt, e.what()};
        }
    } else {
        try {
            panel.omega = Coefficient{fit_g(s).omega, {}};
        } catch (const Error& e) {
            if (e.code() == ErrorCode::AllTied) {
                panel.omega = Coefficient{0.5, "Y constant: uncorrelated"};
            } else if (e.code() == ErrorCode::ConstantX) {
                panel.omega = Coefficient{0.5, "X constant: uncorrelated"};
            } else {
                panel.omega = Coefficient{std::nullopt, e.what()};
            }
        }
    }
    return panel;
}

PanelReport run_panel(const ExperimentConfig& config) {
    return run_panel(load_table(config.input, config.format), config);
}

PanelReport run_panel(const RawTable& table, const ExperimentConfig& config) {
    if (config.independents.empty() || config.dependents.empty()) {
        throw Error(ErrorCode::InvalidArgument, "need at least one independent and one dependent column");
    }
    for (const auto* names : {&config.independents, &config.dependents}) {
        for (const auto& name : *names) {
            if (!table.has_column(name)) {
                throw Error(ErrorCode::MissingColumn, "column '" + name + "' not found", std::nullopt, name);
            }
        }
    }
    if (config.options.split) validate_plan(*config.options.split, table.row_count());

    PanelReport report;
    report.metadata.bins = config.options.bins;
    if (config.options.split) {
        const SplitPlan& plan = *config.options.split;
        report.metadata.omega_mode = "split";
        report.metadata.seed = plan.seed.value;
        report.metadata.iterations = plan.iterations;
        report.metadata.train_size = plan.train_size;
        report.metadata.eval_size = plan.eval_size;
    }
    for (const auto& dependent : config.dependents) {
        const auto ys = table.numeric_column(dependent);
        for (const auto& independent : config.independents) {
            const PairedSample sample(table.numeric_column(independent), ys);
            report.rows.push_back(PanelRow{independent, dependent, compute_panel(sample, config.options)});
        }
    }
    return report;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw Error(ErrorCode::InvalidArgument, "unknown report format '" + std::string(name) + "'");
}

std::string render_report(const PanelReport& report, ReportFormat format, RenderOptions options) {
    if (format == ReportFormat::csv) {
        std::ostringstream out;
        out << "independent,dependent,r,rho,tau,kappa,ncc,omega,omega_sd\n";
        for (const auto& row : report.rows) {
            out << row.independent << ',' << row.dependent;
            for (const auto& field : kFields) {
                out << ',';
                if (auto v = shown(row.panel.*field.member, field.name, options)) out << format_real(*v);
            }
            out << ',';
            if (row.panel.omega_sd) out << format_real(*row.panel.omega_sd);
            out << '\n';
        }
        return out.str();
    }

    Json meta = Json::object();
    const auto& m = report.metadata;
    meta["omega_mode"] = m.omega_mode;
    meta["bins"] = m.bins;
    meta["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
    meta["iterations"] = m.iterations ? Json(*m.iterations) : Json(nullptr);
    meta["train_size"] = m.train_size ? Json(*m.train_size) : Json(nullptr);
    meta["eval_size"] = m.eval_size ? Json(*m.eval_size) : Json(nullptr);
    meta["generated_at"] = m.generated_at ? Json(*m.generated_at) : Json(nullptr);
    meta["absolute"] = options.absolute;

    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json entry = Json::object();
        entry["independent"] = row.independent;
        entry["dependent"] = row.dependent;
        Json notes = Json::object();
        for (const auto& field : kFields) {
            const Coefficient& c = row.panel.*field.member;
            const auto v = shown(c, field.name, options);
            entry[std::string(field.name)] = v ? Json(*v) : Json(nullptr);
            if (!c.note.empty()) notes[std::string(field.name)] = c.note;
        }
        entry["omega_sd"] = row.panel.omega_sd ? Json(*row.panel.omega_sd) : Json(nullptr);
        entry["notes"] = std::move(notes);
        rows.push_back(std::move(entry));
    }
    Json doc = Json::object();
    doc["schema"] = kSchema;
    doc["metadata"] = std::move(meta);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

PanelReport parse_report_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || doc.value("schema", "") != kSchema) {
        throw Error(ErrorCode::ParseError, "not a " + std::string(kSchema) + " document");
    }
    auto opt_u64 = [](const Json& v) -> std::optional<std::uint64_t> {
        return v.is_null() ? std::nullopt : std::optional<std::uint64_t>(v.get<std::uint64_t>());
    };
    PanelReport report;
    try {
        const Json& meta = doc.at("metadata");
        report.metadata.omega_mode = meta.at("omega_mode").get<std::string>();
        report.metadata.bins = meta.at("bins").get<std::size_t>();
        report.metadata.seed = opt_u64(meta.at("seed"));
        report.metadata.iterations = opt_u64(meta.at("iterations"));
        report.metadata.train_size = opt_u64(meta.at("train_size"));
        report.metadata.eval_size = opt_u64(meta.at("eval_size"));
        if (!meta.at("generated_at").is_null()) report.metadata.generated_at = meta.at("generated_at").get<std::string>();
        for (const Json& entry : doc.at("rows")) {
            PanelRow row;
            row.independent = entry.at("independent").get<std::string>();
            row.dependent = entry.at("dependent").get<std::string>();
            const Json& notes = entry.at("notes");
            for (const auto& field : kFields) {
                Coefficient& c = row.panel.*field.member;
                const Json& v = entry.at(std::string(field.name));
                if (!v.is_null()) c.value = v.get<double>();
                c.note = notes.value(std::string(field.name), "");
            }
            if (!entry.at("omega_sd").is_null()) row.panel.omega_sd = entry.at("omega_sd").get<double>();
            report.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
    }
    return report;
}

PanelReport parse_report_csv(std::string_view text) {
    PanelReport report;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "independent,dependent,r,rho,tau,kappa,ncc,omega,omega_sd") {
        throw Error(ErrorCode::ParseError, "unexpected report csv header");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != 9) {
            throw Error(ErrorCode::ParseError, "report line " + std::to_string(line_no) + " has " +
                                                   std::to_string(cells.size()) + " cells");
        }
        PanelRow row;
        row.independent = cells[0];
        row.dependent = cells[1];
        for (std::size_t k = 0; k < std::size(kFields); ++k) {
            (row.panel.*kFields[k].member).value = parse_cell(cells[2 + k]);
        }
        row.panel.omega_sd = parse_cell(cells[8]);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace corrkit
