#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrkit/gcorr.hpp"
#include "corrkit/io.hpp"
#include "corrkit/ncc.hpp"
#include "corrkit/types.hpp"

namespace corrkit {

struct PanelOptions {
    std::size_t bins = kDefaultNccBins;
    std::optional<SplitPlan> split;  ///< unset: omega from the full-data fit
    unsigned threads = 1;
};

/// All six coefficients for one pair. Failures become invalid entries with a
/// note; a constant X or Y yields omega = 0.5 with a note rather than an error.
CoefficientPanel compute_panel(const PairedSample& s, const PanelOptions& options = {});

struct ExperimentConfig {
    std::filesystem::path input;
    DataFormat format = DataFormat::csv;
    std::vector<std::string> independents;
    std::vector<std::string> dependents;
    PanelOptions options;
};

struct PanelRow {
    std::string independent;
    std::string dependent;
    CoefficientPanel panel;

    bool operator==(const PanelRow&) const = default;
};

struct ReportMetadata {
    std::string omega_mode = "full";  ///< "full" or "split"
    std::size_t bins = kDefaultNccBins;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> iterations;
    std::optional<std::size_t> train_size;
    std::optional<std::size_t> eval_size;
    std::optional<std::string> generated_at;  ///< only set on request; keeps reports reproducible

    bool operator==(const ReportMetadata&) const = default;
};

/// Rows are grouped by dependent variable, independents in config order.
struct PanelReport {
    ReportMetadata metadata;
    std::vector<PanelRow> rows;
};

/// Loads the table and fills one row per (independent, dependent) pair.
/// Config problems (missing file or column, empty lists, bad split plan)
/// throw; per-pair degeneracies are recorded in the row.
PanelReport run_panel(const ExperimentConfig& config);
PanelReport run_panel(const RawTable& table, const ExperimentConfig& config);

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view name);

struct RenderOptions {
    bool absolute = false;  ///< report |r|, |rho|, |tau|, |kappa|
};

/// csv columns: independent,dependent,r,rho,tau,kappa,ncc,omega,omega_sd
/// (invalid cells are empty). json follows the "corrkit.panel/v1" schema
/// described in the README.
std::string render_report(const PanelReport& report, ReportFormat format, RenderOptions options = {});

PanelReport parse_report_json(std::string_view text);
/// Rows only; csv carries no metadata or notes.
PanelReport parse_report_csv(std::string_view text);

}  // namespace corrkit
