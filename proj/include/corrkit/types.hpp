#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace corrkit {

/// n paired observations (x_i, y_i). Validated on construction: equal
/// lengths, n >= 2, every value finite. Immutable afterwards.
class PairedSample {
public:
    PairedSample(std::vector<double> xs, std::vector<double> ys);

    std::span<const double> xs() const noexcept { return xs_; }
    std::span<const double> ys() const noexcept { return ys_; }
    std::size_t size() const noexcept { return xs_.size(); }

    /// The same observations with the roles of X and Y exchanged.
    PairedSample swapped() const { return PairedSample(ys_, xs_); }

    bool operator==(const PairedSample&) const = default;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

/// n observations of (x_1..x_M, y). Rows are stored contiguously.
class MultiSample {
public:
    MultiSample(std::vector<std::vector<double>> rows, std::vector<double> ys);

    std::size_t size() const noexcept { return ys_.size(); }
    std::size_t dims() const noexcept { return dims_; }
    std::span<const double> row(std::size_t i) const noexcept {
        return {features_.data() + i * dims_, dims_};
    }
    std::span<const double> ys() const noexcept { return ys_; }

private:
    std::size_t dims_ = 0;
    std::vector<double> features_;
    std::vector<double> ys_;
};

/// A coefficient that may be missing, with the reason when it is.
struct Coefficient {
    std::optional<double> value;
    std::string note;

    bool valid() const noexcept { return value.has_value(); }
    bool operator==(const Coefficient&) const = default;
};

/// The six coefficients for one (X, Y) pair. omega_sd is only set when
/// omega came from the repeated-split estimator.
struct CoefficientPanel {
    Coefficient r;
    Coefficient rho;
    Coefficient tau;
    Coefficient kappa;
    Coefficient ncc;
    Coefficient omega;
    std::optional<double> omega_sd;

    bool operator==(const CoefficientPanel&) const = default;
};

}  // namespace corrkit
