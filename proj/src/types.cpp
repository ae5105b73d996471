#include "corrkit/types.hpp"

#include <cmath>

#include "corrkit/error.hpp"

namespace corrkit {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(ErrorCode::NonFiniteValue,
                        std::string(what) + " value at row " + std::to_string(i + 1) + " is not finite",
                        i + 1);
        }
    }
}

}  // namespace

PairedSample::PairedSample(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "xs and ys differ in length (" + std::to_string(xs_.size()) + " vs " +
                        std::to_string(ys_.size()) + ")");
    }
    if (xs_.size() < 2) {
        throw Error(ErrorCode::ShortSample, "a paired sample needs at least 2 observations");
    }
    require_finite(xs_, "x");
    require_finite(ys_, "y");
}

MultiSample::MultiSample(std::vector<std::vector<double>> rows, std::vector<double> ys)
    : ys_(std::move(ys)) {
    if (rows.size() != ys_.size()) {
        throw Error(ErrorCode::InvalidArgument, "feature rows and ys differ in length");
    }
    if (ys_.size() < 2) {
        throw Error(ErrorCode::ShortSample, "a sample needs at least 2 observations");
    }
    dims_ = rows.front().size();
    if (dims_ == 0) {
        throw Error(ErrorCode::InvalidArgument, "feature rows must have at least one column");
    }
    features_.reserve(dims_ * rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dims_) {
            throw Error(ErrorCode::InvalidArgument,
                        "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " features, expected " + std::to_string(dims_),
                        i + 1);
        }
        for (double v : rows[i]) {
            if (!std::isfinite(v)) {
                throw Error(ErrorCode::NonFiniteValue,
                            "feature value at row " + std::to_string(i + 1) + " is not finite", i + 1);
            }
        }
        features_.insert(features_.end(), rows[i].begin(), rows[i].end());
    }
    require_finite(ys_, "y");
}

}  // namespace corrkit
