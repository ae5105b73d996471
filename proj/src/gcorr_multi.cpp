#include "corrkit/gcorr_multi.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "corrkit/error.hpp"
#include "corrkit/stats.hpp"

namespace corrkit {

namespace {

void canonicalize_sign(Eigen::VectorXd& w) {
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w[i] != 0.0) {
            if (w[i] < 0.0) w = -w;
            return;
        }
    }
}

}  // namespace

std::vector<double> fisher_direction(const MultiSample& s, bool* regularized) {
    const std::size_t m = s.dims();
    if (m > kMaxFeatures) {
        throw Error(ErrorCode::InvalidArgument,
                    "at most " + std::to_string(kMaxFeatures) + " features are supported, got " + std::to_string(m));
    }
    if (regularized) *regularized = false;
    const double median = sample_median(s.ys());

    const auto dim = static_cast<Eigen::Index>(m);
    Eigen::VectorXd sum_above = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd sum_below = Eigen::VectorXd::Zero(dim);
    std::size_t n_above = 0;
    std::size_t n_below = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Eigen::Map<const Eigen::VectorXd> row(s.row(i).data(), dim);
        if (s.ys()[i] > median) {
            sum_above += row;
            ++n_above;
        } else if (s.ys()[i] < median) {
            sum_below += row;
            ++n_below;
        }
    }
    if (n_above == 0 || n_below == 0) {
        throw Error(ErrorCode::ConstantY, "y has no observations on one side of its median");
    }
    if (m == 1) return {1.0};

    const Eigen::VectorXd mean_above = sum_above / static_cast<double>(n_above);
    const Eigen::VectorXd mean_below = sum_below / static_cast<double>(n_below);
    Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double y = s.ys()[i];
        if (y == median) continue;
        const Eigen::Map<const Eigen::VectorXd> row(s.row(i).data(), dim);
        const Eigen::VectorXd d = row - (y > median ? mean_above : mean_below);
        scatter.noalias() += d * d.transpose();
    }
    const Eigen::VectorXd diff = mean_above - mean_below;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(scatter);
    if (!lu.isInvertible()) {
        const double eps = 1e-9 * scatter.trace() / static_cast<double>(m);
        scatter += eps * Eigen::MatrixXd::Identity(dim, dim);
        lu.compute(scatter);
        if (!lu.isInvertible()) {
            throw Error(ErrorCode::SingularScatter, "within-class scatter is singular even after regularization");
        }
        if (regularized) *regularized = true;
    }
    Eigen::VectorXd w = lu.solve(diff);
    const double norm = w.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorCode::SingularScatter, "class means coincide: no discriminant direction");
    }
    w /= norm;
    canonicalize_sign(w);
    return {w.data(), w.data() + w.size()};
}

HyperplaneFit fit_g_multi(const MultiSample& s) {
    if (s.dims() > kMaxFeatures) {
        throw Error(ErrorCode::InvalidArgument, "at most " + std::to_string(kMaxFeatures) +
                                                    " features are supported, got " + std::to_string(s.dims()));
    }
    const double median = sample_median(s.ys());
    std::size_t n_above = 0;
    std::size_t n_below = 0;
    for (double y : s.ys()) {
        n_above += y > median ? 1 : 0;
        n_below += y < median ? 1 : 0;
    }
    if (n_above == 0 || n_below == 0) {
        throw Error(ErrorCode::ConstantY, "y has no observations on one side of its median");
    }
    if (n_above + n_below < s.dims() + 2) {
        throw Error(ErrorCode::TooFewPoints, "need at least M + 2 = " + std::to_string(s.dims() + 2) +
                                                 " observations off the y median, got " +
                                                 std::to_string(n_above + n_below));
    }

    HyperplaneFit out;
    out.normal = fisher_direction(s, &out.regularized);

    std::vector<double> projected(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto row = s.row(i);
        double t = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) t += out.normal[j] * row[j];
        projected[i] = t;
    }
    const GCorrFit fit = fit_g(PairedSample(std::move(projected), std::vector<double>(s.ys().begin(), s.ys().end())));
    out.offset = fit.c;
    out.omega = fit.omega;
    out.y_median = fit.y_median;
    out.diagonal = fit.diagonal;
    out.counts = fit.counts;
    out.removed_ties = fit.removed_ties;
    return out;
}

}  // namespace corrkit
