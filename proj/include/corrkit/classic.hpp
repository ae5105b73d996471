#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "corrkit/types.hpp"

namespace corrkit {

/// Ranks in 1..n; tied values share the mean of the positions they occupy.
struct RankVector {
    std::vector<double> ranks;
    bool has_ties = false;
};

/// Pearson product-moment correlation, clamped to [-1, 1].
/// Throws DegenerateVariance when xs or ys is constant.
double pearson(const PairedSample& s);
double pearson(std::span<const double> xs, std::span<const double> ys);

RankVector rank_with_average_ties(std::span<const double> values);

/// Spearman's rho on average-tie ranks. Without ties this is the classic
/// 1 - 6 sum d^2 / (n (n^2 - 1)); with ties it is the Pearson coefficient of
/// the two rank vectors. Throws DegenerateVariance when all x or all y tie.
double spearman(const PairedSample& s);

/// Sum over i<j of sign((x_j - x_i)(y_j - y_i)); pairs tied in x or y count 0.
std::int64_t kendall_score(const PairedSample& s);

/// Kendall's tau-a: 2 * kendall_score / (n (n - 1)). O(n log n).
double kendall(const PairedSample& s);

/// Fechner computation in sorted-by-x form.
struct FechnerTrace {
    std::size_t i0 = 0;               ///< number of points with x < mean(x)
    std::vector<std::uint8_t> binary;  ///< 1 where y >= mean(y), in sorted-x order
    double kappa = 0.0;
};

/// Fechner's kappa via stable sort on x and the binary sequence; sign(0) = +1.
FechnerTrace fechner(const PairedSample& s);

/// kappa = mean of sign(x_i - mean x) * sign(y_i - mean y), evaluated directly.
double fechner_direct(const PairedSample& s);

enum class MeanSide { below_mean, at_mean, above_mean };

/// Classifies y relative to its mean from x: at_mean when x equals the x mean,
/// otherwise by the sign of (x - x_mean) * sign(kappa). Throws
/// UndefinedDirection when kappa is 0 and x differs from the mean.
MeanSide fechner_predict(double x, double x_mean, double y_mean, double kappa);

}  // namespace corrkit
