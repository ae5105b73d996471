#pragma once

#include <cstddef>
#include <vector>

#include "corrkit/gcorr.hpp"
#include "corrkit/types.hpp"

namespace corrkit {

inline constexpr std::size_t kMaxFeatures = 16;

/// Separating hyperplane normal . x = offset between the median classes of y.
struct HyperplaneFit {
    std::vector<double> normal;  ///< unit length; first nonzero component positive
    double offset = 0.0;
    double omega = 0.5;
    double y_median = 0.0;
    Diagonal diagonal = Diagonal::main;
    QuadrantCounts counts;
    std::size_t removed_ties = 0;
    bool regularized = false;  ///< within-class scatter needed the ridge term
};

/// Fisher discriminant direction between C1 (y > median) and C2 (y < median)
/// after median-tie removal, normalized and sign-canonicalized. For M = 1 the
/// direction is +1. A singular within-class scatter S gets S + eps I with
/// eps = 1e-9 trace(S) / M; if that is still singular SingularScatter is thrown.
std::vector<double> fisher_direction(const MultiSample& s, bool* regularized = nullptr);

/// Projects every row onto the Fisher direction and runs fit_g on
/// (projection, y). Throws InvalidArgument for M > 16, TooFewPoints when
/// fewer than M + 2 rows remain after tie removal, ConstantY, SingularScatter.
HyperplaneFit fit_g_multi(const MultiSample& s);

}  // namespace corrkit
