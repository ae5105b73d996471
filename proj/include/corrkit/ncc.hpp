#pragma once

#include <cstddef>
#include <vector>

#include "corrkit/types.hpp"

namespace corrkit {

inline constexpr std::size_t kDefaultNccBins = 10;

/// b x b counts of observations per (y-rank bin, x-rank bin).
/// Rank positions are split at floor(k n / b), so bins differ in size by at
/// most one when b does not divide n. Ties are ordered by input index.
struct BinGrid {
    std::size_t bins = 0;
    std::size_t n = 0;
    std::vector<std::size_t> counts;      ///< row-major: counts[row * bins + col]
    std::vector<std::size_t> row_counts;  ///< per y bin
    std::vector<std::size_t> col_counts;  ///< per x bin

    std::size_t at(std::size_t row, std::size_t col) const { return counts[row * bins + col]; }
};

/// Throws InvalidArgument for b < 2 and TooFewPoints for n < b.
BinGrid build_bin_grid(const PairedSample& s, std::size_t bins = kDefaultNccBins);

/// Base-b entropies of the grid.
struct NccTerms {
    double h_x = 0.0;
    double h_y = 0.0;
    double h_xy = 0.0;
    double ncc = 0.0;  ///< h_x + h_y - h_xy, clamped to [0, 1]
};

NccTerms ncc_terms(const BinGrid& grid);

/// Nonlinear correlation coefficient: rank-bin mutual information in base b.
double ncc(const PairedSample& s, std::size_t bins = kDefaultNccBins);

}  // namespace corrkit
