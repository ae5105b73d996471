#include "corrkit/ncc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "corrkit/error.hpp"

namespace corrkit {

namespace {

// bin index for every observation, by stable rank position
std::vector<std::size_t> rank_bins(std::span<const double> values, std::size_t bins) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::size_t> bin_of(n);
    std::size_t bin = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        // advance while the next bin's first position, floor((bin+1) n / b), is reached
        while (bin + 1 < bins && pos >= (bin + 1) * n / bins) ++bin;
        bin_of[order[pos]] = bin;
    }
    return bin_of;
}

double entropy_term(std::size_t count, double n, double log_base) {
    if (count == 0) return 0.0;
    const double p = static_cast<double>(count) / n;
    return -p * std::log(p) / log_base;
}

// Sums the entropy terms in ascending count order so the result does not
// depend on where the cells sit (transposing the grid gives the same value).
double entropy(std::vector<std::size_t> counts, double n, double log_base) {
    std::sort(counts.begin(), counts.end());
    double h = 0.0;
    for (std::size_t c : counts) h += entropy_term(c, n, log_base);
    return h;
}

}  // namespace

BinGrid build_bin_grid(const PairedSample& s, std::size_t bins) {
    if (bins < 2) throw Error(ErrorCode::InvalidArgument, "bin count must be at least 2");
    if (s.size() < bins) {
        throw Error(ErrorCode::TooFewPoints, "need at least " + std::to_string(bins) + " observations for " +
                                                 std::to_string(bins) + " bins, got " + std::to_string(s.size()));
    }
    const auto col = rank_bins(s.xs(), bins);
    const auto row = rank_bins(s.ys(), bins);
    BinGrid grid;
    grid.bins = bins;
    grid.n = s.size();
    grid.counts.assign(bins * bins, 0);
    grid.row_counts.assign(bins, 0);
    grid.col_counts.assign(bins, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        ++grid.counts[row[i] * bins + col[i]];
        ++grid.row_counts[row[i]];
        ++grid.col_counts[col[i]];
    }
    return grid;
}

NccTerms ncc_terms(const BinGrid& grid) {
    const double n = static_cast<double>(grid.n);
    const double log_base = std::log(static_cast<double>(grid.bins));
    NccTerms t;
    t.h_x = entropy(grid.col_counts, n, log_base);
    t.h_y = entropy(grid.row_counts, n, log_base);
    t.h_xy = entropy(grid.counts, n, log_base);
    t.ncc = std::clamp(t.h_x + t.h_y - t.h_xy, 0.0, 1.0);
    return t;
}

double ncc(const PairedSample& s, std::size_t bins) { return ncc_terms(build_bin_grid(s, bins)).ncc; }

}  // namespace corrkit
