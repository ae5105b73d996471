#pragma once

#include <cstddef>
#include <span>

#include "corrkit/rng.hpp"
#include "corrkit/types.hpp"

namespace corrkit {

/// Which pair of quadrants carries the classification:
/// main = {x > c, y > median} + {x <= c, y < median}, anti = the other two.
enum class Diagonal { main, anti };

/// Quadrant membership counts. C1 is y > median, C2 is y < median; "plus"
/// is x > c, "minus" is x <= c. Points exactly on the median are counted in
/// on_median only.
struct QuadrantCounts {
    std::size_t c1_plus = 0;
    std::size_t c1_minus = 0;
    std::size_t c2_plus = 0;
    std::size_t c2_minus = 0;
    std::size_t on_median = 0;

    std::size_t main_sum() const noexcept { return c1_plus + c2_minus; }
    std::size_t anti_sum() const noexcept { return c1_minus + c2_plus; }
    std::size_t total() const noexcept { return c1_plus + c1_minus + c2_plus + c2_minus + on_median; }

    bool operator==(const QuadrantCounts&) const = default;
};

struct TiePreprocessed {
    PairedSample sample;
    std::size_t removed = 0;
    double y_median = 0.0;
};

/// Computes the median of y on the full sample and drops every row whose y
/// equals it. Throws AllTied when nothing remains and ShortSample when a
/// single row remains.
TiePreprocessed preprocess_ties(const PairedSample& s);

struct GObjective {
    double g = 0.0;
    QuadrantCounts counts;
    Diagonal diagonal = Diagonal::main;
};

/// Classification probability of the split (x = c, y = y_median): the larger
/// of the two diagonal sums over n. Equal sums report the main diagonal.
GObjective g_objective(std::span<const double> xs, std::span<const double> ys, double c, double y_median);
GObjective g_objective(const PairedSample& s, double c, double y_median);

struct GCorrFit {
    double c = 0.0;
    double y_median = 0.0;
    double omega = 0.5;
    Diagonal diagonal = Diagonal::main;
    QuadrantCounts counts;
    std::size_t removed_ties = 0;
};

/// The cut placed below every x by fit_g. Equals min - (max - min) unless that
/// does not compare below min, in which case the next double down is used.
double sentinel_cut(double x_min, double x_max) noexcept;

/// Full-data g-correlation. Removes median ties, sorts by x, then sweeps the
/// sentinel cut and every successive-pair midpoint while updating quadrant
/// counts incrementally. The first (smallest) cut reaching the best score
/// wins. Throws AllTied (Y constant), ShortSample, or ConstantX.
GCorrFit fit_g(const PairedSample& s);

/// Repeated random train/evaluation partitions.
struct SplitPlan {
    std::size_t train_size = 30;
    std::size_t eval_size = 20;
    std::size_t iterations = 10000;
    RngSeed seed = kDefaultSeed;
};

struct SplitEstimate {
    double omega_mean = 0.0;
    double omega_stddev = 0.0;  ///< sample standard deviation; 0 for one iteration
    std::size_t iterations = 0;
    std::size_t degenerate = 0;  ///< training partitions with constant X or Y
};

/// Throws InvalidPlan unless 2 <= train, 1 <= eval, train + eval <= n and
/// iterations >= 1.
void validate_plan(const SplitPlan& plan, std::size_t n);

/// For each iteration, shuffles row indices with a stream derived from
/// (plan.seed, iteration), fits median and cut on the first train_size rows
/// and scores those fixed parameters on the next eval_size rows. Training
/// partitions with constant X or Y contribute 0.5. The result does not
/// depend on `threads` (0 picks the hardware concurrency).
SplitEstimate estimate_g(const PairedSample& s, const SplitPlan& plan, unsigned threads = 1);

enum class MedianSide { above_median, below_median };

MedianSide g_predict(double x, const GCorrFit& fit) noexcept;

}  // namespace corrkit
