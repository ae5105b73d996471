#include "corrkit/classic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corrkit/error.hpp"
#include "corrkit/stats.hpp"

namespace corrkit {

namespace {

std::vector<std::size_t> stable_order(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return order;
}

// Counts inversions of `keys` while merge-sorting it in place.
std::int64_t count_inversions(std::vector<double>& keys, std::vector<double>& buffer,
                              std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t swaps = count_inversions(keys, buffer, lo, mid) + count_inversions(keys, buffer, mid, hi);
    std::size_t i = lo;
    std::size_t j = mid;
    std::size_t k = lo;
    while (i < mid && j < hi) {
        if (keys[j] < keys[i]) {
            swaps += static_cast<std::int64_t>(mid - i);
            buffer[k++] = keys[j++];
        } else {
            buffer[k++] = keys[i++];
        }
    }
    while (i < mid) buffer[k++] = keys[i++];
    while (j < hi) buffer[k++] = keys[j++];
    std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo), buffer.begin() + static_cast<std::ptrdiff_t>(hi),
              keys.begin() + static_cast<std::ptrdiff_t>(lo));
    return swaps;
}

// Number of unordered pairs with equal keys in an already sorted run sequence.
template <typename Equal>
std::int64_t tied_pairs(std::size_t n, Equal equal) {
    std::int64_t pairs = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && equal(i - 1, i)) {
            ++run;
        } else {
            pairs += static_cast<std::int64_t>(run) * static_cast<std::int64_t>(run - 1) / 2;
            run = 1;
        }
    }
    return pairs;
}

int sign_nonneg(double u) { return u >= 0.0 ? 1 : -1; }

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (is_constant(xs)) throw Error(ErrorCode::DegenerateVariance, "x is constant");
    if (is_constant(ys)) throw Error(ErrorCode::DegenerateVariance, "y is constant");
    const double x_mean = sample_mean(xs);
    const double y_mean = sample_mean(ys);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - x_mean;
        const double dy = ys[i] - y_mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double pearson(const PairedSample& s) { return pearson(s.xs(), s.ys()); }

RankVector rank_with_average_ties(std::span<const double> values) {
    if (values.empty()) throw Error(ErrorCode::EmptyInput, "cannot rank an empty vector");
    const auto order = stable_order(values);
    RankVector out;
    out.ranks.resize(values.size());
    std::size_t start = 0;
    while (start < order.size()) {
        std::size_t end = start + 1;
        while (end < order.size() && values[order[end]] == values[order[start]]) ++end;
        // positions start+1 .. end share their mean
        const double rank = 0.5 * static_cast<double>(start + 1 + end);
        for (std::size_t k = start; k < end; ++k) out.ranks[order[k]] = rank;
        if (end - start > 1) out.has_ties = true;
        start = end;
    }
    return out;
}

double spearman(const PairedSample& s) {
    const RankVector rx = rank_with_average_ties(s.xs());
    const RankVector ry = rank_with_average_ties(s.ys());
    if (rx.has_ties || ry.has_ties) {
        return pearson(rx.ranks, ry.ranks);
    }
    // Integer ranks: the sum of squared differences is exact in double for any
    // realistic n.
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = rx.ranks[i] - ry.ranks[i];
        sum_sq += d * d;
    }
    const double n = static_cast<double>(s.size());
    return std::clamp(1.0 - 6.0 * sum_sq / (n * (n * n - 1.0)), -1.0, 1.0);
}

std::int64_t kendall_score(const PairedSample& s) {
    // Knight's algorithm: sort by (x, y), count x-ties and joint ties, then
    // merge-sort the y sequence counting discordant swaps.
    const std::size_t n = s.size();
    const auto xs = s.xs();
    const auto ys = s.ys();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return xs[a] < xs[b] || (xs[a] == xs[b] && ys[a] < ys[b]);
    });
    std::vector<double> y_sorted(n);
    for (std::size_t i = 0; i < n; ++i) y_sorted[i] = ys[order[i]];

    const std::int64_t ties_x =
        tied_pairs(n, [&](std::size_t a, std::size_t b) { return xs[order[a]] == xs[order[b]]; });
    const std::int64_t ties_xy = tied_pairs(n, [&](std::size_t a, std::size_t b) {
        return xs[order[a]] == xs[order[b]] && ys[order[a]] == ys[order[b]];
    });

    std::vector<double> buffer(n);
    const std::int64_t swaps = count_inversions(y_sorted, buffer, 0, n);
    const std::int64_t ties_y = tied_pairs(n, [&](std::size_t a, std::size_t b) { return y_sorted[a] == y_sorted[b]; });

    const std::int64_t total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
    return total - ties_x - ties_y + ties_xy - 2 * swaps;
}

double kendall(const PairedSample& s) {
    const double n = static_cast<double>(s.size());
    return 2.0 * static_cast<double>(kendall_score(s)) / (n * (n - 1.0));
}

FechnerTrace fechner(const PairedSample& s) {
    const double x_mean = sample_mean(s.xs());
    const double y_mean = sample_mean(s.ys());
    const auto order = stable_order(s.xs());
    FechnerTrace trace;
    trace.binary.reserve(s.size());
    for (std::size_t idx : order) {
        if (s.xs()[idx] < x_mean) ++trace.i0;
        trace.binary.push_back(s.ys()[idx] >= y_mean ? 1 : 0);
    }
    long sum = 0;
    for (std::size_t i = 0; i < trace.binary.size(); ++i) {
        const int b = trace.binary[i];
        sum += i < trace.i0 ? 1 - 2 * b : 2 * b - 1;
    }
    trace.kappa = static_cast<double>(sum) / static_cast<double>(s.size());
    return trace;
}

double fechner_direct(const PairedSample& s) {
    const double x_mean = sample_mean(s.xs());
    const double y_mean = sample_mean(s.ys());
    long sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        sum += sign_nonneg(s.xs()[i] - x_mean) * sign_nonneg(s.ys()[i] - y_mean);
    }
    return static_cast<double>(sum) / static_cast<double>(s.size());
}

MeanSide fechner_predict(double x, double x_mean, double /*y_mean*/, double kappa) {
    if (x == x_mean) return MeanSide::at_mean;
    if (kappa == 0.0) {
        throw Error(ErrorCode::UndefinedDirection, "kappa is 0, no direction to predict");
    }
    const double direction = (x - x_mean) * (kappa > 0.0 ? 1.0 : -1.0);
    return direction < 0.0 ? MeanSide::below_mean : MeanSide::above_mean;
}

}  // namespace corrkit
