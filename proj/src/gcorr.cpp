#include "corrkit/gcorr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

#include "corrkit/error.hpp"
#include "corrkit/stats.hpp"

namespace corrkit {

namespace {

GObjective make_objective(const QuadrantCounts& counts) {
    GObjective out;
    out.counts = counts;
    const std::size_t main = counts.main_sum();
    const std::size_t anti = counts.anti_sum();
    out.diagonal = anti > main ? Diagonal::anti : Diagonal::main;
    const std::size_t n = counts.total();
    out.g = n == 0 ? 0.0 : static_cast<double>(std::max(main, anti)) / static_cast<double>(n);
    return out;
}

bool is_degenerate(ErrorCode code) {
    return code == ErrorCode::AllTied || code == ErrorCode::ConstantX || code == ErrorCode::ShortSample;
}

}  // namespace

TiePreprocessed preprocess_ties(const PairedSample& s) {
    const double median = sample_median(s.ys());
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(s.size());
    ys.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.ys()[i] != median) {
            xs.push_back(s.xs()[i]);
            ys.push_back(s.ys()[i]);
        }
    }
    if (xs.empty()) {
        throw Error(ErrorCode::AllTied, "every y equals the median (Y constant): uncorrelated");
    }
    if (xs.size() < 2) {
        throw Error(ErrorCode::ShortSample, "only one observation lies off the y median");
    }
    const std::size_t removed = s.size() - xs.size();
    return TiePreprocessed{PairedSample(std::move(xs), std::move(ys)), removed, median};
}

GObjective g_objective(std::span<const double> xs, std::span<const double> ys, double c, double y_median) {
    QuadrantCounts counts;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const bool right = xs[i] > c;
        if (ys[i] > y_median) {
            ++(right ? counts.c1_plus : counts.c1_minus);
        } else if (ys[i] < y_median) {
            ++(right ? counts.c2_plus : counts.c2_minus);
        } else {
            ++counts.on_median;
        }
    }
    return make_objective(counts);
}

GObjective g_objective(const PairedSample& s, double c, double y_median) {
    return g_objective(s.xs(), s.ys(), c, y_median);
}

double sentinel_cut(double x_min, double x_max) noexcept {
    const double c = x_min - (x_max - x_min);
    if (std::isfinite(c) && c < x_min) return c;
    return std::nextafter(x_min, -std::numeric_limits<double>::infinity());
}

GCorrFit fit_g(const PairedSample& s) {
    const TiePreprocessed prep = preprocess_ties(s);
    const auto xs = prep.sample.xs();
    const auto ys = prep.sample.ys();
    const double median = prep.y_median;
    if (is_constant(xs)) {
        throw Error(ErrorCode::ConstantX, "x is constant: uncorrelated");
    }

    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

    std::size_t above = 0;  // |C1|; after tie removal every other point is in C2
    for (double y : ys) above += y > median ? 1 : 0;
    const std::size_t below = n - above;

    // Running counts of C1 and C2 among points with x <= c.
    std::size_t left_above = 0;
    std::size_t left_below = 0;
    std::size_t next = 0;

    GCorrFit best;
    best.y_median = median;
    best.removed_ties = prep.removed;
    std::size_t best_score = 0;
    bool have_best = false;

    auto consider = [&](double c) {
        while (next < n && xs[order[next]] <= c) {
            ++(ys[order[next]] > median ? left_above : left_below);
            ++next;
        }
        QuadrantCounts counts{above - left_above, left_above, below - left_below, left_below, 0};
        const std::size_t score = std::max(counts.main_sum(), counts.anti_sum());
        if (!have_best || score > best_score) {
            have_best = true;
            best_score = score;
            best.c = c;
            best.counts = counts;
            best.diagonal = counts.anti_sum() > counts.main_sum() ? Diagonal::anti : Diagonal::main;
        }
    };

    consider(sentinel_cut(xs[order.front()], xs[order.back()]));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        consider(std::midpoint(xs[order[i]], xs[order[i + 1]]));
    }
    best.omega = static_cast<double>(best_score) / static_cast<double>(n);
    return best;
}

void validate_plan(const SplitPlan& plan, std::size_t n) {
    if (plan.train_size < 2) throw Error(ErrorCode::InvalidPlan, "training partition needs at least 2 rows");
    if (plan.eval_size < 1) throw Error(ErrorCode::InvalidPlan, "evaluation partition needs at least 1 row");
    if (plan.iterations < 1) throw Error(ErrorCode::InvalidPlan, "iterations must be at least 1");
    if (plan.train_size + plan.eval_size > n) {
        throw Error(ErrorCode::InvalidPlan, "train (" + std::to_string(plan.train_size) + ") + eval (" +
                                                std::to_string(plan.eval_size) + ") exceeds n = " +
                                                std::to_string(n));
    }
}

SplitEstimate estimate_g(const PairedSample& s, const SplitPlan& plan, unsigned threads) {
    validate_plan(plan, s.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, plan.iterations));

    std::vector<double> omegas(plan.iterations);
    std::vector<std::uint8_t> degenerate(plan.iterations, 0);

    auto run_iteration = [&](std::size_t k) {
        Rng rng(derive_seed(plan.seed, k));
        std::vector<std::size_t> idx(s.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(idx));

        std::vector<double> tx(plan.train_size);
        std::vector<double> ty(plan.train_size);
        for (std::size_t i = 0; i < plan.train_size; ++i) {
            tx[i] = s.xs()[idx[i]];
            ty[i] = s.ys()[idx[i]];
        }
        std::vector<double> ex(plan.eval_size);
        std::vector<double> ey(plan.eval_size);
        for (std::size_t i = 0; i < plan.eval_size; ++i) {
            ex[i] = s.xs()[idx[plan.train_size + i]];
            ey[i] = s.ys()[idx[plan.train_size + i]];
        }
        try {
            const GCorrFit fit = fit_g(PairedSample(std::move(tx), std::move(ty)));
            omegas[k] = g_objective(ex, ey, fit.c, fit.y_median).g;
        } catch (const Error& e) {
            if (!is_degenerate(e.code())) throw;
            omegas[k] = 0.5;
            degenerate[k] = 1;
        }
    };

    if (threads <= 1) {
        for (std::size_t k = 0; k < plan.iterations; ++k) run_iteration(k);
    } else {
        std::vector<std::exception_ptr> failures(threads);
        {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t k = t; k < plan.iterations; k += threads) run_iteration(k);
                    } catch (...) {
                        failures[t] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& failure : failures) {
            if (failure) std::rethrow_exception(failure);
        }
    }

    // Reduce in iteration order so the thread count cannot change the result.
    SplitEstimate out;
    out.iterations = plan.iterations;
    double sum = 0.0;
    for (double w : omegas) sum += w;
    out.omega_mean = sum / static_cast<double>(plan.iterations);
    if (plan.iterations > 1) {
        double ss = 0.0;
        for (double w : omegas) ss += (w - out.omega_mean) * (w - out.omega_mean);
        out.omega_stddev = std::sqrt(ss / static_cast<double>(plan.iterations - 1));
    }
    out.degenerate = static_cast<std::size_t>(std::count(degenerate.begin(), degenerate.end(), 1));
    return out;
}

MedianSide g_predict(double x, const GCorrFit& fit) noexcept {
    const bool right = x > fit.c;
    if (fit.diagonal == Diagonal::main) {
        return right ? MedianSide::above_median : MedianSide::below_median;
    }
    return right ? MedianSide::below_median : MedianSide::above_median;
}

}  // namespace corrkit
