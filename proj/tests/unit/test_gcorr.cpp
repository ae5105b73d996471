#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "corrkit/gcorr.hpp"
#include "corrkit/stats.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace corrkit;

namespace {

PairedSample identity_sample(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i + 1);
    return {v, v};
}

}  // namespace

TEST_CASE("preprocess_ties") {
    const TiePreprocessed odd = preprocess_ties(PairedSample({1, 2, 3}, {1, 2, 3}));
    CHECK(odd.sample.size() == 2);
    CHECK(odd.removed == 1);
    CHECK(odd.y_median == 2.0);

    const TiePreprocessed even = preprocess_ties(PairedSample({1, 2, 3, 4}, {1, 2, 3, 4}));
    CHECK(even.sample.size() == 4);
    CHECK(even.removed == 0);
    CHECK(even.y_median == 2.5);

    CHECK_CORRKIT_ERROR(preprocess_ties(PairedSample({1, 2, 3}, {5, 5, 5})), ErrorCode::AllTied);
    // Median 5 on the original sample leaves a single row behind.
    CHECK_CORRKIT_ERROR(preprocess_ties(PairedSample({1, 2, 3}, {5, 5, 6})), ErrorCode::ShortSample);
}

TEST_CASE("g_objective") {
    const PairedSample s = identity_sample(20);
    CHECK(g_objective(s, 10.5, 10.5).g == 1.0);
    CHECK(g_objective(s, 10.5, 10.5).diagonal == Diagonal::main);

    const GObjective empty_left = g_objective(s, 0.0, 10.5);
    CHECK(empty_left.g == 0.5);
    CHECK(empty_left.diagonal == Diagonal::main);

    const PairedSample down({1, 2, 3, 4}, {4, 3, 2, 1});
    CHECK(g_objective(down, 2.5, 2.5).g == 1.0);
    CHECK(g_objective(down, 2.5, 2.5).diagonal == Diagonal::anti);

    // x == c goes left.
    const GObjective boundary = g_objective(PairedSample({1, 2}, {0, 1}), 1.0, 0.5);
    CHECK(boundary.counts.c2_minus == 1);
    CHECK(boundary.counts.c1_plus == 1);

    Rng rng(RngSeed{51});
    for (int k = 0; k < 200; ++k) {
        const PairedSample r = testing::random_sample(rng, 40);
        const double c = rng.uniform(-0.1, 1.1);
        const double ymed = rng.uniform(0.2, 0.8);
        const GObjective g = g_objective(r, c, ymed);
        const oracle::Quadrants q = oracle::count_quadrants(r.xs(), r.ys(), c, ymed);
        CHECK(g.counts.c1_plus == q.c1p);
        CHECK(g.counts.c1_minus == q.c1m);
        CHECK(g.counts.c2_plus == q.c2p);
        CHECK(g.counts.c2_minus == q.c2m);
        CHECK(g.g == oracle::g_at(r.xs(), r.ys(), c, ymed));
    }
}

TEST_CASE("complement identity on tie-free even samples") {
    Rng rng(RngSeed{52});
    for (int k = 0; k < 100; ++k) {
        const PairedSample r = testing::random_sample(rng, 2 * (2 + rng.below(50)));
        const double ymed = sample_median(r.ys());
        const double c = rng.uniform(0, 1);
        const GObjective g = g_objective(r, c, ymed);
        const double n = static_cast<double>(r.size());
        const double main = static_cast<double>(g.counts.main_sum()) / n;
        const double anti = static_cast<double>(g.counts.anti_sum()) / n;
        CHECK(anti == doctest::Approx(1.0 - main).epsilon(1e-15));
        CHECK(g.g >= 0.5);
    }
}

TEST_CASE("fit_g on monotone data") {
    const GCorrFit fit = fit_g(identity_sample(20));
    CHECK(fit.omega == 1.0);
    CHECK(fit.c > 10.0);
    CHECK(fit.c < 11.0);
    CHECK(fit.diagonal == Diagonal::main);
    for (double x = 1; x <= 20; ++x) {
        CHECK(g_predict(x, fit) == (x > 10.5 ? MedianSide::above_median : MedianSide::below_median));
    }

    const GCorrFit dec = fit_g(PairedSample({1, 2, 3, 4, 5, 6}, {9, 7, 5, 3, 1, -1}));
    CHECK(dec.omega == 1.0);
    CHECK(dec.diagonal == Diagonal::anti);
}

TEST_CASE("fit_g degenerate inputs") {
    CHECK_CORRKIT_ERROR(fit_g(PairedSample({1, 2, 3}, {4, 4, 4})), ErrorCode::AllTied);
    CHECK_CORRKIT_ERROR(fit_g(PairedSample({2, 2, 2, 2}, {1, 2, 3, 4})), ErrorCode::ConstantX);
    // Constant only after the median row is dropped.
    CHECK_CORRKIT_ERROR(fit_g(PairedSample({2, 9, 2}, {1, 2, 3})), ErrorCode::ConstantX);
}

TEST_CASE("sentinel_cut") {
    CHECK(sentinel_cut(1, 3) == -1.0);
    CHECK(sentinel_cut(-1e308, 1e308) < -1e308);
    CHECK(sentinel_cut(5, 5) < 5);
}

TEST_CASE("fit_g equals the exhaustive sweep") {
    Rng rng(RngSeed{53});
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 2 + rng.below(199);
        const PairedSample s = k % 3 == 0 ? PairedSample(testing::tied_vector(rng, n, 7), testing::tied_vector(rng, n, 7))
                                          : testing::random_sample(rng, n);
        GCorrFit fit;
        try {
            fit = fit_g(s);
        } catch (const Error&) {
            continue;
        }
        const oracle::SweepResult best = oracle::exhaustive_fit(s.xs(), s.ys());
        CHECK(fit.omega == best.omega);
        CHECK(fit.c == best.c);
        CHECK(fit.omega >= 0.5);
        CHECK(fit.omega <= 1.0);
        const TiePreprocessed prep = preprocess_ties(s);
        CHECK(g_objective(prep.sample, fit.c, fit.y_median).g == fit.omega);
        CHECK(fit.counts.total() == prep.sample.size());
    }
}

TEST_CASE("fit_g is affine equivariant") {
    Rng rng(RngSeed{54});
    for (int k = 0; k < 100; ++k) {
        const PairedSample s = testing::random_sample(rng, 5 + rng.below(100));
        const GCorrFit fit = fit_g(s);
        const double a = rng.uniform(0.1, 10), d = rng.uniform(-5, 5);
        const double a2 = rng.uniform(0.1, 10), d2 = rng.uniform(-5, 5);
        std::vector<double> xs(s.xs().begin(), s.xs().end()), ys(s.ys().begin(), s.ys().end());
        for (auto& x : xs) x = a * x + d;
        for (auto& y : ys) y = a2 * y + d2;
        const GCorrFit moved = fit_g(PairedSample(xs, ys));
        CHECK(moved.omega == fit.omega);
        CHECK(moved.c == doctest::Approx(a * fit.c + d).epsilon(1e-9).scale(10));
    }
}

TEST_CASE("g_predict") {
    GCorrFit fit;
    fit.c = 0.0;
    fit.diagonal = Diagonal::main;
    CHECK(g_predict(1.0, fit) == MedianSide::above_median);
    CHECK(g_predict(0.0, fit) == MedianSide::below_median);
    fit.diagonal = Diagonal::anti;
    CHECK(g_predict(1.0, fit) == MedianSide::below_median);
}

TEST_CASE("estimate_g") {
    const PairedSample line = identity_sample(50);
    const SplitEstimate est = estimate_g(line, SplitPlan{30, 20, 100, RngSeed{1}});
    CHECK(est.omega_mean >= 0.95);
    CHECK(est.iterations == 100);

    Rng rng(RngSeed{55});
    const PairedSample noise = testing::random_sample(rng, 50);
    const SplitPlan plan{30, 20, 1000, RngSeed{9}};
    const SplitEstimate a = estimate_g(noise, plan);
    CHECK(a.omega_mean >= 0.4);
    CHECK(a.omega_mean <= 0.62);
    CHECK(a.omega_stddev > 0.0);

    const SplitEstimate b = estimate_g(noise, plan, 4);
    CHECK(a.omega_mean == b.omega_mean);
    CHECK(a.omega_stddev == b.omega_stddev);
    const SplitEstimate c = estimate_g(noise, plan, 0);
    CHECK(a.omega_mean == c.omega_mean);

    // One iteration: stddev is zero.
    CHECK(estimate_g(noise, SplitPlan{30, 20, 1, RngSeed{2}}).omega_stddev == 0.0);

    CHECK_CORRKIT_ERROR(estimate_g(noise, SplitPlan{50, 1, 10, RngSeed{}}), ErrorCode::InvalidPlan);
    CHECK_CORRKIT_ERROR(estimate_g(noise, SplitPlan{50, 0, 10, RngSeed{}}), ErrorCode::InvalidPlan);
    CHECK_CORRKIT_ERROR(estimate_g(noise, SplitPlan{1, 20, 10, RngSeed{}}), ErrorCode::InvalidPlan);
    CHECK_CORRKIT_ERROR(estimate_g(noise, SplitPlan{30, 20, 0, RngSeed{}}), ErrorCode::InvalidPlan);
}

TEST_CASE("estimate_g counts degenerate training partitions as 0.5") {
    // Mostly constant y: many training draws hold a single y value.
    std::vector<double> xs(10), ys(10, 1.0);
    for (int i = 0; i < 10; ++i) xs[i] = i;
    ys[9] = 2.0;
    const SplitEstimate est = estimate_g(PairedSample(xs, ys), SplitPlan{3, 2, 200, RngSeed{4}});
    CHECK(est.degenerate > 0);
    CHECK(est.omega_mean <= 1.0);
}

TEST_CASE("estimate_g noise band over split seeds") {
    // One noise dataset, 50 independent partition streams.
    Rng rng(RngSeed{56});
    const PairedSample noise = testing::random_sample(rng, 50);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const double mean = estimate_g(noise, SplitPlan{30, 20, 1000, RngSeed{seed}}).omega_mean;
        CHECK(mean >= 0.5);
        CHECK(mean <= 0.62);
    }
}
