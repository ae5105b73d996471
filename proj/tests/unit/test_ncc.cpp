#include <doctest.h>

#include <cmath>

#include "corrkit/ncc.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace corrkit;

namespace {

PairedSample identity_sample(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i) * 0.5 + 3;
    return {v, v};
}

// One point per (x bin, y bin) stratum on a 10 x 10 grid.
PairedSample stratified_sample() {
    std::vector<double> xs, ys;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            xs.push_back(10 * i + j);
            ys.push_back(10 * j + i);
        }
    }
    return {xs, ys};
}

}  // namespace

TEST_CASE("bin grid shapes") {
    const BinGrid diag = build_bin_grid(identity_sample(100), 10);
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) CHECK(diag.at(i, j) == (i == j ? 10u : 0u));
        CHECK(diag.row_counts[i] == 10);
        CHECK(diag.col_counts[i] == 10);
    }

    const BinGrid uni = build_bin_grid(stratified_sample(), 10);
    for (auto c : uni.counts) CHECK(c == 1);

    CHECK_CORRKIT_ERROR(build_bin_grid(identity_sample(9), 10), ErrorCode::TooFewPoints);
    CHECK_CORRKIT_ERROR(build_bin_grid(identity_sample(9), 1), ErrorCode::InvalidArgument);
}

TEST_CASE("uneven bins follow the floor partition") {
    Rng rng(RngSeed{41});
    const PairedSample s = testing::random_sample(rng, 103);
    const BinGrid g = build_bin_grid(s, 10);
    const auto bins = oracle::position_bins(103, 10);
    std::vector<std::size_t> expect(10, 0);
    for (auto b : bins) ++expect[b];
    CHECK(g.col_counts == expect);
    CHECK(g.row_counts == expect);

    std::size_t total = 0;
    for (auto c : g.counts) total += c;
    CHECK(total == 103);

    const NccTerms t = ncc_terms(g);
    CHECK(std::abs(t.h_x - 1.0) <= 0.02);
    CHECK(std::abs(t.h_y - 1.0) <= 0.02);
}

TEST_CASE("ncc endpoints") {
    CHECK(std::abs(ncc(identity_sample(100)) - 1.0) <= 1e-12);
    CHECK(std::abs(ncc(stratified_sample())) <= 1e-12);
}

TEST_CASE("ncc matches direct summation and stays in range") {
    Rng rng(RngSeed{42});
    for (int k = 0; k < 300; ++k) {
        const std::size_t b = 2 + rng.below(10);
        const std::size_t n = b + rng.below(150);
        const PairedSample s = k % 3 == 0 ? PairedSample(testing::tied_vector(rng, n, 5), testing::tied_vector(rng, n, 5))
                                          : testing::random_sample(rng, n);
        const double v = ncc(s, b);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        const double direct = std::clamp(oracle::ncc(s.xs(), s.ys(), b), 0.0, 1.0);
        CHECK(std::abs(v - direct) <= 1e-12);
    }
}

TEST_CASE("ncc symmetry and monotone invariance") {
    Rng rng(RngSeed{43});
    for (int k = 0; k < 100; ++k) {
        const PairedSample s = testing::random_sample(rng, 10 + rng.below(200));
        const double v = ncc(s);
        CHECK(ncc(s.swapped()) == v);

        std::vector<double> fx(s.xs().begin(), s.xs().end()), gy(s.ys().begin(), s.ys().end());
        for (auto& x : fx) x = std::exp(3 * x) - 2;
        for (auto& y : gy) y = y * y * y + y;
        CHECK(ncc(PairedSample(fx, gy)) == v);
    }
}
