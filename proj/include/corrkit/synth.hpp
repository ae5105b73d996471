#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "corrkit/rng.hpp"
#include "corrkit/types.hpp"

namespace corrkit {

enum class Family { noise, line, curvilinear, coarse_monotone, sinusoid, hetero_step, step_plateau };

std::string_view to_string(Family family) noexcept;
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

/// Family parameters. Missing keys take the defaults from family_defaults();
/// unknown keys are rejected with InvalidParams.
struct FamilySpec {
    Family family = Family::noise;
    std::size_t n = 100;
    RngSeed seed = kDefaultSeed;
    std::map<std::string, double> params;
};

std::map<std::string, double> family_defaults(Family family);

/// Deterministic per (family, n, seed, params).
///
///   noise            x, y independent U(0, 1)
///   line             x ~ U(x_min, x_max), y = a x + b
///   curvilinear      x ~ U(-1, 1), y = -height x^2 + noise_sd N(0, 1)
///   coarse_monotone  x ~ U(0, 1), y = x + noise_sd N(0, 1)
///   sinusoid         x = pi periods (1 + s) with s drawn by jittered
///                    stratification from the triangular density on [-1, 1];
///                    y = sin(x + phase) + noise_sd N(0, 1). The density and
///                    the default phase pi/2 make the cloud mirror-symmetric
///                    about its centre, so the rank and moment coefficients
///                    vanish while a single cut still classifies about 72%.
///   hetero_step      floor(low_fraction n) points with x ~ U(x_min, threshold)
///                    and y ~ U(0, low_spread); the rest have
///                    x ~ U(threshold, x_max) and y >= 1 with a wide spread,
///                    half of them sitting on the floor y = 1 exactly.
///                    Rows are shuffled.
///   step_plateau     x on a jittered grid in [0, 1); y = x + step_height
///                    floor(step_count x), and the top round(step_fraction n)
///                    points (at least one) are lifted by `jump`. Strictly
///                    increasing, yet most points sit below the mean of y.
///
/// Throws InvalidParams for n < 4 or out-of-range parameters.
PairedSample generate(const FamilySpec& spec);

}  // namespace corrkit
