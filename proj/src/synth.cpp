#include "corrkit/synth.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "corrkit/error.hpp"

namespace corrkit {

namespace {

using Params = std::map<std::string, double>;

Params resolve(const FamilySpec& spec) {
    Params params = family_defaults(spec.family);
    for (const auto& [key, value] : spec.params) {
        if (!params.contains(key)) {
            throw Error(ErrorCode::InvalidParams,
                        "unknown parameter '" + key + "' for family " + std::string(to_string(spec.family)));
        }
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::InvalidParams, "parameter '" + key + "' is not finite");
        }
        params[key] = value;
    }
    return params;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw Error(ErrorCode::InvalidParams, message);
}

// Inverse CDF of the symmetric triangular density 1 - |s| on [-1, 1].
double triangular_quantile(double u) {
    return u < 0.5 ? -1.0 + std::sqrt(2.0 * u) : 1.0 - std::sqrt(2.0 * (1.0 - u));
}

// (i + U_i) / n: one uniform draw inside each of n equal strata.
std::vector<double> jittered_grid(std::size_t n, Rng& rng) {
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = (static_cast<double>(i) + rng.uniform()) / static_cast<double>(n);
    }
    return u;
}

PairedSample make_hetero_step(std::size_t n, const Params& p, Rng& rng) {
    const double x_min = p.at("x_min");
    const double x_max = p.at("x_max");
    const double threshold = p.at("threshold");
    const double low_fraction = p.at("low_fraction");
    const double low_spread = p.at("low_spread");
    const double high_spread = p.at("high_spread");
    require(x_min < threshold && threshold < x_max, "hetero_step needs x_min < threshold < x_max");
    require(low_fraction > 0.0 && low_fraction < 0.5, "hetero_step needs 0 < low_fraction < 0.5");
    require(low_spread > 0.0 && low_spread < 1.0, "hetero_step needs 0 < low_spread < 1");
    require(high_spread > 0.0, "hetero_step needs high_spread > 0");
    const auto n_low = static_cast<std::size_t>(std::floor(low_fraction * static_cast<double>(n)));
    require(n_low >= 1, "hetero_step: low_fraction * n must be at least 1");
    const std::size_t n_high = n - n_low;
    const std::size_t n_floor = (n_high + 1) / 2;

    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(n);
    ys.reserve(n);
    for (std::size_t i = 0; i < n_low; ++i) {
        xs.push_back(rng.uniform(x_min, threshold));
        ys.push_back(low_spread * rng.uniform());
    }
    for (std::size_t i = 0; i < n_high; ++i) {
        // uniform(threshold, x_max) can only return threshold itself when the
        // draw is exactly 0; nudge so every high point is strictly right of it
        double x = rng.uniform(threshold, x_max);
        if (x <= threshold) x = std::nextafter(threshold, x_max);
        xs.push_back(x);
        ys.push_back(i < n_floor ? 1.0 : 1.0 + high_spread * (1.0 - rng.uniform()));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(order));
    std::vector<double> sx(n);
    std::vector<double> sy(n);
    for (std::size_t i = 0; i < n; ++i) {
        sx[i] = xs[order[i]];
        sy[i] = ys[order[i]];
    }
    return PairedSample(std::move(sx), std::move(sy));
}

PairedSample make_step_plateau(std::size_t n, const Params& p, Rng& rng) {
    const double step_fraction = p.at("step_fraction");
    const double jump = p.at("jump");
    const double step_count = p.at("step_count");
    const double step_height = p.at("step_height");
    require(step_fraction > 0.0 && step_fraction < 0.5, "step_plateau needs 0 < step_fraction < 0.5");
    require(jump > 0.0, "step_plateau needs jump > 0");
    require(step_count >= 1.0 && step_count == std::floor(step_count), "step_plateau needs integer step_count >= 1");
    require(step_height >= 0.0, "step_plateau needs step_height >= 0");
    const std::size_t lifted =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(step_fraction * static_cast<double>(n))));

    std::vector<double> xs = jittered_grid(n, rng);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        ys[i] = xs[i] + step_height * std::floor(step_count * xs[i]);
        if (i >= n - lifted) ys[i] += jump;
    }
    return PairedSample(std::move(xs), std::move(ys));
}

}  // namespace

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::noise: return "noise";
        case Family::line: return "line";
        case Family::curvilinear: return "curvilinear";
        case Family::coarse_monotone: return "coarse_monotone";
        case Family::sinusoid: return "sinusoid";
        case Family::hetero_step: return "hetero_step";
        case Family::step_plateau: return "step_plateau";
    }
    return "unknown";
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families{Family::noise,    Family::line,        Family::curvilinear,
                                              Family::coarse_monotone, Family::sinusoid, Family::hetero_step,
                                              Family::step_plateau};
    return families;
}

Family parse_family(std::string_view name) {
    for (Family f : all_families()) {
        if (to_string(f) == name) return f;
    }
    throw Error(ErrorCode::InvalidParams, "unknown family '" + std::string(name) + "'");
}

std::map<std::string, double> family_defaults(Family family) {
    switch (family) {
        case Family::noise: return {};
        case Family::line: return {{"a", 1.0}, {"b", 0.0}, {"x_min", 0.0}, {"x_max", 10.0}};
        case Family::curvilinear: return {{"height", 1.0}, {"noise_sd", 0.05}};
        case Family::coarse_monotone: return {{"noise_sd", 0.15}};
        case Family::sinusoid: return {{"periods", 2.0}, {"phase", std::numbers::pi / 2.0}, {"noise_sd", 0.0}};
        case Family::hetero_step:
            return {{"x_min", -20.0},      {"x_max", 0.0},       {"threshold", -12.0},
                    {"low_fraction", 0.4}, {"low_spread", 0.5}, {"high_spread", 10.0}};
        case Family::step_plateau:
            return {{"step_fraction", 0.02}, {"jump", 1000.0}, {"step_count", 4.0}, {"step_height", 1.0}};
    }
    return {};
}

PairedSample generate(const FamilySpec& spec) {
    if (spec.n < 4) throw Error(ErrorCode::InvalidParams, "families need n >= 4");
    const Params p = resolve(spec);
    const std::size_t n = spec.n;
    Rng rng(spec.seed);
    std::vector<double> xs(n);
    std::vector<double> ys(n);

    switch (spec.family) {
        case Family::noise:
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = rng.uniform();
                ys[i] = rng.uniform();
            }
            break;
        case Family::line: {
            require(p.at("x_min") < p.at("x_max"), "line needs x_min < x_max");
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = rng.uniform(p.at("x_min"), p.at("x_max"));
                ys[i] = p.at("a") * xs[i] + p.at("b");
            }
            break;
        }
        case Family::curvilinear:
            require(p.at("noise_sd") >= 0.0, "noise_sd must be >= 0");
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = rng.uniform(-1.0, 1.0);
                ys[i] = -p.at("height") * xs[i] * xs[i] + p.at("noise_sd") * rng.normal();
            }
            break;
        case Family::coarse_monotone:
            require(p.at("noise_sd") >= 0.0, "noise_sd must be >= 0");
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = rng.uniform();
                ys[i] = xs[i] + p.at("noise_sd") * rng.normal();
            }
            break;
        case Family::sinusoid: {
            const double periods = p.at("periods");
            require(periods >= 1.0, "sinusoid needs periods >= 1");
            require(p.at("noise_sd") >= 0.0, "noise_sd must be >= 0");
            const auto u = jittered_grid(n, rng);
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = std::numbers::pi * periods * (1.0 + triangular_quantile(u[i]));
                const double noise = p.at("noise_sd") > 0.0 ? p.at("noise_sd") * rng.normal() : 0.0;
                ys[i] = std::sin(xs[i] + p.at("phase")) + noise;
            }
            break;
        }
        case Family::hetero_step:
            return make_hetero_step(n, p, rng);
        case Family::step_plateau:
            return make_step_plateau(n, p, rng);
    }
    return PairedSample(std::move(xs), std::move(ys));
}

}  // namespace corrkit
