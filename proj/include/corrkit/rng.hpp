#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace corrkit {

struct RngSeed {
    std::uint64_t value = 0;
    bool operator==(const RngSeed&) const = default;
};

/// Seed used whenever the caller supplies none (and CORRKIT_SEED is unset).
inline constexpr RngSeed kDefaultSeed{20240601};

/// Derives an independent stream seed from a parent seed and a stream index
/// (SplitMix64 finalizer applied twice).
RngSeed derive_seed(RngSeed parent, std::uint64_t stream) noexcept;

/// Portable pseudo-random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; every derived quantity below is
/// computed here rather than through <random> distributions, whose algorithms
/// are implementation-defined.
class Rng {
public:
    explicit Rng(RngSeed seed) : engine_(seed.value) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer on [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// Standard normal via Box-Muller; the spare deviate is cached.
    double normal();

    /// Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace corrkit
