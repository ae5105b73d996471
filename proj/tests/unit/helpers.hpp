#pragma once

#include <cstdint>
#include <vector>

#include "corrkit/error.hpp"
#include "corrkit/rng.hpp"
#include "corrkit/types.hpp"

#define CHECK_CORRKIT_ERROR(expr, expected_code)                       \
    do {                                                               \
        bool thrown_ = false;                                          \
        try {                                                          \
            (void)(expr);                                              \
        } catch (const corrkit::Error& e_) {                           \
            thrown_ = true;                                            \
            CHECK(e_.code() == (expected_code));                       \
        }                                                              \
        CHECK_MESSAGE(thrown_, "expected corrkit::Error from " #expr); \
    } while (false)

namespace testing {

inline std::vector<double> uniform_vector(corrkit::Rng& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
    std::vector<double> v(n);
    for (auto& a : v) a = rng.uniform(lo, hi);
    return v;
}

// Values drawn from a small integer alphabet, so ties are frequent.
inline std::vector<double> tied_vector(corrkit::Rng& rng, std::size_t n, std::uint64_t levels) {
    std::vector<double> v(n);
    for (auto& a : v) a = static_cast<double>(rng.below(levels));
    return v;
}

inline corrkit::PairedSample random_sample(corrkit::Rng& rng, std::size_t n) {
    return {uniform_vector(rng, n), uniform_vector(rng, n)};
}

}  // namespace testing
