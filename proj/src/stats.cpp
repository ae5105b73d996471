#include "corrkit/stats.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "corrkit/error.hpp"

namespace corrkit {

double sample_mean(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyInput, "mean of an empty vector");
    }
    const double sum = std::accumulate(values.begin(), values.end(), 0.0);
    return sum / static_cast<double>(values.size());
}

double sample_median(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyInput, "median of an empty vector");
    }
    std::vector<double> work(values.begin(), values.end());
    const std::size_t n = work.size();
    const auto upper = work.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(work.begin(), upper, work.end());
    if (n % 2 == 1) {
        return *upper;
    }
    const double lower = *std::max_element(work.begin(), upper);
    return std::midpoint(lower, *upper);
}

bool is_constant(std::span<const double> values) noexcept {
    return std::all_of(values.begin(), values.end(),
                       [first = values.empty() ? 0.0 : values.front()](double v) { return v == first; });
}

}  // namespace corrkit
