#pragma once

#include <span>

namespace corrkit {

/// Arithmetic mean. Throws EmptyInput for an empty span.
double sample_mean(std::span<const double> values);

/// Middle order statistic for odd n, mean of the two middle order
/// statistics for even n. Throws EmptyInput for an empty span.
double sample_median(std::span<const double> values);

/// True when every element compares equal to the first.
bool is_constant(std::span<const double> values) noexcept;

}  // namespace corrkit
