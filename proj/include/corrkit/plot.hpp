#pragma once

#include <string>

#include "corrkit/gcorr.hpp"
#include "corrkit/types.hpp"

namespace corrkit {

/// Standalone SVG scatter of `s` with the fitted median line y = y_median and
/// cut x = c drawn as the only two <line> elements (class "separator"), and
/// the four quadrant counts plus omega written as <text> annotations. Output
/// bytes depend only on the inputs.
std::string render_g_plot(const PairedSample& s, const GCorrFit& fit);

}  // namespace corrkit
