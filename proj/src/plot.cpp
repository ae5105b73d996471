#include "corrkit/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace corrkit {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 48.0;

std::string fixed(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Axis {
    double lo;
    double hi;
    double pixel_lo;
    double pixel_hi;

    double operator()(double v) const { return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo); }
};

Axis make_axis(double lo, double hi, double pixel_lo, double pixel_hi) {
    if (hi <= lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    return Axis{lo - pad, hi + pad, pixel_lo, pixel_hi};
}

}  // namespace

std::string render_g_plot(const PairedSample& s, const GCorrFit& fit) {
    const auto [x_min, x_max] = std::minmax_element(s.xs().begin(), s.xs().end());
    const auto [y_min, y_max] = std::minmax_element(s.ys().begin(), s.ys().end());
    const Axis ax = make_axis(std::min(*x_min, fit.c), std::max(*x_max, fit.c), kMargin, kWidth - kMargin);
    const Axis ay = make_axis(std::min(*y_min, fit.y_median), std::max(*y_max, fit.y_median), kHeight - kMargin, kMargin);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect class=\"frame\" x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
        << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"white\" stroke=\"#444\"/>\n";

    svg << "<g class=\"points\" fill=\"#1f77b4\" fill-opacity=\"0.7\">\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double x = s.xs()[i];
        const double y = s.ys()[i];
        svg << "<circle cx=\"" << fixed(ax(x)) << "\" cy=\"" << fixed(ay(y)) << "\" r=\"2.5\"";
        if (y == fit.y_median) svg << " class=\"tie\" fill=\"none\" stroke=\"#888\"";
        svg << "/>\n";
    }
    svg << "</g>\n";

    svg << "<line class=\"separator median\" x1=\"" << fixed(kMargin) << "\" y1=\"" << fixed(ay(fit.y_median))
        << "\" x2=\"" << fixed(kWidth - kMargin) << "\" y2=\"" << fixed(ay(fit.y_median))
        << "\" stroke=\"#d62728\" stroke-dasharray=\"6 4\"/>\n";
    svg << "<line class=\"separator cut\" x1=\"" << fixed(ax(fit.c)) << "\" y1=\"" << fixed(kMargin) << "\" x2=\""
        << fixed(ax(fit.c)) << "\" y2=\"" << fixed(kHeight - kMargin) << "\" stroke=\"#2ca02c\" stroke-dasharray=\"6 4\"/>\n";

    const double left = kMargin + 8.0;
    const double right = kWidth - kMargin - 8.0;
    const double top = kMargin + 16.0;
    const double bottom = kHeight - kMargin - 8.0;
    const auto& q = fit.counts;
    svg << "<g class=\"annotations\" fill=\"#222\">\n";
    svg << "<text class=\"quadrant\" data-quadrant=\"C1-\" x=\"" << left << "\" y=\"" << top << "\">C1- = " << q.c1_minus
        << "</text>\n";
    svg << "<text class=\"quadrant\" data-quadrant=\"C1+\" x=\"" << right << "\" y=\"" << top
        << "\" text-anchor=\"end\">C1+ = " << q.c1_plus << "</text>\n";
    svg << "<text class=\"quadrant\" data-quadrant=\"C2-\" x=\"" << left << "\" y=\"" << bottom << "\">C2- = " << q.c2_minus
        << "</text>\n";
    svg << "<text class=\"quadrant\" data-quadrant=\"C2+\" x=\"" << right << "\" y=\"" << bottom
        << "\" text-anchor=\"end\">C2+ = " << q.c2_plus << "</text>\n";
    svg << "<text class=\"summary\" x=\"" << kMargin << "\" y=\"" << kMargin - 12.0 << "\">omega = " << fixed(fit.omega, 4)
        << ", c = " << fixed(fit.c, 4) << ", median y = " << fixed(fit.y_median, 4) << ", removed ties = "
        << fit.removed_ties << "</text>\n";
    svg << "<text class=\"axis\" x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16.0 << "\">" << fixed(ax.lo)
        << "</text>\n";
    svg << "<text class=\"axis\" x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16.0
        << "\" text-anchor=\"end\">" << fixed(ax.hi) << "</text>\n";
    svg << "<text class=\"axis\" x=\"" << kMargin - 4.0 << "\" y=\"" << kHeight - kMargin
        << "\" text-anchor=\"end\">" << fixed(ay.lo) << "</text>\n";
    svg << "<text class=\"axis\" x=\"" << kMargin - 4.0 << "\" y=\"" << kMargin + 4.0 << "\" text-anchor=\"end\">"
        << fixed(ay.hi) << "</text>\n";
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace corrkit
