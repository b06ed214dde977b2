#pragma once

#include "zipfstat/freq.hpp"

#include <cstddef>
#include <vector>

namespace zipfstat {

struct RankWindow {
    std::size_t r_min = 10;
    std::size_t r_max = 10000;
};

// Result of an OLS fit of log10 f(r) against log10 r; alpha is the negated
// slope, so f(r) ~ 10^intercept * r^(-alpha) over the window.
struct ScalingFit {
    double alpha = 0;
    double intercept = 0;
    double stderr_alpha = 0;
    double r_squared = 0;
    RankWindow window;
    std::size_t n_points = 0;
};

struct PiecewiseFit {
    std::size_t breakpoint_rank = 0;  // last rank of the low segment
    double alpha_low = 0;
    double alpha_high = 0;
    double intercept_low = 0;
    double intercept_high = 0;
    double sse = 0;                 // total residual sum of squares, both segments
    double improvement_ratio = 1;   // sse / sse of the single-segment fit
    RankWindow window;
    std::size_t n_points = 0;
};

// Residual diagnostics for a fit, reported per rank decade.
struct DecadeStat {
    int decade;                // ranks in [10^decade, 10^(decade+1))
    std::size_t n_points;
    double mean_residual;      // log10 space, observed minus predicted
};

struct GoodnessReport {
    std::vector<DecadeStat> decades;
    double max_abs_residual = 0;
    double mean_abs_residual = 0;
    std::size_t sign_runs = 0;    // number of maximal same-sign residual runs
    std::size_t longest_run = 0;  // length of the longest such run
};

// Minimum number of in-window points for any fit (and per piecewise segment).
inline constexpr std::size_t kMinFitPoints = 10;

// OLS on (log10 r, log10 f(r)) over every in-window point, one point per
// rank including tied frequencies. Throws DataError when fewer than
// kMinFitPoints ranks fall inside the window.
ScalingFit fit_power_law(const RankedDistribution& dist, RankWindow window);

// Exhaustive scan over candidate breakpoints (each segment keeps at least
// kMinFitPoints points); picks the minimum total SSE, ties resolved toward
// the lowest breakpoint rank. No continuity constraint at the break.
PiecewiseFit fit_breakpoint(const RankedDistribution& dist, RankWindow window);

// Residual summary for an existing fit; rejects a fit that does not match
// the distribution/window it claims to describe.
GoodnessReport goodness_report(const ScalingFit& fit, const RankedDistribution& dist,
                               RankWindow window);

} // namespace zipfstat
