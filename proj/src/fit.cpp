#include "zipfstat/fit.hpp"
#include "zipfstat/unicode.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace zipfstat {

namespace {

struct LogPoint {
    double x;  // log10 rank
    double y;  // log10 frequency
    std::size_t rank;
};

std::vector<LogPoint> window_points(const RankedDistribution& dist, RankWindow w) {
    if (w.r_min >= w.r_max) throw DataError("fit window: r_min must be below r_max");
    if (w.r_min < 1) throw DataError("fit window: r_min must be at least 1");
    std::vector<LogPoint> pts;
    // Ranks ascend, so the window is a contiguous slice of the point list.
    // Selecting by the stored rank (not the vector position) also covers
    // point sets with gaps, e.g. hand-assembled ones fed in through the
    // python module.
    for (const auto& p : dist.points) {
        if (p.rank > w.r_max) break;
        if (p.rank < w.r_min) continue;
        if (!(p.frequency > 0))
            throw DataError("fit: non-positive frequency at rank " + std::to_string(p.rank));
        pts.push_back({std::log10(static_cast<double>(p.rank)), std::log10(p.frequency),
                       p.rank});
    }
    return pts;
}

struct OlsResult {
    double slope, intercept, sse, sst;
};

// Two-pass centered least squares; numerically solid for our point counts.
OlsResult ols(const std::vector<LogPoint>& pts, std::size_t begin, std::size_t end) {
    const std::size_t n = end - begin;
    double xm = 0, ym = 0;
    for (std::size_t i = begin; i < end; ++i) {
        xm += pts[i].x;
        ym += pts[i].y;
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const double dx = pts[i].x - xm;
        const double dy = pts[i].y - ym;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0)) throw DataError("fit: degenerate window (all ranks equal)");
    const double slope = sxy / sxx;
    double sse = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const double res = pts[i].y - (ym + slope * (pts[i].x - xm));
        sse += res * res;
    }
    return {slope, ym - slope * xm, sse, syy};
}

ScalingFit fit_from(const std::vector<LogPoint>& pts, RankWindow w) {
    const std::size_t n = pts.size();
    const OlsResult o = ols(pts, 0, n);
    ScalingFit fit;
    fit.alpha = -o.slope;
    fit.intercept = o.intercept;
    fit.window = w;
    fit.n_points = n;
    if (o.sst > 0) {
        fit.r_squared = 1.0 - o.sse / o.sst;
        if (fit.r_squared < 0) fit.r_squared = 0;
    } else {
        fit.r_squared = o.sse > 0 ? 0.0 : 1.0;
    }
    double sxx = 0, xm = 0;
    for (const auto& p : pts) xm += p.x;
    xm /= static_cast<double>(n);
    for (const auto& p : pts) sxx += (p.x - xm) * (p.x - xm);
    fit.stderr_alpha = n > 2 ? std::sqrt(o.sse / static_cast<double>(n - 2) / sxx) : 0.0;
    return fit;
}

} // namespace

ScalingFit fit_power_law(const RankedDistribution& dist, RankWindow window) {
    const auto pts = window_points(dist, window);
    if (pts.size() < kMinFitPoints)
        throw DataError("fit: insufficient points in window [" + std::to_string(window.r_min) +
                        ", " + std::to_string(window.r_max) + "]: have " +
                        std::to_string(pts.size()) + ", need " + std::to_string(kMinFitPoints));
    return fit_from(pts, window);
}

PiecewiseFit fit_breakpoint(const RankedDistribution& dist, RankWindow window) {
    const auto pts = window_points(dist, window);
    const std::size_t n = pts.size();
    if (n < 3 * kMinFitPoints)
        throw DataError("breakpoint fit: need at least " + std::to_string(3 * kMinFitPoints) +
                        " in-window points, have " + std::to_string(n));

    // Prefix sums in extended precision let every candidate's two segment
    // fits come out of O(1) work; the scan over candidates is exhaustive.
    std::vector<long double> px(n + 1, 0), py(n + 1, 0), pxx(n + 1, 0), pxy(n + 1, 0),
        pyy(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        px[i + 1] = px[i] + pts[i].x;
        py[i + 1] = py[i] + pts[i].y;
        pxx[i + 1] = pxx[i] + static_cast<long double>(pts[i].x) * pts[i].x;
        pxy[i + 1] = pxy[i] + static_cast<long double>(pts[i].x) * pts[i].y;
        pyy[i + 1] = pyy[i] + static_cast<long double>(pts[i].y) * pts[i].y;
    }
    auto segment_sse = [&](std::size_t b, std::size_t e) -> long double {
        const auto m = static_cast<long double>(e - b);
        const long double sx = px[e] - px[b], sy = py[e] - py[b];
        const long double cxx = (pxx[e] - pxx[b]) - sx * sx / m;
        const long double cxy = (pxy[e] - pxy[b]) - sx * sy / m;
        const long double cyy = (pyy[e] - pyy[b]) - sy * sy / m;
        if (!(cxx > 0)) throw DataError("breakpoint fit: degenerate segment");
        const long double sse = cyy - cxy * cxy / cxx;
        return sse > 0 ? sse : 0;
    };

    std::size_t best_k = 0;
    long double best_sse = -1;
    for (std::size_t k = kMinFitPoints; k + kMinFitPoints <= n; ++k) {
        const long double sse = segment_sse(0, k) + segment_sse(k, n);
        if (best_sse < 0 || sse < best_sse) {
            best_sse = sse;
            best_k = k;
        }
    }
    if (best_sse < 0) throw DataError("breakpoint fit: no feasible breakpoint");

    const OlsResult low = ols(pts, 0, best_k);
    const OlsResult high = ols(pts, best_k, n);
    const OlsResult single = ols(pts, 0, n);

    PiecewiseFit out;
    out.breakpoint_rank = pts[best_k - 1].rank;
    out.alpha_low = -low.slope;
    out.alpha_high = -high.slope;
    out.intercept_low = low.intercept;
    out.intercept_high = high.intercept;
    out.sse = low.sse + high.sse;
    out.improvement_ratio = single.sse > 1e-30 ? out.sse / single.sse : 1.0;
    out.window = window;
    out.n_points = n;
    return out;
}

GoodnessReport goodness_report(const ScalingFit& fit, const RankedDistribution& dist,
                               RankWindow window) {
    if (fit.window.r_min != window.r_min || fit.window.r_max != window.r_max)
        throw DataError("goodness report: window does not match the fit's window");
    const auto pts = window_points(dist, window);
    if (pts.size() != fit.n_points)
        throw DataError("goodness report: fit does not describe this distribution "
                        "(point count mismatch)");

    GoodnessReport rep;
    int cur_decade = -1;
    double decade_sum = 0;
    std::size_t decade_n = 0;
    double abs_sum = 0;
    int run_sign = 0;
    std::size_t run_len = 0;

    auto close_decade = [&] {
        if (decade_n > 0)
            rep.decades.push_back({cur_decade, decade_n, decade_sum / static_cast<double>(decade_n)});
        decade_sum = 0;
        decade_n = 0;
    };

    for (const auto& p : pts) {
        const double res = p.y - (fit.intercept - fit.alpha * p.x);
        const int dec = static_cast<int>(std::floor(std::log10(static_cast<double>(p.rank))));
        if (dec != cur_decade) {
            close_decade();
            cur_decade = dec;
        }
        decade_sum += res;
        ++decade_n;
        abs_sum += std::fabs(res);
        if (std::fabs(res) > rep.max_abs_residual) rep.max_abs_residual = std::fabs(res);
        const int sign = res >= 0 ? 1 : -1;
        if (sign == run_sign) {
            ++run_len;
        } else {
            run_sign = sign;
            run_len = 1;
            ++rep.sign_runs;
        }
        if (run_len > rep.longest_run) rep.longest_run = run_len;
    }
    close_decade();
    rep.mean_abs_residual = pts.empty() ? 0 : abs_sum / static_cast<double>(pts.size());
    return rep;
}

} // namespace zipfstat
