#include "zipfstat/report.hpp"
#include "zipfstat/unicode.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace zipfstat {

using nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256: digest failed");
    std::string hex(len * 2, '0');
    static const char* k = "0123456789abcdef";
    for (unsigned int i = 0; i < len; ++i) {
        hex[2 * i] = k[digest[i] >> 4];
        hex[2 * i + 1] = k[digest[i] & 0xf];
    }
    return hex;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open for hashing: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

ordered_json report_envelope(std::string_view kind, const ReportMeta& meta) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = "zipfstat";
    j["tool_version"] = kToolVersion;
    j["kind"] = std::string(kind);
    if (meta.timestamp) {
        std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        j["generated_at"] = buf;
    }
    return j;
}

static ordered_json window_json(RankWindow w) {
    return {{"r_min", w.r_min}, {"r_max", w.r_max}};
}

ordered_json to_json(const ScalingFit& fit) {
    ordered_json j;
    j["alpha"] = fit.alpha;
    j["intercept"] = fit.intercept;
    j["stderr_alpha"] = fit.stderr_alpha;
    j["r_squared"] = fit.r_squared;
    j["window"] = window_json(fit.window);
    j["n_points"] = fit.n_points;
    return j;
}

ordered_json to_json(const PiecewiseFit& fit) {
    ordered_json j;
    j["breakpoint_rank"] = fit.breakpoint_rank;
    j["alpha_low"] = fit.alpha_low;
    j["alpha_high"] = fit.alpha_high;
    j["intercept_low"] = fit.intercept_low;
    j["intercept_high"] = fit.intercept_high;
    j["sse"] = fit.sse;
    j["improvement_ratio"] = fit.improvement_ratio;
    j["window"] = window_json(fit.window);
    j["n_points"] = fit.n_points;
    return j;
}

ordered_json to_json(const GoodnessReport& report) {
    ordered_json j;
    j["max_abs_residual"] = report.max_abs_residual;
    j["mean_abs_residual"] = report.mean_abs_residual;
    j["sign_runs"] = report.sign_runs;
    j["longest_run"] = report.longest_run;
    j["decades"] = ordered_json::array();
    for (const auto& d : report.decades)
        j["decades"].push_back({{"decade", d.decade},
                                {"n_points", d.n_points},
                                {"mean_residual", d.mean_residual}});
    return j;
}

ordered_json to_json(const DivergenceReport& report) {
    ordered_json j;
    if (report.divergence_rank) j["divergence_rank"] = *report.divergence_rank;
    else j["divergence_rank"] = nullptr;
    j["direction"] = to_string(report.direction);
    j["threshold"] = report.threshold;
    j["sustain_length"] = report.sustain_length;
    return j;
}

static ordered_json stratum_json(const StratumFit& s) {
    ordered_json j;
    j["pos"] = s.pos;
    j["vocabulary"] = s.v_pos;
    j["sufficient"] = s.sufficient;
    if (s.sufficient) j["fit"] = to_json(s.fit);
    return j;
}

ordered_json to_json(const StrataReport& report) {
    ordered_json j;
    j["window"] = window_json(report.window);
    j["strata"] = ordered_json::array();
    for (const auto& s : report.strata) j["strata"].push_back(stratum_json(s));
    j["combined"] = stratum_json(report.combined);
    return j;
}

ordered_json distribution_info(const RankedDistribution& dist) {
    ordered_json j;
    j["label"] = dist.label;
    j["tokens"] = dist.total;
    j["vocabulary"] = dist.points.size();
    j["normalized"] = dist.normalized;
    return j;
}

// --- plotting ---------------------------------------------------------

PlotSeries series_from(const RankedDistribution& dist) {
    PlotSeries s;
    s.label = dist.label;
    s.points.reserve(std::min<std::size_t>(dist.points.size(), 4096));
    for (const auto& p : dist.points) {
        // thin the tail to ~256 points per decade; a log-log plot cannot
        // resolve more and per-point SVG elements add up fast
        if (p.rank > 100) {
            const double prev = std::floor(256 * std::log10(double(p.rank) - 1));
            const double cur = std::floor(256 * std::log10(double(p.rank)));
            if (cur <= prev) continue;
        }
        s.points.emplace_back(double(p.rank), p.frequency);
    }
    return s;
}

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// %g keeps data blocks compact while round-tripping counts exactly
std::string gnum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Range {
    double lo = 0, hi = 1;
};

constexpr double kW = 720, kH = 540;
constexpr double kLeft = 64, kRight = 180, kTop = 40, kBottom = 48;

struct Frame {
    Range x, y;
    bool logs;

    double tx(double v) const {
        const double t = logs ? std::log10(v) : v;
        return kLeft + (t - x.lo) / (x.hi - x.lo) * (kW - kLeft - kRight);
    }
    double ty(double v) const {
        const double t = logs ? std::log10(v) : v;
        return kH - kBottom - (t - y.lo) / (y.hi - y.lo) * (kH - kTop - kBottom);
    }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

Frame compute_frame(const PlotSpec& spec) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto feed = [&](double x, double y) {
        if (spec.log_axes && (x <= 0 || y <= 0))
            throw DataError("plot: log axes need positive coordinates");
        const double tx = spec.log_axes ? std::log10(x) : x;
        const double ty = spec.log_axes ? std::log10(y) : y;
        xmin = std::min(xmin, tx); xmax = std::max(xmax, tx);
        ymin = std::min(ymin, ty); ymax = std::max(ymax, ty);
    };
    std::size_t n = 0;
    for (const auto& s : spec.series)
        for (const auto& [x, y] : s.points) { feed(x, y); ++n; }
    for (const auto& o : spec.overlays) {
        feed(o.r_from, std::pow(10, o.intercept) * std::pow(o.r_from, -o.alpha));
        feed(o.r_to, std::pow(10, o.intercept) * std::pow(o.r_to, -o.alpha));
    }
    if (n == 0) throw DataError("plot: no data points");
    if (xmax - xmin < 1e-12) { xmin -= 0.5; xmax += 0.5; }
    if (ymax - ymin < 1e-12) { ymin -= 0.5; ymax += 0.5; }
    const double px = (xmax - xmin) * 0.04, py = (ymax - ymin) * 0.04;
    return {{xmin - px, xmax + px}, {ymin - py, ymax + py}, spec.log_axes};
}

void axis_ticks(std::ostringstream& svg, const Frame& f) {
    const double x0 = kLeft, x1 = kW - kRight, y0 = kH - kBottom, y1 = kTop;
    svg << "<g stroke=\"#444\" fill=\"none\">\n"
        << "<path d=\"M" << num(x0) << " " << num(y1) << " V" << num(y0)
        << " H" << num(x1) << "\"/>\n</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">\n";
    auto decade_labels = [&](bool xaxis) {
        const Range& r = xaxis ? f.x : f.y;
        for (int k = int(std::ceil(r.lo)); k <= int(std::floor(r.hi)); ++k) {
            const double t = xaxis
                ? kLeft + (k - r.lo) / (r.hi - r.lo) * (kW - kLeft - kRight)
                : kH - kBottom - (k - r.lo) / (r.hi - r.lo) * (kH - kTop - kBottom);
            if (xaxis) {
                svg << "<line x1=\"" << num(t) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(t)
                    << "\" y2=\"" << num(y0 + 4) << "\" stroke=\"#444\"/>\n"
                    << "<text x=\"" << num(t) << "\" y=\"" << num(y0 + 18)
                    << "\" text-anchor=\"middle\">10<tspan dy=\"-5\" font-size=\"8\">" << k
                    << "</tspan></text>\n";
            } else {
                svg << "<line x1=\"" << num(x0 - 4) << "\" y1=\"" << num(t) << "\" x2=\"" << num(x0)
                    << "\" y2=\"" << num(t) << "\" stroke=\"#444\"/>\n"
                    << "<text x=\"" << num(x0 - 7) << "\" y=\"" << num(t + 4)
                    << "\" text-anchor=\"end\">10<tspan dy=\"-5\" font-size=\"8\">" << k
                    << "</tspan></text>\n";
            }
        }
    };
    auto linear_labels = [&](bool xaxis) {
        const Range& r = xaxis ? f.x : f.y;
        for (int i = 0; i <= 4; ++i) {
            const double v = r.lo + (r.hi - r.lo) * i / 4;
            const double t = xaxis
                ? kLeft + (v - r.lo) / (r.hi - r.lo) * (kW - kLeft - kRight)
                : kH - kBottom - (v - r.lo) / (r.hi - r.lo) * (kH - kTop - kBottom);
            char lab[32];
            std::snprintf(lab, sizeof lab, "%g", v);
            if (xaxis)
                svg << "<text x=\"" << num(t) << "\" y=\"" << num(y0 + 18)
                    << "\" text-anchor=\"middle\">" << lab << "</text>\n";
            else
                svg << "<text x=\"" << num(x0 - 7) << "\" y=\"" << num(t + 4)
                    << "\" text-anchor=\"end\">" << lab << "</text>\n";
        }
    };
    if (f.logs) { decade_labels(true); decade_labels(false); }
    else { linear_labels(true); linear_labels(false); }
    svg << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kH - 12)
        << "\" text-anchor=\"middle\">rank</text>\n"
        << "<text x=\"16\" y=\"" << num((y0 + y1) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << num((y0 + y1) / 2)
        << ")\">frequency</text>\n</g>\n";
}

} // namespace

std::string render_svg(const PlotSpec& spec) {
    const Frame f = compute_frame(spec);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << int(kW)
        << "\" height=\"" << int(kH) << "\" viewBox=\"0 0 " << int(kW) << " " << int(kH)
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!spec.title.empty())
        svg << "<text x=\"" << num(kW / 2) << "\" y=\"24\" text-anchor=\"middle\""
            << " font-family=\"sans-serif\" font-size=\"15\">" << xml_escape(spec.title)
            << "</text>\n";
    axis_ticks(svg, f);

    std::size_t ci = 0;
    double legend_y = kTop + 8;
    const double legend_x = kW - kRight + 14;
    for (const auto& s : spec.series) {
        const char* color = kPalette[ci++ % std::size(kPalette)];
        svg << "<g fill=\"" << color << "\">\n";
        for (const auto& [x, y] : s.points)
            svg << "<circle cx=\"" << num(f.tx(x)) << "\" cy=\"" << num(f.ty(y))
                << "\" r=\"2\"/>\n";
        svg << "</g>\n";
        svg << "<circle cx=\"" << num(legend_x) << "\" cy=\"" << num(legend_y - 4)
            << "\" r=\"3\" fill=\"" << color << "\"/>\n<text x=\"" << num(legend_x + 8)
            << "\" y=\"" << num(legend_y) << "\" font-family=\"sans-serif\" font-size=\"11\">"
            << xml_escape(s.label) << "</text>\n";
        legend_y += 16;
    }
    for (const auto& o : spec.overlays) {
        const double ya = std::pow(10, o.intercept) * std::pow(o.r_from, -o.alpha);
        const double yb = std::pow(10, o.intercept) * std::pow(o.r_to, -o.alpha);
        svg << "<line x1=\"" << num(f.tx(o.r_from)) << "\" y1=\"" << num(f.ty(ya)) << "\" x2=\""
            << num(f.tx(o.r_to)) << "\" y2=\"" << num(f.ty(yb))
            << "\" stroke=\"#1a3fbf\" stroke-width=\"1.5\" stroke-dasharray=\"7 4\"/>\n";
        if (!o.label.empty()) {
            svg << "<text x=\"" << num(legend_x + 8) << "\" y=\"" << num(legend_y)
                << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#1a3fbf\">"
                << xml_escape(o.label) << "</text>\n<line x1=\"" << num(legend_x - 4)
                << "\" y1=\"" << num(legend_y - 4) << "\" x2=\"" << num(legend_x + 5)
                << "\" y2=\"" << num(legend_y - 4)
                << "\" stroke=\"#1a3fbf\" stroke-dasharray=\"4 3\"/>\n";
            legend_y += 16;
        }
    }
    for (const auto& r : spec.rules) {
        svg << "<line x1=\"" << num(f.tx(r.rank)) << "\" y1=\"" << num(kTop) << "\" x2=\""
            << num(f.tx(r.rank)) << "\" y2=\"" << num(kH - kBottom)
            << "\" stroke=\"#888\" stroke-dasharray=\"3 3\"/>\n";
        if (!r.label.empty())
            svg << "<text x=\"" << num(f.tx(r.rank) + 4) << "\" y=\"" << num(kTop + 12)
                << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555\">"
                << xml_escape(r.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

std::string gp_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string render_gnuplot(const PlotSpec& spec) {
    if (spec.series.empty()) throw DataError("plot: no data series");
    std::ostringstream gp;
    gp << "# zipfstat " << kToolVersion << " plot script\n";
    if (!spec.title.empty()) gp << "set title " << gp_quote(spec.title) << "\n";
    gp << "set xlabel \"rank\"\nset ylabel \"frequency\"\n";
    if (spec.log_axes) gp << "set logscale xy\n";
    gp << "set key outside right top\n";
    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        gp << "$data" << i << " << EOD\n";
        for (const auto& [x, y] : spec.series[i].points)
            gp << gnum(x) << " " << gnum(y) << "\n";
        gp << "EOD\n";
    }
    for (std::size_t i = 0; i < spec.overlays.size(); ++i) {
        const auto& o = spec.overlays[i];
        gp << "f" << i << "(x) = 10**(" << gnum(o.intercept) << ") * x**(-" << gnum(o.alpha)
           << ")\n";
    }
    std::size_t arrow = 1;
    for (const auto& r : spec.rules) {
        gp << "set arrow " << arrow << " from " << gnum(r.rank) << ", graph 0 to "
           << gnum(r.rank) << ", graph 1 nohead dashtype 2 lc rgb \"#888888\"\n";
        if (!r.label.empty())
            gp << "set label " << arrow << " " << gp_quote(r.label) << " at " << gnum(r.rank)
               << ", graph 0.95 right offset -1,0 tc rgb \"#555555\"\n";
        ++arrow;
    }
    gp << "plot";
    for (std::size_t i = 0; i < spec.series.size(); ++i)
        gp << (i ? ", " : " ") << "$data" << i << " using 1:2 with points pointtype 7 "
           << "pointsize 0.4 title " << gp_quote(spec.series[i].label);
    for (std::size_t i = 0; i < spec.overlays.size(); ++i) {
        gp << ", f" << i << "(x) with lines dashtype 2 linewidth 1.5 lc rgb \"#1a3fbf\" ";
        const auto& o = spec.overlays[i];
        gp << (o.label.empty() ? "notitle" : "title " + gp_quote(o.label));
    }
    gp << "\n";
    return gp.str();
}

} // namespace zipfstat
