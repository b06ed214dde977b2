#pragma once

#include "zipfstat/corpus.hpp"
#include "zipfstat/fit.hpp"
#include "zipfstat/strata.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace zipfstat {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Hex SHA-256, used to pin reports to exact input bytes.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

struct ReportMeta {
    bool timestamp = true;  // off for byte-reproducible artifacts
};

// Shared JSON skeleton: schema_version, tool, tool_version, generated_at.
// Every command's report starts from this envelope.
nlohmann::ordered_json report_envelope(std::string_view kind, const ReportMeta& meta = {});

nlohmann::ordered_json to_json(const ScalingFit& fit);
nlohmann::ordered_json to_json(const PiecewiseFit& fit);
nlohmann::ordered_json to_json(const GoodnessReport& report);
nlohmann::ordered_json to_json(const DivergenceReport& report);
nlohmann::ordered_json to_json(const StrataReport& report);

// label / N / V summary of a distribution, for embedding in reports.
nlohmann::ordered_json distribution_info(const RankedDistribution& dist);

// --- plotting ---------------------------------------------------------

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (rank, frequency)
};

// Fitted-slope guide line f(r) = 10^intercept * r^(-alpha), drawn over
// [r_from, r_to].
struct PlotOverlay {
    std::string label;
    double alpha;
    double intercept;
    double r_from;
    double r_to;
};

struct PlotRule {
    std::string label;
    double rank;  // vertical rule, e.g. a divergence or breakpoint rank
};

struct PlotSpec {
    std::string title;
    std::vector<PlotSeries> series;
    std::vector<PlotOverlay> overlays;
    std::vector<PlotRule> rules;
    bool log_axes = true;
};

PlotSeries series_from(const RankedDistribution& dist);

// Self-contained SVG 1.1 document; byte-identical for identical specs.
std::string render_svg(const PlotSpec& spec);

// Script with inline data blocks, runnable by gnuplot as-is.
std::string render_gnuplot(const PlotSpec& spec);

} // namespace zipfstat
