// Python bindings: thin wrappers over the core operations, trading the C++
// domain structs for plain lists/dicts so callers stay in native Python.

#include "zipfstat/corpus.hpp"
#include "zipfstat/fit.hpp"
#include "zipfstat/freq.hpp"
#include "zipfstat/monkey.hpp"
#include "zipfstat/strata.hpp"
#include "zipfstat/tokenizer.hpp"
#include "zipfstat/unicode.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zipfstat;

namespace {

RankedDistribution dist_from_points(const std::vector<std::pair<std::size_t, double>>& points,
                                    const std::string& label) {
    RankedDistribution d;
    d.label = label;
    double total = 0;
    d.points.reserve(points.size());
    for (const auto& [r, f] : points) {
        d.points.push_back({r, "", f});
        total += f;
    }
    d.total = static_cast<std::uint64_t>(total);
    return d;
}

py::dict fit_dict(const ScalingFit& f) {
    py::dict d;
    d["alpha"] = f.alpha;
    d["intercept"] = f.intercept;
    d["stderr_alpha"] = f.stderr_alpha;
    d["r_squared"] = f.r_squared;
    d["r_min"] = f.window.r_min;
    d["r_max"] = f.window.r_max;
    d["n_points"] = f.n_points;
    return d;
}

} // namespace

PYBIND11_MODULE(zipfstat, m) {
    m.doc() = "rank-frequency statistics for text corpora";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    m.def(
        "tokenize",
        [](const std::string& text) {
            TokenStream s = tokenize(text, "<python>");
            return s.tokens;
        },
        py::arg("text"),
        "Split text into case-folded word tokens.");

    m.def(
        "ranked",
        [](const std::map<std::string, std::uint64_t>& counts, const std::string& label) {
            FrequencyTable t;
            t.label = label;
            for (const auto& [tok, c] : counts) t.add(tok, c);
            std::vector<std::tuple<std::size_t, std::string, std::uint64_t>> out;
            for (const auto& p : rank(t).points)
                out.emplace_back(p.rank, p.token, static_cast<std::uint64_t>(p.frequency));
            return out;
        },
        py::arg("counts"), py::arg("label") = "",
        "Rank a {token: count} mapping into (rank, token, count) rows.");

    m.def(
        "fit_power_law",
        [](const std::vector<std::pair<std::size_t, double>>& points, std::size_t r_min,
           std::size_t r_max, const std::string& label) {
            return fit_dict(fit_power_law(dist_from_points(points, label), {r_min, r_max}));
        },
        py::arg("points"), py::arg("r_min") = 10, py::arg("r_max") = 10000,
        py::arg("label") = "",
        "OLS power-law fit of (rank, frequency) points in log10-log10 space.");

    m.def(
        "fit_breakpoint",
        [](const std::vector<std::pair<std::size_t, double>>& points, std::size_t r_min,
           std::size_t r_max, const std::string& label) {
            const PiecewiseFit f =
                fit_breakpoint(dist_from_points(points, label), {r_min, r_max});
            py::dict d;
            d["breakpoint_rank"] = f.breakpoint_rank;
            d["alpha_low"] = f.alpha_low;
            d["alpha_high"] = f.alpha_high;
            d["intercept_low"] = f.intercept_low;
            d["intercept_high"] = f.intercept_high;
            d["sse"] = f.sse;
            d["improvement_ratio"] = f.improvement_ratio;
            d["n_points"] = f.n_points;
            return d;
        },
        py::arg("points"), py::arg("r_min") = 10, py::arg("r_max") = 10000,
        py::arg("label") = "",
        "Two-regime fit with an exhaustive breakpoint scan.");

    m.def(
        "compare",
        [](const std::vector<double>& a, const std::vector<double>& b, double threshold,
           std::size_t sustain_length) {
            auto build = [](const std::vector<double>& counts, const char* label) {
                RankedDistribution d;
                d.label = label;
                double total = 0;
                for (double c : counts) total += c;
                std::size_t r = 1;
                for (double c : counts) d.points.push_back({r++, "", c});
                return normalize(d, total);
            };
            const DivergenceReport rep =
                compare(build(a, "a"), build(b, "b"), threshold, sustain_length);
            py::dict d;
            d["divergence_rank"] =
                rep.divergence_rank ? py::cast(*rep.divergence_rank) : py::none();
            d["direction"] = to_string(rep.direction);
            d["threshold"] = rep.threshold;
            d["sustain_length"] = rep.sustain_length;
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("threshold") = 0.1,
        py::arg("sustain_length") = 50,
        "Find where two count curves (index = rank-1) start to diverge.");

    m.def(
        "strata_report",
        [](const std::vector<std::tuple<std::string, std::string, double>>& records,
           const std::string& unit, std::size_t r_min, std::size_t r_max,
           const std::map<std::string, std::string>& mapping) {
            PosMapping pm = default_pos_mapping();
            for (const auto& [src, dst] : mapping) {
                if (dst == "noun") pm[src] = POSTag::noun;
                else if (dst == "verb") pm[src] = POSTag::verb;
                else if (dst == "adjective") pm[src] = POSTag::adjective;
                else if (dst == "adverb") pm[src] = POSTag::adverb;
                else throw DataError("unknown canonical class '" + dst + "'");
            }
            TaggedLemmaList list;
            list.source_label = "<python>";
            if (unit == "count") list.unit = FreqUnit::count;
            else if (unit == "per_million") list.unit = FreqUnit::per_million;
            else throw DataError("unit must be 'count' or 'per_million'");
            for (const auto& [lemma, tag, freq] : records) {
                POSTag pos;
                if (auto it = pm.find(tag); it != pm.end()) pos = POSTag::of(it->second);
                else pos = POSTag::other_of(tag);
                list.records.push_back({lemma, pos, freq});
            }
            const StrataReport rep = strata_report(list, {r_min, r_max});
            auto stratum = [](const StratumFit& s) {
                py::dict d;
                d["pos"] = s.pos;
                d["vocabulary"] = s.v_pos;
                d["sufficient"] = s.sufficient;
                if (s.sufficient) d["fit"] = fit_dict(s.fit);
                return d;
            };
            py::dict d;
            py::list strata;
            for (const auto& s : rep.strata) strata.append(stratum(s));
            d["strata"] = strata;
            d["combined"] = stratum(rep.combined);
            return d;
        },
        py::arg("records"), py::arg("unit") = "count", py::arg("r_min") = 10,
        py::arg("r_max") = 1000, py::arg("mapping") = std::map<std::string, std::string>{},
        "Per-part-of-speech fits of (lemma, pos, frequency) records.");

    m.def(
        "monkey_corpus",
        [](unsigned letters, double boundary_prob, std::uint64_t tokens, std::uint64_t seed) {
            const FrequencyTable t = monkey_corpus({letters, boundary_prob, seed}, tokens);
            return t.entries;
        },
        py::arg("letters") = 26, py::arg("boundary_prob") = 0.18,
        py::arg("tokens") = 1000000, py::arg("seed") = 1,
        "Draw a random-typing corpus and return its {word: count} table.");

    m.def("monkey_alpha", &monkey_alpha, py::arg("letters"), py::arg("boundary_prob"),
          "Analytic exponent of the random-typing model.");

    m.def(
        "read_table",
        [](const std::string& path) {
            const RankedDistribution d = read_table_file(path);
            std::vector<std::tuple<std::size_t, std::string, std::uint64_t>> rows;
            for (const auto& p : d.points)
                rows.emplace_back(p.rank, p.token, static_cast<std::uint64_t>(p.frequency));
            return py::make_tuple(d.label, d.total, rows);
        },
        py::arg("path"),
        "Load a frequency-table TSV: returns (label, total, rows).");
}
