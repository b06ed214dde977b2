// zipfstat: rank-frequency statistics for text corpora.
//
// Subcommands: freq, fit, compare, strata, monkey, plot. Machine output goes
// to stdout (or -o), diagnostics to stderr. Exit codes: 0 success, 1 usage,
// 2 bad input data.

#include "zipfstat/corpus.hpp"
#include "zipfstat/fit.hpp"
#include "zipfstat/freq.hpp"
#include "zipfstat/monkey.hpp"
#include "zipfstat/report.hpp"
#include "zipfstat/strata.hpp"
#include "zipfstat/tokenizer.hpp"
#include "zipfstat/unicode.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace zipfstat;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (!std::cout) throw DataError("write to stdout failed");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + out_path);
    out << text;
    out.flush();
    if (!out) throw DataError("write failed: " + out_path);
}

void report_warnings(const TokenStream& stream) {
    for (const auto& w : stream.warnings)
        std::cerr << "zipfstat: warning: " << stream.source_id << ": dropped a "
                  << w.codepoints << "-code-point token at byte " << w.byte_offset << "\n";
}

FrequencyTable count_file(const fs::path& path) {
    const std::string bytes = slurp(path);
    TokenStream stream = tokenize(bytes, path.string());
    report_warnings(stream);
    return count_tokens(stream);
}

bool is_table_header(const std::string& bytes) {
    const auto eol = bytes.find('\n');
    const std::string_view first(bytes.data(), eol == std::string::npos ? bytes.size() : eol);
    return first.rfind("#label=", 0) == 0 && first.find("\t#total=") != std::string_view::npos;
}

// A fit input is either a frequency-table TSV or raw text to tokenize.
RankedDistribution load_distribution(const fs::path& path, const std::string& label) {
    const std::string bytes = slurp(path);
    if (is_table_header(bytes)) {
        std::istringstream in(bytes);
        auto dist = read_table(in, path.string());
        if (!label.empty()) dist.label = label;
        return dist;
    }
    TokenStream stream = tokenize(bytes, path.string());
    report_warnings(stream);
    FrequencyTable table = count_tokens(stream);
    table.label = label.empty() ? path.stem().string() : label;
    return rank(table);
}

ordered_json input_info(const fs::path& path, const RankedDistribution& dist) {
    ordered_json j;
    j["path"] = path.string();
    j["sha256"] = sha256_file(path);
    j.update(distribution_info(dist));
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct WindowOpts {
    std::size_t rmin = 10, rmax = 10000;
    RankWindow window() const { return {rmin, rmax}; }
    void attach(CLI::App* cmd) {
        cmd->add_option("--rmin", rmin, "lowest rank in the fit window")
            ->capture_default_str();
        cmd->add_option("--rmax", rmax, "highest rank in the fit window")
            ->capture_default_str();
    }
};

// --- freq -------------------------------------------------------------

struct FreqOpts {
    std::vector<std::string> inputs;
    bool do_merge = false;
    std::string label, output, out_dir;
};

void run_freq(const FreqOpts& opt) {
    std::vector<std::future<FrequencyTable>> jobs;
    jobs.reserve(opt.inputs.size());
    for (const auto& in : opt.inputs)
        jobs.push_back(std::async(std::launch::async, count_file, fs::path(in)));

    if (opt.do_merge) {
        std::vector<FrequencyTable> tables;
        tables.reserve(jobs.size());
        for (auto& j : jobs) tables.push_back(j.get());
        const std::string label =
            opt.label.empty() ? fs::path(opt.inputs.front()).stem().string() : opt.label;
        emit(table_to_string(rank(merge(tables, label))), opt.output);
        return;
    }
    if (opt.inputs.size() == 1) {
        FrequencyTable table = jobs.front().get();
        if (!opt.label.empty()) table.label = opt.label;
        else table.label = fs::path(opt.inputs.front()).stem().string();
        emit(table_to_string(rank(table)), opt.output);
        return;
    }
    // several independent tables cannot share one stream and round-trip
    if (opt.out_dir.empty())
        throw CLI::ValidationError("freq",
                                   "multiple inputs need --merge or --out-dir");
    fs::create_directories(opt.out_dir);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        FrequencyTable table = jobs[i].get();
        table.label = fs::path(opt.inputs[i]).stem().string();
        const fs::path out = fs::path(opt.out_dir) / (table.label + ".freq.tsv");
        emit(table_to_string(rank(table)), out.string());
        std::cerr << "zipfstat: wrote " << out.string() << "\n";
    }
}

// --- fit --------------------------------------------------------------

struct FitOpts {
    std::string input, label, output;
    WindowOpts win;
    bool piecewise = false, goodness = false, no_timestamp = false;
};

void run_fit(const FitOpts& opt) {
    const fs::path path(opt.input);
    const RankedDistribution dist = load_distribution(path, opt.label);
    ordered_json rep = report_envelope("fit", {!opt.no_timestamp});
    rep["input"] = input_info(path, dist);
    const ScalingFit fit = fit_power_law(dist, opt.win.window());
    rep["fit"] = to_json(fit);
    if (opt.goodness) rep["goodness"] = to_json(goodness_report(fit, dist, opt.win.window()));
    if (opt.piecewise) rep["piecewise"] = to_json(fit_breakpoint(dist, opt.win.window()));
    emit(dump(rep), opt.output);
}

// --- compare ----------------------------------------------------------

struct CompareOpts {
    std::string input_a, input_b, output;
    double delta = 0.1;
    std::size_t sustain = 50;
    bool no_timestamp = false;
};

// Either a corpus manifest or a ready-made frequency table.
struct LoadedCorpus {
    RankedDistribution raw;
    ordered_json info;
};

LoadedCorpus load_corpus(const fs::path& path) {
    const std::string bytes = slurp(path);
    LoadedCorpus out;
    if (is_table_header(bytes)) {
        std::istringstream in(bytes);
        out.raw = read_table(in, path.string());
        out.info["path"] = path.string();
        out.info["sha256"] = sha256_hex(bytes);
    } else {
        const CorpusSpec spec = parse_manifest(path);
        out.raw = rank(assemble(spec));
        out.info["path"] = path.string();
        out.info["sha256"] = sha256_hex(bytes);
        out.info["documents"] = ordered_json::array();
        for (const auto& doc : spec.documents)
            out.info["documents"].push_back(
                {{"path", doc.string()}, {"sha256", sha256_file(doc)}});
    }
    out.info.update(distribution_info(out.raw));
    return out;
}

void run_compare(const CompareOpts& opt) {
    auto ja = std::async(std::launch::async, load_corpus, fs::path(opt.input_a));
    LoadedCorpus b = load_corpus(fs::path(opt.input_b));
    LoadedCorpus a = ja.get();

    // per-side single fits document what each curve looks like on its own
    for (LoadedCorpus* side : {&a, &b}) {
        const std::size_t v = side->raw.points.size();
        const RankWindow w{10, std::min<std::size_t>(10000, v)};
        if (w.r_min < w.r_max) {
            try {
                side->info["fit"] = to_json(fit_power_law(side->raw, w));
            } catch (const DataError&) { /* too few points: omit */ }
        }
    }

    const auto na = normalize(a.raw, double(a.raw.total));
    const auto nb = normalize(b.raw, double(b.raw.total));
    const DivergenceReport div = compare(na, nb, opt.delta, opt.sustain);

    ordered_json rep = report_envelope("compare", {!opt.no_timestamp});
    rep["a"] = a.info;
    rep["b"] = b.info;
    rep["divergence"] = to_json(div);
    emit(dump(rep), opt.output);
}

// --- strata -----------------------------------------------------------

struct StrataOpts {
    std::string input, mapping_file, pos, output;
    WindowOpts win{10, 1000};
    bool no_timestamp = false;
};

void run_strata(const StrataOpts& opt) {
    const PosMapping mapping =
        opt.mapping_file.empty() ? default_pos_mapping() : load_pos_mapping(opt.mapping_file);
    const TaggedLemmaList list = parse_tagged_list_file(opt.input, mapping);
    if (list.unknown_tag_count)
        std::cerr << "zipfstat: note: " << list.unknown_tag_count
                  << " records with unmapped POS tags kept as other(...)\n";

    ordered_json rep = report_envelope("strata", {!opt.no_timestamp});
    ordered_json in;
    in["path"] = opt.input;
    in["sha256"] = sha256_file(opt.input);
    in["unit"] = list.unit == FreqUnit::per_million ? "per_million" : "count";
    in["records"] = list.records.size();
    in["unmapped_tags"] = list.unknown_tag_count;
    rep["input"] = in;

    if (!opt.pos.empty()) {
        const auto it = mapping.find(opt.pos);
        const POSTag tag = it != mapping.end() ? POSTag::of(it->second)
                                               : POSTag::other_of(opt.pos);
        const RankedDistribution dist = stratify(list, tag);
        ordered_json s;
        s["pos"] = tag.name();
        s["vocabulary"] = dist.points.size();
        const RankWindow w{opt.win.rmin, std::min(opt.win.rmax, dist.points.size())};
        if (w.r_min >= w.r_max)
            throw DataError("stratum '" + tag.name() + "' has only " +
                            std::to_string(dist.points.size()) +
                            " ranked lemmas; the fit window starts at rank " +
                            std::to_string(w.r_min));
        s["fit"] = to_json(fit_power_law(dist, w));
        rep["stratum"] = s;
    } else {
        rep.update(to_json(strata_report(list, opt.win.window())));
    }
    emit(dump(rep), opt.output);
}

// --- monkey -----------------------------------------------------------

struct MonkeyOpts {
    unsigned alphabet = 26;
    double space_prob = 0.18;
    std::uint64_t tokens = 1000000;
    std::uint64_t seed = 1;
    std::string label, output;
};

void run_monkey(const MonkeyOpts& opt) {
    MonkeyParams params{opt.alphabet, opt.space_prob, opt.seed};
    FrequencyTable table = monkey_corpus(params, opt.tokens);
    if (!opt.label.empty()) table.label = opt.label;
    char alpha[64];
    std::snprintf(alpha, sizeof alpha, "alpha_analytic=%.12g",
                  monkey_alpha(opt.alphabet, opt.space_prob));
    const std::vector<std::string> comments = {
        alpha,
        "rng=mt19937_64",
        "seed=" + std::to_string(opt.seed),
        "alphabet=" + std::to_string(opt.alphabet),
        "space_prob=" + std::to_string(opt.space_prob),
    };
    emit(table_to_string(rank(table), comments), opt.output);
}

// --- plot -------------------------------------------------------------

struct PlotOpts {
    std::vector<std::string> inputs;
    std::vector<std::string> reports;
    std::string title, output;
    bool gnuplot = false, linear = false, with_fit = false, normalize_series = false;
    WindowOpts win;
    bool win_given = false;
};

void add_report_marks(PlotSpec& spec, const fs::path& path) {
    ordered_json rep;
    try {
        rep = ordered_json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(path.string() + ": not a JSON report: " + e.what());
    }
    char label[64];
    if (rep.contains("fit")) {
        const auto& f = rep["fit"];
        std::snprintf(label, sizeof label, "alpha=%.3f", f["alpha"].get<double>());
        spec.overlays.push_back({label, f["alpha"], f["intercept"],
                                 double(f["window"]["r_min"].get<std::size_t>()),
                                 double(f["window"]["r_max"].get<std::size_t>())});
    }
    if (rep.contains("piecewise")) {
        const auto& p = rep["piecewise"];
        const double brk = double(p["breakpoint_rank"].get<std::size_t>());
        std::snprintf(label, sizeof label, "alpha=%.3f", p["alpha_low"].get<double>());
        spec.overlays.push_back({label, p["alpha_low"], p["intercept_low"],
                                 double(p["window"]["r_min"].get<std::size_t>()), brk});
        std::snprintf(label, sizeof label, "alpha=%.3f", p["alpha_high"].get<double>());
        spec.overlays.push_back({label, p["alpha_high"], p["intercept_high"], brk,
                                 double(p["window"]["r_max"].get<std::size_t>())});
        std::snprintf(label, sizeof label, "break r=%llu",
                      (unsigned long long)p["breakpoint_rank"].get<std::size_t>());
        spec.rules.push_back({label, brk});
    }
    if (rep.contains("divergence") && !rep["divergence"]["divergence_rank"].is_null()) {
        const auto r = rep["divergence"]["divergence_rank"].get<std::size_t>();
        std::snprintf(label, sizeof label, "divergence r=%llu", (unsigned long long)r);
        spec.rules.push_back({label, double(r)});
    }
}

void run_plot(const PlotOpts& opt) {
    if (opt.inputs.empty()) throw DataError("plot: no input tables");
    PlotSpec spec;
    spec.title = opt.title;
    spec.log_axes = !opt.linear;
    for (const auto& in : opt.inputs) {
        RankedDistribution dist = load_distribution(in, "");
        if (opt.normalize_series) dist = normalize(dist, double(dist.total));
        spec.series.push_back(series_from(dist));
        if (opt.with_fit) {
            const std::size_t v = dist.points.size();
            RankWindow w{opt.win.rmin, std::min(opt.win.rmax, v)};
            ScalingFit fit;
            try {
                fit = fit_power_law(dist, w);
            } catch (const DataError&) {
                if (opt.win_given) throw;
                fit = fit_power_law(dist, {1, v});  // tiny table: use everything
                w = RankWindow{1, v};
            }
            char label[64];
            std::snprintf(label, sizeof label, "alpha=%.3f", fit.alpha);
            spec.overlays.push_back(
                {label, fit.alpha, fit.intercept, double(w.r_min), double(w.r_max)});
        }
    }
    for (const auto& r : opt.reports) add_report_marks(spec, r);
    emit(opt.gnuplot ? render_gnuplot(spec) : render_svg(spec), opt.output);
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"rank-frequency statistics for text corpora"};
    app.set_version_flag("--version", std::string("zipfstat ") + kToolVersion);
    app.require_subcommand(1);

    FreqOpts freq_opts;
    auto* freq = app.add_subcommand("freq", "tokenize text and write a frequency table");
    freq->add_option("inputs", freq_opts.inputs, "UTF-8 text files")->required();
    freq->add_flag("--merge", freq_opts.do_merge, "combine all inputs into one table");
    freq->add_option("--label", freq_opts.label, "table label (default: first input stem)");
    freq->add_option("-o,--output", freq_opts.output, "output file (default: stdout)");
    freq->add_option("--out-dir", freq_opts.out_dir,
                     "directory for per-input tables when not merging");

    FitOpts fit_opts;
    auto* fit = app.add_subcommand("fit", "fit a power law to a table or raw text");
    fit->add_option("input", fit_opts.input, "frequency table TSV or raw text")->required();
    fit_opts.win.attach(fit);
    fit->add_flag("--piecewise", fit_opts.piecewise, "also fit a two-regime model");
    fit->add_flag("--goodness", fit_opts.goodness, "add residual diagnostics");
    fit->add_option("--label", fit_opts.label, "override the distribution label");
    fit->add_flag("--no-timestamp", fit_opts.no_timestamp,
                  "omit generated_at for byte-reproducible reports");
    fit->add_option("-o,--output", fit_opts.output, "output file (default: stdout)");

    CompareOpts cmp_opts;
    auto* cmp = app.add_subcommand("compare", "find where two corpora diverge");
    cmp->add_option("a", cmp_opts.input_a, "corpus manifest or frequency table")->required();
    cmp->add_option("b", cmp_opts.input_b, "corpus manifest or frequency table")->required();
    cmp->add_option("--delta", cmp_opts.delta, "log10 frequency-ratio threshold")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmp->add_option("--sustain", cmp_opts.sustain, "ranks the gap must persist")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmp->add_flag("--no-timestamp", cmp_opts.no_timestamp, "omit generated_at");
    cmp->add_option("-o,--output", cmp_opts.output, "output file (default: stdout)");

    StrataOpts strata_opts;
    auto* strata = app.add_subcommand("strata", "per-part-of-speech fits of a lemma list");
    strata->add_option("input", strata_opts.input, "tagged lemma list TSV")->required();
    strata->add_option("--mapping", strata_opts.mapping_file,
                       "tag mapping file (source_tag<TAB>canonical per line)");
    strata->add_option("--pos", strata_opts.pos, "report a single stratum");
    strata_opts.win.attach(strata);
    strata->add_flag("--no-timestamp", strata_opts.no_timestamp, "omit generated_at");
    strata->add_option("-o,--output", strata_opts.output, "output file (default: stdout)");

    MonkeyOpts monkey_opts;
    auto* monkey = app.add_subcommand("monkey", "random-typing null corpus");
    monkey->add_option("-M,--alphabet", monkey_opts.alphabet, "letters on the keyboard")
        ->capture_default_str()
        ->check(CLI::Range(2u, 1000000u));
    monkey->add_option("-q,--space-prob", monkey_opts.space_prob,
                       "probability of the space bar")
        ->capture_default_str()
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    monkey->add_option("-n,--tokens", monkey_opts.tokens, "tokens to draw")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    monkey->add_option("--seed", monkey_opts.seed, "RNG seed")->capture_default_str();
    monkey->add_option("--label", monkey_opts.label, "table label");
    monkey->add_option("-o,--output", monkey_opts.output, "output file (default: stdout)");

    PlotOpts plot_opts;
    auto* plot = app.add_subcommand("plot", "render rank-frequency plots");
    plot->add_option("inputs", plot_opts.inputs, "frequency tables or raw text")->required();
    auto* svg_flag = plot->add_flag("--svg", "SVG output (the default)");
    plot->add_flag("--gnuplot", plot_opts.gnuplot, "gnuplot script output")
        ->excludes(svg_flag);
    plot->add_flag("--linear", plot_opts.linear, "linear axes instead of log-log");
    plot->add_flag("--fit", plot_opts.with_fit, "overlay a fitted slope per series");
    plot->add_flag("--normalize", plot_opts.normalize_series,
                   "plot relative frequencies f/N");
    plot->add_option("--report", plot_opts.reports,
                     "JSON report whose fits/divergence get drawn as guides");
    plot_opts.win.attach(plot);
    plot->add_option("--title", plot_opts.title, "plot title");
    plot->add_option("-o,--output", plot_opts.output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
        plot_opts.win_given = plot->count("--rmin") || plot->count("--rmax");
        if (freq->parsed()) run_freq(freq_opts);
        else if (fit->parsed()) run_fit(fit_opts);
        else if (cmp->parsed()) run_compare(cmp_opts);
        else if (strata->parsed()) run_strata(strata_opts);
        else if (monkey->parsed()) run_monkey(monkey_opts);
        else if (plot->parsed()) run_plot(plot_opts);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "zipfstat: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "zipfstat: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "zipfstat: internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
