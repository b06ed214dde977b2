#include "zipfstat/corpus.hpp"
#include "zipfstat/tokenizer.hpp"
#include "zipfstat/unicode.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zipfstat {

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open document: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

CorpusSpec parse_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw DataError("cannot open manifest: " + manifest.string());
    const auto base = manifest.parent_path();

    CorpusSpec spec;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string at = manifest.string() + ":" + std::to_string(line_no);
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw DataError(at + ": malformed directive '" + line + "'");
            const std::string key = line.substr(1, eq - 1);
            const std::string value = line.substr(eq + 1);
            if (key == "label") {
                spec.label = value;
            } else if (key == "target") {
                std::uint64_t v = 0;
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
                if (ec != std::errc() || p != value.data() + value.size() || v == 0)
                    throw DataError(at + ": invalid target '" + value + "'");
                spec.target_size = v;
            } else if (key == "trim") {
                if (value == "none")
                    spec.trim = TrimPolicy::none;
                else if (value == "truncate_last_document")
                    spec.trim = TrimPolicy::truncate_last_document;
                else
                    throw DataError(at + ": unknown trim policy '" + value + "'");
            } else {
                throw DataError(at + ": unknown directive '#" + key + "'");
            }
            continue;
        }
        std::filesystem::path doc(line);
        if (doc.is_relative()) doc = base / doc;
        spec.documents.push_back(std::move(doc));
    }
    if (spec.documents.empty())
        throw DataError(manifest.string() + ": manifest lists no documents");
    if (spec.label.empty()) spec.label = manifest.stem().string();
    return spec;
}

FrequencyTable assemble(const CorpusSpec& spec) {
    if (spec.documents.empty()) throw DataError("assemble: no documents");
    FrequencyTable out;
    out.label = spec.label;

    for (const auto& doc : spec.documents) {
        if (spec.target_size && spec.trim == TrimPolicy::truncate_last_document &&
            out.total >= *spec.target_size)
            break;
        TokenStream stream = tokenize(slurp(doc), doc.filename().string());
        std::size_t take = stream.tokens.size();
        if (spec.target_size && spec.trim == TrimPolicy::truncate_last_document) {
            const std::uint64_t need = *spec.target_size - out.total;
            if (stream.tokens.size() > need) take = static_cast<std::size_t>(need);
        }
        for (std::size_t i = 0; i < take; ++i) out.add(stream.tokens[i]);
    }

    if (spec.target_size) {
        const auto target = *spec.target_size;
        if (spec.trim == TrimPolicy::truncate_last_document) {
            if (out.total != target)
                throw DataError("assemble: size mismatch for '" + spec.label + "': achieved " +
                                std::to_string(out.total) + " tokens, target " +
                                std::to_string(target));
        } else {
            const double rel = std::fabs(static_cast<double>(out.total) -
                                         static_cast<double>(target)) /
                               static_cast<double>(target);
            if (rel > 0.02)
                throw DataError("assemble: size mismatch for '" + spec.label + "': achieved " +
                                std::to_string(out.total) + " tokens, target " +
                                std::to_string(target) + " (beyond 2%)");
        }
    }
    if (out.entries.empty())
        throw DataError("assemble: corpus '" + spec.label + "' came out empty");
    return out;
}

DivergenceReport compare(const RankedDistribution& a, const RankedDistribution& b,
                         double threshold, std::size_t sustain_length) {
    if (!a.normalized || !b.normalized)
        throw DataError("compare: both distributions must be normalized first");
    if (!(threshold > 0)) throw DataError("compare: threshold must be positive");
    if (sustain_length < 1) throw DataError("compare: sustain length must be at least 1");

    DivergenceReport rep;
    rep.threshold = threshold;
    rep.sustain_length = sustain_length;

    const std::size_t shared = std::min(a.points.size(), b.points.size());
    int run_sign = 0;
    std::size_t run_len = 0, run_start = 0;
    for (std::size_t r = 1; r <= shared; ++r) {
        const double gap = std::log10(a.points[r - 1].frequency) -
                           std::log10(b.points[r - 1].frequency);
        const int sign = gap > threshold ? 1 : (gap < -threshold ? -1 : 0);
        if (sign != 0 && sign == run_sign) {
            ++run_len;
        } else if (sign != 0) {
            run_sign = sign;
            run_len = 1;
            run_start = r;
        } else {
            run_sign = 0;
            run_len = 0;
        }
        if (run_len >= sustain_length) {
            rep.divergence_rank = run_start;
            // A sitting above B from here on means B is the faster-decaying one.
            rep.direction = run_sign > 0 ? Divergence::b_decays_faster
                                         : Divergence::a_decays_faster;
            return rep;
        }
    }
    return rep;
}

const char* to_string(Divergence d) {
    switch (d) {
        case Divergence::a_decays_faster: return "a_decays_faster";
        case Divergence::b_decays_faster: return "b_decays_faster";
        default: return "none";
    }
}

} // namespace zipfstat
