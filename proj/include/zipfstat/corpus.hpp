#pragma once

#include "zipfstat/freq.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace zipfstat {

enum class TrimPolicy { none, truncate_last_document };

// Recipe for building one corpus: an ordered document list with an optional
// token-count target. With truncate_last_document the final contributing
// document is cut so the corpus hits the target exactly; with none the
// assembled size must land within 2% of the target.
struct CorpusSpec {
    std::string label;
    std::vector<std::filesystem::path> documents;
    std::optional<std::uint64_t> target_size;
    TrimPolicy trim = TrimPolicy::none;
};

enum class Divergence { none, a_decays_faster, b_decays_faster };

// Where two normalized distributions part ways: the smallest rank from which
// |log10 fA - log10 fB| stays above `threshold` with one sign for
// `sustain_length` consecutive ranks.
struct DivergenceReport {
    std::optional<std::size_t> divergence_rank;
    Divergence direction = Divergence::none;
    double threshold = 0.1;
    std::size_t sustain_length = 50;
};

// Manifest file format, one directive or document path per line:
//   #label=<name>
//   #target=<token count>        (optional)
//   #trim=none|truncate_last_document
//   <path to document>           (relative paths resolve against the manifest)
// Blank lines are skipped. Unknown directives are errors.
CorpusSpec parse_manifest(const std::filesystem::path& manifest);

// Tokenizes and merges the documents in listed order, honoring the target
// and trim policy. Throws DataError with the achieved N on a size mismatch.
FrequencyTable assemble(const CorpusSpec& spec);

// Both inputs must be normalized. Scans ranks present in both distributions.
DivergenceReport compare(const RankedDistribution& a, const RankedDistribution& b,
                         double threshold = 0.1, std::size_t sustain_length = 50);

const char* to_string(Divergence d);

} // namespace zipfstat
