#pragma once

#include "zipfstat/fit.hpp"
#include "zipfstat/freq.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zipfstat {

// Canonical part-of-speech classes. Anything outside the big four keeps its
// source label inside `other`.
struct POSTag {
    enum Class { noun, verb, adjective, adverb, other } cls = other;
    std::string label;  // set only for `other`

    static POSTag of(Class c) { return {c, {}}; }
    static POSTag other_of(std::string l) { return {other, std::move(l)}; }
    bool operator==(const POSTag& rhs) const { return cls == rhs.cls && label == rhs.label; }
    bool operator<(const POSTag& rhs) const {
        return cls != rhs.cls ? cls < rhs.cls : label < rhs.label;
    }
    std::string name() const;
};

struct TaggedLemma {
    std::string lemma;
    POSTag pos;
    double frequency;  // unit given by the list
};

enum class FreqUnit { count, per_million };

struct TaggedLemmaList {
    std::vector<TaggedLemma> records;
    FreqUnit unit = FreqUnit::count;
    std::string source_label;
    std::size_t unknown_tag_count = 0;  // tags that fell through to other(...)
};

// Source-tag -> canonical-class mapping. The default covers common
// BNC-style tags plus the canonical names themselves; a mapping file
// (lines `<source_tag>\t<canonical>`) replaces or extends it.
using PosMapping = std::map<std::string, POSTag::Class>;
PosMapping default_pos_mapping();
PosMapping load_pos_mapping(const std::string& path);

// Tagged-list TSV: header `#unit=count` or `#unit=per_million`, then
// `<lemma>\t<pos>\t<frequency>` lines. Duplicate (lemma, mapped pos) pairs
// are rejected with both line numbers.
TaggedLemmaList parse_tagged_list(std::istream& in, const PosMapping& mapping,
                                  const std::string& origin = "<stream>");
TaggedLemmaList parse_tagged_list_file(const std::string& path, const PosMapping& mapping);

// Filters to one POS and re-ranks by descending frequency (ties broken
// lexicographically by lemma). Throws DataError on an empty stratum.
RankedDistribution stratify(const TaggedLemmaList& list, const POSTag& pos);

struct StratumFit {
    std::string pos;
    bool sufficient = false;
    ScalingFit fit;        // valid only when sufficient
    std::size_t v_pos = 0; // stratum vocabulary size
};

struct StrataReport {
    std::vector<StratumFit> strata;  // noun/verb/adjective/adverb, sorted by R² desc
    StratumFit combined;             // fit of the whole list
    RankWindow window;
};

// One fit per canonical class plus the combined list, over `window` clipped
// per stratum to [r_min, min(r_max, V_pos)]. Strata with fewer than 10
// in-window points are marked insufficient rather than failing the report.
StrataReport strata_report(const TaggedLemmaList& list, RankWindow window);

// Default stratum fit window: published lemma lists are short.
inline RankWindow default_strata_window() { return {10, 1000}; }

} // namespace zipfstat
