#pragma once

#include "zipfstat/tokenizer.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace zipfstat {

// Multiset of (token, count) for one text or corpus.
struct FrequencyTable {
    std::string label;
    std::unordered_map<std::string, std::uint64_t> entries;
    std::uint64_t total = 0;  // N, always the sum of counts

    std::size_t vocabulary() const { return entries.size(); }
    void add(const std::string& token, std::uint64_t count = 1);
};

// One row of a Zipf plot. `frequency` holds an exact integer count until
// normalization divides it by N.
struct RankPoint {
    std::size_t rank;  // 1-based, contiguous
    std::string token;
    double frequency;
};

struct RankedDistribution {
    std::string label;
    std::vector<RankPoint> points;  // descending frequency, ranks 1..V
    bool normalized = false;
    std::uint64_t total = 0;  // N of the underlying table
};

FrequencyTable count_tokens(const TokenStream& stream);

// Pointwise sum; commutative and associative, N adds up. Throws on empty list.
FrequencyTable merge(const std::vector<FrequencyTable>& tables, std::string label);

// Sorts by descending count, ties broken lexicographically by token bytes
// (equivalently by code point for UTF-8). Throws DataError on an empty table.
RankedDistribution rank(const FrequencyTable& table);

// Divides every frequency by `total` and flags the result as normalized.
RankedDistribution normalize(const RankedDistribution& dist, double total);

// --- frequency-table TSV ---------------------------------------------------
// Line 1:  #label=<label>\t#total=<N>
// Then one line per token:  <rank>\t<token>\t<count>
// Later lines starting with '#' are comments (the monkey generator records
// its analytic exponent that way). Readers re-validate the distribution
// invariants and reject files that break them.

void write_table(std::ostream& out, const RankedDistribution& dist,
                 const std::vector<std::string>& comments = {});
std::string table_to_string(const RankedDistribution& dist,
                            const std::vector<std::string>& comments = {});

RankedDistribution read_table(std::istream& in, const std::string& origin = "<stream>");
RankedDistribution read_table_file(const std::string& path);

// Rebuilds the unordered table from a ranked distribution (raw counts only).
FrequencyTable to_table(const RankedDistribution& dist);

} // namespace zipfstat
