#include "zipfstat/freq.hpp"
#include "zipfstat/unicode.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace zipfstat {

void FrequencyTable::add(const std::string& token, std::uint64_t count) {
    entries[token] += count;
    total += count;
}

FrequencyTable count_tokens(const TokenStream& stream) {
    FrequencyTable table;
    table.label = stream.source_id;
    for (const auto& tok : stream.tokens) table.add(tok);
    return table;
}

FrequencyTable merge(const std::vector<FrequencyTable>& tables, std::string label) {
    if (tables.empty()) throw DataError("merge: empty table list");
    FrequencyTable out;
    out.label = std::move(label);
    for (const auto& t : tables)
        for (const auto& [tok, cnt] : t.entries) out.add(tok, cnt);
    return out;
}

RankedDistribution rank(const FrequencyTable& table) {
    if (table.entries.empty()) throw DataError("rank: empty distribution");
    std::vector<std::pair<std::string, std::uint64_t>> pairs(table.entries.begin(),
                                                             table.entries.end());
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    RankedDistribution dist;
    dist.label = table.label;
    dist.total = table.total;
    dist.points.reserve(pairs.size());
    std::size_t r = 1;
    for (auto& [tok, cnt] : pairs)
        dist.points.push_back({r++, std::move(tok), static_cast<double>(cnt)});
    return dist;
}

RankedDistribution normalize(const RankedDistribution& dist, double total) {
    if (!(total > 0)) throw DataError("normalize: total must be positive");
    RankedDistribution out = dist;
    for (auto& p : out.points) p.frequency /= total;
    out.normalized = true;
    return out;
}

namespace {

void check_label(const std::string& label) {
    if (label.find('\t') != std::string::npos || label.find('\n') != std::string::npos)
        throw DataError("table label must not contain tabs or newlines");
}

std::uint64_t parse_u64(std::string_view s, const std::string& what, std::size_t line_no,
                        const std::string& origin) {
    std::uint64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw DataError(origin + ":" + std::to_string(line_no) + ": invalid " + what + " '" +
                        std::string(s) + "'");
    return v;
}

} // namespace

void write_table(std::ostream& out, const RankedDistribution& dist,
                 const std::vector<std::string>& comments) {
    if (dist.normalized)
        throw DataError("write_table: refusing to serialize a normalized distribution");
    check_label(dist.label);
    out << "#label=" << dist.label << "\t#total=" << dist.total << "\n";
    for (const auto& c : comments) {
        if (c.find('\n') != std::string::npos)
            throw DataError("table comment must not contain newlines");
        out << "#" << c << "\n";
    }
    for (const auto& p : dist.points) {
        if (p.frequency != std::floor(p.frequency))
            throw DataError("write_table: non-integer frequency for '" + p.token +
                            "'; the TSV format carries raw counts only");
        if (!(p.frequency >= 1) || p.frequency >= 0x1p64)
            throw DataError("write_table: count for '" + p.token +
                            "' is outside the uint64 range");
        out << p.rank << "\t" << p.token << "\t"
            << static_cast<std::uint64_t>(p.frequency) << "\n";
    }
}

std::string table_to_string(const RankedDistribution& dist,
                            const std::vector<std::string>& comments) {
    std::ostringstream ss;
    write_table(ss, dist, comments);
    return ss.str();
}

RankedDistribution read_table(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line))
        throw DataError(origin + ": empty file, expected frequency-table header");
    if (!line.empty() && line.back() == '\r')
        throw DataError(origin + ":1: CRLF line endings are not accepted");

    constexpr std::string_view kLabel = "#label=";
    const auto tab = line.find('\t');
    constexpr std::string_view kTotal = "#total=";
    if (line.rfind(kLabel, 0) != 0 || tab == std::string::npos ||
        line.compare(tab + 1, kTotal.size(), kTotal) != 0)
        throw DataError(origin + ":1: expected header '#label=<label>\\t#total=<N>'");

    RankedDistribution dist;
    dist.label = line.substr(kLabel.size(), tab - kLabel.size());
    dist.total = parse_u64(std::string_view(line).substr(tab + 1 + kTotal.size()),
                           "total", 1, origin);

    std::uint64_t sum = 0;
    double prev_count = 0;
    std::string prev_token;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') continue;  // trailing comment lines
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos)
            throw DataError(origin + ":" + std::to_string(line_no) +
                            ": expected '<rank>\\t<token>\\t<count>'");
        const auto rank_v = parse_u64(std::string_view(line).substr(0, t1), "rank",
                                      line_no, origin);
        std::string token = line.substr(t1 + 1, t2 - t1 - 1);
        const auto count = parse_u64(std::string_view(line).substr(t2 + 1), "count",
                                     line_no, origin);
        if (token.empty())
            throw DataError(origin + ":" + std::to_string(line_no) + ": empty token");
        decode_utf8(token);  // reject malformed UTF-8 early
        if (count == 0)
            throw DataError(origin + ":" + std::to_string(line_no) + ": zero count");
        if (rank_v != dist.points.size() + 1)
            throw DataError(origin + ":" + std::to_string(line_no) + ": rank " +
                            std::to_string(rank_v) + " breaks the contiguous 1..V order");
        if (!dist.points.empty()) {
            if (static_cast<double>(count) > prev_count)
                throw DataError(origin + ":" + std::to_string(line_no) +
                                ": counts must be non-increasing");
            if (static_cast<double>(count) == prev_count && token <= prev_token)
                throw DataError(origin + ":" + std::to_string(line_no) +
                                ": tied counts must be ordered lexicographically");
        }
        sum += count;
        prev_count = static_cast<double>(count);
        prev_token = token;
        dist.points.push_back({rank_v, std::move(token), static_cast<double>(count)});
    }
    if (dist.points.empty())
        throw DataError(origin + ": table has no entries");
    if (sum != dist.total)
        throw DataError(origin + ": header total " + std::to_string(dist.total) +
                        " does not match the sum of counts " + std::to_string(sum));
    return dist;
}

RankedDistribution read_table_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open table file: " + path);
    return read_table(in, path);
}

FrequencyTable to_table(const RankedDistribution& dist) {
    if (dist.normalized)
        throw DataError("to_table: normalized distribution has no integer counts");
    FrequencyTable table;
    table.label = dist.label;
    for (const auto& p : dist.points)
        table.add(p.token, static_cast<std::uint64_t>(p.frequency));
    return table;
}

} // namespace zipfstat
