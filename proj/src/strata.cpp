#include "zipfstat/strata.hpp"
#include "zipfstat/unicode.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_map>

namespace zipfstat {

std::string POSTag::name() const {
    switch (cls) {
        case noun: return "noun";
        case verb: return "verb";
        case adjective: return "adjective";
        case adverb: return "adverb";
        default: return "other(" + label + ")";
    }
}

PosMapping default_pos_mapping() {
    return {
        {"NoC", POSTag::noun},       {"Verb", POSTag::verb},
        {"Adj", POSTag::adjective},  {"Adv", POSTag::adverb},
        {"noun", POSTag::noun},      {"verb", POSTag::verb},
        {"adjective", POSTag::adjective}, {"adverb", POSTag::adverb},
    };
}

PosMapping load_pos_mapping(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open POS mapping file: " + path);
    PosMapping map;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": expected '<source_tag>\\t<canonical>'");
        const std::string src = line.substr(0, tab);
        const std::string dst = line.substr(tab + 1);
        POSTag::Class cls;
        if (dst == "noun") cls = POSTag::noun;
        else if (dst == "verb") cls = POSTag::verb;
        else if (dst == "adjective") cls = POSTag::adjective;
        else if (dst == "adverb") cls = POSTag::adverb;
        else
            throw DataError(path + ":" + std::to_string(line_no) + ": unknown canonical class '" +
                            dst + "' (want noun/verb/adjective/adverb)");
        map[src] = cls;
    }
    return map;
}

TaggedLemmaList parse_tagged_list(std::istream& in, const PosMapping& mapping,
                                  const std::string& origin) {
    std::string line;
    if (!std::getline(in, line))
        throw DataError(origin + ": empty file, expected '#unit=count' or '#unit=per_million'");
    if (!line.empty() && line.back() == '\r')
        throw DataError(origin + ":1: CRLF line endings are not accepted");

    TaggedLemmaList list;
    if (line == "#unit=count") list.unit = FreqUnit::count;
    else if (line == "#unit=per_million") list.unit = FreqUnit::per_million;
    else
        throw DataError(origin + ":1: expected '#unit=count' or '#unit=per_million', got '" +
                        line + "'");
    list.source_label = origin;

    // key: lemma \x1f mapped-pos-name, value: first line number seen
    std::unordered_map<std::string, std::size_t> seen;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        const std::string at = origin + ":" + std::to_string(line_no);
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
            throw DataError(at + ": expected '<lemma>\\t<pos>\\t<frequency>'");
        std::string lemma = line.substr(0, t1);
        const std::string tag = line.substr(t1 + 1, t2 - t1 - 1);
        const std::string freq_s = line.substr(t2 + 1);
        if (lemma.empty()) throw DataError(at + ": empty lemma");
        if (tag.empty()) throw DataError(at + ": empty POS tag");
        decode_utf8(lemma);

        double freq = 0;
        {
            const char* first = freq_s.data();
            const char* last = freq_s.data() + freq_s.size();
            auto [p, ec] = std::from_chars(first, last, freq);
            if (ec != std::errc() || p != last || !(freq >= 0) || !std::isfinite(freq))
                throw DataError(at + ": invalid frequency '" + freq_s + "'");
        }

        POSTag pos;
        if (const auto it = mapping.find(tag); it != mapping.end()) {
            pos = POSTag::of(it->second);
        } else {
            pos = POSTag::other_of(tag);
            ++list.unknown_tag_count;
        }

        const std::string key = lemma + '\x1f' + pos.name();
        if (const auto it = seen.find(key); it != seen.end())
            throw DataError(at + ": duplicate (" + lemma + ", " + pos.name() +
                            ") also on line " + std::to_string(it->second));
        seen.emplace(key, line_no);
        list.records.push_back({std::move(lemma), std::move(pos), freq});
    }
    return list;
}

TaggedLemmaList parse_tagged_list_file(const std::string& path, const PosMapping& mapping) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open tagged list: " + path);
    return parse_tagged_list(in, mapping, path);
}

namespace {

RankedDistribution rank_records(std::vector<const TaggedLemma*> recs, std::string label) {
    // zero-frequency records cannot appear in a ranked distribution
    recs.erase(std::remove_if(recs.begin(), recs.end(),
                              [](const TaggedLemma* r) { return !(r->frequency > 0); }),
               recs.end());
    std::sort(recs.begin(), recs.end(), [](const TaggedLemma* a, const TaggedLemma* b) {
        if (a->frequency != b->frequency) return a->frequency > b->frequency;
        if (a->lemma != b->lemma) return a->lemma < b->lemma;
        return a->pos < b->pos;
    });
    RankedDistribution dist;
    dist.label = std::move(label);
    dist.points.reserve(recs.size());
    std::size_t r = 1;
    for (const auto* rec : recs) dist.points.push_back({r++, rec->lemma, rec->frequency});
    return dist;
}

} // namespace

RankedDistribution stratify(const TaggedLemmaList& list, const POSTag& pos) {
    std::vector<const TaggedLemma*> recs;
    for (const auto& r : list.records) {
        const bool match = pos.cls == POSTag::other ? r.pos == pos : r.pos.cls == pos.cls;
        if (match) recs.push_back(&r);
    }
    if (recs.empty()) throw DataError("empty stratum: " + pos.name());
    auto dist = rank_records(std::move(recs), list.source_label + "/" + pos.name());
    if (dist.points.empty()) throw DataError("empty stratum: " + pos.name() +
                                             " (only zero frequencies)");
    return dist;
}

StrataReport strata_report(const TaggedLemmaList& list, RankWindow window) {
    if (list.records.empty()) throw DataError("strata report: empty list");
    StrataReport rep;
    rep.window = window;

    auto fit_one = [&](const RankedDistribution& dist, const std::string& name) {
        StratumFit sf;
        sf.pos = name;
        sf.v_pos = dist.points.size();
        RankWindow w{window.r_min, std::min(window.r_max, sf.v_pos)};
        if (w.r_min < w.r_max) {
            try {
                sf.fit = fit_power_law(dist, w);
                sf.sufficient = true;
            } catch (const DataError&) {
                sf.sufficient = false;
            }
        }
        return sf;
    };

    for (const auto cls : {POSTag::noun, POSTag::verb, POSTag::adjective, POSTag::adverb}) {
        const POSTag tag = POSTag::of(cls);
        StratumFit sf;
        try {
            sf = fit_one(stratify(list, tag), tag.name());
        } catch (const DataError&) {
            sf.pos = tag.name();  // empty stratum: report as insufficient
        }
        rep.strata.push_back(std::move(sf));
    }
    std::stable_sort(rep.strata.begin(), rep.strata.end(),
                     [](const StratumFit& a, const StratumFit& b) {
                         if (a.sufficient != b.sufficient) return a.sufficient;
                         if (!a.sufficient) return false;
                         return a.fit.r_squared > b.fit.r_squared;
                     });

    std::vector<const TaggedLemma*> all;
    all.reserve(list.records.size());
    for (const auto& r : list.records) all.push_back(&r);
    rep.combined = fit_one(rank_records(std::move(all), list.source_label + "/combined"),
                           "combined");
    return rep;
}

} // namespace zipfstat
