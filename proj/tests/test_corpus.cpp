#include "zipfstat/corpus.hpp"
#include "zipfstat/unicode.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace zipfstat;
using testutil::TempDir;
using testutil::spit;

namespace {

// all-letter spelling of i, so the tokenizer keeps each word distinct
std::string spelled(std::size_t i, const std::string& prefix) {
    std::string tail;
    for (int k = 0; k < 3; ++k) {
        tail.insert(tail.begin(), static_cast<char>('a' + i % 26));
        i /= 26;
    }
    return prefix + tail;
}

// n distinct single-occurrence tokens
std::string words(std::size_t n, const std::string& prefix = "w") {
    std::string text;
    for (std::size_t i = 0; i < n; ++i) text += spelled(i, prefix) + " ";
    return text;
}

RankedDistribution norm_of(const std::vector<double>& freqs) {
    RankedDistribution d;
    d.label = "syn";
    double total = 0;
    for (double f : freqs) total += f;
    for (std::size_t i = 0; i < freqs.size(); ++i)
        d.points.push_back({i + 1, "t" + std::to_string(i), freqs[i] / total});
    d.normalized = true;
    return d;
}

} // namespace

TEST_CASE("parse_manifest reads directives and paths") {
    TempDir tmp("manifest");
    spit(tmp.file("a.txt"), "alpha beta");
    spit(tmp.file("b.txt"), "gamma");
    spit(tmp.file("corpus.manifest"),
         "#label=demo\n"
         "#target=1000\n"
         "#trim=truncate_last_document\n"
         "\n"
         "a.txt\n"
         "b.txt\n");

    const auto spec = parse_manifest(tmp.file("corpus.manifest"));
    CHECK(spec.label == "demo");
    REQUIRE(spec.target_size.has_value());
    CHECK(*spec.target_size == 1000);
    CHECK(spec.trim == TrimPolicy::truncate_last_document);
    REQUIRE(spec.documents.size() == 2);
    CHECK(spec.documents[0] == tmp.file("a.txt"));  // relative to the manifest
    CHECK(spec.documents[1] == tmp.file("b.txt"));
}

TEST_CASE("parse_manifest defaults") {
    TempDir tmp("manifest_def");
    spit(tmp.file("docs.manifest"), "a.txt\n");
    const auto spec = parse_manifest(tmp.file("docs.manifest"));
    CHECK(spec.label == "docs");  // falls back to the manifest stem
    CHECK_FALSE(spec.target_size.has_value());
    CHECK(spec.trim == TrimPolicy::none);

    // absolute paths stay absolute
    spit(tmp.file("abs.manifest"), "/somewhere/else.txt\n");
    CHECK(parse_manifest(tmp.file("abs.manifest")).documents[0] ==
          std::filesystem::path("/somewhere/else.txt"));
}

TEST_CASE("parse_manifest rejects broken input") {
    TempDir tmp("manifest_bad");
    auto throws_on = [&](const std::string& content) {
        spit(tmp.file("m.manifest"), content);
        CHECK_THROWS_AS(parse_manifest(tmp.file("m.manifest")), DataError);
    };
    throws_on("#label=x\n");                      // no documents
    throws_on("#speed=11\na.txt\n");              // unknown directive
    throws_on("#nodirective\na.txt\n");           // no '='
    throws_on("#target=abc\na.txt\n");            // junk target
    throws_on("#target=0\na.txt\n");              // zero target
    throws_on("#target=12x\na.txt\n");            // trailing junk
    throws_on("#trim=middle\na.txt\n");           // unknown policy
    CHECK_THROWS_AS(parse_manifest(tmp.file("missing.manifest")), DataError);
}

TEST_CASE("assemble concatenates documents in listed order") {
    TempDir tmp("assemble");
    spit(tmp.file("one.txt"), "a a b");
    spit(tmp.file("two.txt"), "b c");
    CorpusSpec spec;
    spec.label = "joined";
    spec.documents = {tmp.file("one.txt"), tmp.file("two.txt")};

    const auto table = assemble(spec);
    CHECK(table.label == "joined");
    CHECK(table.total == 5);
    CHECK(table.entries.at("a") == 2);
    CHECK(table.entries.at("b") == 2);
    CHECK(table.entries.at("c") == 1);
}

TEST_CASE("assemble truncate_last_document hits the target exactly") {
    TempDir tmp("truncate");
    spit(tmp.file("one.txt"), words(40));
    spit(tmp.file("two.txt"), words(40, "x"));
    CorpusSpec spec;
    spec.label = "cut";
    spec.documents = {tmp.file("one.txt"), tmp.file("two.txt")};
    spec.target_size = 55;
    spec.trim = TrimPolicy::truncate_last_document;

    const auto table = assemble(spec);
    CHECK(table.total == 55);
    // order matters: all of doc one, then the first 15 tokens of doc two
    CHECK(table.entries.count(spelled(39, "w")) == 1);
    CHECK(table.entries.count(spelled(14, "x")) == 1);
    CHECK(table.entries.count(spelled(15, "x")) == 0);

    // cut exactly at a document boundary
    spec.target_size = 40;
    CHECK(assemble(spec).total == 40);

    // not enough material -> size mismatch naming the achieved count
    spec.target_size = 100;
    CHECK_THROWS_WITH_AS(assemble(spec),
                         "assemble: size mismatch for 'cut': achieved 80 tokens, target 100",
                         DataError);
}

TEST_CASE("assemble trim=none enforces the 2% tolerance") {
    TempDir tmp("tol");
    spit(tmp.file("doc.txt"), words(100));
    CorpusSpec spec;
    spec.label = "tol";
    spec.documents = {tmp.file("doc.txt")};

    spec.target_size = 100;
    CHECK(assemble(spec).total == 100);
    spec.target_size = 99;   // 1.01% off
    CHECK(assemble(spec).total == 100);
    spec.target_size = 102;  // 1.96% off
    CHECK(assemble(spec).total == 100);
    spec.target_size = 90;   // 11% off
    CHECK_THROWS_AS(assemble(spec), DataError);
    spec.target_size = 103;  // 2.9% off
    CHECK_THROWS_AS(assemble(spec), DataError);
}

TEST_CASE("assemble error paths") {
    TempDir tmp("asm_err");
    CorpusSpec spec;
    spec.label = "e";
    CHECK_THROWS_AS(assemble(spec), DataError);  // no documents

    spec.documents = {tmp.file("missing.txt")};
    CHECK_THROWS_AS(assemble(spec), DataError);  // unreadable document

    spit(tmp.file("punct.txt"), "123 ... !!");
    spec.documents = {tmp.file("punct.txt")};
    CHECK_THROWS_AS(assemble(spec), DataError);  // tokenizes to nothing
}

TEST_CASE("compare finds no divergence between near-identical shapes") {
    std::vector<double> fa, fb;
    for (std::size_t r = 1; r <= 2000; ++r) {
        fa.push_back(std::pow(static_cast<double>(r), -1.0));
        fb.push_back(std::pow(static_cast<double>(r), -1.0) * 1.05);
    }
    const auto rep = compare(norm_of(fa), norm_of(fb));
    CHECK_FALSE(rep.divergence_rank.has_value());
    CHECK(rep.direction == Divergence::none);
    CHECK(rep.threshold == 0.1);
    CHECK(rep.sustain_length == 50);
}

TEST_CASE("compare reports the first sustained gap") {
    // identical up to rank 200, then b's tail decays faster; the mass b loses
    // in the tail is parked on b's rank 1 so both totals agree exactly and
    // normalization cannot shift the per-rank gaps
    std::vector<double> fa, fb;
    for (std::size_t r = 1; r <= 2000; ++r) {
        const double base = std::pow(static_cast<double>(r), -1.0);
        fa.push_back(base);
        fb.push_back(r <= 200 ? base : base * std::pow(200.0 / r, 1.5));
    }
    double sa = 0, sb = 0;
    for (std::size_t i = 0; i < fa.size(); ++i) sa += fa[i], sb += fb[i];
    fb[0] += sa - sb;

    const auto rep = compare(norm_of(fa), norm_of(fb), 0.1, 50);
    REQUIRE(rep.divergence_rank.has_value());
    CHECK(rep.direction == Divergence::b_decays_faster);
    // gap(r) = 1.5 log10(r/200), first above 0.1 at rank 234
    CHECK(*rep.divergence_rank == 234);

    const auto flipped = compare(norm_of(fb), norm_of(fa), 0.1, 50);
    CHECK(flipped.divergence_rank == rep.divergence_rank);
    CHECK(flipped.direction == Divergence::a_decays_faster);
}

TEST_CASE("compare requires the gap to be sustained") {
    // a 30-rank excursion must not count with sustain 50, must with sustain 20
    std::vector<double> fa, fb;
    for (std::size_t r = 1; r <= 500; ++r) {
        const double base = std::pow(static_cast<double>(r), -1.0);
        fa.push_back(base);
        fb.push_back(r >= 100 && r < 130 ? base / 4.0 : base);
    }
    double sa = 0, sb = 0;
    for (std::size_t i = 0; i < fa.size(); ++i) sa += fa[i], sb += fb[i];
    fb[0] += sa - sb;  // equal totals, so only ranks 100..129 carry a gap

    const auto strict = compare(norm_of(fa), norm_of(fb), 0.1, 50);
    CHECK_FALSE(strict.divergence_rank.has_value());

    const auto loose = compare(norm_of(fa), norm_of(fb), 0.1, 20);
    REQUIRE(loose.divergence_rank.has_value());
    CHECK(*loose.divergence_rank == 100);
    CHECK(loose.direction == Divergence::b_decays_faster);

    // an excursion the other way does not extend a positive run
    std::vector<double> fc = fa;
    for (std::size_t r = 100; r < 130; ++r) fc[r - 1] = fa[r - 1] * 4.0;
    const auto mixed = compare(norm_of(fc), norm_of(fb), 0.1, 35);
    CHECK_FALSE(mixed.divergence_rank.has_value());
}

TEST_CASE("compare scans only shared ranks") {
    std::vector<double> fa, fb;
    for (std::size_t r = 1; r <= 300; ++r) fa.push_back(std::pow(static_cast<double>(r), -1.0));
    for (std::size_t r = 1; r <= 120; ++r) fb.push_back(std::pow(static_cast<double>(r), -1.0));
    // beyond rank 120 there is nothing to compare, so no divergence can start there
    const auto rep = compare(norm_of(fa), norm_of(fb), 0.001, 200);
    CHECK_FALSE(rep.divergence_rank.has_value());
}

TEST_CASE("compare validates its inputs") {
    auto a = norm_of({3, 2, 1});
    auto raw = a;
    raw.normalized = false;
    CHECK_THROWS_AS(compare(raw, a), DataError);
    CHECK_THROWS_AS(compare(a, raw), DataError);
    CHECK_THROWS_AS(compare(a, a, 0.0, 50), DataError);
    CHECK_THROWS_AS(compare(a, a, -0.1, 50), DataError);
    CHECK_THROWS_AS(compare(a, a, 0.1, 0), DataError);
}

TEST_CASE("to_string names divergence directions") {
    CHECK(std::string(to_string(Divergence::none)) == "none");
    CHECK(std::string(to_string(Divergence::a_decays_faster)) == "a_decays_faster");
    CHECK(std::string(to_string(Divergence::b_decays_faster)) == "b_decays_faster");
}
