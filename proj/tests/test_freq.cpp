#include "zipfstat/freq.hpp"
#include "zipfstat/unicode.hpp"

#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

using namespace zipfstat;

namespace {

RankedDistribution ranked_of(const std::string& text) {
    return rank(count_tokens(tokenize(text, "t")));
}

RankedDistribution parse(const std::string& text, const std::string& origin = "<stream>") {
    std::istringstream in(text);
    return read_table(in, origin);
}

} // namespace

TEST_CASE("count_tokens tallies folded tokens under the source id") {
    const auto table = count_tokens(tokenize("the cat the dog THE", "sample"));
    CHECK(table.label == "sample");
    CHECK(table.total == 5);
    CHECK(table.vocabulary() == 3);
    CHECK(table.entries.at("the") == 3);
    CHECK(table.entries.at("cat") == 1);
    CHECK(table.entries.at("dog") == 1);
}

TEST_CASE("FrequencyTable::add keeps total in sync") {
    FrequencyTable t;
    t.add("a");
    t.add("a", 4);
    t.add("b", 2);
    CHECK(t.total == 7);
    CHECK(t.entries.at("a") == 5);
    CHECK(t.vocabulary() == 2);
}

TEST_CASE("merge sums counts and totals") {
    FrequencyTable a;
    a.add("x", 3);
    a.add("y", 1);
    FrequencyTable b;
    b.add("y", 2);
    b.add("z", 5);

    const auto m = merge({a, b}, "both");
    CHECK(m.label == "both");
    CHECK(m.total == 11);
    CHECK(m.entries.at("x") == 3);
    CHECK(m.entries.at("y") == 3);
    CHECK(m.entries.at("z") == 5);

    const auto flipped = merge({b, a}, "both");
    CHECK(flipped.entries == m.entries);
    CHECK(flipped.total == m.total);

    CHECK_THROWS_AS(merge({}, "none"), DataError);
}

TEST_CASE("rank orders by count then token bytes") {
    const auto dist = ranked_of("b a b c a d");
    REQUIRE(dist.points.size() == 4);
    CHECK(dist.total == 6);
    CHECK_FALSE(dist.normalized);
    // a and b tie at 2 -> lexicographic; c and d tie at 1
    CHECK(dist.points[0].token == "a");
    CHECK(dist.points[1].token == "b");
    CHECK(dist.points[2].token == "c");
    CHECK(dist.points[3].token == "d");
    for (std::size_t i = 0; i < dist.points.size(); ++i)
        CHECK(dist.points[i].rank == i + 1);

    CHECK_THROWS_AS(rank(FrequencyTable{}), DataError);
}

TEST_CASE("rank breaks UTF-8 ties by code point") {
    FrequencyTable t;
    t.add("z\xC3\xA9", 2);      // zé
    t.add("za", 2);
    t.add("\xC5\xBCy", 2);      // ży
    const auto dist = rank(t);
    CHECK(dist.points[0].token == "za");
    CHECK(dist.points[1].token == "z\xC3\xA9");
    CHECK(dist.points[2].token == "\xC5\xBCy");
}

TEST_CASE("normalize divides by the given total") {
    const auto dist = ranked_of("a a a b");
    const auto norm = normalize(dist, static_cast<double>(dist.total));
    CHECK(norm.normalized);
    CHECK(norm.total == dist.total);
    CHECK(norm.points[0].frequency == doctest::Approx(0.75));
    CHECK(norm.points[1].frequency == doctest::Approx(0.25));
    CHECK(dist.points[0].frequency == 3);  // input untouched

    CHECK_THROWS_AS(normalize(dist, 0), DataError);
    CHECK_THROWS_AS(normalize(dist, -5), DataError);
}

TEST_CASE("write_table emits the documented format") {
    auto dist = ranked_of("the cat the");
    dist.label = "tiny";
    CHECK(table_to_string(dist) == "#label=tiny\t#total=3\n1\tthe\t2\n2\tcat\t1\n");
    CHECK(table_to_string(dist, {"note one", " spaced"}) ==
          "#label=tiny\t#total=3\n#note one\n# spaced\n1\tthe\t2\n2\tcat\t1\n");
}

TEST_CASE("write_table refuses what the format cannot carry") {
    auto dist = ranked_of("a a b");
    CHECK_THROWS_AS(table_to_string(normalize(dist, 3.0)), DataError);

    auto fractional = dist;
    fractional.points[0].frequency = 2.5;
    CHECK_THROWS_AS(table_to_string(fractional), DataError);

    auto oversized = dist;
    oversized.points[0].frequency = 0x1p64;  // one past the last uint64 count
    CHECK_THROWS_AS(table_to_string(oversized), DataError);

    auto bad_label = dist;
    bad_label.label = "has\ttab";
    CHECK_THROWS_AS(table_to_string(bad_label), DataError);

    CHECK_THROWS_AS(table_to_string(dist, {"multi\nline"}), DataError);
}

TEST_CASE("read_table round-trips write_table") {
    auto dist = ranked_of("to be or not to be that is the question");
    dist.label = "hamlet";
    const auto text = table_to_string(dist, {"a comment line"});
    const auto back = parse(text);
    CHECK(back.label == dist.label);
    CHECK(back.total == dist.total);
    REQUIRE(back.points.size() == dist.points.size());
    for (std::size_t i = 0; i < dist.points.size(); ++i) {
        CHECK(back.points[i].rank == dist.points[i].rank);
        CHECK(back.points[i].token == dist.points[i].token);
        CHECK(back.points[i].frequency == dist.points[i].frequency);
    }
}

TEST_CASE("read_table validates every invariant") {
    const std::string good = "#label=x\t#total=3\n1\ta\t2\n2\tb\t1\n";
    CHECK(parse(good).total == 3);

    SUBCASE("header shape") {
        CHECK_THROWS_WITH(parse(""), "<stream>: empty file, expected frequency-table header");
        CHECK_THROWS_AS(parse("1\ta\t2\n"), DataError);
        CHECK_THROWS_AS(parse("#label=x #total=3\n1\ta\t3\n"), DataError);   // space, no tab
        CHECK_THROWS_AS(parse("#total=3\t#label=x\n1\ta\t3\n"), DataError);  // swapped
        CHECK_THROWS_AS(parse("#label=x\t#total=3b\n1\ta\t3\n"), DataError); // junk total
        CHECK_THROWS_AS(parse("#label=x\t#total=3\r\n1\ta\t3\r\n"), DataError); // CRLF
    }
    SUBCASE("row shape") {
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1 a 2\n"), DataError);   // spaces
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1\ta\n"), DataError);    // two fields
        CHECK_THROWS_AS(parse("#label=x\t#total=2\nr1\ta\t2\n"), DataError);
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1\ta\ttwo\n"), DataError);
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1\ta\t2.0\n"), DataError);
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1\t\t2\n"), DataError);  // empty token
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1\ta\t-2\n"), DataError);
    }
    SUBCASE("distribution invariants") {
        CHECK_THROWS_AS(parse("#label=x\t#total=3\n2\ta\t2\n3\tb\t1\n"), DataError); // starts at 2
        CHECK_THROWS_AS(parse("#label=x\t#total=3\n1\ta\t2\n3\tb\t1\n"), DataError); // gap
        CHECK_THROWS_AS(parse("#label=x\t#total=3\n1\ta\t1\n2\tb\t2\n"), DataError); // increasing
        CHECK_THROWS_AS(parse("#label=x\t#total=4\n1\tb\t2\n2\ta\t2\n"), DataError); // tie order
        CHECK_THROWS_AS(parse("#label=x\t#total=4\n1\ta\t2\n2\ta\t2\n"), DataError); // dup token
        CHECK_THROWS_AS(parse("#label=x\t#total=9\n1\ta\t2\n2\tb\t1\n"), DataError); // bad sum
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1\ta\t2\n2\tb\t0\n"), DataError); // zero count
        CHECK_THROWS_AS(parse("#label=x\t#total=0\n"), DataError);                   // no rows
        CHECK_THROWS_AS(parse("#label=x\t#total=2\n1\t\xC0\x80\t2\n"), DataError);   // bad UTF-8
    }
    SUBCASE("errors cite origin and line") {
        CHECK_THROWS_WITH(parse("#label=x\t#total=3\n1\ta\t2\n3\tb\t1\n", "f.tsv"),
                          "f.tsv:3: rank 3 breaks the contiguous 1..V order");
    }
}

TEST_CASE("read_table skips comments and blank lines") {
    const auto dist =
        parse("#label=x\t#total=5\n# a comment\n1\tc\t3\n\n2\td\t2\n#trailing\n");
    CHECK(dist.points.size() == 2);
    CHECK(dist.total == 5);
}

TEST_CASE("read_table_file reports unopenable paths") {
    CHECK_THROWS_AS(read_table_file("/nonexistent/nope.tsv"), DataError);
}

TEST_CASE("to_table rebuilds the counting view") {
    const auto dist = ranked_of("a a a b b c");
    const auto table = to_table(dist);
    CHECK(table.total == 6);
    CHECK(table.entries.at("a") == 3);
    CHECK(table.entries.at("b") == 2);
    CHECK(table.entries.at("c") == 1);
    CHECK(table.label == dist.label);

    CHECK_THROWS_AS(to_table(normalize(dist, 6.0)), DataError);
}
