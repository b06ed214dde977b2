#include "zipfstat/monkey.hpp"
#include "zipfstat/fit.hpp"
#include "zipfstat/unicode.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace zipfstat;

namespace {

// width of one letter in the fixed-width spelling
unsigned letter_width(unsigned m) {
    unsigned width = 1;
    for (std::uint64_t cap = 26; cap < m; cap *= 26) ++width;
    return width;
}

bool within_3_sigma(double observed, double n, double p) {
    const double expected = n * p;
    const double sd = std::sqrt(n * p * (1.0 - p));
    return std::fabs(observed - expected) <= 3.0 * sd;
}

} // namespace

TEST_CASE("monkey_alpha matches the closed form") {
    const auto fixture = testutil::load_json(testutil::oracle_dir() / "monkey_expected.json");
    for (const auto& c : fixture.at("cases")) {
        const auto m = c.at("letters").get<unsigned>();
        const auto q = c.at("boundary_prob").get<double>();
        CAPTURE(m);
        CAPTURE(q);
        CHECK(std::fabs(monkey_alpha(m, q) - c.at("alpha_analytic").get<double>()) < 1e-12);
    }
    // the textbook landmark is exact, not merely close
    CHECK(monkey_alpha(2, 0.5) == 2.0);
}

TEST_CASE("monkey parameter validation") {
    CHECK_THROWS_AS(monkey_alpha(1, 0.5), DataError);
    CHECK_THROWS_AS(monkey_alpha(0, 0.5), DataError);
    CHECK_THROWS_AS(monkey_alpha(26, 0.0), DataError);
    CHECK_THROWS_AS(monkey_alpha(26, 1.0), DataError);
    CHECK_THROWS_AS(monkey_alpha(26, -0.2), DataError);
    CHECK_THROWS_AS(monkey_corpus({1, 0.5, 1}, 10), DataError);
    CHECK_THROWS_AS(monkey_corpus({26, 1.5, 1}, 10), DataError);
    CHECK_THROWS_AS(monkey_corpus({26, 0.18, 1}, 0), DataError);
}

TEST_CASE("monkey_corpus is deterministic in its seed") {
    const MonkeyParams p{26, 0.18, 42};
    const auto a = monkey_corpus(p, 20000);
    const auto b = monkey_corpus(p, 20000);
    CHECK(a.entries == b.entries);
    CHECK(a.total == b.total);
    CHECK(a.label == b.label);

    MonkeyParams other = p;
    other.seed = 43;
    CHECK(monkey_corpus(other, 20000).entries != a.entries);
}

TEST_CASE("monkey_corpus draws exactly the asked token count") {
    for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(7), std::uint64_t(5000)}) {
        CHECK(monkey_corpus({26, 0.18, 9}, n).total == n);
        CHECK(monkey_corpus({2, 0.5, 9}, n).total == n);
    }
    CHECK(monkey_corpus({30, 0.3, 9}, 1000).total == 1000);
}

TEST_CASE("monkey tokens come from the declared alphabet") {
    const auto table = monkey_corpus({5, 0.3, 7}, 50000);
    for (const auto& [word, count] : table.entries) {
        CHECK(count >= 1);
        CHECK_FALSE(word.empty());
        for (char ch : word) {
            CHECK(ch >= 'a');
            CHECK(ch <= 'e');
        }
    }
}

TEST_CASE("alphabets past 26 letters use fixed-width spelling") {
    CHECK(letter_width(26) == 1);
    CHECK(letter_width(27) == 2);
    CHECK(letter_width(676) == 2);
    CHECK(letter_width(677) == 3);

    const unsigned m = 30;
    const auto table = monkey_corpus({m, 0.35, 11}, 30000);
    bool saw_second_page = false;  // letters 26..29 spell as "ba".."bd"
    for (const auto& [word, count] : table.entries) {
        REQUIRE(word.size() % 2 == 0);
        for (std::size_t i = 0; i < word.size(); i += 2) {
            const unsigned hi = static_cast<unsigned>(word[i] - 'a');
            const unsigned lo = static_cast<unsigned>(word[i + 1] - 'a');
            const unsigned letter = hi * 26 + lo;
            CHECK(letter < m);
            if (letter >= 26) saw_second_page = true;
        }
    }
    CHECK(saw_second_page);
}

TEST_CASE("sampled word probabilities match the process law") {
    const auto fixture = testutil::load_json(testutil::oracle_dir() / "monkey_expected.json");
    const std::uint64_t n = 10'000'000;

    for (const auto spec : {std::pair<unsigned, double>{2, 0.5}, {4, 0.4}}) {
        const auto [m, q] = spec;
        CAPTURE(m);
        const auto table = monkey_corpus({m, q, 20260822}, n);
        const unsigned width = letter_width(m);

        // every specific length-L word has probability q/(1-q) * ((1-q)/M)^L
        for (const auto& c : fixture.at("word_probs")) {
            if (c.at("letters").get<unsigned>() != m) continue;
            const auto len = c.at("length").get<unsigned>();
            const double p = c.at("word_prob").get<double>();
            if (n * p < 500) continue;  // too rare for a tight band
            // spot-check two words per length: all-'a' and one mixed spelling
            const std::string all_a(len * width, 'a');
            std::string mixed = all_a;
            mixed[mixed.size() - 1] = 'b';
            for (const auto& word : {all_a, mixed}) {
                const auto it = table.entries.find(word);
                const double count = it == table.entries.end()
                                         ? 0.0
                                         : static_cast<double>(it->second);
                CAPTURE(word);
                CHECK(within_3_sigma(count, static_cast<double>(n), p));
            }
        }

        // token lengths are geometric: P(len = L) = q (1-q)^(L-1)
        std::map<std::size_t, double> by_length;
        for (const auto& [word, count] : table.entries)
            by_length[word.size() / width] += static_cast<double>(count);
        for (std::size_t len = 1; len <= 12; ++len) {
            const double p = q * std::pow(1.0 - q, static_cast<double>(len - 1));
            if (n * p < 500) break;
            CAPTURE(len);
            CHECK(within_3_sigma(by_length[len], static_cast<double>(n), p));
        }
    }
}

TEST_CASE("letters are exchangeable") {
    // single-letter tokens, conditioned on their total, are uniform over the
    // alphabet; Pearson's statistic against the 0.01 critical values
    {
        const unsigned m = 9;  // dof 8
        const auto table = monkey_corpus({m, 0.3, 301}, 1'000'000);
        double total = 0;
        std::vector<double> cells(m, 0.0);
        for (const auto& [word, count] : table.entries)
            if (word.size() == 1) {
                cells[static_cast<unsigned>(word[0] - 'a')] += static_cast<double>(count);
                total += static_cast<double>(count);
            }
        const double expected = total / m;
        double chi2 = 0;
        for (double c : cells) chi2 += (c - expected) * (c - expected) / expected;
        CHECK(chi2 < 20.090);  // chi-square 0.99 quantile, dof 8
    }
    {
        // first letters of every token are uniform as well (dof 25)
        const auto table = monkey_corpus({26, 0.18, 302}, 1'000'000);
        std::vector<double> cells(26, 0.0);
        for (const auto& [word, count] : table.entries)
            cells[static_cast<unsigned>(word[0] - 'a')] += static_cast<double>(count);
        const double expected = 1'000'000.0 / 26.0;
        double chi2 = 0;
        for (double c : cells) chi2 += (c - expected) * (c - expected) / expected;
        CHECK(chi2 < 44.314);  // chi-square 0.99 quantile, dof 25
    }
}

TEST_CASE("fitted exponent of a large sample approaches the closed form") {
    const auto table = monkey_corpus({26, 0.18, 1}, 1'000'000);
    CHECK(table.total == 1'000'000);
    const auto fit = fit_power_law(rank(table), {10, 1000});
    // the staircase flattens wide-window fits; [10, 1000] tracks the envelope
    CHECK(std::fabs(fit.alpha - monkey_alpha(26, 0.18)) < 0.1);
}
