#include "zipfstat/monkey.hpp"
#include "zipfstat/unicode.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace zipfstat {

namespace {

void check_params(const MonkeyParams& p) {
    if (p.letters < 2) throw DataError("monkey model needs at least 2 letters");
    if (!(p.boundary_prob > 0) || !(p.boundary_prob < 1))
        throw DataError("monkey model needs 0 < boundary probability < 1");
}

// Fixed-width base-26 spelling so alphabets beyond 'z' still concatenate
// unambiguously: letter widths never vary within one run.
void append_letter(std::string& word, unsigned letter, unsigned width) {
    char buf[8];
    for (unsigned i = width; i-- > 0;) {
        buf[i] = static_cast<char>('a' + letter % 26);
        letter /= 26;
    }
    word.append(buf, width);
}

} // namespace

double monkey_alpha(unsigned letters, double boundary_prob) {
    check_params({letters, boundary_prob});
    return 1.0 - std::log1p(-boundary_prob) / std::log(static_cast<double>(letters));
}

FrequencyTable monkey_corpus(const MonkeyParams& params, std::uint64_t token_count) {
    check_params(params);
    if (token_count == 0) throw DataError("monkey corpus needs a positive token count");

    std::mt19937_64 rng(params.seed);
    const std::uint64_t m = params.letters;
    // rejection threshold for an unbiased draw in [0, m)
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / m * m;
    unsigned width = 1;
    for (std::uint64_t cap = 26; cap < m; cap *= 26) ++width;

    FrequencyTable table;
    table.label = "monkey(M=" + std::to_string(params.letters) +
                  ",q=" + std::to_string(params.boundary_prob) + ")";
    std::string word;
    while (table.total < token_count) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < params.boundary_prob) {
            if (!word.empty()) {
                table.add(word);
                word.clear();
            }
            continue;
        }
        std::uint64_t raw;
        do raw = rng(); while (raw >= limit);
        append_letter(word, static_cast<unsigned>(raw % m), width);
    }
    return table;
}

} // namespace zipfstat
