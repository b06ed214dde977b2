#pragma once

#include "zipfstat/freq.hpp"

#include <cstdint>

namespace zipfstat {

// Random-typing null model: at each keystroke the space bar is hit with
// probability q, otherwise one of M letters uniformly. Words between
// spaces make the tokens; empty words (two spaces in a row) are discarded.
struct MonkeyParams {
    unsigned letters = 26;        // M, at least 2
    double boundary_prob = 0.18;  // q, strictly between 0 and 1
    std::uint64_t seed = 1;
};

// Draws exactly `token_count` tokens and counts them. Deterministic for a
// given (params, token_count).
FrequencyTable monkey_corpus(const MonkeyParams& params, std::uint64_t token_count);

// Closed-form exponent of the model's rank-frequency law:
// alpha = 1 - ln(1 - q) / ln(M).
double monkey_alpha(unsigned letters, double boundary_prob);

} // namespace zipfstat
