#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zipfstat {

// A token that was dropped for exceeding the length cap.
struct TokenWarning {
    std::size_t byte_offset;  // where the over-long run started
    std::size_t codepoints;   // its length in code points
};

struct TokenStream {
    std::vector<std::string> tokens;  // case-folded, UTF-8
    std::string source_id;
    std::vector<TokenWarning> warnings;
};

// Maximum token length in code points; longer runs are dropped with a warning.
inline constexpr std::size_t kMaxTokenLength = 64;

// Splits text into word tokens: maximal runs of Unicode letters, where a
// single apostrophe (U+0027, or U+2019 normalized to it) or hyphen-minus is
// kept only when flanked by letters on both sides. Tokens are case-folded
// (full Unicode folding). Digits, punctuation, and whitespace separate
// tokens; there is no stemming and no lemmatization, so inflected forms stay
// distinct. Throws Utf8Error on malformed input.
TokenStream tokenize(std::string_view text, std::string source_id);

} // namespace zipfstat
