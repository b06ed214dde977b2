#include "zipfstat/tokenizer.hpp"
#include "zipfstat/unicode.hpp"

namespace zipfstat {

namespace {

constexpr char32_t kApostrophe = U'\'';
constexpr char32_t kRightQuote = U'’';
constexpr char32_t kHyphen = U'-';

char32_t normalize_cp(char32_t cp) {
    return cp == kRightQuote ? kApostrophe : cp;
}

bool is_joiner(char32_t cp) {
    return cp == kApostrophe || cp == kHyphen;
}

} // namespace

TokenStream tokenize(std::string_view text, std::string source_id) {
    TokenStream stream;
    stream.source_id = std::move(source_id);

    std::u32string run;
    std::size_t run_offset = 0;  // byte offset where the current run started

    auto flush = [&] {
        if (run.empty()) return;
        std::u32string folded = casefold(run);
        if (folded.size() <= kMaxTokenLength) {
            stream.tokens.push_back(encode_utf8(folded));
        } else {
            stream.warnings.push_back({run_offset, folded.size()});
        }
        run.clear();
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const std::size_t at = i;
        const char32_t cp = normalize_cp(decode_next(text, i));
        if (is_letter(cp)) {
            if (run.empty()) run_offset = at;
            run.push_back(cp);
        } else if (is_joiner(cp) && !run.empty()) {
            // keep the joiner only when the next code point is a letter;
            // otherwise it terminates the run like any separator
            std::size_t peek = i;
            const bool letter_next =
                peek < text.size() && is_letter(normalize_cp(decode_next(text, peek)));
            if (letter_next) {
                run.push_back(cp);
            } else {
                flush();
            }
        } else {
            flush();
        }
    }
    flush();
    return stream;
}

} // namespace zipfstat
