#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zipfstat {

// Raised for malformed input data (bad UTF-8, broken TSV, invalid manifests...).
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid UTF-8 with the byte offset of the offending sequence.
class Utf8Error : public DataError {
public:
    Utf8Error(std::size_t offset, const std::string& what)
        : DataError(what), byte_offset(offset) {}
    std::size_t byte_offset;
};

// Strict UTF-8 decoding: rejects overlong encodings, surrogates, values past
// U+10FFFF, and truncated sequences. Throws Utf8Error naming the byte offset.
std::u32string decode_utf8(std::string_view bytes);

// Decodes the code point starting at byte offset i (which must be < size)
// and advances i past it. Same strictness as decode_utf8.
char32_t decode_next(std::string_view bytes, std::size_t& i);

// Appends the UTF-8 encoding of cp to out. cp must be a valid scalar value.
void encode_utf8(char32_t cp, std::string& out);
std::string encode_utf8(std::u32string_view text);

// True iff cp has Unicode general category L* (letter).
bool is_letter(char32_t cp);

// Appends the full case folding of cp (one to three code points) to out.
void casefold_append(char32_t cp, std::u32string& out);
std::u32string casefold(std::u32string_view text);

} // namespace zipfstat
