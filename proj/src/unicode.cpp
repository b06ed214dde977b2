#include "zipfstat/unicode.hpp"
#include "zipfstat/unicode_tables.hpp"

#include <algorithm>

namespace zipfstat {

char32_t decode_next(std::string_view bytes, std::size_t& i) {
    const std::size_t n = bytes.size();
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    char32_t cp;
    char32_t min_cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2; cp = b0 & 0x1F; min_cp = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3; cp = b0 & 0x0F; min_cp = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4; cp = b0 & 0x07; min_cp = 0x10000;
    } else {
        throw Utf8Error(i, "invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > n)
        throw Utf8Error(i, "truncated UTF-8 sequence at offset " + std::to_string(i));
    for (int k = 1; k < len; ++k) {
        const auto bk = static_cast<unsigned char>(bytes[i + k]);
        if ((bk & 0xC0) != 0x80)
            throw Utf8Error(i, "invalid UTF-8 continuation byte at offset " + std::to_string(i));
        cp = (cp << 6) | (bk & 0x3F);
    }
    if (cp < min_cp)
        throw Utf8Error(i, "overlong UTF-8 encoding at offset " + std::to_string(i));
    if (cp >= 0xD800 && cp <= 0xDFFF)
        throw Utf8Error(i, "UTF-8 encoded surrogate at offset " + std::to_string(i));
    if (cp > 0x10FFFF)
        throw Utf8Error(i, "code point past U+10FFFF at offset " + std::to_string(i));
    i += len;
    return cp;
}

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) out.push_back(decode_next(bytes, i));
    return out;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) encode_utf8(cp, out);
    return out;
}

bool is_letter(char32_t cp) {
    const auto* begin = tables::kLetterRanges;
    const auto* end = begin + tables::kLetterRangeCount;
    // first range with hi >= cp, then check its lo
    const auto* it = std::lower_bound(begin, end, cp,
        [](const tables::CpRange& r, char32_t v) { return r.hi < v; });
    return it != end && it->lo <= cp;
}

void casefold_append(char32_t cp, std::u32string& out) {
    const auto* begin = tables::kFoldEntries;
    const auto* end = begin + tables::kFoldEntryCount;
    const auto* it = std::lower_bound(begin, end, cp,
        [](const tables::FoldEntry& e, char32_t v) { return e.cp < v; });
    if (it == end || it->cp != cp) {
        out.push_back(cp);
        return;
    }
    for (std::uint32_t k = 0; k < it->length; ++k)
        out.push_back(tables::kFoldData[it->offset + k]);
}

std::u32string casefold(std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size());
    for (char32_t cp : text) casefold_append(cp, out);
    return out;
}

} // namespace zipfstat
