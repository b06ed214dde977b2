#!/usr/bin/env python3
"""Regenerate include/zipfstat/unicode_tables.hpp from Python's unicodedata.

The tokenizer needs two pieces of Unicode knowledge: which code points are
letters (general category L*), and the full case-folding mapping.  Rather than
dragging in ICU for that, we bake both into a header.  Run this script with
the CPython you want to inherit tables from; the header records the Unicode
version it was built against.

Usage: python3 tools/gen_unicode_tables.py > include/zipfstat/unicode_tables.hpp
"""

import sys
import unicodedata

MAX_CP = 0x110000


def letter_ranges():
    ranges = []
    start = None
    for cp in range(MAX_CP):
        is_letter = unicodedata.category(chr(cp)).startswith("L")
        if is_letter and start is None:
            start = cp
        elif not is_letter and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def casefold_entries():
    """(cp, folded-code-point-sequence) for every cp whose casefold differs."""
    entries = []
    for cp in range(MAX_CP):
        c = chr(cp)
        f = c.casefold()
        if f != c:
            entries.append((cp, [ord(x) for x in f]))
    return entries


def main():
    out = sys.stdout
    ranges = letter_ranges()
    folds = casefold_entries()
    flat = []
    index = []  # (cp, offset, length)
    for cp, seq in folds:
        index.append((cp, len(flat), len(seq)))
        flat.extend(seq)

    w = out.write
    w("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.\n")
    w(f"// Unicode {unicodedata.unidata_version} data via CPython's unicodedata module.\n")
    w("#pragma once\n")
    w("#include <cstdint>\n")
    w("#include <cstddef>\n\n")
    w("namespace zipfstat::tables {\n\n")

    w(f"// {len(ranges)} inclusive [lo,hi] ranges covering general category L*.\n")
    w("struct CpRange { char32_t lo; char32_t hi; };\n")
    w(f"inline constexpr std::size_t kLetterRangeCount = {len(ranges)};\n")
    w("inline constexpr CpRange kLetterRanges[] = {\n")
    for i in range(0, len(ranges), 6):
        row = ranges[i:i + 6]
        w("    " + " ".join(f"{{0x{lo:X},0x{hi:X}}}," for lo, hi in row) + "\n")
    w("};\n\n")

    w(f"// Full case folding: {len(index)} code points fold to a sequence of 1..3\n")
    w("// code points stored consecutively in kFoldData.\n")
    w("struct FoldEntry { char32_t cp; std::uint32_t offset; std::uint32_t length; };\n")
    w(f"inline constexpr std::size_t kFoldEntryCount = {len(index)};\n")
    w("inline constexpr FoldEntry kFoldEntries[] = {\n")
    for i in range(0, len(index), 5):
        row = index[i:i + 5]
        w("    " + " ".join(f"{{0x{cp:X},{off},{ln}}}," for cp, off, ln in row) + "\n")
    w("};\n\n")

    w(f"inline constexpr std::size_t kFoldDataCount = {len(flat)};\n")
    w("inline constexpr char32_t kFoldData[] = {\n")
    for i in range(0, len(flat), 10):
        row = flat[i:i + 10]
        w("    " + " ".join(f"0x{v:X}," for v in row) + "\n")
    w("};\n\n")

    w("} // namespace zipfstat::tables\n")


if __name__ == "__main__":
    main()
