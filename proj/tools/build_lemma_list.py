#!/usr/bin/env python3
"""Aggregate CoNLL-U treebanks into a tagged lemma frequency list.

Usage:
    build_lemma_list.py [-o OUT] [--min-count N] DIR_OR_FILE...

Walks the given paths for .conllu files, counts (lemma, tag) pairs over
all word tokens, and writes the `#unit=count` TSV the `strata` command
reads. UPOS tags for the four open classes come out as canonical
noun/verb/adjective/adverb; auxiliaries count as verbs (be/have/do and the
modals are verbs in classic tagged frequency lists); everything else
keeps its lowercased UPOS tag.

data/english_lemmas.tsv in this repository is the frozen output of this
script over the AMALGUM corpus and four Universal Dependencies English
treebanks (see data/NOTICE for sources).
"""
import argparse
import sys
from collections import Counter
from pathlib import Path

CANON = {
    "NOUN": "noun",
    "VERB": "verb",
    "AUX": "verb",
    "ADJ": "adjective",
    "ADV": "adverb",
}


def lemma_ok(lemma: str) -> bool:
    return bool(lemma) and all(c.isalpha() or c in "'-" for c in lemma)


def count_file(path: Path, counts: Counter) -> int:
    n = 0
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.rstrip("\n").split("\t")
            if len(cols) < 4:
                continue
            tok_id, lemma, upos = cols[0], cols[2], cols[3]
            if "-" in tok_id or "." in tok_id:  # ranges and empty nodes
                continue
            n += 1
            lemma = lemma.casefold()
            if not lemma_ok(lemma):
                continue
            counts[(lemma, CANON.get(upos, upos.lower()))] += 1
    return n


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("paths", nargs="+", type=Path)
    ap.add_argument("-o", "--output", type=Path)
    ap.add_argument("--min-count", type=int, default=None,
                    help="drop lemmas rarer than this (default: 8 per million "
                         "tokens, the floor classic published lists use)")
    args = ap.parse_args()

    counts = Counter()
    total = files = 0
    for root in args.paths:
        conllu = [root] if root.is_file() else sorted(root.rglob("*.conllu"))
        for path in conllu:
            total += count_file(path, counts)
            files += 1

    floor = args.min_count
    if floor is None:
        floor = max(1, round(total * 8 / 1_000_000))
    rows = [(lemma, tag, n) for (lemma, tag), n in counts.items() if n >= floor]
    rows.sort(key=lambda r: (-r[2], r[0], r[1]))

    out = args.output.open("w", encoding="utf-8") if args.output else sys.stdout
    print("#unit=count", file=out)
    print(f"# aggregated from {files} .conllu files, {total} word tokens", file=out)
    print(f"# lemmas case-folded; counts below {floor} dropped", file=out)
    for lemma, tag, n in rows:
        print(f"{lemma}\t{tag}\t{n}", file=out)
    if args.output:
        out.close()
    print(f"{len(rows)} rows from {total} tokens across {files} files", file=sys.stderr)


if __name__ == "__main__":
    main()
