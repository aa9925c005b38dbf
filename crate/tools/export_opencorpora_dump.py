#!/usr/bin/env python3
"""Export the OpenCorpora-derived pymorphy3 dictionary as a plain-text dump.

Output format (the OpenCorpora plain-text release layout):

    <lexeme id>
    FORM<TAB>POS,lexeme-grammemes form-grammemes
    ...
    <blank line>

Linked lexemes (infinitive, finite verb, participles, gerunds) arrive merged
into one block, so every verb block carries its INFN form.

Usage: python3 tools/export_opencorpora_dump.py OUT.txt
Requires: pip install pymorphy3 pymorphy3-dicts-ru
"""
import sys

import pymorphy3


def main(out_path):
    morph = pymorphy3.MorphAnalyzer()
    d = morph.dictionary
    seen = set()
    count = 0
    with open(out_path, "w", encoding="utf-8") as out:
        for word, (para_id, idx) in d.words.items():
            if idx != 0:
                continue
            info = d.build_paradigm_info(para_id)
            prefix, _, suffix = info[0]
            stem = word[len(prefix):len(word) - len(suffix)] if suffix else word[len(prefix):]
            key = (para_id, stem)
            if key in seen:
                continue
            seen.add(key)
            count += 1
            out.write(f"{count}\n")
            for pfx, tag, sfx in info:
                out.write(f"{(pfx + stem + sfx).upper()}\t{tag}\n")
            out.write("\n")
    print(f"{count} lexemes written to {out_path}", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1])
