#!/usr/bin/env python3
"""Regenerate src/langsteer/data/script_ranges.json.

Walks every assigned Unicode scalar, keeps the letter-category ones whose
character name identifies it as Latin, Cyrillic, Arabic, or Han, and
compresses the result into codepoint ranges. Gaps inside a range are allowed
only where the skipped scalars are not letters, so the table is exact for
every letter in this Unicode version while staying compact.
"""

import json
import sys
import unicodedata
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "langsteer" / "data" / "script_ranges.json"

NAME_PREFIXES = [
    ("CJK UNIFIED IDEOGRAPH", "Han"),
    ("CJK COMPATIBILITY IDEOGRAPH", "Han"),
    ("ARABIC", "Arabic"),
    ("CYRILLIC", "Cyrillic"),
    ("LATIN", "Latin"),
]

LETTER_CATEGORIES = {"Lu", "Ll", "Lt", "Lm", "Lo"}


def script_of(cp):
    ch = chr(cp)
    if unicodedata.category(ch) not in LETTER_CATEGORIES:
        return None
    name = unicodedata.name(ch, "")
    for prefix, script in NAME_PREFIXES:
        if name.startswith(prefix):
            return script
    return None


def is_letter(cp):
    return unicodedata.category(chr(cp)) in LETTER_CATEGORIES


def main():
    assigned = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        script = script_of(cp)
        if script is not None:
            assigned.append((cp, script))

    ranges = []
    start, end, script = assigned[0][0], assigned[0][0], assigned[0][1]
    for cp, s in assigned[1:]:
        gap_has_letter = any(is_letter(g) for g in range(end + 1, cp))
        if s == script and not gap_has_letter:
            end = cp
        else:
            ranges.append([start, end, script])
            start, end, script = cp, cp, s
    ranges.append([start, end, script])

    payload = {
        "unicode_version": unicodedata.unidata_version,
        "ranges": ranges,
    }
    OUT.write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    counts = {}
    for _, _, s in ranges:
        counts[s] = counts.get(s, 0) + 1
    print(f"wrote {OUT} ({len(ranges)} ranges, per script: {counts})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
