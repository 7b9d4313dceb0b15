"""Unicode script classification for the four supported target languages.

Every scalar maps to exactly one script category. Letters are looked up in a
range table shipped with the package (data/script_ranges.json); letters of
scripts not owned by any supported language fall back to OtherLetter, and
everything that is not a letter (digits, punctuation, whitespace, symbols,
combining marks) is NonLetter.
"""

from __future__ import annotations

import json
import unicodedata
from bisect import bisect_right
from enum import Enum
from functools import lru_cache
from importlib import resources


class Script(str, Enum):
    LATIN = "Latin"
    HAN = "Han"
    ARABIC = "Arabic"
    CYRILLIC = "Cyrillic"
    OTHER_LETTER = "OtherLetter"
    NON_LETTER = "NonLetter"


class Language(str, Enum):
    EN = "EN"
    ZH = "ZH"
    AR = "AR"
    RU = "RU"

    @classmethod
    def parse(cls, value: str) -> "Language":
        return cls(value.strip().upper())


# Scripts owned by each language; pairwise disjoint.
SCRIPTS_OF: dict[Language, frozenset[Script]] = {
    Language.EN: frozenset({Script.LATIN}),
    Language.ZH: frozenset({Script.HAN}),
    Language.AR: frozenset({Script.ARABIC}),
    Language.RU: frozenset({Script.CYRILLIC}),
}

LANGUAGE_OF_SCRIPT: dict[Script, Language] = {
    script: lang for lang, scripts in SCRIPTS_OF.items() for script in scripts
}

_LETTER_CATEGORIES = frozenset({"Lu", "Ll", "Lt", "Lm", "Lo"})


def _data_text(name: str) -> str:
    return resources.files("langsteer.data").joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def _range_table() -> tuple[list[int], list[int], list[Script]]:
    payload = json.loads(_data_text("script_ranges.json"))
    starts, ends, scripts = [], [], []
    for start, end, name in payload["ranges"]:
        starts.append(start)
        ends.append(end)
        scripts.append(Script(name))
    return starts, ends, scripts


def is_letter(ch: str) -> bool:
    return unicodedata.category(ch) in _LETTER_CATEGORIES


def classify_scalar(ch: str) -> Script:
    """Classify a single Unicode scalar. Total: never raises."""
    if not is_letter(ch):
        return Script.NON_LETTER
    starts, ends, scripts = _range_table()
    i = bisect_right(starts, ord(ch)) - 1
    if i >= 0 and ord(ch) <= ends[i]:
        return scripts[i]
    return Script.OTHER_LETTER


def letter_scripts(text: str) -> list[Script]:
    """Script of every letter scalar in text, in order. Non-letters skipped."""
    return [classify_scalar(ch) for ch in text if is_letter(ch)]
