"""Language detection and consistency analysis over generation records.

Detection is script-based: among EN/ZH/AR/RU the writing system identifies
the language, so the dominant script over a text's letters decides it. A text
counts as a given language only when that script covers at least half of all
letters; otherwise (and for letterless text) the language is Unknown, which
is always inconsistent.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmptyInputError
from .unicode_scripts import LANGUAGE_OF_SCRIPT, Language, Script, classify_scalar, is_letter

UNKNOWN = "Unknown"

DOMINANCE_THRESHOLD = 0.5

# Argmax tie-break order: fixed so detection is deterministic.
_OWNED_SCRIPTS = (Script.LATIN, Script.HAN, Script.ARABIC, Script.CYRILLIC)

LENGTH_BINS = (
    ("<50", 0, 50),
    ("50-100", 50, 100),
    ("100-150", 100, 150),
    ("150-200", 150, 200),
    (">200", 200, None),
)


@dataclass(frozen=True)
class DetectedLanguage:
    language: str  # Language code or "Unknown"
    dominant_ratio: float
    letter_count: int

    def to_dict(self) -> dict:
        return {
            "language": self.language,
            "dominant_ratio": self.dominant_ratio,
            "letter_count": self.letter_count,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "DetectedLanguage":
        return cls(
            language=payload["language"],
            dominant_ratio=float(payload["dominant_ratio"]),
            letter_count=int(payload["letter_count"]),
        )


def detect_language(text: str) -> DetectedLanguage:
    """Dominant-script detection; total and deterministic."""
    counts = Counter()
    letters = 0
    for ch in text:
        if is_letter(ch):
            letters += 1
            counts[classify_scalar(ch)] += 1
    if letters == 0:
        return DetectedLanguage(UNKNOWN, 0.0, 0)
    best = max(_OWNED_SCRIPTS, key=lambda s: counts.get(s, 0))
    ratio = counts.get(best, 0) / letters
    if ratio < DOMINANCE_THRESHOLD:
        return DetectedLanguage(UNKNOWN, ratio, letters)
    return DetectedLanguage(LANGUAGE_OF_SCRIPT[best].value, ratio, letters)


def _detected_code(record) -> str:
    det = record.detected
    return det.language if det is not None else UNKNOWN


def language_consistency(records) -> float:
    """Share of records whose detected language equals their target."""
    records = list(records)
    if not records:
        raise EmptyInputError("no records to aggregate")
    hits = sum(1 for r in records if _detected_code(r) == r.target_language)
    return hits / len(records)


def fallback_matrix(records) -> dict[tuple[str, str], float]:
    """Per (target, context) cell: share of inconsistent outputs detected EN.

    Cells with no inconsistent records are absent from the result.
    """
    subsets: dict[tuple[str, str], list] = defaultdict(list)
    for r in records:
        if _detected_code(r) != r.target_language:
            subsets[(r.target_language, r.context_language)].append(r)
    return {
        cell: sum(1 for r in rs if _detected_code(r) == Language.EN.value) / len(rs)
        for cell, rs in subsets.items()
    }


def bin_of(token_count: int) -> str:
    for name, lo, hi in LENGTH_BINS:
        if token_count >= lo and (hi is None or token_count < hi):
            return name
    raise ValueError(f"negative token count {token_count}")


def approximate_token_count(text: str) -> int:
    """Whitespace tokens, except each Han character counts on its own."""
    n = 0
    in_run = False
    for ch in text:
        if ch.isspace():
            in_run = False
        elif classify_scalar(ch) == Script.HAN:
            n += 1
            in_run = False
        else:
            if not in_run:
                n += 1
            in_run = True
    return n


def record_token_count(record) -> int:
    if record.token_count is not None:
        return record.token_count
    return approximate_token_count(record.text)


@dataclass(frozen=True)
class LengthBinRow:
    bin: str
    n: int
    rouge: Optional[float]
    lc: Optional[float]
    sample_proportion: float


def length_bin_report(records) -> list[LengthBinRow]:
    """ROUGE, LC, and sample share per reasoning-length bin.

    Records without attached scores contribute to LC and proportions but not
    to the ROUGE mean.
    """
    records = list(records)
    if not records:
        raise EmptyInputError("no records to bin")
    total = len(records)
    grouped: dict[str, list] = {name: [] for name, _, _ in LENGTH_BINS}
    for r in records:
        grouped[bin_of(record_token_count(r))].append(r)
    rows = []
    for name, _, _ in LENGTH_BINS:
        rs = grouped[name]
        rouges = [r.scores.rouge_avg for r in rs if r.scores is not None]
        rows.append(
            LengthBinRow(
                bin=name,
                n=len(rs),
                rouge=sum(rouges) / len(rouges) if rouges else None,
                lc=language_consistency(rs) if rs else None,
                sample_proportion=len(rs) / total,
            )
        )
    return rows
