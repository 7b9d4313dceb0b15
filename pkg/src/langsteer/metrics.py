"""Averaged BLEU-1/2/3 and ROUGE-1/2/L with per-language tokenization.

Chinese is scored at character level (whitespace is meaningless there);
the other languages use Unicode word segmentation over letter/digit runs
with punctuation dropped and English lowercased. Both metrics are single
reference. BLEU-n here is the clipped modified n-gram precision times the
brevity penalty; orders >= 2 get add-one smoothing when no n-gram matches,
so short answers do not collapse to hard zeros.
"""

from __future__ import annotations

import math
import unicodedata
from collections import Counter
from dataclasses import dataclass

from .errors import EmptyReferenceError
from .unicode_scripts import Language, Script, classify_scalar


@dataclass(frozen=True)
class MetricScore:
    bleu_avg: float
    rouge_avg: float
    components: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "bleu_avg": self.bleu_avg,
            "rouge_avg": self.rouge_avg,
            "components": dict(self.components),
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "MetricScore":
        return cls(
            bleu_avg=float(payload["bleu_avg"]),
            rouge_avg=float(payload["rouge_avg"]),
            components={k: float(v) for k, v in payload["components"].items()},
        )


def _is_word_char(ch: str) -> bool:
    return unicodedata.category(ch)[0] in ("L", "N")


def tokenize_for_metric(text: str, language: Language) -> list[str]:
    """Metric tokens for one language.

    ZH: every non-space scalar is a token, except embedded letter/digit runs
    of other scripts, which stay whole. Others: letter/digit runs, punctuation
    dropped, lowercased for EN.
    """
    tokens: list[str] = []
    if language == Language.ZH:
        run = ""
        for ch in text:
            if ch.isspace():
                if run:
                    tokens.append(run)
                    run = ""
                continue
            if _is_word_char(ch) and classify_scalar(ch) != Script.HAN:
                run += ch
                continue
            if run:
                tokens.append(run)
                run = ""
            tokens.append(ch)
        if run:
            tokens.append(run)
        return tokens
    run = ""
    for ch in text:
        if _is_word_char(ch):
            run += ch
        elif run:
            tokens.append(run)
            run = ""
    if run:
        tokens.append(run)
    if language == Language.EN:
        tokens = [t.lower() for t in tokens]
    return tokens


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _clipped_matches(cand: Counter, ref: Counter) -> int:
    return sum(min(c, ref[g]) for g, c in cand.items())


def bleu_components(candidate: list[str], reference: list[str]) -> tuple[float, float, float]:
    """BLEU-1/2/3 over token lists: clipped precision x brevity penalty."""
    if not reference:
        raise EmptyReferenceError("reference tokenized to nothing")
    if not candidate:
        return (0.0, 0.0, 0.0)
    if len(candidate) < len(reference):
        bp = math.exp(1.0 - len(reference) / len(candidate))
    else:
        bp = 1.0
    out = []
    for n in (1, 2, 3):
        cand_ngrams = _ngrams(candidate, n)
        total = sum(cand_ngrams.values())
        if total == 0:
            # candidate shorter than n: nothing was generated at this order
            out.append(0.0)
            continue
        matches = _clipped_matches(cand_ngrams, _ngrams(reference, n))
        if matches == 0 and n >= 2:
            precision = 1.0 / (total + 1.0)
        else:
            precision = matches / total
        out.append(bp * precision)
    return tuple(out)


def _f1(matches: float, cand_total: int, ref_total: int) -> float:
    if cand_total == 0 or ref_total == 0 or matches == 0:
        return 0.0
    p = matches / cand_total
    r = matches / ref_total
    return 2.0 * p * r / (p + r)


def _lcs_length(a: list[str], b: list[str]) -> int:
    # single-row DP over the shorter sequence
    if len(b) > len(a):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_components(candidate: list[str], reference: list[str]) -> tuple[float, float, float]:
    """ROUGE-1/2 F1 over clipped n-gram overlap and ROUGE-L F1 from the LCS."""
    if not reference:
        raise EmptyReferenceError("reference tokenized to nothing")
    if not candidate:
        return (0.0, 0.0, 0.0)
    out = []
    for n in (1, 2):
        cand_ngrams = _ngrams(candidate, n)
        ref_ngrams = _ngrams(reference, n)
        out.append(
            _f1(
                _clipped_matches(cand_ngrams, ref_ngrams),
                sum(cand_ngrams.values()),
                sum(ref_ngrams.values()),
            )
        )
    out.append(_f1(_lcs_length(candidate, reference), len(candidate), len(reference)))
    return tuple(out)


def score_pair(candidate: str, reference: str, language: Language) -> MetricScore:
    """Full metric bundle for one candidate/reference pair."""
    cand = tokenize_for_metric(candidate, language)
    ref = tokenize_for_metric(reference, language)
    b1, b2, b3 = bleu_components(cand, ref)
    r1, r2, rl = rouge_components(cand, ref)
    return MetricScore(
        bleu_avg=(b1 + b2 + b3) / 3.0,
        rouge_avg=(r1 + r2 + rl) / 3.0,
        components={
            "bleu_1": b1,
            "bleu_2": b2,
            "bleu_3": b3,
            "rouge_1": r1,
            "rouge_2": r2,
            "rouge_l": rl,
        },
    )
