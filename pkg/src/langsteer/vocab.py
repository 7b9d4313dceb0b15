"""Vocabulary partitioning: assign every token id to Target/Neutral/Distractor.

The partition is computed once per (vocabulary, target language) and cached by
callers; decoding-time transforms only read its category masks. Byte-level
vocabularies are demapped to raw bytes first; tokens that are not complete
valid UTF-8 stay Neutral so that multibyte scripts are never penalized through
their continuation bytes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import IntEnum
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .errors import FormatError, SchemaError
from .unicode_scripts import (
    SCRIPTS_OF,
    Language,
    Script,
    _data_text,
    classify_scalar,
    is_letter,
)


class TokenCategory(IntEnum):
    # Values double as the on-disk encoding in partition files.
    TARGET = 0
    NEUTRAL = 1
    DISTRACTOR = 2


#: Sentinel returned by demap_byte_level for incomplete/invalid UTF-8.
PARTIAL_UTF8 = object()

# Word-boundary glyphs some tokenizers prepend/append; they are orthographic
# markers, not language evidence. Ġ in particular is a Latin letter and would
# otherwise poison non-Latin tokens.
_LEADING_MARKERS = "▁Ġ "
_TRAILING_MARKER = "</w>"

_SPECIAL_SHAPE = re.compile(r"^(<[^<>]+>|\[[^\[\]]+\])$")


@dataclass(frozen=True)
class VocabEntry:
    id: int
    surface: str
    is_special: bool = False


@dataclass(frozen=True)
class PartitionOptions:
    byte_level: bool = False


@lru_cache(maxsize=1)
def _char_to_byte() -> dict[str, int]:
    table = json.loads(_data_text("byte_level_map.json"))["byte_to_char"]
    return {ch: b for b, ch in enumerate(table)}


@lru_cache(maxsize=1)
def byte_to_char_table() -> list[str]:
    return list(json.loads(_data_text("byte_level_map.json"))["byte_to_char"])


def demap_byte_level(raw: str):
    """Invert the byte->printable-char mapping of a byte-level surface.

    Returns the decoded text when the byte sequence is complete valid UTF-8,
    otherwise the PARTIAL_UTF8 marker. Raises FormatError when a character is
    not part of the mapping alphabet.
    """
    table = _char_to_byte()
    try:
        data = bytes(table[ch] for ch in raw)
    except KeyError as exc:
        raise FormatError(f"character {exc.args[0]!r} is not in the byte-level alphabet") from None
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        return PARTIAL_UTF8


def _strip_markers(surface: str) -> str:
    surface = surface.lstrip(_LEADING_MARKERS)
    if surface.endswith(_TRAILING_MARKER):
        surface = surface[: -len(_TRAILING_MARKER)]
    return surface


def classify_token(entry: VocabEntry, target: Language, options: PartitionOptions = PartitionOptions()) -> TokenCategory:
    """Category of one vocabulary entry for the given target language.

    Neutral: special tokens, partial/invalid byte sequences, and surfaces with
    no letters. Target: every letter belongs to the target's script. Any
    non-target letter anywhere (including mixed-script surfaces) makes the
    token a Distractor.
    """
    if entry.is_special:
        return TokenCategory.NEUTRAL
    surface = entry.surface
    if options.byte_level:
        surface = demap_byte_level(surface)
        if surface is PARTIAL_UTF8:
            return TokenCategory.NEUTRAL
    surface = _strip_markers(surface)
    owned = SCRIPTS_OF[target]
    saw_letter = False
    for ch in surface:
        if not is_letter(ch):
            continue
        saw_letter = True
        if classify_scalar(ch) not in owned:
            return TokenCategory.DISTRACTOR
    return TokenCategory.TARGET if saw_letter else TokenCategory.NEUTRAL


@dataclass(frozen=True)
class VocabPartition:
    """Immutable total map token id -> category for one target language."""

    target_language: Language
    categories: np.ndarray  # uint8, len == vocabulary size
    target_mask: np.ndarray = field(init=False)
    neutral_mask: np.ndarray = field(init=False)
    distractor_mask: np.ndarray = field(init=False)

    def __post_init__(self):
        cats = np.ascontiguousarray(self.categories, dtype=np.uint8)
        cats.setflags(write=False)
        object.__setattr__(self, "categories", cats)
        for name, value in (
            ("target_mask", TokenCategory.TARGET),
            ("neutral_mask", TokenCategory.NEUTRAL),
            ("distractor_mask", TokenCategory.DISTRACTOR),
        ):
            mask = cats == value
            mask.setflags(write=False)
            object.__setattr__(self, name, mask)

    @property
    def size(self) -> int:
        return int(self.categories.shape[0])

    def category_of(self, token_id: int) -> TokenCategory:
        return TokenCategory(int(self.categories[token_id]))

    @property
    def counts(self) -> dict[str, int]:
        return {
            "target": int(self.target_mask.sum()),
            "neutral": int(self.neutral_mask.sum()),
            "distractor": int(self.distractor_mask.sum()),
        }

    def to_dict(self) -> dict:
        return {
            "target_language": self.target_language.value,
            "size": self.size,
            "categories": [int(c) for c in self.categories],
            "counts": self.counts,
        }

    def save(self, path) -> None:
        Path(path).write_text(
            json.dumps(self.to_dict(), separators=(",", ":")) + "\n", encoding="utf-8"
        )

    @classmethod
    def from_dict(cls, payload: dict) -> "VocabPartition":
        cats = np.asarray(payload["categories"], dtype=np.uint8)
        if len(cats) != payload.get("size", len(cats)):
            raise SchemaError("partition size field disagrees with categories length")
        return cls(Language.parse(payload["target_language"]), cats)

    @classmethod
    def load(cls, path) -> "VocabPartition":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def partition_vocabulary(
    vocab: Iterable[VocabEntry],
    target: Language,
    options: PartitionOptions = PartitionOptions(),
) -> VocabPartition:
    """Classify every token; ids must form a dense [0, size) range."""
    entries = list(vocab)
    if not entries:
        raise SchemaError("vocabulary is empty")
    seen = {}
    problems = []
    for e in entries:
        if e.id in seen:
            problems.append(f"duplicate id {e.id}")
        seen[e.id] = e
    for i in range(len(entries)):
        if i not in seen:
            problems.append(f"missing id {i}")
    for e in entries:
        if e.id < 0 or e.id >= len(entries):
            problems.append(f"id {e.id} outside [0, {len(entries)})")
    if problems:
        raise SchemaError("vocabulary ids must form [0, size)", violations=problems)

    cats = np.empty(len(entries), dtype=np.uint8)
    for i in range(len(entries)):
        cats[i] = classify_token(seen[i], target, options)
    return VocabPartition(target, cats)


def load_vocabulary(path, force_byte_level: Optional[bool] = None, infer_special_by_shape: bool = True):
    """Read a vocabulary JSON file.

    Returns (entries, options). The file schema is
    {"byte_level": bool, "special_tokens": [str], "tokens": [{"id", "surface"}]}.
    Without a special_tokens list, surfaces shaped like <...> or [...] are
    treated as special unless infer_special_by_shape is off.
    """
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if "tokens" not in payload:
        raise SchemaError("vocabulary file lacks a 'tokens' field")
    byte_level = bool(payload.get("byte_level", False))
    if force_byte_level is not None:
        byte_level = byte_level or force_byte_level
    specials = set(payload.get("special_tokens", []))
    has_list = "special_tokens" in payload
    entries = []
    problems = []
    for i, tok in enumerate(payload["tokens"]):
        if not isinstance(tok, dict) or "id" not in tok or "surface" not in tok:
            problems.append(f"token entry {i} lacks id/surface")
            continue
        surface = tok["surface"]
        if has_list:
            special = surface in specials
        elif infer_special_by_shape:
            special = bool(_SPECIAL_SHAPE.match(surface))
        else:
            special = False
        entries.append(VocabEntry(id=int(tok["id"]), surface=surface, is_special=special))
    if problems:
        raise SchemaError("malformed vocabulary entries", violations=problems)
    return entries, PartitionOptions(byte_level=byte_level)
