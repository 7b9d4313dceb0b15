"""Pure logits transforms for decoding-time language control.

All transforms take and return float64 vectors of vocabulary length and never
mutate their input, so a single partition can serve any number of concurrent
decoding loops. The step-aware callables produced by the factory functions
share one signature, (logits, step) -> logits, which is what the decoding
loop and chain() compose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DimensionError, ExhaustedVocabularyError
from .vocab import VocabPartition

LogitsTransform = Callable[[np.ndarray, int], np.ndarray]

MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"


@dataclass(frozen=True)
class ScdConfig:
    """Soft-constraint parameters.

    Multiplicative mode scales target logits by alpha (> 1) and distractor
    logits by beta (in (0, 1)); this is sign-sensitive, so an additive mode
    (uniform +bonus / -penalty) is available for score scales where likely
    tokens are not positive, e.g. log-probabilities. Nothing is applied
    before t_start generated tokens.
    """

    alpha: float = 1.1
    beta: float = 0.9
    t_start: int = 5
    mode: str = MULTIPLICATIVE
    additive_bonus: float = 2.0
    additive_penalty: float = 4.0

    def __post_init__(self):
        if not self.alpha > 1.0:
            raise ValueError("alpha must be > 1.0")
        if not 0.0 < self.beta < 1.0:
            raise ValueError("beta must be in (0, 1)")
        if self.t_start < 0:
            raise ValueError("t_start must be >= 0")
        if self.mode not in (MULTIPLICATIVE, ADDITIVE):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == ADDITIVE and (self.additive_bonus < 0 or self.additive_penalty < 0):
            raise ValueError("additive bonus/penalty must be >= 0")

    @classmethod
    def from_dict(cls, payload: dict) -> "ScdConfig":
        known = {f: payload[f] for f in (
            "alpha", "beta", "t_start", "mode", "additive_bonus", "additive_penalty",
        ) if f in payload}
        return cls(**known)

    def to_dict(self) -> dict:
        d = {"alpha": self.alpha, "beta": self.beta, "t_start": self.t_start, "mode": self.mode}
        if self.mode == ADDITIVE:
            d["additive_bonus"] = self.additive_bonus
            d["additive_penalty"] = self.additive_penalty
        return d


#: Moderate default profile: gentle multiplicative boost/penalty, short warm-up.
DEFAULT_PROFILE = ScdConfig()

#: Profile for the bundled bigram mock LM, whose logits are log-probabilities
#: (all negative): multiplying negative scores inverts the boost/penalty
#: intent, so the demo uses the additive mode with strong offsets.
MOCK_DEMO = ScdConfig(mode=ADDITIVE, additive_bonus=4.0, additive_penalty=8.0, t_start=2)


def _check_length(logits: np.ndarray, partition: VocabPartition) -> np.ndarray:
    arr = np.asarray(logits, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] != partition.size:
        raise DimensionError(
            f"logits length {arr.shape} does not match vocabulary size {partition.size}"
        )
    return arr


def apply_scd(
    logits: np.ndarray,
    partition: VocabPartition,
    step: int,
    cfg: ScdConfig,
) -> np.ndarray:
    """Soft-constrained adjustment of one logits vector at generation step t.

    Identity (bit-exact copy) while step < cfg.t_start. Afterwards target
    entries are boosted, neutral entries untouched, distractor entries
    penalized, per the configured mode.
    """
    arr = _check_length(logits, partition)
    if step < cfg.t_start:
        return arr.copy()
    out = arr.copy()
    if cfg.mode == MULTIPLICATIVE:
        out[partition.target_mask] *= cfg.alpha
        out[partition.distractor_mask] *= cfg.beta
    else:
        out[partition.target_mask] += cfg.additive_bonus
        out[partition.distractor_mask] -= cfg.additive_penalty
    return out


def apply_vrd(logits: np.ndarray, partition: VocabPartition) -> np.ndarray:
    """Hard restriction: distractor entries to -inf, everything else kept.

    Neutral tokens stay producible so the decoder can still punctuate and
    terminate.
    """
    arr = _check_length(logits, partition)
    if not bool((~partition.distractor_mask).any()):
        raise ExhaustedVocabularyError("masking distractors would leave no producible token")
    out = arr.copy()
    out[partition.distractor_mask] = -np.inf
    return out


def scd_transform(partition: VocabPartition, cfg: ScdConfig) -> LogitsTransform:
    def transform(logits: np.ndarray, step: int) -> np.ndarray:
        return apply_scd(logits, partition, step, cfg)

    return transform


def vrd_transform(partition: VocabPartition) -> LogitsTransform:
    def transform(logits: np.ndarray, step: int) -> np.ndarray:
        return apply_vrd(logits, partition)

    return transform


def identity_transform() -> LogitsTransform:
    def transform(logits: np.ndarray, step: int) -> np.ndarray:
        return np.asarray(logits, dtype=np.float64).copy()

    return transform


def chain(transforms: Sequence[LogitsTransform]) -> LogitsTransform:
    """Compose transforms left to right; the empty chain is the identity."""
    steps = list(transforms)

    def transform(logits: np.ndarray, step: int) -> np.ndarray:
        out = np.asarray(logits, dtype=np.float64)
        if not steps:
            return out.copy()
        for fn in steps:
            out = fn(out, step)
        return out

    return transform


def softmax(logits: np.ndarray) -> np.ndarray:
    """Stable softmax; -inf entries get exactly zero probability."""
    arr = np.asarray(logits, dtype=np.float64)
    m = np.max(arr)
    if not np.isfinite(m):
        raise ValueError("softmax needs at least one finite logit")
    e = np.exp(arr - m)
    return e / e.sum()
