"""Collaboration of remark scores into one opinion, and five-level classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ._numeric import weighted_mean
from .errors import NoContributions, ScoreOutOfRange, UnknownHolder
from .lexicon import MAX_SCORE, MIN_SCORE
from .scorer import RemarkScore

# Lower edges of Low, Moderate, High, VeryHigh. Each edge belongs to the higher bucket.
THRESHOLDS = (2.0, 4.5, 5.5, 8.0)


class OpinionBucket(enum.IntEnum):
    VERY_LOW = 0
    LOW = 1
    MODERATE = 2
    HIGH = 3
    VERY_HIGH = 4

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", " ")

    @classmethod
    def from_label(cls, label: str) -> OpinionBucket:
        try:
            return cls[label.strip().upper().replace(" ", "_")]
        except KeyError:
            raise ValueError(f"unknown opinion label {label!r}") from None

    def __str__(self) -> str:
        return self.label


def classify(value: float) -> OpinionBucket:
    """Map an opinion value in [0, 10] to its bucket.

    [0,2) very low, [2,4.5) low, [4.5,5.5) moderate, [5.5,8) high, [8,10] very high.
    """
    if not (MIN_SCORE <= value <= MAX_SCORE):
        raise ScoreOutOfRange(value)
    level = sum(value >= t for t in THRESHOLDS)
    return OpinionBucket(level)


@dataclass(frozen=True)
class HolderWeight:
    holder_id: str
    weight: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.weight) and self.weight > 0):
            raise ValueError(f"weight for {self.holder_id!r} must be a positive finite number")


@dataclass(frozen=True)
class Contribution:
    holder_id: str | None
    value: float
    weight: float


@dataclass(frozen=True)
class CollaboratedOpinion:
    value: float
    bucket: OpinionBucket
    contributions: tuple[Contribution, ...]
    skipped: tuple[str | None, ...] = ()


def weight_table(weights) -> dict[str, float]:
    """Normalize a weight mapping or a list of :class:`HolderWeight` into a dict."""
    if isinstance(weights, Mapping):
        return {k: HolderWeight(k, float(w)).weight for k, w in weights.items()}
    table: dict[str, float] = {}
    for hw in weights:
        if hw.holder_id in table:
            raise ValueError(f"duplicate weight for holder {hw.holder_id!r}")
        table[hw.holder_id] = hw.weight
    return table


def collaborate(scores: Sequence[RemarkScore],
                weights: Iterable[HolderWeight] | Mapping[str, float] | None = None,
                *, float32: bool = False) -> CollaboratedOpinion:
    """Weighted mean of the remark values that carry an opinion.

    Holders are identified by ``RemarkScore.remark_ref``. Without ``weights``
    every holder weighs 1, which gives the plain average. Remarks with no
    opinion are listed in ``skipped`` and do not count.
    """
    table = None if weights is None else weight_table(weights)
    contributions, skipped = [], []
    for s in scores:
        if s.value is None:
            skipped.append(s.remark_ref)
            continue
        if table is None:
            w = 1.0
        elif s.remark_ref in table:
            w = table[s.remark_ref]
        else:
            raise UnknownHolder(s.remark_ref)
        contributions.append(Contribution(s.remark_ref, s.value, w))
    if not contributions:
        raise NoContributions()
    value = weighted_mean([c.value for c in contributions],
                          [c.weight for c in contributions], float32=float32)
    return CollaboratedOpinion(value, classify(value), tuple(contributions), tuple(skipped))


def collaborate_values(values: Sequence[float], weights: Sequence[float] | None = None,
                       *, float32: bool = False) -> CollaboratedOpinion:
    """Convenience form of :func:`collaborate` for bare opinion values.

    Holders are named ``"1"``, ``"2"``, ... in input order.
    """
    scores = [RemarkScore.from_value(v, str(i)) for i, v in enumerate(values, 1)]
    table = None if weights is None else {str(i): w for i, w in enumerate(weights, 1)}
    return collaborate(scores, table, float32=float32)
