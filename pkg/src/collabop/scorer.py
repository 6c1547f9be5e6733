"""Per-remark opinion scoring with negation adjustment.

Each sentiment word contributes its lexicon score. A negation word arms a
pending negation that applies to the next sentiment word if it appears
within ``negation_window`` tokens in the same sentence. A negated score
above the neutral pivot drops by 2, one below it rises by 2, and the pivot
itself is left alone. The remark's value is the flat mean of the adjusted
scores of every matched word occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._numeric import to_float32, weighted_mean
from .lexicon import MAX_SCORE, MIN_SCORE, NEUTRAL_PIVOT, Kind, Lexicon, check_score
from .textproc import Token, tokenize_text

NEGATION_SHIFT = 2.0
DEFAULT_NEGATION_WINDOW = 3
NO_OPINION = "no opinion detected"


def adjust_for_negation(raw_score: float, negated: bool, pivot: float = NEUTRAL_PIVOT) -> float:
    raw_score = float(check_score(raw_score))
    if not negated or raw_score == pivot:
        return raw_score
    shifted = raw_score - NEGATION_SHIFT if raw_score > pivot else raw_score + NEGATION_SHIFT
    return min(MAX_SCORE, max(MIN_SCORE, shifted))


@dataclass(frozen=True)
class MatchedWord:
    token: Token
    raw_score: float
    negated: bool
    adjusted_score: float


@dataclass(frozen=True)
class RemarkScore:
    """Opinion value of one remark, or ``value=None`` when nothing matched.

    ``matches`` is the evidence trail. A score built with :meth:`given`
    carries a value supplied from outside (for example a score recorded by
    an earlier system) and has no evidence trail.
    """

    value: float | None
    matches: tuple[MatchedWord, ...] = ()
    remark_ref: str | None = None
    given: bool = field(default=False)

    @classmethod
    def from_value(cls, value: float, remark_ref: str | None = None) -> RemarkScore:
        return cls(check_score(float(value)), (), remark_ref, given=True)

    @property
    def has_opinion(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return NO_OPINION if self.value is None else repr(self.value)


def match_words(text: str, lexicon: Lexicon,
                negation_window: int = DEFAULT_NEGATION_WINDOW) -> list[MatchedWord]:
    """Scan ``text`` in document order and return every sentiment match."""
    if negation_window < 1:
        raise ValueError("negation_window must be at least 1")
    matches = []
    for sentence in tokenize_text(text, lexicon):
        pending = 0  # tokens left in which an armed negation still applies
        for tok in sentence:
            if tok.kind is Kind.NEGATION:
                pending = negation_window
            elif tok.kind is Kind.SENTIMENT:
                negated = pending > 0
                pending = 0
                adjusted = adjust_for_negation(tok.score, negated, lexicon.neutral_pivot)
                matches.append(MatchedWord(tok, tok.score, negated, adjusted))
            elif pending:
                pending -= 1
    return matches


def score_remark(text: str, lexicon: Lexicon, *, negation_window: int = DEFAULT_NEGATION_WINDOW,
                 float32: bool = False, remark_ref: str | None = None) -> RemarkScore:
    matches = match_words(text, lexicon, negation_window)
    if not matches:
        return RemarkScore(None, (), remark_ref)
    value = weighted_mean([m.adjusted_score for m in matches], float32=float32)
    return RemarkScore(value, tuple(matches), remark_ref)


def given_score(value: float, remark_ref: str | None = None, float32: bool = False) -> RemarkScore:
    """Wrap an externally supplied opinion value as a :class:`RemarkScore`."""
    if float32:
        value = to_float32(check_score(float(value)))
    return RemarkScore.from_value(value, remark_ref)

