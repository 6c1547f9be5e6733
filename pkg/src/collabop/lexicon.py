"""Sentiment lexicon: loading, validation, lookup and serialization.

File format (UTF-8, one entry per line)::

    # comment
    good<TAB>7
    not<TAB>NEG

Blank lines and ``#`` comments are ignored. Terms are case-folded on load.
"""

from __future__ import annotations

import enum
import hashlib
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .errors import DuplicateTerm, EmptyLexicon, MalformedFile, ScoreOutOfRange

NEUTRAL_PIVOT = 5.0
MIN_SCORE = 0.0
MAX_SCORE = 10.0
NEGATION_MARK = "NEG"

_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def fold(word: str) -> str:
    """Case-normalize a word; curly apostrophes become ASCII ones."""
    return word.replace("’", "'").casefold()


def check_score(score: float, term: str | None = None) -> float:
    if not (MIN_SCORE <= score <= MAX_SCORE):  # also rejects NaN
        raise ScoreOutOfRange(score, term)
    return score


class Kind(enum.Enum):
    SENTIMENT = "sentiment"
    NEGATION = "negation"
    OTHER = "other"


@dataclass(frozen=True)
class Classification:
    """Result of a lexicon lookup. ``score`` is set only for sentiment terms."""

    kind: Kind
    score: float | None = None


NEGATION = Classification(Kind.NEGATION)
UNKNOWN = Classification(Kind.OTHER)


@dataclass(frozen=True)
class SentimentEntry:
    term: str
    score: float

    def __post_init__(self):
        if not self.term or self.term != fold(self.term) or any(c.isspace() for c in self.term):
            raise ValueError(f"term {self.term!r} is not a normalized single word")
        check_score(self.score, self.term)


@dataclass(frozen=True)
class Lexicon:
    """Immutable table of sentiment scores plus a set of negation words."""

    sentiment: Mapping[str, float]
    negation: frozenset[str]
    source_digest: str
    neutral_pivot: float = field(default=NEUTRAL_PIVOT)
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sentiment", MappingProxyType(dict(self.sentiment)))
        object.__setattr__(self, "negation", frozenset(self.negation))
        overlap = self.sentiment.keys() & self.negation
        if overlap:
            raise ValueError(f"terms in both sentiment and negation sets: {sorted(overlap)}")
        index = {t: Classification(Kind.SENTIMENT, s) for t, s in self.sentiment.items()}
        index.update((t, NEGATION) for t in self.negation)
        object.__setattr__(self, "_index", index)

    def lookup(self, token_text: str) -> Classification:
        return self._index.get(token_text, UNKNOWN)

    def entries(self) -> list[SentimentEntry]:
        return [SentimentEntry(t, s) for t, s in sorted(self.sentiment.items())]

    def __len__(self) -> int:
        return len(self.sentiment)


def lookup(lexicon: Lexicon, token_text: str) -> Classification:
    """Exact-match classification of an already normalized token."""
    return lexicon.lookup(token_text)


def _parse_term(raw: str, lineno: int) -> str:
    term = fold(raw.strip())
    if not term:
        raise MalformedFile("empty term", lineno, 1)
    if any(c.isspace() for c in term):
        raise MalformedFile(f"term {term!r} contains whitespace; only single words are allowed", lineno, 1)
    if not (term[0].isalnum() and term[-1].isalnum()):
        raise MalformedFile(f"term {term!r} has leading or trailing punctuation", lineno, 1)
    return term


def load_lexicon(data: bytes) -> Lexicon:
    """Parse and validate a lexicon document.

    The digest is the SHA-256 of ``data`` exactly as given, so two files that
    differ only in comments or spacing have different digests.
    """
    digest = hashlib.sha256(data).hexdigest()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        col = exc.start - (data.rfind(b"\n", 0, exc.start) + 1) + 1
        raise MalformedFile(f"invalid UTF-8 ({exc.reason})", line, col) from None
    text = text.removeprefix("﻿")

    sentiment: dict[str, float] = {}
    negation: set[str] = set()
    seen: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedFile(f"expected 'term<TAB>score' or 'term<TAB>{NEGATION_MARK}', "
                                f"found {len(parts)} tab-separated field(s)", lineno)
        term = _parse_term(parts[0], lineno)
        value = parts[1].strip()
        if term in seen:
            raise DuplicateTerm(term, lineno, seen[term])
        seen[term] = lineno
        if value == NEGATION_MARK:
            negation.add(term)
            continue
        if not _DECIMAL.fullmatch(value):
            raise MalformedFile(f"score {value!r} for term {term!r} is not a decimal number",
                                lineno, len(parts[0]) + 2)
        score = float(value)
        if not (MIN_SCORE <= score <= MAX_SCORE):
            raise ScoreOutOfRange(score, term, lineno)
        sentiment[term] = score

    if not sentiment:
        raise EmptyLexicon()
    return Lexicon(sentiment, frozenset(negation), digest)


def load_lexicon_file(path: str | Path) -> Lexicon:
    return load_lexicon(Path(path).read_bytes())


def dump_lexicon(lexicon: Lexicon) -> bytes:
    """Serialize to the canonical file form: sorted sentiment lines, then negations."""
    lines = [f"{term}\t{score!r}" for term, score in sorted(lexicon.sentiment.items())]
    lines += [f"{term}\t{NEGATION_MARK}" for term in sorted(lexicon.negation)]
    return ("\n".join(lines) + "\n").encode("utf-8")


def reference_lexicon_bytes() -> bytes:
    return resources.files("collabop.data").joinpath("reference.lex").read_bytes()


def reference_lexicon() -> Lexicon:
    """The bundled reference lexicon."""
    return load_lexicon(reference_lexicon_bytes())
