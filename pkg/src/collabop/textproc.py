"""Sentence splitting, tokenization and lexicon classification of remark text."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lexicon import Kind, Lexicon, fold

SENTENCE_TERMINATORS = ".!?;"
_SENTENCE_SPLIT = re.compile(r"[.!?;]")


@dataclass(frozen=True)
class Token:
    """One word of a remark.

    ``surface`` is the whitespace-delimited chunk as written; ``normalized``
    is the case-folded form with surrounding punctuation removed.
    """

    surface: str
    normalized: str
    sentence_index: int
    position: int
    kind: Kind
    score: float | None = None


def split_sentences(text: str) -> list[str]:
    """Split on ``. ! ? ;``; whitespace-only fragments are dropped.

    >>> split_sentences("Good. Not bad!")
    ['Good', 'Not bad']
    """
    return [s.strip() for s in _SENTENCE_SPLIT.split(text) if s.strip()]


def normalize_token(chunk: str) -> str:
    """Strip leading/trailing non-alphanumerics and case-fold; inner characters stay."""
    start, end = 0, len(chunk)
    while start < end and not chunk[start].isalnum():
        start += 1
    while end > start and not chunk[end - 1].isalnum():
        end -= 1
    return fold(chunk[start:end])


def tokenize(sentence: str, lexicon: Lexicon, sentence_index: int = 0) -> list[Token]:
    tokens = []
    for chunk in sentence.split():
        normalized = normalize_token(chunk)
        if not normalized:
            continue
        hit = lexicon.lookup(normalized)
        tokens.append(Token(chunk, normalized, sentence_index, len(tokens), hit.kind, hit.score))
    return tokens


def tokenize_text(text: str, lexicon: Lexicon) -> list[list[Token]]:
    """Tokens of every sentence of ``text``, one list per sentence."""
    return [tokenize(s, lexicon, i) for i, s in enumerate(split_sentences(text))]
