"""Exception hierarchy shared by every collabop module."""

from __future__ import annotations


class OpinionError(Exception):
    """Base class for all errors raised by collabop."""


class LexiconError(OpinionError):
    """Problem with a lexicon file or its contents."""


class MalformedFile(LexiconError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class ScoreOutOfRange(LexiconError, ValueError):
    """A score fell outside the closed interval [0, 10]."""

    def __init__(self, score: float, term: str | None = None, line: int | None = None):
        self.score = score
        self.term = term
        self.line = line
        msg = f"score {score!r} outside [0, 10]"
        if term is not None:
            msg = f"term {term!r}: " + msg
        if line is not None:
            msg = f"line {line}: " + msg
        super().__init__(msg)


class DuplicateTerm(LexiconError):
    def __init__(self, term: str, line: int, first_line: int):
        self.term = term
        self.line = line
        self.first_line = first_line
        super().__init__(f"line {line}: term {term!r} already defined on line {first_line}")


class EmptyLexicon(LexiconError):
    def __init__(self) -> None:
        super().__init__("lexicon defines no sentiment terms")


class CorpusError(OpinionError):
    """Problem with a remark corpus document."""


class MalformedCorpus(CorpusError):
    def __init__(self, message: str, locus: str | None = None):
        self.locus = locus
        super().__init__(f"{locus}: {message}" if locus else message)


class MissingField(CorpusError):
    def __init__(self, field: str, locus: str | None = None):
        self.field = field
        self.locus = locus
        msg = f"missing field {field!r}"
        super().__init__(f"{locus}: {msg}" if locus else msg)


class AggregationError(OpinionError):
    """Collaboration over remark scores could not be performed."""


class NoContributions(AggregationError):
    def __init__(self, message: str = "no remark carries an opinion value"):
        super().__init__(message)


class UnknownHolder(AggregationError):
    def __init__(self, holder_id: str):
        self.holder_id = holder_id
        super().__init__(f"no weight given for opinion holder {holder_id!r}")


class CorruptStore(OpinionError):
    def __init__(self, path: str, line: int, reason: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}: line {line}: {reason}")
