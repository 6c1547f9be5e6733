"""Remark corpora and per-student evaluation records.

JSON corpus::

    {"students": [{"id": "s1", "remarks": [{"teacher": "t1", "text": "..."}]}]}

A remark may carry ``"score"`` (a number in [0, 10]) instead of, or next to,
its text. The score is then used as given and the text is not scored.

CSV corpus: ``student_id,teacher_id,text`` rows, header optional.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Iterable, Mapping

from .aggregate import HolderWeight, OpinionBucket, classify, collaborate, weight_table
from .errors import MalformedCorpus, MissingField, NoContributions
from .lexicon import Lexicon, check_score
from .scorer import DEFAULT_NEGATION_WINDOW, RemarkScore, given_score, score_remark

CSV_HEADER = ["student_id", "teacher_id", "text"]
FORMATS = ("json", "csv")


@dataclass(frozen=True)
class Remark:
    student_id: str
    teacher_id: str
    text: str
    ordinal: int = 1
    score: float | None = None

    def __post_init__(self):
        if not self.student_id:
            raise MissingField("student_id")
        if not self.teacher_id:
            raise MissingField("teacher_id")
        if self.score is not None:
            check_score(self.score, self.teacher_id)


def _assign_ordinals(rows: Iterable[tuple[str, str, str, float | None]]) -> list[Remark]:
    grouped: dict[str, list[tuple[str, str, str, float | None]]] = {}
    for row in rows:
        grouped.setdefault(row[0], []).append(row)
    return [Remark(sid, tid, text, i, score)
            for group in grouped.values()
            for i, (sid, tid, text, score) in enumerate(group, 1)]


def _parse_csv(text: str) -> list[Remark]:
    rows = []
    reader = csv.reader(io.StringIO(text, newline=""), strict=True)
    try:
        for record in reader:
            locus = f"line {reader.line_num}"
            if not record or all(not f.strip() for f in record):
                continue
            if reader.line_num == 1 and record == CSV_HEADER:
                continue
            if len(record) < len(CSV_HEADER):
                raise MissingField(CSV_HEADER[len(record)], locus)
            if len(record) > len(CSV_HEADER):
                raise MalformedCorpus(f"expected 3 fields, found {len(record)}", locus)
            sid, tid, body = record
            if not sid.strip():
                raise MissingField("student_id", locus)
            if not tid.strip():
                raise MissingField("teacher_id", locus)
            rows.append((sid.strip(), tid.strip(), body, None))
    except csv.Error as exc:
        raise MalformedCorpus(str(exc), f"line {reader.line_num}") from None
    return _assign_ordinals(rows)


def _require(obj: dict, key: str, kind: type, locus: str):
    if not isinstance(obj, dict):
        raise MalformedCorpus("expected an object", locus)
    if key not in obj:
        raise MissingField(key, locus)
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise MalformedCorpus(f"field {key!r} must be {kind.__name__}", locus)
    return value


def _parse_json(text: str) -> list[Remark]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCorpus(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    rows = []
    for i, student in enumerate(_require(doc, "students", list, "document")):
        locus = f"students[{i}]"
        sid = _require(student, "id", str, locus)
        if not sid:
            raise MissingField("id", locus)
        for j, remark in enumerate(_require(student, "remarks", list, locus)):
            rlocus = f"{locus}.remarks[{j}]"
            tid = _require(remark, "teacher", str, rlocus)
            if not tid:
                raise MissingField("teacher", rlocus)
            score = remark.get("score")
            if score is None:
                body = _require(remark, "text", str, rlocus)
            else:
                body = remark.get("text", "")
                if not isinstance(score, (int, float)) or isinstance(score, bool) \
                        or not 0 <= score <= 10:
                    raise MalformedCorpus("field 'score' must be a number in [0, 10]", rlocus)
                if not isinstance(body, str):
                    raise MalformedCorpus("field 'text' must be str", rlocus)
                score = float(score)
            rows.append((sid, tid, body, score))
    return _assign_ordinals(rows)


def parse_corpus(data: bytes, format: str) -> list[Remark]:
    """Parse a corpus document into remarks grouped by student.

    Students appear in order of first occurrence; each student's remarks keep
    file order and are numbered from 1.
    """
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise MalformedCorpus(f"invalid UTF-8 ({exc.reason})", f"byte {exc.start}") from None
    fmt = format.lower()
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise ValueError(f"unknown corpus format {format!r}; expected one of {FORMATS}")


def group_by_student(remarks: Iterable[Remark]) -> dict[str, list[Remark]]:
    groups: dict[str, list[Remark]] = {}
    for r in remarks:
        groups.setdefault(r.student_id, []).append(r)
    return groups


@dataclass(frozen=True)
class RemarkOutcome:
    """One row of an evaluation: who said it, what it scored, how much it counts."""

    teacher_id: str
    value: float | None
    bucket: str | None
    weight: float = 1.0

    def to_dict(self) -> dict:
        return {"teacher": self.teacher_id, "value": self.value,
                "bucket": self.bucket, "weight": self.weight}

    @classmethod
    def from_dict(cls, d: Mapping) -> RemarkOutcome:
        return cls(d["teacher"], d["value"], d["bucket"], d.get("weight", 1.0))


@dataclass(frozen=True)
class EvaluationRecord:
    timestamp: datetime
    student_id: str
    lexicon_digest: str
    per_remark: tuple[RemarkOutcome, ...]
    collaborated_value: float
    collaborated_bucket: str
    float32: bool = field(default=False)

    def to_dict(self) -> dict:
        return {
            "timestamp": self.timestamp.isoformat(),
            "student_id": self.student_id,
            "lexicon_digest": self.lexicon_digest,
            "per_remark": [r.to_dict() for r in self.per_remark],
            "collaborated_value": self.collaborated_value,
            "collaborated_bucket": self.collaborated_bucket,
            "float32": self.float32,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> EvaluationRecord:
        """Rebuild a record, checking field types. Raises ``ValueError``/``KeyError``."""
        ts = datetime.fromisoformat(d["timestamp"])
        if ts.tzinfo is None:
            raise ValueError("timestamp lacks a UTC offset")
        per = tuple(RemarkOutcome.from_dict(r) for r in d["per_remark"])
        for r in per:
            if not isinstance(r.teacher_id, str):
                raise ValueError("teacher id must be a string")
            if r.value is not None:
                check_score(r.value)
                if r.bucket != classify(r.value).label:
                    raise ValueError(f"bucket {r.bucket!r} does not match value {r.value!r}")
        value = float(d["collaborated_value"])
        OpinionBucket.from_label(d["collaborated_bucket"])
        return cls(ts, str(d["student_id"]), str(d["lexicon_digest"]), per, value,
                   d["collaborated_bucket"], bool(d.get("float32", False)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | bytes) -> EvaluationRecord:
        return cls.from_dict(json.loads(text))

    def recollaborate(self):
        """Recompute the collaborated opinion from ``per_remark`` and the recorded weights."""
        scores = [RemarkScore.from_value(r.value, str(i)) if r.value is not None
                  else RemarkScore(None, (), str(i))
                  for i, r in enumerate(self.per_remark)]
        weights = {str(i): r.weight for i, r in enumerate(self.per_remark)}
        return collaborate(scores, weights, float32=self.float32)


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


def score_remarks(remarks: Iterable[Remark], lexicon: Lexicon, *,
                  negation_window: int = DEFAULT_NEGATION_WINDOW,
                  float32: bool = False) -> list[RemarkScore]:
    out = []
    for r in remarks:
        if r.score is not None:
            out.append(given_score(r.score, r.teacher_id, float32=float32))
        else:
            out.append(score_remark(r.text, lexicon, negation_window=negation_window,
                                    float32=float32, remark_ref=r.teacher_id))
    return out


def evaluate_student(remarks: list[Remark], lexicon: Lexicon,
                     weights: Iterable[HolderWeight] | Mapping[str, float] | None = None, *,
                     negation_window: int = DEFAULT_NEGATION_WINDOW, float32: bool = False,
                     clock: Callable[[], datetime] = utc_now) -> EvaluationRecord:
    """Score every remark about one student and collaborate the results.

    ``weights`` are keyed by teacher id. ``clock`` supplies the timestamp.
    """
    if not remarks:
        raise NoContributions("no remarks to evaluate")
    student_ids = {r.student_id for r in remarks}
    if len(student_ids) > 1:
        raise ValueError(f"remarks concern several students: {sorted(student_ids)}")
    scores = score_remarks(remarks, lexicon, negation_window=negation_window, float32=float32)
    opinion = collaborate(scores, weights, float32=float32)
    table = {} if weights is None else weight_table(weights)
    per_remark = tuple(
        RemarkOutcome(r.teacher_id, s.value,
                      None if s.value is None else classify(s.value).label,
                      table.get(r.teacher_id, 1.0))
        for r, s in zip(remarks, scores))
    ts = clock()
    if ts.tzinfo is None:
        raise ValueError("clock must return an aware datetime")
    return EvaluationRecord(ts.astimezone(timezone.utc), remarks[0].student_id, lexicon.source_digest,
                            per_remark, opinion.value, opinion.bucket.label, float32)


def load_weights(data: bytes) -> dict[str, float]:
    """Parse a weights file: a JSON object mapping teacher id to positive weight."""
    try:
        doc = json.loads(data.decode("utf-8-sig"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedCorpus(f"weights file is not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise MalformedCorpus("weights file must hold a JSON object")
    out = {}
    for k, v in doc.items():
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v) or v <= 0:
            raise MalformedCorpus(f"weight for {k!r} must be a positive number")
        out[k] = float(v)
    return out
