"""Rendering evaluation records as text reports or JSON."""

from __future__ import annotations

import numpy as np

from .corpus import EvaluationRecord
from .scorer import NO_OPINION

_ORDINAL_WORDS = ("First", "Second", "Third", "Fourth", "Fifth",
                  "Sixth", "Seventh", "Eighth", "Ninth", "Tenth")
REPORT_FORMATS = ("text", "json")


def ordinal(n: int) -> str:
    """``1 -> 'First'`` ... ``10 -> 'Tenth'``, then ``'11th'``, ``'21st'``, ..."""
    if n < 1:
        raise ValueError("ordinals start at 1")
    if n <= len(_ORDINAL_WORDS):
        return _ORDINAL_WORDS[n - 1]
    if 10 <= n % 100 <= 20:
        suffix = "th"
    else:
        suffix = {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")
    return f"{n}{suffix}"


def format_value(value: float, float32: bool = False) -> str:
    # shortest repr that round-trips at the record's precision
    if float32:
        return np.format_float_positional(np.float32(value), unique=True, trim="0")
    return repr(float(value))


def render_text(record: EvaluationRecord) -> str:
    stanzas = []
    for i, r in enumerate(record.per_remark, 1):
        head = f"Opinion of the {ordinal(i)} Teacher about the student is"
        if r.value is None:
            stanzas.append(f"{head} not determined\n({NO_OPINION})")
        else:
            stanzas.append(f"{head} {r.bucket}\n(Opinion value :{format_value(r.value, record.float32)})")
    stanzas.append(f"The collaborated opinion about the student is {record.collaborated_bucket}\n"
                   f"(Opinion value :{format_value(record.collaborated_value, record.float32)})")
    return "\n\n".join(stanzas) + "\n"


def render_report(record: EvaluationRecord, format: str = "text") -> bytes:
    if format == "text":
        return render_text(record).encode("utf-8")
    if format == "json":
        return (record.to_json() + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {format!r}; expected one of {REPORT_FORMATS}")
