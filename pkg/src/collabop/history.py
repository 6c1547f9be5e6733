"""Append-only JSON-lines store of evaluation records.

One record per line. The store has a single writer; readers never modify it.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .corpus import EvaluationRecord
from .errors import CorruptStore


def append_history(store_path: str | Path, record: EvaluationRecord) -> None:
    path = Path(store_path)
    line = record.to_json().encode("utf-8") + b"\n"
    with open(path, "ab") as fh:
        # a previous writer may have died mid-line; never glue onto a torn record
        if fh.tell() > 0:
            with open(path, "rb") as rd:
                rd.seek(-1, os.SEEK_END)
                if rd.read(1) != b"\n":
                    raise CorruptStore(str(path), _line_count(path), "last record is truncated")
        fh.write(line)
        fh.flush()
        os.fsync(fh.fileno())


def _line_count(path: Path) -> int:
    return path.read_bytes().count(b"\n") + 1


def read_store(store_path: str | Path) -> list[EvaluationRecord]:
    """Every record in the store, in file order. A missing file is an empty store."""
    path = Path(store_path)
    if not path.exists():
        return []
    data = path.read_bytes()
    records = []
    lines = data.split(b"\n")
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        if lineno == len(lines):
            raise CorruptStore(str(path), lineno, "record is not newline-terminated (torn write)")
        try:
            records.append(EvaluationRecord.from_json(raw))
        except (ValueError, KeyError, TypeError) as exc:
            raise CorruptStore(str(path), lineno, f"unreadable record ({exc})") from None
    return records


def history(store_path: str | Path, student_id: str) -> list[EvaluationRecord]:
    """Records for one student, oldest first. Ties keep append order."""
    records = [r for r in read_store(store_path) if r.student_id == student_id]
    return sorted(records, key=lambda r: r.timestamp)
