"""Command-line front end.

Exit codes: 0 success, 2 lexicon error, 3 input error (remark text, corpus,
weights or history store), 4 nothing to collaborate, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .aggregate import classify
from .corpus import evaluate_student, group_by_student, load_weights, parse_corpus
from .errors import CorpusError, CorruptStore, LexiconError, NoContributions, UnknownHolder
from .history import append_history, history
from .lexicon import load_lexicon
from .report import format_value, render_report
from .scorer import DEFAULT_NEGATION_WINDOW, NO_OPINION, score_remark

EXIT_OK = 0
EXIT_LEXICON = 2
EXIT_INPUT = 3
EXIT_NO_CONTRIBUTIONS = 4
EXIT_USAGE = 64

LEXICON_ENV = "OPINION_LEXICON"


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _read(path: str, code: int, what: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {what} {path}: {exc.strerror or exc}", code) from None


def _lexicon(args):
    path = args.lexicon or os.environ.get(LEXICON_ENV)
    if not path:
        raise CliError(f"no lexicon given; pass --lexicon or set {LEXICON_ENV}", EXIT_LEXICON)
    try:
        return load_lexicon(_read(path, EXIT_LEXICON, "lexicon"))
    except LexiconError as exc:
        raise CliError(f"{path}: {exc}", EXIT_LEXICON) from None


def _add_scoring_options(p):
    p.add_argument("--lexicon", help=f"lexicon file (default: ${LEXICON_ENV})")
    p.add_argument("--negation-window", type=_positive_int, default=DEFAULT_NEGATION_WINDOW,
                   help="tokens after a negation word in which it still applies (default: 3)")
    p.add_argument("--float32-compat", action="store_true",
                   help="round every arithmetic step to single precision")
    p.add_argument("--format", choices=("text", "json"), default="text")


def cmd_score(args, out) -> int:
    lexicon = _lexicon(args)
    if args.file is not None:
        raw = _read(args.file, EXIT_INPUT, "remark file")
        try:
            text = raw.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise CliError(f"{args.file}: invalid UTF-8 ({exc.reason})", EXIT_INPUT) from None
    else:
        text = args.text
    result = score_remark(text, lexicon, negation_window=args.negation_window,
                          float32=args.float32_compat)
    label = None if result.value is None else classify(result.value).label
    if args.format == "json":
        doc = {
            "value": result.value,
            "bucket": label,
            "matches": [{"word": m.token.normalized, "sentence": m.token.sentence_index,
                         "position": m.token.position, "raw_score": m.raw_score,
                         "negated": m.negated, "adjusted_score": m.adjusted_score}
                        for m in result.matches],
        }
        out.write(json.dumps(doc) + "\n")
    elif result.value is None:
        out.write(NO_OPINION + "\n")
    else:
        out.write(f"{format_value(result.value, args.float32_compat)}\t{label}\n")
    return EXIT_OK


def cmd_collaborate(args, out) -> int:
    lexicon = _lexicon(args)
    fmt = args.corpus_format or ("csv" if args.corpus.lower().endswith(".csv") else "json")
    try:
        remarks = parse_corpus(_read(args.corpus, EXIT_INPUT, "corpus"), fmt)
        weights = None if args.weights is None else load_weights(_read(args.weights, EXIT_INPUT, "weights"))
    except CorpusError as exc:
        raise CliError(f"{exc}", EXIT_INPUT) from None
    groups = group_by_student(remarks)
    if args.student is not None:
        if args.student not in groups:
            raise CliError(f"student {args.student!r} has no remarks in {args.corpus}",
                           EXIT_NO_CONTRIBUTIONS)
        groups = {args.student: groups[args.student]}

    code = EXIT_OK
    chunks = []
    for student_id, group in groups.items():
        try:
            record = evaluate_student(group, lexicon, weights, negation_window=args.negation_window,
                                      float32=args.float32_compat)
        except NoContributions:
            print(f"student {student_id!r}: no remark carries an opinion", file=sys.stderr)
            code = EXIT_NO_CONTRIBUTIONS
            continue
        except UnknownHolder as exc:
            raise CliError(f"student {student_id!r}: {exc}", EXIT_INPUT) from None
        if args.store is not None:
            try:
                append_history(args.store, record)
            except (CorruptStore, OSError) as exc:
                raise CliError(f"cannot append to store: {exc}", EXIT_INPUT) from None
        chunks.append(render_report(record, args.format).decode("utf-8"))
    # text reports are separated by a blank line; JSON output is one record per line
    out.write(("\n" if args.format == "text" else "").join(chunks))
    return code


def cmd_lexicon_validate(args, out) -> int:
    try:
        lexicon = load_lexicon(_read(args.path, EXIT_LEXICON, "lexicon"))
    except LexiconError as exc:
        raise CliError(f"{args.path}: {type(exc).__name__}: {exc}", EXIT_LEXICON) from None
    out.write(f"ok: {len(lexicon.sentiment)} sentiment terms, {len(lexicon.negation)} negation terms, "
              f"sha256 {lexicon.source_digest}\n")
    return EXIT_OK


def cmd_history(args, out) -> int:
    try:
        records = history(args.store, args.student)
    except CorruptStore as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    for r in records:
        out.write(f"{r.timestamp.isoformat()}\t{format_value(r.collaborated_value, r.float32)}\t"
                  f"{r.collaborated_bucket}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="collabop", description="Lexicon-based collaborated opinion scoring.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("score", help="score a single remark")
    _add_scoring_options(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text")
    src.add_argument("--file", help="UTF-8 file holding the remark")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("collaborate", help="score a corpus and collaborate per student")
    _add_scoring_options(p)
    p.add_argument("--corpus", required=True)
    p.add_argument("--corpus-format", choices=("json", "csv"),
                   help="default: csv for *.csv, json otherwise")
    p.add_argument("--student")
    p.add_argument("--weights", help="JSON object mapping teacher id to weight")
    p.add_argument("--store", help="append each evaluation to this JSON-lines history file")
    p.set_defaults(func=cmd_collaborate)

    p = sub.add_parser("lexicon", help="lexicon utilities")
    lsub = p.add_subparsers(dest="lexicon_command", required=True, parser_class=_Parser)
    v = lsub.add_parser("validate", help="check a lexicon file")
    v.add_argument("path")
    v.set_defaults(func=cmd_lexicon_validate)

    p = sub.add_parser("track", help="evaluation history")
    tsub = p.add_subparsers(dest="track_command", required=True, parser_class=_Parser)
    h = tsub.add_parser("history", help="list a student's past evaluations")
    h.add_argument("--store", required=True)
    h.add_argument("--student", required=True)
    h.set_defaults(func=cmd_history)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"collabop: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
