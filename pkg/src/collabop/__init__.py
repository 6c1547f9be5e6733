"""Lexicon-based opinion scoring with negation handling and weighted collaboration."""

from .aggregate import (CollaboratedOpinion, HolderWeight, OpinionBucket, classify,
                        collaborate, collaborate_values)
from .corpus import EvaluationRecord, Remark, evaluate_student, parse_corpus
from .errors import (CorruptStore, DuplicateTerm, EmptyLexicon, MalformedCorpus, MalformedFile,
                     MissingField, NoContributions, OpinionError, ScoreOutOfRange, UnknownHolder)
from .history import append_history, history
from .lexicon import Lexicon, dump_lexicon, load_lexicon, lookup, reference_lexicon
from .report import render_report
from .scorer import RemarkScore, adjust_for_negation, score_remark
from .textproc import split_sentences, tokenize

__version__ = "0.1.0"
