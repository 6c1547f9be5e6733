import re
from datetime import datetime, timezone
from pathlib import Path

import pytest

from collabop.lexicon import load_lexicon, reference_lexicon

GOLDEN = Path(__file__).parent / "golden"
FIXED_TIME = datetime(2024, 3, 1, 9, 30, tzinfo=timezone.utc)

CASE2_REMARK3 = "He is a good student but he is not regular in the class and is misbehaving at times."
CASE3_REMARK1 = ("She is hardworking student. She gives good response in the class and is a "
                 "bright student. She is very diligent and obedient.")


@pytest.fixture(scope="session")
def ref_lex():
    return reference_lexicon()


@pytest.fixture(scope="session")
def small_lex():
    return load_lexicon(b"good\t7\nregular\t6\nmisbehaving\t2\nnot\tNEG\n")


@pytest.fixture
def clock():
    return lambda: FIXED_TIME


_TITLES = {
    "criterion 1": "bucket fixture table",
    "criterion 2": "collaboration reproduction",
    "criterion 3": "remark scoring reproduction",
    "criterion 4": "negation adjustment table",
    "criterion 5": "property suite",
    "criterion 6": "report byte-exactness",
    "criterion 7": "plumbing",
    "criterion 8": "performance sanity",
}

# One PASS/FAIL line per acceptance criterion at the end of the run.
_acceptance: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[1].split("[")[0]
        criterion = re.match(r"test_ac(\d+)", name)
        key = f"criterion {criterion.group(1)}" if criterion else name
        _acceptance.setdefault(key, []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcomes in _acceptance.items():
        status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  {name}: {_TITLES.get(name, '')} "
                                    f"({sum(outcomes)}/{len(outcomes)} checks)")
