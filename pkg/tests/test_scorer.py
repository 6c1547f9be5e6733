import random
import statistics

import pytest
from hypothesis import given, strategies as st

from collabop.errors import ScoreOutOfRange
from collabop.lexicon import load_lexicon
from collabop.scorer import RemarkScore, adjust_for_negation, match_words, score_remark

from conftest import CASE2_REMARK3, CASE3_REMARK1


def negation_rule(raw, negated):
    # independent restatement of the three-case rule
    if not negated:
        return raw
    if raw > 5:
        return max(0.0, raw - 2)
    if raw < 5:
        return min(10.0, raw + 2)
    return raw


@pytest.mark.parametrize("raw, negated, expected", [
    (6, True, 4), (7, False, 7), (3, True, 5), (5, True, 5), (10, True, 8), (0, True, 2),
])
def test_adjust_examples(raw, negated, expected):
    assert adjust_for_negation(raw, negated) == expected


@pytest.mark.parametrize("raw", [-0.1, 10.01, float("nan")])
def test_adjust_rejects_out_of_range(raw):
    with pytest.raises(ScoreOutOfRange):
        adjust_for_negation(raw, True)


def test_adjust_half_step_table():
    for k in range(21):
        raw = k / 2
        for negated in (False, True):
            got = adjust_for_negation(raw, negated)
            assert got == negation_rule(raw, negated)
            assert 0 <= got <= 10 and abs(got - raw) <= 2


def test_case2_remark3(small_lex, ref_lex):
    # (7 + (6 - 2) + 2) / 3
    for lex in (small_lex, ref_lex):
        r = score_remark(CASE2_REMARK3, lex)
        assert r.value == pytest.approx(13 / 3, abs=1e-12)
        assert [(m.token.normalized, m.negated, m.adjusted_score) for m in r.matches] == [
            ("good", False, 7), ("regular", True, 4), ("misbehaving", False, 2)]


def test_case3_remark1(ref_lex):
    # (8 + 7 + 8 + 8 + 8) / 5, flat over words rather than per sentence
    assert score_remark(CASE3_REMARK1, ref_lex).value == pytest.approx(7.8, abs=1e-12)


def test_no_opinion(ref_lex):
    r = score_remark("The weather is cloudy.", ref_lex)
    assert r.value is None and r.matches == () and not r.has_opinion
    assert str(r) == "no opinion detected"
    assert score_remark("", ref_lex).value is None


NEG_LEX = load_lexicon(b"good\t8\nbad\t2\nfine\t5\nnot\tNEG\nnever\tNEG\n")


@pytest.mark.parametrize("text, window, expected", [
    ("not good", 3, [True]),
    ("not a b good", 3, [True]),           # third token after the negator
    ("not a b c good", 3, [False]),        # fourth is out of scope
    ("not a b c good", 4, [True]),
    ("not. good", 3, [False]),             # scope ends at the sentence
    ("not good good", 3, [True, False]),   # consumed by the first sentiment word
    ("not never good", 3, [True]),         # several negators, one adjustment
    ("good not", 3, [False]),
    ("not a good bad", 1, [False, False]),
])
def test_negation_scope(text, window, expected):
    assert [m.negated for m in match_words(text, NEG_LEX, window)] == expected


def test_double_negators_adjust_once():
    r = score_remark("not never not good", NEG_LEX)
    assert r.value == 6.0


def test_window_must_be_positive():
    with pytest.raises(ValueError):
        match_words("good", NEG_LEX, 0)


def test_repeated_words_count_per_occurrence():
    assert score_remark("good good bad", NEG_LEX).value == pytest.approx(6.0)
    assert len(score_remark("good good bad", NEG_LEX).matches) == 3


def test_given_score():
    r = RemarkScore.from_value(6.875, "t1")
    assert r.value == 6.875 and r.given and r.matches == ()
    with pytest.raises(ScoreOutOfRange):
        RemarkScore.from_value(12)


# -- randomized oracles --------------------------------------------------

FILLER = ["the", "a", "student", "class", "is", "in", "and", "of", "her", "his"]


def random_lexicon(rng, size=40):
    words = {f"w{i}": round(rng.uniform(0, 10), 3) for i in range(size)}
    text = "\n".join(f"{w}\t{s}" for w, s in words.items()) + "\nnot\tNEG\n"
    return words, load_lexicon(text.encode())


def brute_force_mean(text, words):
    hits = [words[w.strip(".,!?;").lower()] for w in text.split()
            if w.strip(".,!?;").lower() in words]
    return statistics.fmean(hits) if hits else None


def test_negation_free_remarks_match_brute_force():
    rng = random.Random(20240301)
    words, lex = random_lexicon(rng)
    vocab = list(words) + FILLER
    for _ in range(300):
        n = rng.randint(0, 25)
        toks = [rng.choice(vocab) for _ in range(n)]
        if rng.random() < 0.5:
            toks = [t.upper() if rng.random() < 0.2 else t for t in toks]
        text = " ".join(t + rng.choice(["", "", ",", "."]) for t in toks)
        expected = brute_force_mean(text, words)
        got = score_remark(text, lex).value
        if expected is None:
            assert got is None
        else:
            assert got == pytest.approx(expected, rel=1e-12, abs=1e-12)


@given(st.lists(st.sampled_from(["good", "bad", "fine", "not", "never", "the", "x", ".", "!"]),
                max_size=40), st.integers(1, 5))
def test_value_bounded_and_reconstructible(words, window):
    r = score_remark(" ".join(words), NEG_LEX, negation_window=window)
    if r.value is None:
        assert r.matches == ()
        return
    adjusted = [m.adjusted_score for m in r.matches]
    assert min(adjusted) <= r.value <= max(adjusted)
    assert 0 <= r.value <= 10
    assert r.value == pytest.approx(statistics.fmean(adjusted), rel=1e-15)
    for m in r.matches:
        assert m.adjusted_score == negation_rule(m.raw_score, m.negated)
    assert score_remark(" ".join(words), NEG_LEX, negation_window=window) == r


def test_float32_mode(ref_lex):
    r = score_remark(CASE2_REMARK3, ref_lex, float32=True)
    assert r.value == 4.333333492279053  # float32(13/3)
