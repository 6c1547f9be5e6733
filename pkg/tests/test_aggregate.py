import math

import pytest
from hypothesis import given, settings, strategies as st

from collabop.aggregate import (HolderWeight, OpinionBucket, classify, collaborate,
                                collaborate_values)
from collabop.errors import NoContributions, ScoreOutOfRange, UnknownHolder
from collabop.scorer import RemarkScore


@pytest.mark.parametrize("value, label", [
    (8.5, "very high"), (5.180556, "moderate"), (3.3333335, "low"), (0, "very low"),
    (10, "very high"), (1.999, "very low"), (2, "low"), (4.5, "moderate"), (5.5, "high"),
    (8, "very high"), (7.999, "high"),
])
def test_classify(value, label):
    assert classify(value).label == label


@pytest.mark.parametrize("value", [-1e-9, 10.0001, float("nan"), float("inf")])
def test_classify_range(value):
    with pytest.raises(ScoreOutOfRange):
        classify(value)


def test_bucket_order_and_labels():
    assert [b.label for b in sorted(OpinionBucket)] == ["very low", "low", "moderate", "high", "very high"]
    assert OpinionBucket.from_label("very high") is OpinionBucket.VERY_HIGH
    with pytest.raises(ValueError):
        OpinionBucket.from_label("great")


@pytest.mark.parametrize("values, expected, label", [
    ([8.5, 6.0, 3.3333335], 5.9444447, "high"),
    ([6.875, 4.3333335, 4.3333335], 5.180556, "moderate"),
    ([7.7999997, 7.8333335, 7.625], 7.7527776, "high"),
])
def test_collaborate_case_values(values, expected, label):
    op = collaborate_values(values)
    assert op.value == pytest.approx(expected, abs=1e-4)
    assert op.bucket.label == label


def test_single_value():
    op = collaborate_values([3.7], [2.5])
    assert op.value == 3.7 and op.bucket is classify(3.7)


def test_skipped_and_errors():
    scores = [RemarkScore(None, (), "t0"), RemarkScore.from_value(7, "t1")]
    op = collaborate(scores)
    assert op.value == 7 and op.skipped == ("t0",)
    with pytest.raises(NoContributions):
        collaborate([RemarkScore(None, (), "t0")])
    with pytest.raises(NoContributions):
        collaborate([])
    with pytest.raises(UnknownHolder):
        collaborate(scores, {"t9": 1.0})
    # weights only matter for holders that contribute
    assert collaborate(scores, [HolderWeight("t1", 3.0)]).value == 7


def test_weights():
    scores = [RemarkScore.from_value(8, "a"), RemarkScore.from_value(2, "b")]
    op = collaborate(scores, [HolderWeight("a", 3), HolderWeight("b", 1)])
    assert op.value == 6.5
    assert [(c.holder_id, c.value, c.weight) for c in op.contributions] == [("a", 8, 3), ("b", 2, 1)]
    with pytest.raises(ValueError):
        HolderWeight("a", 0)
    with pytest.raises(ValueError):
        collaborate(scores, [HolderWeight("a"), HolderWeight("a")])


def test_float32_mode_reproduces_printed_digits():
    import numpy as np
    op = collaborate_values([8.5, 6.0, 3.3333335], float32=True)
    assert str(np.float32(op.value)) == "5.9444447"


# -- properties -----------------------------------------------------------

def test_classify_monotone_and_total_on_grid():
    prev = OpinionBucket.VERY_LOW
    edges = {2.0: OpinionBucket.LOW, 4.5: OpinionBucket.MODERATE,
             5.5: OpinionBucket.HIGH, 8.0: OpinionBucket.VERY_HIGH}
    for k in range(1001):
        v = k / 100
        b = classify(v)
        assert b >= prev
        assert sum(lo <= v for lo in (2, 4.5, 5.5, 8)) == b  # exactly one bucket
        if v in edges:
            assert b is edges[v]
        prev = b


values = st.lists(st.floats(0, 10, allow_nan=False), min_size=1, max_size=12)


@given(st.data())
def test_permutation_invariant_and_bounded(data):
    vals = data.draw(values)
    ws = data.draw(st.lists(st.floats(0.01, 100), min_size=len(vals), max_size=len(vals)))
    perm = data.draw(st.permutations(range(len(vals))))
    a = collaborate_values(vals, ws)
    b = collaborate_values([vals[i] for i in perm], [ws[i] for i in perm])
    assert a.value == b.value and a.bucket is b.bucket
    assert min(vals) <= a.value <= max(vals)


@given(values)
def test_unit_weights_equal_plain_mean(vals):
    assert collaborate_values(vals).value == pytest.approx(math.fsum(vals) / len(vals),
                                                           rel=1e-15, abs=1e-15)


@settings(derandomize=True)
@given(st.data())
def test_weight_scale_invariant(data):
    vals = data.draw(values)
    ws = data.draw(st.lists(st.floats(0.01, 100), min_size=len(vals), max_size=len(vals)))
    c = data.draw(st.floats(1e-3, 1e3))
    a = collaborate_values(vals, ws)
    b = collaborate_values(vals, [w * c for w in ws])
    assert b.value == pytest.approx(a.value, rel=1e-12, abs=1e-12)
    assert b.bucket is a.bucket
