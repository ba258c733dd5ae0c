"""Display-rounding conventions: 4 decimals, ties away from zero, and the
small-p floor, with a hypothesis property tying display back to value."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from statsteps.display import fmt, fmt_int, fmt_p, round4


def test_ties_round_away_from_zero():
    assert fmt(0.00005) == "0.0001"
    assert fmt(-0.00005) == "-0.0001"
    assert fmt(2.55555) == "2.5556"
    assert fmt(0.12345) == "0.1235"
    assert fmt(-0.12345) == "-0.1235"


def test_no_negative_zero():
    assert fmt(-0.000001) == "0.0000"


def test_infinite_and_nan_rendering():
    assert fmt(math.inf) == "∞"
    assert fmt(-math.inf) == "-∞"
    assert fmt(math.nan) == "undefined"


def test_p_display_floor_boundary():
    # the rule: p < 0.00005 displays as "< 0.0001"; at the boundary the
    # ordinary 4-dp rounding already gives a nonzero display
    assert fmt_p(0.00005) == "0.0001"
    assert fmt_p(0.000049999) == "< 0.0001"
    assert fmt_p(0.0) == "< 0.0001"
    assert fmt_p(0.0021) == "0.0021"
    assert fmt_p(1.0) == "1.0000"


def test_fmt_int():
    assert fmt_int(12.0) == "12"
    assert fmt_int(12) == "12"


def test_round4_matches_fmt():
    for v in (0.00005, -0.00005, 1.23456, -9.87654, 0.0):
        assert f"{round4(v):.4f}" == fmt(v)


@given(st.floats(min_value=-1e9, max_value=1e9, allow_nan=False, allow_infinity=False))
@settings(max_examples=300, deadline=None)
def test_display_within_half_ulp_of_value(v):
    """The displayed string never differs from the value by more than half
    of the last displayed decimal."""
    shown = float(fmt(v))
    assert abs(shown - v) <= 0.00005 + 1e-12 * abs(v)
