import pytest
from hypothesis import strategies as st

from fairalloc import ValueVector

finite_values = st.floats(
    min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False
)
positive_values = st.floats(
    min_value=1e-3, max_value=1e6, allow_nan=False, allow_infinity=False
)


def vectors(min_size=1, max_size=50, positive=False):
    elems = positive_values if positive else finite_values
    return st.lists(elems, min_size=min_size, max_size=max_size).map(ValueVector)


def assert_close(actual, expected, rel=1e-9, abs_tol=1e-12):
    assert actual == pytest.approx(expected, rel=rel, abs=abs_tol)


def is_constant(v: ValueVector) -> bool:
    return max(v.values) - min(v.values) == 0.0


def scale(v: ValueVector, c: float) -> ValueVector:
    return ValueVector(c * x for x in v.values)
