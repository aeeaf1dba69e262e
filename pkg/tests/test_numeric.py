from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convsemi.numeric import (
    DimensionError,
    DomainError,
    convex_combine,
    format_rational,
    format_vector,
    parse_rational,
    parse_vector,
    rational_make,
    to_rational,
    vec,
    vector_cwise_inf,
    vector_cwise_sup,
    vector_linear,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=64)


def vectors(dim):
    return st.tuples(*[rationals] * dim)


@pytest.mark.parametrize("num,den,expected", [(2, 4, F(1, 2)), (3, -6, F(-1, 2)), (0, 7, F(0))])
def test_rational_make(num, den, expected):
    q = rational_make(num, den)
    assert q == expected and q.denominator > 0


def test_rational_make_zero_denominator():
    with pytest.raises(DomainError):
        rational_make(1, 0)


@pytest.mark.parametrize("bad", [0.5, True])
def test_to_rational_rejects_inexact(bad):
    with pytest.raises(DomainError):
        to_rational(bad)


def test_convex_combine_examples():
    assert convex_combine(vec(0, 0), vec(2, 4), F(1, 2)) == vec(1, 2)
    x, y = vec(1, 3), vec(-2, 5)
    assert convex_combine(x, y, 1) == x
    assert convex_combine(x, y, 0) == y


@pytest.mark.parametrize("p", [F(-1, 2), F(3, 2)])
def test_convex_combine_rejects_out_of_range(p):
    with pytest.raises(DomainError):
        convex_combine(vec(0), vec(1), p)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        convex_combine(vec(0, 0), vec(1), F(1, 2))
    with pytest.raises(DimensionError):
        vector_cwise_sup(vec(0, 0), vec(1))


def test_vector_linear_examples():
    assert vector_linear(F(2), vec(1, 0), F(3), vec(0, 1)) == vec(2, 3)
    assert vector_linear(F(1), vec(5, 6), F(0), vec(7, 8)) == vec(5, 6)
    assert vector_linear(F(-1), vec(1, 2), F(0), vec(0, 0)) == vec(-1, -2)


def test_cwise_examples():
    assert vector_cwise_sup(vec(1, 3), vec(2, 1)) == vec(2, 3)
    assert vector_cwise_sup(vec(0, 0), vec(-1, -1)) == vec(0, 0)
    assert vector_cwise_inf(vec(1, 3), vec(2, 1)) == vec(1, 1)


@given(vectors(3), vectors(3), st.fractions(0, 1, max_denominator=64))
def test_convex_combine_is_affine(x, y, p):
    z = convex_combine(x, y, p)
    assert z == tuple(p * a + (1 - p) * b for a, b in zip(x, y))
    assert convex_combine(y, x, 1 - p) == z


@given(vectors(2), vectors(2))
def test_sup_inf_bracket(x, y):
    lo, hi = vector_cwise_inf(x, y), vector_cwise_sup(x, y)
    assert all(a <= b for a, b in zip(lo, hi))
    assert tuple(a + b for a, b in zip(lo, hi)) == tuple(a + b for a, b in zip(x, y))


@given(st.lists(rationals, min_size=1, max_size=4))
def test_text_round_trip(xs):
    assert parse_vector(format_vector(xs)) == tuple(xs)


def test_format_rational():
    assert format_rational(F(3, 1)) == "3"
    assert format_rational(F(-1, 2)) == "-1/2"


@pytest.mark.parametrize("bad", ["0.5", "1/0", "abc", ""])
def test_parse_rational_rejects(bad):
    with pytest.raises(DomainError):
        parse_rational(bad)
