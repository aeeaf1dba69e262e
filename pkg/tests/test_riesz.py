from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convsemi.numeric import DimensionError, DomainError, scale, vec
from convsemi.polytope import canonicalize, support, unit_square
from convsemi.riesz import (
    SupportFunctionView,
    _separating_lp,
    check_embedding_homomorphism,
    check_riesz_laws,
    direction_grid,
    riesz_inf,
    riesz_leq,
    riesz_sup,
    separating_direction,
    support_embed,
)
from convsemi.sampling import Sampler

TRIANGLE = canonicalize([vec(0, 0), vec(1, 0), vec(0, 1)])
coord = st.fractions(min_value=-2, max_value=2, max_denominator=6)


def test_sup_inf_examples():
    assert riesz_sup(vec(1, 3), vec(2, 1)) == vec(2, 3)
    assert riesz_sup(vec(-1, 0), vec(0, -1)) == vec(0, 0)
    assert riesz_inf(vec(1, 3), vec(2, 1)) == vec(1, 1)
    assert riesz_inf(vec(0, 0), vec(1, 1)) == vec(0, 0)
    x = vec(F(1, 2), -3)
    assert riesz_sup(x, x) == x and riesz_inf(x, x) == x


def test_scaling_example():
    assert scale(2, riesz_sup(vec(1, 0), vec(0, 1))) == riesz_sup(vec(2, 0), vec(0, 2)) == vec(2, 2)


def test_order():
    assert riesz_leq(vec(0, 0), vec(1, 1))
    assert not riesz_leq(vec(1, 0), vec(0, 1))


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_riesz_laws_pass(dim):
    rep = check_riesz_laws(dim, Sampler(8), 100)
    assert rep.passed and rep.cases == 100


def test_support_embed_examples():
    assert support_embed(TRIANGLE, [vec(1, 0), vec(0, 1), vec(1, 1)]) == [1, 1, 1]
    assert support_embed(canonicalize([vec(2, 0)]), [vec(1, 0)]) == [2]
    assert support_embed(unit_square(), [vec(-1, 0)]) == [0]
    assert SupportFunctionView(TRIANGLE)(vec(1, 1)) == 1


def test_support_embed_rejects():
    with pytest.raises(DomainError):
        support_embed(TRIANGLE, [vec(0, 0)])
    with pytest.raises(DimensionError):
        support_embed(TRIANGLE, [vec(1, 0, 0)])


def test_direction_grid():
    g = direction_grid(2)
    assert len(g) == 4 + 4 and len(set(g)) == 8


def test_separating_lp():
    a = vec(F(1, 2), F(3, 2))
    u = _separating_lp(a, unit_square())
    assert u is not None and all(-1 <= c <= 1 for c in u)
    assert sum(x * y for x, y in zip(u, a)) > support(unit_square(), u)
    assert _separating_lp(vec(F(1, 2), F(1, 2)), unit_square()) is None


def test_separating_direction():
    A = unit_square()
    B = canonicalize(list(A.vertices) + [vec(F(1, 2), F(3, 2))])
    u = separating_direction(A, B)
    assert u is not None and support(A, u) != support(B, u)
    assert separating_direction(A, A) is None


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=1, max_size=5),
       st.lists(st.tuples(coord, coord), min_size=1, max_size=5))
def test_separation_iff_different(a, b):
    A, B = canonicalize(a), canonicalize(b)
    u = separating_direction(A, B)
    assert (u is None) == (A == B)
    if u is not None:
        assert support_embed(A, [u]) != support_embed(B, [u])


def test_embedding_small():
    rep = check_embedding_homomorphism(Sampler(1, 16), cases=10, directions=12)
    assert rep.passed and rep.stats["probes"] == 120
