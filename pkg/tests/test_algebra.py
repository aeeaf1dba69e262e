import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convsemi.algebra import (
    MODEL_CHECKERS,
    LawReport,
    ParamQuadruple,
    PolytopeModel,
    SemilatticeInstance,
    check_cancellativity,
    check_convex_axioms,
    check_perspective_homomorphism,
    check_perspective_lemmas,
    check_sup_closure,
    induced_leq,
    join,
    perspective,
    quadruple_equations,
    solve_assoc_from_pq,
    solve_assoc_from_pr,
    solve_swap_params,
)
from convsemi.numeric import DomainError, vec
from convsemi.polytope import canonicalize, unit_square
from convsemi.sampling import Sampler

unit = st.fractions(min_value=0, max_value=1, max_denominator=64)
open_unit = unit.filter(lambda q: 0 < q < 1)
vec3 = st.tuples(*[st.fractions(min_value=-4, max_value=4, max_denominator=16)] * 3)


def eqs(p, q, r, s):
    # written out independently of quadruple_equations
    return (q * p == s, q * (1 - p) == (1 - s) * (1 - r), 1 - q == (1 - s) * r)


def test_perspective_examples():
    c, x = vec(3, -1), vec(5, 7)
    assert perspective(c, 0, x) == c
    assert perspective(c, 1, x) == x
    assert perspective(vec(0, 0), F(1, 2), vec(2, 4)) == vec(1, 2)


@pytest.mark.parametrize("p,q,r,s", [
    (F(1, 2), F(1, 3), F(1, 2), F(3, 4)),
    (F(1), F(1), F(1), F(1)),
    (F(1, 2), F(1, 2), F(2, 3), F(2, 3)),
])
def test_swap_params(p, q, r, s):
    assert solve_swap_params(p, q) == (r, s)


def test_swap_params_guard():
    with pytest.raises(DomainError):
        solve_swap_params(F(0), F(0))
    with pytest.raises(DomainError):
        solve_swap_params(F(2), F(2))


@pytest.mark.parametrize("p,q,r,s", [
    (F(1, 2), F(1, 2), F(2, 3), F(1, 4)),
    (F(0), F(1, 3), F(2, 3), F(0)),
    (F(1, 3), F(3, 4), F(1, 3), F(1, 4)),
])
def test_assoc_from_pq(p, q, r, s):
    t = solve_assoc_from_pq(p, q)
    assert (t.p, t.q, t.r, t.s) == (p, q, r, s)
    assert all(eqs(p, q, r, s))


@pytest.mark.parametrize("p,r,q,s", [
    (F(1, 2), F(1, 2), F(2, 3), F(1, 3)),
    (F(2, 5), F(0), F(1), F(2, 5)),
    (F(1, 2), F(1, 4), F(6, 7), F(3, 7)),
])
def test_assoc_from_pr(p, r, q, s):
    t = solve_assoc_from_pr(p, r)
    assert (t.p, t.q, t.r, t.s) == (p, q, r, s)
    assert all(eqs(p, q, r, s))


def test_assoc_guards():
    with pytest.raises(DomainError):
        solve_assoc_from_pq(F(1), F(1))
    with pytest.raises(DomainError):
        solve_assoc_from_pr(F(2), F(1, 2))
    with pytest.raises(DomainError):
        ParamQuadruple(F(1, 2), F(1, 2), F(1, 2), F(1, 2))


@settings(max_examples=60, deadline=None)
@given(vec3, vec3, vec3, open_unit, open_unit)
def test_quadruple_associativity(c, d, x, p, q):
    t = solve_assoc_from_pq(p, q)
    assert all(quadruple_equations(t.p, t.q, t.r, t.s).values())
    assert perspective(d, t.q, perspective(c, t.p, x)) == perspective(perspective(c, t.r, d), t.s, x)
    assert 0 < t.r < 1 and 0 < t.s < 1


@settings(max_examples=60, deadline=None)
@given(vec3, vec3, vec3, open_unit, open_unit)
def test_swap_identity(c, d, x, p, q):
    r, s = solve_swap_params(p, q)
    assert perspective(d, r, perspective(c, p, x)) == perspective(c, s, perspective(d, q, x))


def test_join_and_order_examples(square):
    assert join(square, vec(1, 0), vec(0, 1)) == vec(1, 1)
    assert join(square, vec(F(1, 2), 0), vec(F(1, 4), F(1, 4))) == vec(F(1, 2), F(1, 4))
    x = vec(F(1, 3), F(2, 3))
    assert join(square, x, x) == x
    assert induced_leq(square, vec(0, 0), vec(1, 1))
    assert not induced_leq(square, vec(1, 0), vec(0, 1))
    assert not induced_leq(square, vec(0, 1), vec(1, 0))
    assert induced_leq(square, x, x)


def test_join_rejects_non_members(square):
    with pytest.raises(DomainError):
        join(square, vec(2, 0), vec(0, 0))


def test_instance_validation():
    tri = canonicalize([vec(0, 0), vec(1, 0), vec(0, 1)])
    with pytest.raises(DomainError):
        SemilatticeInstance(tri)
    with pytest.raises(DomainError):
        SemilatticeInstance(canonicalize([vec(1, 1), vec(2, 2)]))
    with pytest.raises(DomainError):
        SemilatticeInstance(unit_square(), join_kind="median")


@pytest.mark.parametrize("name", sorted(MODEL_CHECKERS))
def test_model_checkers_pass_on_square(square, name):
    rep = MODEL_CHECKERS[name](square, Sampler(11), 60)
    assert rep.passed, rep.dumps()
    assert rep.cases > 0


@pytest.mark.parametrize("name", sorted(MODEL_CHECKERS))
def test_model_checkers_pass_on_polytope_model(name):
    rep = MODEL_CHECKERS[name](PolytopeModel(2, max_generators=3), Sampler(5, 8), 15)
    assert rep.passed, rep.dumps()


def test_singleton_carrier_passes():
    point = SemilatticeInstance(canonicalize([vec(0, 0)]))
    assert check_convex_axioms(point, Sampler(0), 20).passed
    # every draw coincides, so no cancellativity case can be formed
    assert check_cancellativity(point, Sampler(0), 20).cases == 0


def test_perspective_checks_pass(square):
    assert check_perspective_homomorphism(square, Sampler(2), 80).passed
    assert check_perspective_lemmas(3, Sampler(2), 80).passed
    assert check_sup_closure(square, Sampler(2), 50).passed


def test_endpoint_parameters_are_covered(square):
    seen = set()

    def spy(c, p, x):
        seen.add(p)
        return perspective(c, p, x)

    check_perspective_homomorphism(square, Sampler(0), 5, perspective_fn=spy)
    assert {F(0), F(1)} <= seen


def test_report_json_shape():
    rep = LawReport("demo", 3)
    rep.cases = 2
    rep.expect_equal("a = b", vec(1), vec(2), x=vec(1, F(1, 2)), p=F(1, 3))
    data = json.loads(rep.dumps())
    assert data["law"] == "demo" and data["seed"] == 3 and data["cases"] == 2
    assert data["status"] == "FAIL"
    v = data["violations"][0]
    assert v["inputs"] == {"x": ["1", "1/2"], "p": "1/3"}
    assert v["lhs"] == ["1"] and v["rhs"] == ["2"]


def test_determinism(square):
    a = check_convex_axioms(square, Sampler(42), 30).dumps()
    b = check_convex_axioms(square, Sampler(42), 30).dumps()
    assert a == b
