"""Convex semilattice models, perspective shifts and seeded law checkers.

A model is anything with ``sample``, ``combine`` (the convex operations
``x +_p y``) and ``join``; the checkers only talk to that interface. Two
models ship here: :class:`SemilatticeInstance` (a sup-closed polytope in
Q^n with componentwise max) and :class:`PolytopeModel` (polytopes as
elements, Minkowski mixtures and convex hulls of unions).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from .numeric import (
    DomainError,
    QVector,
    check_dims,
    convex_combine,
    format_rational,
    format_vector,
    vector_cwise_sup,
    zero,
)
from .polytope import Polytope, contains_point, hull_join, is_sup_closed, mix
from .sampling import Sampler

# ---------------------------------------------------------------- perspective


def perspective(c: QVector, p, x: QVector) -> QVector:
    """Shift with centre ``c`` and ratio ``p``: ``p*x + (1-p)*c``.

    ``p`` may be any rational; ratios outside [0, 1] leave the segment.
    """
    check_dims(c, x)
    p = Fraction(p)
    q = 1 - p
    return tuple(p * a + q * b for a, b in zip(x, c))


def solve_swap_params(p, q) -> Tuple[Fraction, Fraction]:
    """Ratios ``(r, s)`` making shifts about two centres commute.

    With ``r, s`` returned, ``P(d, r, P(c, p, x)) == P(c, s, P(d, q, x))``
    for all ``c, d, x``.
    """
    p, q = Fraction(p), Fraction(q)
    den = p + q - p * q
    if den == 0:
        raise DomainError(f"(1-p)(1-q) = 1 for p={p}, q={q}")
    return q / den, p / den


@dataclass(frozen=True)
class ParamQuadruple:
    """``(p, q, r, s)`` with ``P(d,q,P(c,p,x)) == P(P(c,r,d), s, x)``."""

    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    def __post_init__(self):
        bad = [name for name, ok in quadruple_equations(self.p, self.q, self.r, self.s).items() if not ok]
        if bad:
            raise DomainError(f"quadruple {self} violates {', '.join(bad)}")

    def to_json(self) -> dict:
        return {k: format_rational(getattr(self, k)) for k in "pqrs"}


def quadruple_equations(p, q, r, s) -> Dict[str, bool]:
    return {
        "qp=s": q * p == s,
        "q(1-p)=(1-s)(1-r)": q * (1 - p) == (1 - s) * (1 - r),
        "1-q=(1-s)r": 1 - q == (1 - s) * r,
    }


def solve_assoc_from_pq(p, q) -> ParamQuadruple:
    p, q = Fraction(p), Fraction(q)
    if p * q == 1:
        raise DomainError(f"pq = 1 for p={p}, q={q}")
    return ParamQuadruple(p, q, (1 - q) / (1 - q * p), q * p)


def solve_assoc_from_pr(p, r) -> ParamQuadruple:
    p, r = Fraction(p), Fraction(r)
    if p * r == 1:
        raise DomainError(f"pr = 1 for p={p}, r={r}")
    q = (1 - r) / (1 - p * r)
    return ParamQuadruple(p, q, r, p * q)


# ---------------------------------------------------------------- models

JOIN_KINDS: Dict[str, Callable[[QVector, QVector], QVector]] = {
    "componentwise_max": vector_cwise_sup,
}
SUP_CLOSED_KINDS = {"componentwise_max"}


class Model:
    """Interface the law checkers are written against."""

    name = "model"

    def sample(self, sampler: Sampler):
        raise NotImplementedError

    def combine(self, x, y, p):
        raise NotImplementedError

    def join(self, x, y):
        raise NotImplementedError

    def leq(self, x, y) -> bool:
        return self.join(x, y) == y

    def encode(self, x) -> Any:
        return format_vector(x)

    def distinct_pair(self, sampler: Sampler, tries: int = 100):
        x = self.sample(sampler)
        for _ in range(tries):
            y = self.sample(sampler)
            if y != x:
                return x, y
        return None


@dataclass(frozen=True)
class SemilatticeInstance(Model):
    """A polytope carrier with convex operations from Q^n and a join."""

    carrier: Polytope
    join_kind: str = "componentwise_max"
    translation: Optional[QVector] = None
    contains_zero: bool = field(init=False)
    sup_closed: bool = field(init=False)

    def __post_init__(self):
        if self.join_kind not in JOIN_KINDS:
            raise DomainError(f"unknown join kind {self.join_kind!r}")
        object.__setattr__(self, "contains_zero", contains_point(self.carrier, zero(self.dim)))
        object.__setattr__(self, "sup_closed", is_sup_closed(self.carrier))
        if not self.contains_zero:
            raise DomainError("carrier must contain 0 (translate it first)")
        if self.join_kind in SUP_CLOSED_KINDS and not self.sup_closed:
            raise DomainError("carrier is not closed under componentwise max")

    @property
    def name(self) -> str:
        return f"instance[{self.join_kind}]"

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def is_member(self, x) -> bool:
        return contains_point(self.carrier, x)

    def sample(self, sampler: Sampler) -> QVector:
        return sampler.point_in(self.carrier)

    def combine(self, x, y, p):
        return convex_combine(x, y, Fraction(p))

    def raw_join(self, x, y):
        return JOIN_KINDS[self.join_kind](x, y)

    def join(self, x, y):
        if not self.is_member(x) or not self.is_member(y):
            raise DomainError("join arguments must lie in the carrier")
        return self.raw_join(x, y)


def join(inst: SemilatticeInstance, x, y) -> QVector:
    return inst.join(tuple(x), tuple(y))


def induced_leq(inst: SemilatticeInstance, x, y) -> bool:
    y = tuple(y)
    return join(inst, x, y) == y


class PolytopeModel(Model):
    """Nonempty finitely generated convex subsets of Q^n."""

    def __init__(self, dim: int, max_generators: int = 4, lo: int = -2, hi: int = 2):
        self.dim = dim
        self.max_generators = max_generators
        self.lo, self.hi = lo, hi

    @property
    def name(self) -> str:
        return f"polytopes[Q^{self.dim}]"

    def sample(self, sampler: Sampler) -> Polytope:
        return sampler.polytope(self.dim, self.max_generators, self.lo, self.hi)

    def combine(self, x, y, p):
        return mix(x, y, p)

    def join(self, x, y):
        return hull_join(x, y)

    def encode(self, x) -> Any:
        return x.to_json()


class Mutated(Model):
    """A model with one operation swapped out, for checker self-tests."""

    def __init__(self, base: Model, combine=None, join=None):
        self.base = base
        self._combine = combine
        self._join = join
        self.name = f"mutated({base.name})"

    def __getattr__(self, item):
        return getattr(self.base, item)

    def sample(self, sampler):
        return self.base.sample(sampler)

    def encode(self, x):
        return self.base.encode(x)

    def combine(self, x, y, p):
        return (self._combine or self.base.combine)(x, y, p)

    def join(self, x, y):
        return (self._join or self.base.join)(x, y)


# ---------------------------------------------------------------- reports


def encode_value(v: Any, model: Optional[Model] = None) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, int) and not isinstance(v, bool):
        return format_rational(Fraction(v))
    if isinstance(v, Polytope):
        return v.to_json()
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (tuple, list)):
        if all(isinstance(c, Fraction) for c in v):
            return format_vector(v)
        return [encode_value(c) for c in v]
    if model is not None:
        return model.encode(v)
    raise TypeError(f"cannot encode {v!r}")


@dataclass
class LawReport:
    law: str
    seed: int
    cases: int = 0
    violations: List[dict] = field(default_factory=list)
    max_violations: int = 20
    stats: Dict[str, int] = field(default_factory=dict)
    _dropped: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def expect_equal(self, identity: str, lhs, rhs, **inputs) -> bool:
        if lhs == rhs:
            return True
        self._record(identity, lhs, rhs, inputs)
        return False

    def expect(self, identity: str, ok: bool, lhs=None, rhs=None, **inputs) -> bool:
        if ok:
            return True
        self._record(identity, lhs, rhs, inputs)
        return False

    def _record(self, identity, lhs, rhs, inputs):
        if len(self.violations) >= self.max_violations:
            self._dropped += 1
            return
        self.violations.append(
            {
                "case": self.cases,
                "identity": identity,
                "inputs": {k: encode_value(v) for k, v in inputs.items()},
                "lhs": encode_value(lhs),
                "rhs": encode_value(rhs),
            }
        )

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "seed": self.seed,
            "cases": self.cases,
            "status": self.status,
            "violations": self.violations,
            "violations_truncated": self._dropped,
            **({"stats": self.stats} if self.stats else {}),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def line(self) -> str:
        return f"{self.status} {self.law}: {self.cases} cases, {len(self.violations) + self._dropped} violations"


# ---------------------------------------------------------------- checkers

ENDPOINTS = (Fraction(0), Fraction(1))


def _params(sampler: Sampler, cases: int, arity: int):
    """Endpoint combinations first, then ``cases`` draws from (0, 1)."""
    from itertools import product

    for combo in product(ENDPOINTS + (None,), repeat=arity):
        if all(c is None for c in combo):
            continue
        yield tuple(c if c is not None else sampler.unit_open() for c in combo)
    for _ in range(cases):
        yield tuple(sampler.unit_open() for _ in range(arity))


def check_convex_axioms(model: Model, sampler: Sampler, cases: int = 1000) -> LawReport:
    s = sampler.fork("convex")
    rep = LawReport("convex_axioms", sampler.seed)
    for p, q in _params(s, cases, 2):
        x, y, z = model.sample(s), model.sample(s), model.sample(s)
        rep.cases += 1
        rep.expect_equal("x+_p x = x", model.combine(x, x, p), x, x=x, p=p)
        rep.expect_equal(
            "x+_p y = y+_(1-p) x", model.combine(x, y, p), model.combine(y, x, 1 - p), x=x, y=y, p=p
        )
        if p * q != 1:
            inner = (1 - p) * q / (1 - p * q)
            rep.expect_equal(
                "(x+_p y)+_q z = x+_(pq) (y+_((1-p)q/(1-pq)) z)",
                model.combine(model.combine(x, y, p), z, q),
                model.combine(x, model.combine(y, z, inner), p * q),
                x=x, y=y, z=z, p=p, q=q,
            )
    return rep


def check_semilattice_axioms(model: Model, sampler: Sampler, cases: int = 1000) -> LawReport:
    s = sampler.fork("semilattice")
    rep = LawReport("semilattice_axioms", sampler.seed)
    for _ in range(cases):
        x, y, z = model.sample(s), model.sample(s), model.sample(s)
        rep.cases += 1
        rep.expect_equal("x(+)x = x", model.join(x, x), x, x=x)
        rep.expect_equal("x(+)y = y(+)x", model.join(x, y), model.join(y, x), x=x, y=y)
        rep.expect_equal(
            "x(+)(y(+)z) = (x(+)y)(+)z",
            model.join(x, model.join(y, z)),
            model.join(model.join(x, y), z),
            x=x, y=y, z=z,
        )
    return rep


def check_distributivity(model: Model, sampler: Sampler, cases: int = 1000) -> LawReport:
    s = sampler.fork("distributivity")
    rep = LawReport("distributivity", sampler.seed)
    for (p,) in _params(s, cases, 1):
        x, y, z = model.sample(s), model.sample(s), model.sample(s)
        rep.cases += 1
        rep.expect_equal(
            "(x(+)y)+_p z = (x+_p z)(+)(y+_p z)",
            model.combine(model.join(x, y), z, p),
            model.join(model.combine(x, z, p), model.combine(y, z, p)),
            x=x, y=y, z=z, p=p,
        )
    return rep


def check_cancellativity(model: Model, sampler: Sampler, cases: int = 1000) -> LawReport:
    """Contrapositive form: ``x != y`` implies ``x+_p z != y+_p z``.

    Draws with ``x == y`` are redrawn and not counted.
    """
    s = sampler.fork("cancellativity")
    rep = LawReport("cancellativity", sampler.seed)
    for _ in range(cases):
        pair = model.distinct_pair(s)
        if pair is None:
            # every draw coincides: the carrier is a single point
            break
        x, y = pair
        z, p = model.sample(s), s.unit_open()
        rep.cases += 1
        lhs, rhs = model.combine(x, z, p), model.combine(y, z, p)
        rep.expect("x != y => x+_p z != y+_p z", lhs != rhs, lhs, rhs, x=x, y=y, z=z, p=p)
    return rep


def check_order_cancellation(
    model: Model, sampler: Sampler, cases: int = 1000, max_redraws: int = 200
) -> LawReport:
    """``x+_p z <= y+_p z`` implies ``x <= y``; only premise-true draws count."""
    s = sampler.fork("order_cancellation")
    rep = LawReport("order_cancellation", sampler.seed)
    for _ in range(cases):
        for _ in range(max_redraws):
            x, z, p = model.sample(s), model.sample(s), s.unit_open()
            # half the draws force x <= y so the premise is met often
            y = model.join(x, model.sample(s)) if s.chance(0.5) else model.sample(s)
            lhs, rhs = model.combine(x, z, p), model.combine(y, z, p)
            if model.leq(lhs, rhs):
                break
        else:
            continue
        rep.cases += 1
        rep.expect(
            "x+_p z <= y+_p z => x <= y", model.leq(x, y), lhs, rhs, x=x, y=y, z=z, p=p
        )
    return rep


def check_perspective_homomorphism(
    inst: Model, sampler: Sampler, cases: int = 1000, perspective_fn=perspective
) -> LawReport:
    """``P(c, p, .)`` restricted to the carrier preserves ``+_q`` and the join."""
    s = sampler.fork("perspective_homomorphism")
    rep = LawReport("perspective_homomorphism", sampler.seed)
    for p, q in _params(s, cases, 2):
        c, x, y = inst.sample(s), inst.sample(s), inst.sample(s)
        rep.cases += 1
        Px, Py = perspective_fn(c, p, x), perspective_fn(c, p, y)
        rep.expect_equal(
            "P(c,p,x)+_q P(c,p,y) = P(c,p,x+_q y)",
            inst.combine(Px, Py, q),
            perspective_fn(c, p, inst.combine(x, y, q)),
            c=c, p=p, x=x, y=y, q=q,
        )
        rep.expect_equal(
            "P(c,p,x)(+)P(c,p,y) = P(c,p,x(+)y)",
            inst.join(Px, Py),
            perspective_fn(c, p, inst.join(x, y)),
            c=c, p=p, x=x, y=y,
        )
    return rep


def check_perspective_lemmas(
    dim: int,
    sampler: Sampler,
    cases: int = 1000,
    perspective_fn=perspective,
    swap_fn=solve_swap_params,
    pq_fn=solve_assoc_from_pq,
    pr_fn=solve_assoc_from_pr,
) -> LawReport:
    """Identities of the perspective-shift calculus on random vectors in Q^dim."""
    s = sampler.fork("perspective")
    rep = LawReport("perspective_calculus", sampler.seed)
    P = perspective_fn
    for _ in range(cases):
        c, d, x = s.vector(dim), s.vector(dim), s.vector(dim)
        p, q = s.rational(), s.rational()
        rep.cases += 1

        rep.expect_equal("P(c,0,x) = c", P(c, 0, x), c, c=c, x=x)
        rep.expect_equal("P(c,1,x) = x", P(c, 1, x), x, c=c, x=x)
        rep.expect_equal(
            "P(c,p,P(c,q,x)) = P(c,pq,x)", P(c, p, P(c, q, x)), P(c, p * q, x), c=c, p=p, q=q, x=x
        )
        if p != 0:
            rep.expect_equal("P(c,1/p,P(c,p,x)) = x", P(c, 1 / p, P(c, p, x)), x, c=c, p=p, x=x)

        if (1 - p) * (1 - q) != 1:
            r, sw = swap_fn(p, q)
            rep.expect_equal(
                "P(d,r,P(c,p,x)) = P(c,s,P(d,q,x))",
                P(d, r, P(c, p, x)), P(c, sw, P(d, q, x)),
                c=c, d=d, x=x, p=p, q=q, r=r, s=sw,
            )

        quads = []
        if p * q != 1:
            quads.append(("pq", pq_fn(p, q)))
        r0 = s.rational()
        if p * r0 != 1:
            quads.append(("pr", pr_fn(p, r0)))
        for tag, t in quads:
            rep.expect(
                f"[{tag}] quadruple equations",
                all(quadruple_equations(t.p, t.q, t.r, t.s).values()),
                p=t.p, q=t.q, r=t.r, s=t.s,
            )
            rep.expect_equal(
                f"[{tag}] P(d,q,P(c,p,x)) = P(P(c,r,d),s,x)",
                P(d, t.q, P(c, t.p, x)), P(P(c, t.r, d), t.s, x),
                c=c, d=d, x=x, p=t.p, q=t.q, r=t.r, s=t.s,
            )

        # any two of the three quadruple equations force the third
        for tag, quad in _two_equation_solutions(p, q, r0):
            eqs = quadruple_equations(*quad)
            rep.expect(f"two equations imply the third [{tag}]", all(eqs.values()),
                       p=quad[0], q=quad[1], r=quad[2], s=quad[3])

        # range claims for parameters drawn inside (0, 1)
        a, b = s.unit_open(), s.unit_open()
        t1, t2 = pq_fn(a, b), pr_fn(a, b)
        rep.expect("p,q in (0,1) => r,s in (0,1)", 0 < t1.r < 1 and 0 < t1.s < 1,
                   p=a, q=b, r=t1.r, s=t1.s)
        rep.expect("p,r in (0,1) => q,s in (0,1)", 0 < t2.q < 1 and 0 < t2.s < 1,
                   p=a, r=b, q=t2.q, s=t2.s)
    return rep


def _two_equation_solutions(p, q, r):
    """Solve each pair of the quadruple equations directly, by hand algebra."""
    out = []
    s = q * p
    # qp = s and q(1-p) = (1-s)(1-r): solve for r
    if s != 1:
        out.append(("eq1+eq2", (p, q, 1 - q * (1 - p) / (1 - s), s)))
    # qp = s and 1-q = (1-s)r: solve for r
    if s != 1:
        out.append(("eq1+eq3", (p, q, (1 - q) / (1 - s), s)))
    # q(1-p) = (1-s)(1-r) and 1-q = (1-s)r: solve for s, then q
    if p * r != 1:
        s2 = 1 - (1 - p) / (1 - p * r)
        out.append(("eq2+eq3", (p, 1 - (1 - s2) * r, r, s2)))
    return out


def check_sup_closure(inst: SemilatticeInstance, sampler: Sampler, cases: int = 200,
                      join_fn=None) -> LawReport:
    """Joins of random hull points (not just vertices) stay in the carrier."""
    s = sampler.fork("sup_closure")
    rep = LawReport("sup_closure", sampler.seed)
    join_fn = join_fn or inst.raw_join
    for _ in range(cases):
        x, y = inst.sample(s), inst.sample(s)
        rep.cases += 1
        j = join_fn(x, y)
        rep.expect("x(+)y in X", inst.is_member(j), j, None, x=x, y=y)
    return rep


MODEL_CHECKERS = {
    "convex": check_convex_axioms,
    "semilattice": check_semilattice_axioms,
    "distributivity": check_distributivity,
    "cancellativity": check_cancellativity,
    "order-cancellation": check_order_cancellation,
}
