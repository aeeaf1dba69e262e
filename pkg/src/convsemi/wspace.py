"""Extending the join of a polytope carrier X to the subspace W it generates.

A point ``x`` is in W when some centre ``c`` in X and ratio ``p`` in (0, 1]
pull it into X, i.e. ``P(c, p, x)`` lies in X. The extended join is

    x1 [+] x2 = P(c, 1/p, P(c, p, x1) (+) P(c, p, x2))

for any common witness ``(c, p)``. Every witness produced here is checked
against the carrier with an exact membership LP before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .algebra import LawReport, SemilatticeInstance, perspective
from .lp import OPTIMAL, LinearProgram, lp_solve
from .numeric import (
    DomainError,
    QVector,
    convex_combine,
    format_rational,
    format_vector,
    neg,
    scale,
    sub,
    vector_cwise_sup,
    zero,
)
from .polytope import contains_point
from .sampling import Sampler


class WitnessError(RuntimeError):
    """A constructed witness failed re-validation (an internal bug)."""


@dataclass(frozen=True)
class Witness:
    center: QVector
    ratio: Fraction

    def to_json(self) -> dict:
        return {"center": format_vector(self.center), "ratio": format_rational(self.ratio)}


@dataclass(frozen=True)
class WMembershipResult:
    member: bool
    p_max: Optional[Fraction] = None
    witness: Optional[Witness] = None

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "p_max": None if self.p_max is None else format_rational(self.p_max),
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def witness_valid(inst: SemilatticeInstance, x: QVector, w: Witness) -> bool:
    return (
        0 < w.ratio <= 1
        and contains_point(inst.carrier, w.center)
        and contains_point(inst.carrier, perspective(w.center, w.ratio, x))
    )


def _validated(inst, xs, w: Witness) -> Witness:
    for x in xs:
        if not witness_valid(inst, x, w):
            raise WitnessError(f"witness {w} does not pull {x} into the carrier")
    return w


def _as_point(inst: SemilatticeInstance, x) -> QVector:
    x = tuple(Fraction(c) for c in x)
    if len(x) != inst.dim:
        raise DomainError(f"point has dim {len(x)}, instance has dim {inst.dim}")
    return x


def w_membership(inst: SemilatticeInstance, x) -> WMembershipResult:
    """Decide W-membership and compute the largest admissible ratio.

    Writing ``m = (1-p) c`` turns the bilinear condition into the LP

        max p  s.t.  p x + sum mu_i v_i = sum lam_j v_j,
                     p + sum mu_i = 1,  sum lam_j = 1,  p, mu, lam >= 0

    over the carrier vertices ``v``.
    """
    x = _as_point(inst, x)
    vs = inst.carrier.vertices
    k, dim = len(vs), inst.dim
    n = 1 + 2 * k
    rows = []
    for i in range(dim):
        rows.append(([x[i]] + [v[i] for v in vs] + [-v[i] for v in vs], Fraction(0)))
    rows.append(([Fraction(1)] * (1 + k) + [Fraction(0)] * k, Fraction(1)))
    rows.append(([Fraction(0)] * (1 + k) + [Fraction(1)] * k, Fraction(1)))
    objective = [Fraction(1)] + [Fraction(0)] * (2 * k)
    out = lp_solve(LinearProgram(n, objective, rows, frozenset(range(n))))
    if out.status != OPTIMAL:
        raise WitnessError(f"membership LP returned {out.status}")
    p = out.value
    if p <= 0:
        return WMembershipResult(False)
    if p == 1:
        center = x
    else:
        mu = out.point[1:1 + k]
        center = tuple(
            sum((m * v[i] for m, v in zip(mu, vs)), Fraction(0)) / (1 - p) for i in range(dim)
        )
    w = _validated(inst, [x], Witness(center, p))
    return WMembershipResult(True, p, w)


def monotone_shrink_check(inst: SemilatticeInstance, x, result: WMembershipResult, q) -> bool:
    """Probe that every ratio below ``p_max`` still lands in the carrier."""
    if not result.member:
        raise DomainError("point is not in W")
    q = Fraction(q)
    if not 0 < q < result.p_max:
        raise DomainError(f"probe ratio {q} outside (0, {result.p_max})")
    x = _as_point(inst, x)
    return contains_point(inst.carrier, perspective(result.witness.center, q, x))


def common_witness(inst: SemilatticeInstance, xs: Sequence) -> Witness:
    """One ``(c, p)`` pulling every point of ``xs`` into the carrier.

    Averages the individual centres; each ratio ``p_i`` becomes
    ``p_i / (n - (n-1) p_i)`` about the averaged centre, and half the
    smallest of those is used.
    """
    pts = [_as_point(inst, x) for x in xs]
    if not pts:
        raise DomainError("need at least one point")
    ws = []
    for x in pts:
        res = w_membership(inst, x)
        if not res.member:
            raise DomainError(f"{format_vector(x)} is not in W")
        ws.append(res.witness)
    n = len(pts)
    if n == 1:
        return ws[0]
    c = tuple(sum((w.center[i] for w in ws), Fraction(0)) / n for i in range(inst.dim))
    p = min(w.ratio / (n - (n - 1) * w.ratio) for w in ws) / 2
    return _validated(inst, pts, Witness(c, p))


def shifted_witness(inst: SemilatticeInstance, xs: Sequence, w: Witness, d, r) -> Witness:
    """Move the centre toward ``d`` in X, keeping every point pulled in.

    New centre ``P(c, r, d)``, new ratio ``p (1-r) / (1-p r)``.
    """
    d, r = _as_point(inst, d), Fraction(r)
    if not 0 < r < 1:
        raise DomainError("shift ratio must lie in (0, 1)")
    if not contains_point(inst.carrier, d):
        raise DomainError("shift target must lie in the carrier")
    p = w.ratio
    new = Witness(perspective(w.center, r, d), p * (1 - r) / (1 - p * r))
    return _validated(inst, [_as_point(inst, x) for x in xs], new)


def w_scale_witness(inst: SemilatticeInstance, x, q, w: Witness) -> Witness:
    """Witness for ``q * x`` (``q > 1``) from a witness for ``x``."""
    x, q = _as_point(inst, x), Fraction(q)
    if q <= 1:
        raise DomainError("scale factor must exceed 1")
    _validated(inst, [x], w)
    p = w.ratio
    center = perspective(zero(inst.dim), (1 - p) / (1 - p / q), w.center)
    return _validated(inst, [scale(q, x)], Witness(center, p / q))


def w_negate_witness(inst: SemilatticeInstance, x, w: Witness) -> Witness:
    """Witness for ``-x``: centre ``P(c, p, x)``, ratio ``p / (1+p)``.

    A ratio of 1 is first halved, which keeps the same centre valid.
    """
    x = _as_point(inst, x)
    _validated(inst, [x], w)
    p = w.ratio
    if p == 1:
        p = Fraction(1, 2)
    center = perspective(w.center, p, x)
    return _validated(inst, [neg(x)], Witness(center, p / (1 + p)))


def w_join_with_witness(inst: SemilatticeInstance, x1, x2, witness: Optional[Witness] = None
                        ) -> Tuple[QVector, Witness]:
    x1, x2 = _as_point(inst, x1), _as_point(inst, x2)
    if witness is None:
        witness = common_witness(inst, [x1, x2])
    elif not (witness_valid(inst, x1, witness) and witness_valid(inst, x2, witness)):
        raise DomainError("supplied witness does not pull both points into the carrier")
    c, p = witness.center, witness.ratio
    inner = inst.raw_join(perspective(c, p, x1), perspective(c, p, x2))
    return perspective(c, 1 / p, inner), witness


def w_join(inst: SemilatticeInstance, x1, x2, witness: Optional[Witness] = None) -> QVector:
    return w_join_with_witness(inst, x1, x2, witness)[0]


# ---------------------------------------------------------------- suites


def sample_w_point(inst: SemilatticeInstance, s: Sampler, check: bool = True) -> QVector:
    """``lam * x - mu * y`` for carrier points x, y and lam, mu >= 0."""
    x, y = inst.sample(s), inst.sample(s)
    lam = s.positive(3) if s.chance(0.9) else Fraction(0)
    mu = s.positive(3) if s.chance(0.7) else Fraction(0)
    w = sub(scale(lam, x), scale(mu, y))
    if check and not w_membership(inst, w).member:
        raise RuntimeError(f"sampler produced non-member {format_vector(w)}")
    return w


def check_w_oracle(inst: SemilatticeInstance, sampler: Sampler, cases: int = 500,
                   join_fn=w_join) -> LawReport:
    """The extended join agrees with the componentwise max on W."""
    if inst.join_kind != "componentwise_max":
        raise DomainError("no independent oracle for this join kind")
    s = sampler.fork("w_oracle")
    rep = LawReport("w_join_oracle", sampler.seed)
    for _ in range(cases):
        x, y = sample_w_point(inst, s), sample_w_point(inst, s)
        rep.cases += 1
        rep.expect_equal("x [+] y = max(x, y)", join_fn(inst, x, y), vector_cwise_sup(x, y), x=x, y=y)
    return rep


def check_w_well_defined(inst: SemilatticeInstance, sampler: Sampler, cases: int = 200,
                         join_fn=w_join) -> LawReport:
    """Two independently obtained witnesses give the same extended join."""
    s = sampler.fork("w_well_defined")
    rep = LawReport("w_join_well_defined", sampler.seed)
    for _ in range(cases):
        x, y = sample_w_point(inst, s), sample_w_point(inst, s)
        w1 = common_witness(inst, [x, y])
        d, r = inst.sample(s), s.unit_open()
        w2 = shifted_witness(inst, [x, y], w1, d, r)
        if s.chance(0.5):
            # further shrink the ratio about the new centre
            w2 = Witness(w2.center, w2.ratio * s.unit_open())
        rep.cases += 1
        rep.expect_equal(
            "x [+] y independent of witness",
            join_fn(inst, x, y, w1), join_fn(inst, x, y, w2),
            x=x, y=y, c1=w1.center, p1=w1.ratio, c2=w2.center, p2=w2.ratio,
        )
    return rep


def check_w_restriction(inst: SemilatticeInstance, sampler: Sampler, cases: int = 200,
                        join_fn=w_join) -> LawReport:
    s = sampler.fork("w_restriction")
    rep = LawReport("w_join_restriction", sampler.seed)
    for _ in range(cases):
        x, y = inst.sample(s), inst.sample(s)
        rep.cases += 1
        expected = inst.join(x, y)
        rep.expect_equal("x [+] y = x (+) y on X", join_fn(inst, x, y), expected, x=x, y=y)
        unit = Witness(inst.sample(s), Fraction(1))
        rep.expect_equal("ratio-1 witness gives x (+) y", join_fn(inst, x, y, unit), expected,
                         x=x, y=y, c=unit.center)
    return rep


def check_w_closure(inst: SemilatticeInstance, sampler: Sampler, cases: int = 200,
                    membership_fn=w_membership) -> LawReport:
    """W is a linear subspace; explicit witnesses and ratio probes validate."""
    s = sampler.fork("w_closure")
    rep = LawReport("w_subspace_closure", sampler.seed)
    for _ in range(cases):
        x, y = sample_w_point(inst, s), sample_w_point(inst, s)
        q = s.unit_closed()
        rep.cases += 1
        mx = membership_fn(inst, x)
        rep.expect("x in W", mx.member, x=x)
        if not mx.member:
            continue
        cc = convex_combine(x, y, q)
        rep.expect("x +_q y in W", membership_fn(inst, cc).member, x=x, y=y, q=q)
        t = s.positive(4)
        rep.expect("t x in W (t >= 0)", membership_fn(inst, scale(t, x)).member, x=x, t=t)
        rep.expect("-x in W", membership_fn(inst, neg(x)).member, x=x)

        big = s.above_one(4)
        sw = w_scale_witness(inst, x, big, mx.witness)
        rep.expect("scale witness validates", witness_valid(inst, scale(big, x), sw),
                   x=x, t=big, c=sw.center, p=sw.ratio)
        nw = w_negate_witness(inst, x, mx.witness)
        rep.expect("negation witness validates", witness_valid(inst, neg(x), nw),
                   x=x, c=nw.center, p=nw.ratio)

        # the LP maximum is attained and every smaller ratio also works
        probe = mx.p_max * s.unit_open()
        rep.expect("P(c,q,x) in X for q < p(x)", monotone_shrink_check(inst, x, mx, probe),
                   x=x, q=probe, c=mx.witness.center)
        if mx.p_max < 1:
            over = mx.p_max + (1 - mx.p_max) * s.unit_open()
            rep.expect("no witness beyond p(x)",
                       not contains_point(inst.carrier, perspective(mx.witness.center, over, x)),
                       x=x, q=over)

        d, r = inst.sample(s), s.unit_open()
        c, p = mx.witness.center, mx.witness.ratio
        moved = perspective(perspective(c, r, d), p * (1 - r) / (1 - p * r), x)
        rep.expect("P(P(c,r,d), p(1-r)/(1-pr), x) in X", contains_point(inst.carrier, moved),
                   x=x, c=c, p=p, d=d, r=r)
    return rep


def verify_w_axioms(inst: SemilatticeInstance, sampler: Sampler, cases: int = 500,
                    join_fn=w_join) -> LawReport:
    """Semilattice laws and both distributivity laws for the extended join."""
    s = sampler.fork("w_axioms")
    rep = LawReport("w_axioms", sampler.seed)
    J = lambda a, b: join_fn(inst, a, b)  # noqa: E731
    for _ in range(cases):
        x, y, z = sample_w_point(inst, s), sample_w_point(inst, s), sample_w_point(inst, s)
        d, q, p = inst.sample(s), s.unit_open(), s.unit_open()
        rep.cases += 1
        rep.expect_equal("x [+] x = x", J(x, x), x, x=x)
        xy = J(x, y)
        rep.expect_equal("x [+] y = y [+] x", xy, J(y, x), x=x, y=y)
        rep.expect_equal("(x [+] y) [+] z = x [+] (y [+] z)", J(xy, z), J(x, J(y, z)), x=x, y=y, z=z)
        rep.expect_equal(
            "(x [+] y) +_q d = (x +_q d) [+] (y +_q d)",
            convex_combine(xy, d, q), J(convex_combine(x, d, q), convex_combine(y, d, q)),
            x=x, y=y, d=d, q=q,
        )
        rep.expect_equal(
            "(x [+] y) +_p z = (x +_p z) [+] (y +_p z)",
            convex_combine(xy, z, p), J(convex_combine(x, z, p), convex_combine(y, z, p)),
            x=x, y=y, z=z, p=p,
        )
    return rep
