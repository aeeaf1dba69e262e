"""Componentwise-ordered Q^n as a Riesz space, and support functions.

Support functions turn the polytope model into functions on Q^n with
the pointwise order: Minkowski mixtures become convex combinations and
hulls of unions become pointwise maxima.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence

from .algebra import LawReport
from .lp import OPTIMAL, LinearProgram, lp_solve
from .numeric import (
    DimensionError,
    DomainError,
    QVector,
    add,
    check_dims,
    convex_combine,
    neg,
    scale,
    sub,
    vector_cwise_inf,
    vector_cwise_sup,
)
from .polytope import Polytope, contains_point, hull_join, is_subset, mix, support
from .sampling import Sampler


def riesz_sup(x: QVector, y: QVector) -> QVector:
    return vector_cwise_sup(x, y)


def riesz_inf(x: QVector, y: QVector, sup=riesz_sup) -> QVector:
    """Infimum through the supremum of negatives."""
    return neg(sup(neg(x), neg(y)))


def riesz_leq(x: QVector, y: QVector, sup=riesz_sup) -> bool:
    return sup(x, y) == tuple(y)


def check_riesz_laws(dim: int, sampler: Sampler, cases: int = 1000, sup_fn=riesz_sup) -> LawReport:
    s = sampler.fork(f"riesz{dim}")
    rep = LawReport(f"riesz_laws[Q^{dim}]", sampler.seed)
    sup = sup_fn
    inf = lambda a, b: riesz_inf(a, b, sup)  # noqa: E731
    leq = lambda a, b: riesz_leq(a, b, sup)  # noqa: E731
    zero = (Fraction(0),) * dim
    for _ in range(cases):
        x, y, z = s.vector(dim), s.vector(dim), s.vector(dim)
        rep.cases += 1

        q = s.unit_closed() or Fraction(1)
        rep.expect_equal("qx (+) qy = q(x (+) y), 0<q<=1", sup(scale(q, x), scale(q, y)),
                         scale(q, sup(x, y)), x=x, y=y, q=q)
        Q = s.above_one()
        rep.expect_equal("qx (+) qy = q(x (+) y), q>1", sup(scale(Q, x), scale(Q, y)),
                         scale(Q, sup(x, y)), x=x, y=y, q=Q)

        half = Fraction(1, 2)
        xz, yz = scale(2, convex_combine(x, z, half)), scale(2, convex_combine(y, z, half))
        rep.expect_equal("2(x +_1/2 z) = x + z", xz, add(x, z), x=x, z=z)
        rep.expect_equal("(x+z) (+) (y+z) = (x (+) y) + z", sup(xz, yz), add(sup(x, y), z),
                         x=x, y=y, z=z)

        # a pair known to be ordered, so implications are not vacuous
        above = sup(x, s.vector(dim))
        if leq(x, above):
            rep.expect("x <= y => x+z <= y+z", leq(add(x, z), add(above, z)), x=x, y=above, z=z)
        rep.expect("x <= y <=> -y <= -x", leq(x, y) == leq(neg(y), neg(x)), x=x, y=y)
        rep.expect("x <= y <=> -y <= -x (ordered pair)", leq(x, above) == leq(neg(above), neg(x)),
                   x=x, y=above)
        nonneg = tuple(abs(c) for c in x)
        rep.expect("0 <= x => 0 <= qx", not leq(zero, nonneg) or leq(zero, scale(Q, nonneg)),
                   x=nonneg, q=Q)

        lo, hi = inf(x, y), sup(x, y)
        rep.expect_equal("inf = componentwise min", lo, vector_cwise_inf(x, y), x=x, y=y)
        rep.expect("inf <= x and inf <= y", leq(lo, x) and leq(lo, y), lo, None, x=x, y=y)
        rep.expect("x <= sup and y <= sup", leq(x, hi) and leq(y, hi), hi, None, x=x, y=y)
        below = sub(lo, tuple(abs(c) for c in s.vector(dim)))
        rep.expect("lower bound <= inf", leq(below, lo), below, lo, x=x, y=y)
        w = s.vector(dim)
        if leq(w, x) and leq(w, y):
            rep.expect("any common lower bound <= inf", leq(w, lo), w, lo, x=x, y=y)
        rep.expect_equal("x (+) (x inf y) = x", sup(x, lo), x, x=x, y=y)
    return rep


# ---------------------------------------------------------------- support functions


@dataclass(frozen=True)
class SupportFunctionView:
    """``u -> max_{v in A} <u, v>``, evaluated on demand."""

    source: Polytope

    def __call__(self, u: Sequence) -> Fraction:
        return support(self.source, u)


def support_embed(A: Polytope, directions: Sequence[Sequence]) -> List[Fraction]:
    out = []
    for u in directions:
        u = tuple(Fraction(c) for c in u)
        if len(u) != A.dim:
            raise DimensionError(f"direction has dim {len(u)}, polytope has dim {A.dim}")
        if not any(u):
            raise DomainError("zero direction")
        out.append(support(A, u))
    return out


def direction_grid(dim: int) -> List[QVector]:
    """Signed unit vectors, then every +-1 sign pattern."""
    one, zero = Fraction(1), Fraction(0)
    grid = []
    for i in range(dim):
        for sgn in (one, -one):
            grid.append(tuple(sgn if j == i else zero for j in range(dim)))
    for signs in product((one, -one), repeat=dim):
        if dim > 1:
            grid.append(tuple(signs))
    return grid


def sample_directions(dim: int, s: Sampler, count: int) -> List[QVector]:
    dirs = direction_grid(dim)[:count]
    while len(dirs) < count:
        dirs.append(s.nonzero_vector(dim, -2, 2))
    return dirs


def _separating_lp(a: QVector, B: Polytope) -> Optional[QVector]:
    """Direction u in [-1,1]^n with <u,a> > max_B <u,.>, if one exists."""
    n = B.dim
    nv = n + 1  # u_1..u_n, t
    le = []
    for b in B.vertices:
        le.append((list(b) + [Fraction(-1)], Fraction(0)))
    for i in range(n):
        row = [Fraction(0)] * nv
        row[i] = Fraction(-1)
        le.append((row, Fraction(1)))
    ub = [Fraction(1)] * n + [None]
    out = lp_solve(LinearProgram(nv, list(a) + [Fraction(-1)], (), frozenset(), ub, le))
    if out.status == OPTIMAL and out.value > 0:
        return out.point[:n]
    return None


def separating_direction(A: Polytope, B: Polytope, extra: Sequence[QVector] = ()) -> Optional[QVector]:
    """A direction where the support functions of A and B differ.

    Tries differences of vertices and the given directions first; falls back
    to an LP that separates a vertex of one polytope from the other.
    Returns None exactly when ``A == B``.
    """
    check_dims(A.vertices[0], B.vertices[0])
    cands = [sub(a, b) for a in A.vertices for b in B.vertices]
    cands += [sub(b, a) for a in A.vertices for b in B.vertices]
    cands += list(extra)
    for u in cands:
        if any(u) and support(A, u) != support(B, u):
            return u
    for P, Q in ((A, B), (B, A)):
        for v in P.vertices:
            if not contains_point(Q, v):
                u = _separating_lp(v, Q)
                if u is not None:
                    return u
    return None


def check_embedding_homomorphism(
    sampler: Sampler,
    cases: int = 200,
    dims: Sequence[int] = (2, 3),
    directions: int = 50,
    max_generators: int = 6,
    mix_fn=mix,
    join_fn=hull_join,
    support_fn=support,
) -> LawReport:
    """Support functions carry mixtures to convex combinations and joins to max."""
    s = sampler.fork("embedding")
    rep = LawReport("embedding_homomorphism", sampler.seed)
    probes = separated = distinct = 0
    for k in range(cases):
        dim = dims[k % len(dims)]
        A = s.polytope(dim, max_generators)
        B = s.polytope(dim, max_generators)
        p = s.unit_open()
        M, J = mix_fn(A, B, p), join_fn(A, B)
        rep.cases += 1
        a_in_j = is_subset(A, J)
        for u in sample_directions(dim, s, directions):
            hA, hB = support_fn(A, u), support_fn(B, u)
            probes += 1
            rep.expect_equal("h_(A +_p B)(u) = p h_A(u) + (1-p) h_B(u)", support_fn(M, u),
                             p * hA + (1 - p) * hB, A=A, B=B, p=p, u=u)
            rep.expect_equal("h_(A (+) B)(u) = max(h_A(u), h_B(u))", support_fn(J, u),
                             max(hA, hB), A=A, B=B, u=u)
            t = s.positive(3)
            rep.expect_equal("h_A(t u) = t h_A(u)", support_fn(A, scale(t, u)), t * hA, A=A, u=u, t=t)
            if a_in_j:
                rep.expect("A subset of B => h_A <= h_B", hA <= support_fn(J, u), A=A, B=J, u=u)
        u, v = s.nonzero_vector(dim, -2, 2), s.nonzero_vector(dim, -2, 2)
        if any(add(u, v)):
            rep.expect("h_A(u+v) <= h_A(u) + h_A(v)",
                       support_fn(A, add(u, v)) <= support_fn(A, u) + support_fn(A, v), A=A, u=u, v=v)
        if A != B:
            distinct += 1
            w = separating_direction(A, B, direction_grid(dim))
            ok = w is not None and support_fn(A, w) != support_fn(B, w)
            separated += ok
            rep.expect("A != B => some direction separates h_A, h_B", ok, A=A, B=B)
    rep.stats.update(probes=probes, distinct_pairs=distinct, separated_pairs=separated)
    return rep
