"""V-represented polytopes over Q^n.

A :class:`Polytope` always holds its extreme points only, sorted
lexicographically, so two polytopes are equal as sets exactly when their
dataclass fields are equal. Every hull question goes through an exact LP.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .lp import OPTIMAL, LinearProgram, lp_solve
from .numeric import (
    DimensionError,
    DomainError,
    QVector,
    check_dims,
    dot,
    format_vector,
    parse_vector,
    vector_cwise_sup,
)


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: Tuple[QVector, ...]

    def __post_init__(self):
        if not self.vertices:
            raise DomainError("a polytope needs at least one vertex")

    def __contains__(self, x) -> bool:
        return contains_point(self, tuple(x))

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": [format_vector(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "Polytope":
        dim = data.get("dim", data.get("dimension"))
        points = [parse_vector(v) for v in data["vertices"]]
        p = canonicalize(points)
        if dim is not None and p.dim != int(dim):
            raise DimensionError(f"declared dim {dim} but vertices have dim {p.dim}")
        return p


@lru_cache(maxsize=1 << 16)
def _in_hull(points: Tuple[QVector, ...], x: QVector) -> bool:
    if x in points:
        return True
    dim = len(x)
    for i in range(dim):
        lo = min(v[i] for v in points)
        hi = max(v[i] for v in points)
        if not lo <= x[i] <= hi:
            return False
    if len(points) == 1:
        return False
    k = len(points)
    rows = [([v[i] for v in points], x[i]) for i in range(dim)]
    rows.append(([Fraction(1)] * k, Fraction(1)))
    prog = LinearProgram(
        num_vars=k,
        objective=[Fraction(0)] * k,
        eq_constraints=rows,
        nonneg_vars=frozenset(range(k)),
    )
    return lp_solve(prog).status == OPTIMAL


def hull_weights(points: Sequence[QVector], x: QVector):
    """Convex weights expressing ``x`` over ``points``, or None."""
    k = len(points)
    dim = len(x)
    rows = [([v[i] for v in points], x[i]) for i in range(dim)]
    rows.append(([Fraction(1)] * k, Fraction(1)))
    out = lp_solve(LinearProgram(k, [Fraction(0)] * k, rows, frozenset(range(k))))
    return out.point if out.status == OPTIMAL else None


def canonicalize(points: Iterable[Sequence]) -> Polytope:
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise DomainError("cannot canonicalize an empty point set")
    dim = check_dims(*pts)
    if dim == 0:
        raise DimensionError("points must have positive dimension")
    uniq = sorted(set(pts))
    if len(uniq) <= 2:
        return Polytope(dim, tuple(uniq))
    # lexicographic extremes are always vertices; test the rest
    keep = []
    for i, p in enumerate(uniq):
        if i == 0 or i == len(uniq) - 1:
            keep.append(p)
            continue
        others = tuple(uniq[:i] + uniq[i + 1:])
        if not _in_hull(others, p):
            keep.append(p)
    return Polytope(dim, tuple(keep))


def _same_dim(a: Polytope, b: Polytope) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


def contains_point(P: Polytope, x: Sequence) -> bool:
    x = tuple(Fraction(c) for c in x)
    if len(x) != P.dim:
        raise DimensionError(f"point has dim {len(x)}, polytope has dim {P.dim}")
    return _in_hull(P.vertices, x)


def mix(A: Polytope, B: Polytope, p) -> Polytope:
    """Minkowski mixture ``p*A + (1-p)*B``."""
    _same_dim(A, B)
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise DomainError(f"mixing weight {p} outside [0, 1]")
    if p == 1:
        return A
    if p == 0:
        return B
    q = 1 - p
    cands = [
        tuple(p * x + q * y for x, y in zip(a, b))
        for a in A.vertices
        for b in B.vertices
    ]
    return canonicalize(cands)


def hull_join(A: Polytope, B: Polytope) -> Polytope:
    _same_dim(A, B)
    if A == B:
        return A
    return canonicalize(A.vertices + B.vertices)


def support(A: Polytope, u: Sequence) -> Fraction:
    u = tuple(Fraction(c) for c in u)
    if len(u) != A.dim:
        raise DimensionError(f"direction has dim {len(u)}, polytope has dim {A.dim}")
    return max(dot(u, v) for v in A.vertices)


def polytope_equal(A: Polytope, B: Polytope) -> bool:
    _same_dim(A, B)
    return A.vertices == B.vertices


def is_subset(A: Polytope, B: Polytope) -> bool:
    _same_dim(A, B)
    return all(contains_point(B, v) for v in A.vertices)


def is_sup_closed(P: Polytope) -> bool:
    vs = P.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if not contains_point(P, vector_cwise_sup(vs[i], vs[j])):
                return False
    return True


def translate(P: Polytope, t: Sequence) -> Polytope:
    t = tuple(Fraction(c) for c in t)
    if len(t) != P.dim:
        raise DimensionError("translation has wrong dimension")
    # translation preserves extremality and lexicographic order
    return Polytope(P.dim, tuple(tuple(a + b for a, b in zip(v, t)) for v in P.vertices))


def box(lo: Sequence, hi: Sequence) -> Polytope:
    """Axis-aligned box with the given corners."""
    from itertools import product

    lo = [Fraction(c) for c in lo]
    hi = [Fraction(c) for c in hi]
    return canonicalize(product(*[(a, b) for a, b in zip(lo, hi)]))


def unit_square() -> Polytope:
    return box((0, 0), (1, 1))
