"""Seeded generators of bounded-denominator rationals, points and polytopes."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import List

from .numeric import QVector
from .polytope import Polytope, canonicalize


class Sampler:
    """Reproducible source of exact random values.

    ``fork(name)`` gives an independent stream keyed by ``(seed, name)`` so
    that each law checker draws the same cases no matter which other
    checkers ran before it.
    """

    def __init__(self, seed: int = 0, denominator_bound: int = 64, stream: str = ""):
        if denominator_bound < 2:
            raise ValueError("denominator_bound must be >= 2")
        self.seed = seed
        self.denominator_bound = denominator_bound
        self.stream = stream
        self.rng = random.Random(f"{seed}/{stream}")

    def fork(self, name: str) -> "Sampler":
        return Sampler(self.seed, self.denominator_bound, f"{self.stream}/{name}")

    def _den(self, lo: int = 1) -> int:
        return self.rng.randint(lo, self.denominator_bound)

    def unit_open(self) -> Fraction:
        """A rational strictly inside (0, 1)."""
        d = self._den(2)
        return Fraction(self.rng.randint(1, d - 1), d)

    def unit_closed(self) -> Fraction:
        d = self._den()
        return Fraction(self.rng.randint(0, d), d)

    def rational(self, lo: int = -4, hi: int = 4) -> Fraction:
        d = self._den()
        return Fraction(self.rng.randint(lo * d, hi * d), d)

    def nonzero_rational(self, lo: int = -4, hi: int = 4) -> Fraction:
        while True:
            q = self.rational(lo, hi)
            if q:
                return q

    def positive(self, hi: int = 4) -> Fraction:
        d = self._den()
        return Fraction(self.rng.randint(1, hi * d), d)

    def above_one(self, hi: int = 4) -> Fraction:
        d = self._den()
        return Fraction(self.rng.randint(d + 1, hi * d), d)

    def vector(self, dim: int, lo: int = -4, hi: int = 4) -> QVector:
        return tuple(self.rational(lo, hi) for _ in range(dim))

    def nonzero_vector(self, dim: int, lo: int = -4, hi: int = 4) -> QVector:
        while True:
            v = self.vector(dim, lo, hi)
            if any(v):
                return v

    def weights(self, k: int) -> List[Fraction]:
        """Random convex weights with small integer numerators."""
        while True:
            raw = [self.rng.randint(0, self.denominator_bound) for _ in range(k)]
            total = sum(raw)
            if total:
                return [Fraction(r, total) for r in raw]

    def point_in(self, P: Polytope) -> QVector:
        vs = P.vertices
        if len(vs) == 1:
            return vs[0]
        # occasionally return a vertex so boundary cases are exercised
        if self.rng.random() < 0.1:
            return self.rng.choice(vs)
        w = self.weights(len(vs))
        return tuple(
            sum((wi * v[i] for wi, v in zip(w, vs)), Fraction(0)) for i in range(P.dim)
        )

    def polytope(self, dim: int, max_generators: int = 6, lo: int = -2, hi: int = 2) -> Polytope:
        k = self.rng.randint(1, max_generators)
        return canonicalize([self.vector(dim, lo, hi) for _ in range(k)])

    def choice(self, seq):
        return self.rng.choice(seq)

    def chance(self, prob: float) -> bool:
        return self.rng.random() < prob
