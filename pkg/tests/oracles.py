"""Independent oracles shared by several test modules."""
from fractions import Fraction as F

from convsemi.lp import LinearProgram


def hull_max_program(points, c):
    """max c.x over conv(points), with x free and weights lam >= 0."""
    dim, k = len(c), len(points)
    eq = []
    for i in range(dim):
        row = [F(0)] * (dim + k)
        row[i] = F(1)
        for j, p in enumerate(points):
            row[dim + j] = -p[i]
        eq.append((row, F(0)))
    eq.append(([F(0)] * dim + [F(1)] * k, F(1)))
    return LinearProgram(dim + k, list(c) + [F(0)] * k, eq, frozenset(range(dim, dim + k)))
