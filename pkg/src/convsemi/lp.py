"""Exact rational linear programming.

Two-phase primal simplex with Bland's rule over an integer (fraction-free)
tableau. The pivot loop lives in a compiled extension when it is
available and falls back to an equivalent pure-Python module otherwise;
set ``CONVSEMI_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import _simplex_py
from .numeric import DomainError

try:
    if os.environ.get("CONVSEMI_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _simplex_c
except ImportError:
    _simplex_c = None

BACKENDS: Dict[str, object] = {"python": _simplex_py}
if _simplex_c is not None:
    BACKENDS["cython"] = _simplex_c
BACKEND = "cython" if _simplex_c is not None else "python"

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Row = Tuple[Sequence[Fraction], Fraction]


@dataclass(frozen=True)
class LinearProgram:
    """maximize ``objective . x`` subject to the listed constraints.

    Variables not in ``nonneg_vars`` are free. ``upper_bounds`` is either
    empty or has one optional bound per variable. ``le_constraints`` are
    ``row . x <= rhs`` rows, a convenience on top of the equality form.
    """

    num_vars: int
    objective: Sequence[Fraction]
    eq_constraints: Sequence[Row] = ()
    nonneg_vars: frozenset = frozenset()
    upper_bounds: Sequence[Optional[Fraction]] = ()
    le_constraints: Sequence[Row] = ()

    def validate(self) -> None:
        n = self.num_vars
        if n <= 0:
            raise DomainError("num_vars must be positive")
        if len(self.objective) != n:
            raise DomainError("objective length != num_vars")
        for coeffs, _ in list(self.eq_constraints) + list(self.le_constraints):
            if len(coeffs) != n:
                raise DomainError("constraint row length != num_vars")
        if self.upper_bounds and len(self.upper_bounds) != n:
            raise DomainError("upper_bounds length != num_vars")
        if any(not 0 <= j < n for j in self.nonneg_vars):
            raise DomainError("nonneg variable index out of range")


@dataclass(frozen=True)
class LpOutcome:
    status: str
    value: Optional[Fraction] = None
    point: Optional[Tuple[Fraction, ...]] = None


@dataclass
class _Tableau:
    rows: List[List[int]]
    objs: List[List[int]]
    basis: List[int]
    D: int = 1
    n_struct: int = 0


def _integer_row(values: Sequence) -> List[int]:
    """Scale a row of rationals to coprime integers (positive factor)."""
    lcm = 1
    for v in values:
        d = v.denominator
        if d != 1:
            lcm = lcm * d // math.gcd(lcm, d)
    if lcm == 1:
        out = [v.numerator for v in values]
    else:
        out = [v.numerator * (lcm // v.denominator) for v in values]
    g = 0
    for v in out:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                return out
    if g > 1:
        out = [v // g for v in out]
    return out


def _standard_form(prog: LinearProgram):
    """Integer rows of ``A y = b, y >= 0`` plus integer costs and a back-map.

    Free variables are split into two nonnegative columns; ``<=`` rows and
    upper bounds get one slack column each.
    """
    n = prog.num_vars
    columns: List[Tuple[int, int]] = []  # (original var, sign)
    for j in range(n):
        columns.append((j, 1))
        if j not in prog.nonneg_vars:
            columns.append((j, -1))

    def expand(ints):
        return [ints[j] * sgn for j, sgn in columns]

    eq_rows = []
    for coeffs, rhs in prog.eq_constraints:
        ints = _integer_row([Fraction(c) for c in coeffs] + [Fraction(rhs)])
        eq_rows.append((expand(ints), ints[-1]))
    slack_rows = []
    for coeffs, rhs in prog.le_constraints:
        ints = _integer_row([Fraction(c) for c in coeffs] + [Fraction(rhs)])
        slack_rows.append((expand(ints), ints[-1]))
    for j, ub in enumerate(prog.upper_bounds or ()):
        if ub is None:
            continue
        ub = Fraction(ub)
        unit = [0] * n
        unit[j] = ub.denominator
        slack_rows.append((expand(unit), ub.numerator))
    n_slack = len(slack_rows)
    total = len(columns) + n_slack
    rows = [(r + [0] * n_slack, b) for r, b in eq_rows]
    for k, (r, b) in enumerate(slack_rows):
        extra = [0] * n_slack
        extra[k] = 1
        rows.append((r + extra, b))
    costs = [Fraction(c) for c in prog.objective]
    c_int = _integer_row(costs) if any(costs) else [0] * n
    return rows, expand(c_int) + [0] * n_slack, columns, total


def _build(int_rows, c_int, total) -> _Tableau:
    m = len(int_rows)
    rows: List[List[int]] = []
    for i, (coeffs, rhs) in enumerate(int_rows):
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [0] * m
        art[i] = 1
        rows.append(coeffs + art + [rhs])
    width = total + m + 1
    phase1 = [0] * width
    for r in rows:
        for j in range(total):
            phase1[j] -= r[j]
        phase1[-1] -= r[-1]
    phase2 = [-c for c in c_int] + [0] * (m + 1)
    basis = [total + i for i in range(m)]
    return _Tableau(rows=rows, objs=[phase1, phase2], basis=basis, n_struct=total)


def lp_solve(prog: LinearProgram, backend: Optional[str] = None) -> LpOutcome:
    """Solve exactly. Deterministic for a fixed program."""
    prog.validate()
    kernel = BACKENDS[backend or BACKEND]
    int_rows, c_int, columns, total = _standard_form(prog)
    n = prog.num_vars
    if not int_rows:
        # only sign constraints: optimum at 0 unless some direction improves
        for j in range(n):
            c = Fraction(prog.objective[j])
            if c > 0 or (c < 0 and j not in prog.nonneg_vars):
                return LpOutcome(UNBOUNDED)
        return LpOutcome(OPTIMAL, Fraction(0), (Fraction(0),) * n)

    tab = _build(int_rows, c_int, total)
    status, tab.D = kernel.two_phase(tab.rows, tab.objs, tab.basis, total)
    if status == _simplex_py.INFEASIBLE:
        return LpOutcome(INFEASIBLE)
    if status == _simplex_py.UNBOUNDED:
        return LpOutcome(UNBOUNDED)

    y = [0] * total
    for i, b in enumerate(tab.basis):
        if b < total:
            y[b] = tab.rows[i][-1]
    x = [0] * n
    for col, (j, sgn) in enumerate(columns):
        x[j] += sgn * y[col]
    point = tuple(Fraction(v, tab.D) for v in x)
    value = sum((Fraction(c) * v for c, v in zip(prog.objective, point)), Fraction(0))
    return LpOutcome(OPTIMAL, value, point)


def check_feasible(prog: LinearProgram, point: Sequence[Fraction]) -> bool:
    """Exact re-substitution of ``point`` into every constraint."""
    for j in prog.nonneg_vars:
        if point[j] < 0:
            return False
    for j, ub in enumerate(prog.upper_bounds or ()):
        if ub is not None and point[j] > ub:
            return False
    for coeffs, rhs in prog.eq_constraints:
        if sum(Fraction(c) * v for c, v in zip(coeffs, point)) != rhs:
            return False
    for coeffs, rhs in prog.le_constraints:
        if sum(Fraction(c) * v for c, v in zip(coeffs, point)) > rhs:
            return False
    return True


def dump_tableau(prog: LinearProgram) -> str:
    """Initial phase-1 tableau as text, for debugging."""
    int_rows, c_int, _, total = _standard_form(prog)
    tab = _build(int_rows, c_int, total)
    lines = [f"D={tab.D} structural={total}"]
    for b, row in zip(tab.basis, tab.rows):
        lines.append(f"x{b:<3d} | " + " ".join(f"{v:>4d}" for v in row))
    for name, row in zip(("ph1", "ph2"), tab.objs):
        lines.append(f"{name:<4s} | " + " ".join(f"{v:>4d}" for v in row))
    return "\n".join(lines)
