"""Fraction-free integer simplex kernel (pure Python).

The tableau holds integers only. Every stored entry equals ``D`` times the
true rational entry, where ``D`` is a common positive denominator (the
basis determinant up to sign). A pivot on ``a = T[r][s]`` updates every
other row as ``(T[i][j] * a - T[i][s] * T[r][j]) // D`` and then sets
``D = a``; the division is always exact (Edmonds/Bareiss). Objective rows
are pivoted like constraint rows.

Must stay line-for-line equivalent to ``_simplex_c.pyx``.
"""

OPTIMAL = 0
UNBOUNDED = 1


def pivot(rows, objs, basis, D, r, s):
    """Pivot on ``rows[r][s]`` in place; returns the new common denominator."""
    prow = rows[r]
    a = prow[s]
    width = len(prow)
    for i in range(len(rows)):
        if i == r:
            continue
        row = rows[i]
        f = row[s]
        if f == 0:
            # row[j] * a / D stays integral: a/D is a ratio of minors
            for j in range(width):
                if row[j]:
                    row[j] = row[j] * a // D
        else:
            for j in range(width):
                row[j] = (row[j] * a - f * prow[j]) // D
    for row in objs:
        f = row[s]
        if f == 0:
            for j in range(width):
                if row[j]:
                    row[j] = row[j] * a // D
        else:
            for j in range(width):
                row[j] = (row[j] * a - f * prow[j]) // D
    basis[r] = s
    if a < 0:
        for row in rows:
            for j in range(width):
                row[j] = -row[j]
        for row in objs:
            for j in range(width):
                row[j] = -row[j]
        a = -a
    return a


def run(rows, objs, basis, D, k, n_enter):
    """Maximise with objective row ``objs[k]`` using Bland's rule.

    Only columns ``< n_enter`` may enter. Returns ``(status, D)``.
    """
    obj = objs[k]
    m = len(rows)
    while True:
        s = -1
        for j in range(n_enter):
            if obj[j] < 0:
                s = j
                break
        if s < 0:
            return OPTIMAL, D
        r = -1
        best_num = 0
        best_den = 1
        for i in range(m):
            row = rows[i]
            a = row[s]
            if a > 0:
                num = row[-1]
                if r < 0:
                    r, best_num, best_den = i, num, a
                else:
                    lhs = num * best_den
                    rhs = best_num * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                        r, best_num, best_den = i, num, a
        if r < 0:
            return UNBOUNDED, D
        D = pivot(rows, objs, basis, D, r, s)


INFEASIBLE = 2


def two_phase(rows, objs, basis, n_struct):
    """Phase 1 on ``objs[0]``, purge artificials, phase 2 on ``objs[1]``.

    Artificial columns (``>= n_struct``) start basic with ``D = 1`` and are
    never allowed to re-enter. Returns ``(status, D)``.
    """
    _, D = run(rows, objs, basis, 1, 0, n_struct)
    if objs[0][-1] < 0:
        return INFEASIBLE, D
    # zero-level artificials leave the basis; a row with no structural
    # entry is redundant and stays inert
    for i in range(len(rows)):
        if basis[i] >= n_struct:
            row = rows[i]
            for j in range(n_struct):
                if row[j] != 0:
                    D = pivot(rows, objs, basis, D, i, j)
                    break
    return run(rows, objs, basis, D, 1, n_struct)
