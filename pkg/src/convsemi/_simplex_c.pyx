# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_simplex_py``. Same algorithm, same pivot order.

``two_phase`` first copies the tableau into a flat C int64 buffer and runs
the whole solve there. Products are formed in 128 bits and every quotient
is range-checked.
On overflow the copy is discarded and the solve reruns on the Python-int
lists, so the result never depends on which path ran.
"""
from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128"
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil

cdef long long LL_MIN = -9223372036854775807LL - 1
cdef long long LL_MAX = 9223372036854775807LL

OPTIMAL = 0
UNBOUNDED = 1
INFEASIBLE = 2


# ------------------------------------------------------------ int64 path

cdef int _c_pivot(long long *T, Py_ssize_t nrows, Py_ssize_t W, Py_ssize_t *basis,
                  long long *D, Py_ssize_t r, Py_ssize_t s) noexcept nogil:
    # 0 on success, -1 on overflow
    cdef long long *prow = T + r * W
    cdef long long a = prow[s]
    cdef long long d = D[0]
    cdef long long f, t1
    cdef i128 q
    cdef long long *row
    cdef Py_ssize_t i, j
    # products go through 128 bits; only the exact quotient must fit
    for i in range(nrows):
        if i == r:
            continue
        row = T + i * W
        f = row[s]
        if f == 0:
            for j in range(W):
                if row[j] != 0:
                    q = (<i128>row[j] * a) / d
                    if q > LL_MAX or q < -LL_MAX:
                        return -1
                    row[j] = <long long>q
        else:
            for j in range(W):
                q = (<i128>row[j] * a - <i128>f * prow[j]) / d
                if q > LL_MAX or q < -LL_MAX:
                    return -1
                row[j] = <long long>q
    basis[r] = s
    if a < 0:
        for i in range(nrows * W):
            if T[i] == LL_MIN:
                return -1
            T[i] = -T[i]
        a = -a
    D[0] = a
    return 0


cdef int _c_run(long long *T, Py_ssize_t m, Py_ssize_t W, Py_ssize_t *basis,
                long long *D, Py_ssize_t obj_row, Py_ssize_t n_enter) noexcept nogil:
    cdef long long *obj = T + obj_row * W
    cdef Py_ssize_t i, j, s, r
    cdef long long a, num, best_num, best_den
    cdef i128 lhs, rhs
    while True:
        s = -1
        for j in range(n_enter):
            if obj[j] < 0:
                s = j
                break
        if s < 0:
            return 0
        r = -1
        best_num = 0
        best_den = 1
        for i in range(m):
            a = T[i * W + s]
            if a > 0:
                num = T[i * W + W - 1]
                if r < 0:
                    r = i
                    best_num = num
                    best_den = a
                else:
                    lhs = <i128>num * best_den
                    rhs = <i128>best_num * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                        r = i
                        best_num = num
                        best_den = a
        if r < 0:
            return 1
        if _c_pivot(T, m + 2, W, basis, D, r, s) < 0:
            return -1


cdef int _c_two_phase(long long *T, Py_ssize_t m, Py_ssize_t W, Py_ssize_t *basis,
                      long long *D, Py_ssize_t n_struct) noexcept nogil:
    cdef Py_ssize_t i, j
    if _c_run(T, m, W, basis, D, m, n_struct) < 0:
        return -1
    if T[m * W + W - 1] < 0:
        return 2
    for i in range(m):
        if basis[i] >= n_struct:
            for j in range(n_struct):
                if T[i * W + j] != 0:
                    if _c_pivot(T, m + 2, W, basis, D, i, j) < 0:
                        return -1
                    break
    return _c_run(T, m, W, basis, D, m + 1, n_struct)


cdef object _try_int64(list rows, list objs, list basis, Py_ssize_t n_struct):
    """Solve in int64; None when some value does not fit."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t W = len(<list>rows[0])
    cdef long long *T = <long long *>malloc((m + 2) * W * sizeof(long long))
    cdef Py_ssize_t *B = <Py_ssize_t *>malloc(m * sizeof(Py_ssize_t))
    cdef long long D = 1
    cdef Py_ssize_t i, j
    cdef int st
    cdef list row
    if T == NULL or B == NULL:
        free(T)
        free(B)
        raise MemoryError()
    try:
        try:
            for i in range(m):
                row = <list>rows[i]
                for j in range(W):
                    T[i * W + j] = row[j]
                B[i] = basis[i]
            for i in range(2):
                row = <list>objs[i]
                for j in range(W):
                    T[(m + i) * W + j] = row[j]
        except OverflowError:
            return None
        with nogil:
            st = _c_two_phase(T, m, W, B, &D, n_struct)
        if st < 0:
            return None
        for i in range(m):
            row = <list>rows[i]
            for j in range(W):
                row[j] = T[i * W + j]
            basis[i] = B[i]
        for i in range(2):
            row = <list>objs[i]
            for j in range(W):
                row[j] = T[(m + i) * W + j]
        return st, D
    finally:
        free(T)
        free(B)


# ------------------------------------------------------------ Python-int path

cdef inline void _eliminate(list row, list prow, Py_ssize_t s, object a,
                            object D, Py_ssize_t width):
    cdef Py_ssize_t j
    cdef object f = row[s]
    cdef object v
    if f == 0:
        for j in range(width):
            v = row[j]
            if v:
                row[j] = v * a // D
    else:
        for j in range(width):
            row[j] = (row[j] * a - f * prow[j]) // D


cdef inline void _negate(list row, Py_ssize_t width):
    cdef Py_ssize_t j
    for j in range(width):
        row[j] = -row[j]


def pivot(list rows, list objs, list basis, object D, Py_ssize_t r, Py_ssize_t s):
    cdef list prow = rows[r]
    cdef object a = prow[s]
    cdef Py_ssize_t width = len(prow)
    cdef Py_ssize_t i
    cdef list row
    for i in range(len(rows)):
        if i != r:
            _eliminate(<list>rows[i], prow, s, a, D, width)
    for row in objs:
        _eliminate(row, prow, s, a, D, width)
    basis[r] = s
    if a < 0:
        for row in rows:
            _negate(row, width)
        for row in objs:
            _negate(row, width)
        a = -a
    return a


def run(list rows, list objs, list basis, object D, Py_ssize_t k, Py_ssize_t n_enter):
    cdef list obj = objs[k]
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t i, j, s, r
    cdef list row
    cdef object a, num, best_num, best_den, lhs, rhs
    while True:
        s = -1
        for j in range(n_enter):
            if obj[j] < 0:
                s = j
                break
        if s < 0:
            return 0, D
        r = -1
        best_num = 0
        best_den = 1
        for i in range(m):
            row = <list>rows[i]
            a = row[s]
            if a > 0:
                num = row[len(row) - 1]
                if r < 0:
                    r = i
                    best_num = num
                    best_den = a
                else:
                    lhs = num * best_den
                    rhs = best_num * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                        r = i
                        best_num = num
                        best_den = a
        if r < 0:
            return 1, D
        D = pivot(rows, objs, basis, D, r, s)


def two_phase_bigint(list rows, list objs, list basis, Py_ssize_t n_struct):
    cdef Py_ssize_t i, j
    cdef list row
    cdef object D
    _, D = run(rows, objs, basis, 1, 0, n_struct)
    if (<list>objs[0])[len(<list>objs[0]) - 1] < 0:
        return 2, D
    for i in range(len(rows)):
        if basis[i] >= n_struct:
            row = <list>rows[i]
            for j in range(n_struct):
                if row[j] != 0:
                    D = pivot(rows, objs, basis, D, i, j)
                    break
    return run(rows, objs, basis, D, 1, n_struct)


def two_phase(list rows, list objs, list basis, Py_ssize_t n_struct):
    if rows and len(objs) == 2:
        res = _try_int64(rows, objs, basis, n_struct)
        if res is not None:
            return res
    return two_phase_bigint(rows, objs, basis, n_struct)
