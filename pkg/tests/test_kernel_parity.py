import copy
import os
import subprocess
import sys

import pytest

from convsemi import _simplex_py, lp
from convsemi.lp import _build, _standard_form
from convsemi.sampling import Sampler

from oracles import hull_max_program

compiled = pytest.mark.skipif("cython" not in lp.BACKENDS, reason="compiled kernel not built")


def tableaux(seed, bound, n=25):
    s = Sampler(seed, bound)
    for _ in range(n):
        dim = s.choice([2, 3])
        pts = [s.vector(dim) for _ in range(s.choice([3, 5, 8]))]
        rows, c, _, total = _standard_form(hull_max_program(pts, s.vector(dim)))
        yield _build(rows, c, total)


def solve(kernel, tab):
    tab = copy.deepcopy(tab)
    status, D = kernel.two_phase(tab.rows, tab.objs, tab.basis, tab.n_struct)
    return status, D, tab.basis, tab.rows, tab.objs


@compiled
@pytest.mark.parametrize("bound", [4, 64, 10**9])
def test_two_phase_identical(bound):
    # small denominators stay in int64; 10**9 overflows and takes the bigint path
    c = lp.BACKENDS["cython"]
    for tab in tableaux(bound, bound):
        assert solve(c, tab) == solve(_simplex_py, tab)


@compiled
def test_bigint_path_matches():
    c = lp.BACKENDS["cython"]
    for tab in tableaux(1, 64, 10):
        a, b = copy.deepcopy(tab), copy.deepcopy(tab)
        r1 = c.two_phase_bigint(a.rows, a.objs, a.basis, a.n_struct)
        r2 = c.two_phase(b.rows, b.objs, b.basis, b.n_struct)
        assert r1 == r2 and a.rows == b.rows


@compiled
def test_pivot_identical():
    c = lp.BACKENDS["cython"]
    tab = next(tableaux(2, 16))
    a, b = copy.deepcopy(tab), copy.deepcopy(tab)
    s = next(j for j, v in enumerate(tab.rows[0][:-1]) if v)
    assert c.pivot(a.rows, a.objs, a.basis, 1, 0, s) == _simplex_py.pivot(b.rows, b.objs, b.basis, 1, 0, s)
    assert (a.rows, a.objs, a.basis) == (b.rows, b.objs, b.basis)


def test_env_var_forces_pure_python():
    env = dict(os.environ, CONVSEMI_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from convsemi import lp; print(lp.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
