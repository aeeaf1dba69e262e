"""Compare the compiled and pure-Python simplex kernels.

    python benchmarks/bench_kernel.py [--repeat N]

Times three workloads on both backends: raw LPs over random polytopes,
and W-membership LPs on the unit square.
Results are identical across backends; only the wall time differs.
A second table times the kernel alone on prebuilt integer tableaux, which
isolates the pivoting work from Fraction conversion around it.
"""
import argparse
import time
from fractions import Fraction

from convsemi import lp
from convsemi.lp import LinearProgram, _build, _standard_form, lp_solve
from convsemi.polytope import _in_hull
from convsemi.sampling import Sampler


def hull_programs(n, dim=3, k=8, seed=0):
    s = Sampler(seed, 64)
    progs = []
    for _ in range(n):
        pts = [s.vector(dim) for _ in range(k)]
        c = s.vector(dim)
        # x_i - sum lam_j p_ji = 0 with x free, sum lam = 1
        eq = []
        for i in range(dim):
            row = [Fraction(0)] * (dim + k)
            row[i] = Fraction(1)
            for j, p in enumerate(pts):
                row[dim + j] = -p[i]
            eq.append((row, Fraction(0)))
        eq.append(([Fraction(0)] * dim + [Fraction(1)] * k, Fraction(1)))
        obj = list(c) + [Fraction(0)] * k
        progs.append(LinearProgram(dim + k, obj, eq, frozenset(range(dim, dim + k))))
    return progs


def membership_programs(n, seed=1):
    s = Sampler(seed, 64)
    vs = [(Fraction(a), Fraction(b)) for a in (0, 1) for b in (0, 1)]
    progs = []
    for _ in range(n):
        x = s.vector(2)
        k = len(vs)
        rows = [([x[i]] + [v[i] for v in vs] + [-v[i] for v in vs], Fraction(0)) for i in range(2)]
        rows.append(([Fraction(1)] * (1 + k) + [Fraction(0)] * k, Fraction(1)))
        rows.append(([Fraction(0)] * (1 + k) + [Fraction(1)] * k, Fraction(1)))
        obj = [Fraction(1)] + [Fraction(0)] * (2 * k)
        progs.append(LinearProgram(1 + 2 * k, obj, rows, frozenset(range(1 + 2 * k))))
    return progs


def bench(progs, backend, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = [lp_solve(p, backend=backend) for p in progs]
        best = min(best, time.perf_counter() - t)
    return best, out


def bench_kernel(progs, backend, repeat):
    forms = [_standard_form(p) for p in progs]
    kernel = lp.BACKENDS[backend]
    best = float("inf")
    out = None
    for _ in range(repeat):
        tabs = [_build(rows, c, total) for rows, c, _, total in forms]
        t = time.perf_counter()
        out = [kernel.two_phase(tb.rows, tb.objs, tb.basis, tb.n_struct) for tb in tabs]
        best = min(best, time.perf_counter() - t)
        out = [(st, d, tb.basis, tb.rows) for (st, d), tb in zip(out, tabs)]
    return best, out


def _table(title, workloads, backends, fn, repeat):
    print(f"\n{title}")
    print(f"{'workload':<24s}" + "".join(f"{b:>12s}" for b in backends) + "   speedup")
    for name, progs in workloads.items():
        times, results = {}, {}
        for b in backends:
            times[b], results[b] = fn(progs, b, repeat)
        if len(backends) > 1:
            assert results["python"] == results["cython"], "backends disagree"
        line = f"{name:<24s}" + "".join(f"{times[b]:>11.3f}s" for b in backends)
        if "cython" in times:
            line += f"   {times['python'] / times['cython']:.2f}x"
        print(line)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--n", type=int, default=300)
    args = ap.parse_args()
    _in_hull.cache_clear()
    workloads = {
        "hull-LP dim3 k8": hull_programs(args.n),
        "W-membership square": membership_programs(args.n),
        "hull-LP dim4 k16": hull_programs(args.n // 3, dim=4, k=16, seed=2),
    }
    backends = list(lp.BACKENDS)
    print(f"backends available: {', '.join(backends)} (default: {lp.BACKEND})")
    _table("end to end (lp_solve)", workloads, backends, bench, args.repeat)
    _table("kernel only (two_phase on integer tableaux)", workloads, backends, bench_kernel, args.repeat)


if __name__ == "__main__":
    main()
