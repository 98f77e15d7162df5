#!/usr/bin/env python3
"""Time the compiled kernel against the pure Python twin on the hot paths.

Workloads mirror what the library actually does: sparse polynomial products
and powers, linear substitution (the group action), dehomogenized truncation,
fraction free elimination, and the breadth first group closure.  Inputs are
deterministic, so runs are comparable across machines and commits.
"""

import argparse
import random
import time

from rootwald import kernel
from rootwald.groups import f4_generators

rng = random.Random(99)


def rand_triple(nonzero=True):
    while True:
        a, b, d = rng.randint(-30, 30), rng.randint(-30, 30), rng.randint(1, 16)
        if a or b or not nonzero:
            g = kernel.impl  # normalization is backend independent
            return g.fnorm(a, b, d)


def rand_poly(mod, nterms, emax):
    p = {}
    while len(p) < nterms:
        k = mod.pack(rng.randint(0, emax), rng.randint(0, emax),
                     rng.randint(0, emax), rng.randint(0, emax))
        p[k] = rand_triple()
    return p


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(mod):
    state = rng.getstate()
    p250 = rand_poly(mod, 250, 10)
    q250 = rand_poly(mod, 250, 10)
    quad = rand_poly(mod, 4, 2)
    p150 = rand_poly(mod, 150, 6)
    forms = tuple(
        {mod.pack(*(1 if i == j else 0 for j in range(4))): rand_triple()
         for i in range(4)}
        for _ in range(4))
    rows = [[rng.randint(-9, 9) for _ in range(2 * 50)] for _ in range(40)]
    mats = [tuple(v for _ in range(16) for v in rand_triple(nonzero=False))
            for _ in range(60)]
    gens = [g.flat for g in f4_generators()]
    rng.setstate(state)

    def field_ops():
        acc = mod.FONE
        x = (3, -2, 7)
        for _ in range(20000):
            acc = mod.fmul(acc, x)
            acc = mod.fadd(acc, mod.FONE)
            acc = (acc[0] % 1000 + 1, acc[1] % 1000, acc[2] % 97 + 1)

    def matrices():
        m = mats[0]
        for other in mats[1:]:
            m = mod.mat_mul(m, other)

    return [
        ("fmul/fadd x20k", field_ops),
        ("pmul 250x250 terms", lambda: mod.pmul(p250, q250)),
        ("ppow quad^10", lambda: mod.ppow(quad, 10)),
        ("ppow quad^10 cap12", lambda: mod.ppow(quad, 10, 12)),
        ("plinsub 150 terms", lambda: mod.plinsub(p150, forms)),
        ("pdehom bound12", lambda: mod.pdehom_trunc(p250, 12)),
        ("mat_mul chain x59", matrices),
        ("rank_profile 40x50", lambda: mod.rank_profile(rows, 50)),
        ("closure W(F4)", lambda: mod.closure(gens, 2000)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3,
                    help="best-of repetitions per cell (default 3)")
    args = ap.parse_args()

    py = kernel.load_backend("python")
    try:
        cx = kernel.load_backend("c")
    except ImportError:
        cx = None
        print("compiled kernel unavailable; timing the pure Python kernel only")

    print(f"default backend: {kernel.BACKEND}")
    print(f"{'workload':<22} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for (label, py_fn), c_entry in zip(
            workloads(py), workloads(cx) if cx else workloads(py)):
        t_py = best_of(py_fn, args.repeat)
        if cx is None:
            print(f"{label:<22} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
            continue
        t_c = best_of(c_entry[1], args.repeat)
        print(f"{label:<22} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms "
              f"{t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
