"""Compare the numba kernels with the same source run as plain Python.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times exclude compilation (each jitted kernel is warmed up first).  The
interpreted path calls each kernel's ``py_func``, which is exactly what runs
under ``KNESER_LAB_DISABLE_JIT=1``.
"""
import argparse
import json
import random
import time

import numpy as np

from kneser_lab import _kernels as K
from kneser_lab import Hypergraph, build_kneser, complete_ksubsets, join_construction
from kneser_lab._jit import JIT_ENABLED


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def color_case(kernel, kg, t):
    ptr, idx, esize = kg.incidence
    order = np.array([v - 1 for v in kg.degree_order()], dtype=np.int64)
    try_order = np.tile(np.arange(1, t + 1, dtype=np.int64), (kg.n, 1))

    def run():
        st = np.zeros(1, np.int64)
        cur = np.zeros(kg.n + 1, np.int64)
        prefmax = np.zeros(kg.n + 1, np.int64)
        vc = np.zeros(kg.n, np.int64)
        cnt = np.zeros((kg.m, t + 1), np.int64)
        while kernel(order, ptr, idx, esize, t, True, try_order, st, cur, prefmax, vc, cnt,
                     1 << 30) == K.FOUND:
            pass

    return run


def alt_case(kernel, h, q):
    ptr, idx, _ = h.incidence
    emask = np.array(h.masks, dtype=np.int64)
    pos = np.arange(h.n, dtype=np.int64)

    def run():
        kernel(pos, q, emask, ptr, idx, h.n + 1, np.zeros(h.n, np.int64))

    return run


def batch_case(fn, xs, perms):
    return lambda: fn(xs, perms)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not JIT_ENABLED:
        raise SystemExit("unset KNESER_LAB_DISABLE_JIT to benchmark the compiled kernels")

    kg = build_kneser(complete_ksubsets(7, 2), 2).kg
    pick = random.Random(3)
    g = Hypergraph(11, tuple((a, b) for a in range(1, 12) for b in range(a + 1, 12)
                             if pick.random() < 0.3))
    h = join_construction(g).joined
    rng = np.random.default_rng(0)
    xs = rng.integers(0, 4, size=(20_000, 12))
    perms = np.argsort(rng.random((20_000, 12)), axis=1)

    cases = {
        "refute a 4-coloring of KG^2(7,2)": (color_case(K.color_search, kg, 4),
                                             color_case(K.color_search.py_func, kg, 4)),
        "max alternation, 22-vertex reduction instance": (alt_case(K.max_alt_search, h, 2),
                                                          alt_case(K.max_alt_search.py_func, h, 2)),
        "20k alternation lengths": (batch_case(K._alt_pi_batch_loop, xs, perms),
                                    batch_case(K._alt_pi_batch_loop.py_func, xs, perms)),
    }
    rows = []
    for name, (jit_fn, py_fn) in cases.items():
        jit_fn()  # compile
        tj = best_of(jit_fn, args.repeat)
        tp = best_of(py_fn, args.repeat)
        rows.append({"case": name, "numba_s": float(f"{tj:.3g}"), "python_s": float(f"{tp:.3g}"),
                     "speedup": round(tp / tj, 1)})
    tn = best_of(batch_case(K._alt_pi_batch_numpy, xs, perms), args.repeat)
    rows.append({"case": "20k alternation lengths (numpy vectorized)", "numpy_s": float(f"{tn:.3g}")})
    print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
