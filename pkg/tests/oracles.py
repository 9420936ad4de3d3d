"""Brute-force reference computations.

Nothing here imports the search code under test; each function works
straight from the definitions by enumeration.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

import numpy as np


def all_colorings(n: int, t: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(product(range(1, t + 1), repeat=n)), dtype=np.int8)


def proper_mask(cols: np.ndarray, edges) -> np.ndarray:
    ok = np.ones(cols.shape[0], dtype=bool)
    for e in edges:
        e = [v - 1 for v in e]
        mono = np.all(cols[:, e] == cols[:, [e[0]]], axis=1)
        ok &= ~mono
    return ok


def chromatic_bruteforce(n: int, edges, t_max: int = 8):
    """Smallest t with a proper coloring among all t^n maps, or None."""
    if any(len(e) == 1 for e in edges):
        return None
    if n == 0:
        return 0
    for t in range(1, t_max + 1):
        if proper_mask(all_colorings(n, t), edges).any():
            return t
    return None


def kneser_edges_bruteforce(base_edges, q: int) -> set:
    base = [frozenset(e) for e in base_edges]
    out = set()
    for ids in combinations(range(1, len(base) + 1), q):
        if all(not (base[a - 1] & base[b - 1]) for a, b in combinations(ids, 2)):
            out.add(frozenset(ids))
    return out


def cd_bruteforce(n: int, edges, q: int) -> int:
    """Scan all 2^n removal sets; q-colorability of every induced subhypergraph
    is read off from all q^n colorings of the whole vertex set at once."""
    edges = [frozenset(e) for e in edges]
    assert len(edges) <= 63
    cols = all_colorings(n, q)
    mono = np.zeros(cols.shape[0], dtype=np.uint64)
    for i, e in enumerate(edges):
        ev = [v - 1 for v in e]
        is_mono = np.all(cols[:, ev] == cols[:, [ev[0]]], axis=1)
        mono |= is_mono.astype(np.uint64) << np.uint64(i)
    best = None
    for ymask in range(1 << n):
        keep = {v for v in range(1, n + 1) if not ymask >> (v - 1) & 1}
        inside = sum(1 << i for i, e in enumerate(edges) if e <= keep)
        colorable = bool(np.any((mono & np.uint64(inside)) == 0))
        size = bin(ymask).count("1")
        if colorable and (best is None or size < best):
            best = size
    return best


def alt_dp(seq) -> int:
    """Longest subsequence of nonzero symbols with distinct neighbors, O(n^2) DP."""
    best = [0] * len(seq)
    for i, x in enumerate(seq):
        if x == 0:
            continue
        best[i] = 1 + max((best[j] for j in range(i) if seq[j] != 0 and seq[j] != x), default=0)
    return max(best, default=0)


def alt_dp_batch(rows: np.ndarray) -> np.ndarray:
    """Row-wise ``alt_dp`` over an integer matrix, same O(n^2) recurrence."""
    rows = np.asarray(rows)
    best = np.zeros(rows.shape, dtype=np.int64)
    for i in range(rows.shape[1]):
        x = rows[:, i]
        prev = np.zeros(rows.shape[0], dtype=np.int64)
        for j in range(i):
            ok = (rows[:, j] != 0) & (rows[:, j] != x)
            prev = np.maximum(prev, np.where(ok, best[:, j], 0))
        best[:, i] = np.where(x != 0, prev + 1, 0)
    return best.max(axis=1, initial=0)


def canonical_mask(cols: np.ndarray) -> np.ndarray:
    """Rows whose colors first appear in the order 1, 2, 3, ..."""
    if cols.shape[1] == 0:
        return np.ones(cols.shape[0], dtype=bool)
    running = np.maximum.accumulate(cols, axis=1)
    ok = cols[:, 0] == 1
    ok &= np.all(cols[:, 1:] <= running[:, :-1] + 1, axis=1)
    return ok


def feasible_vectors(n: int, edges, q: int) -> list:
    edges = [frozenset(e) for e in edges]
    out = []
    for x in product(range(q + 1), repeat=n):
        classes = [{i + 1 for i in range(n) if x[i] == j} for j in range(1, q + 1)]
        if all(not any(e <= cls for e in edges) for cls in classes):
            out.append(x)
    return out


def max_alt_bruteforce(n: int, edges, q: int, pi=None) -> int:
    pi = tuple(range(1, n + 1)) if pi is None else pi
    return max(alt_dp([x[v - 1] for v in pi]) for x in feasible_vectors(n, edges, q))


def alt_number_bruteforce(n: int, edges, q: int) -> int:
    feas = feasible_vectors(n, edges, q)
    return min(max(alt_dp([x[v - 1] for v in pi]) for x in feas)
               for pi in permutations(range(1, n + 1)))


def closure_sets(n: int, edges) -> list:
    edges = [frozenset(e) for e in edges]
    sets = []
    for e in edges:
        for v in e:
            x = e - {v}
            s = set(x) | {u for f in edges if len(f - x) == 1 for u in f - x}
            sets.append(sorted(s))
    return sets


def local_chromatic_bruteforce(n: int, edges, max_t: int) -> int:
    cols = all_colorings(n, max_t)
    cols = cols[proper_mask(cols, edges)]
    worst = np.zeros(cols.shape[0], dtype=np.int64)
    for s in closure_sets(n, edges):
        sub = cols[:, [v - 1 for v in s]]
        distinct = sum(np.any(sub == c, axis=1).astype(np.int64) for c in range(1, max_t + 1))
        worst = np.maximum(worst, distinct)
    return int(worst.min())


def independence_bruteforce(n: int, edges) -> int:
    edges = [frozenset(e) for e in edges]
    for size in range(n, -1, -1):
        for s in combinations(range(1, n + 1), size):
            if not any(e <= set(s) for e in edges):
                return size
    return 0


def alternating_chains_naive(q: int, n: int, label) -> list:
    """All n-sets of nonzero vectors that are chains and whose labels sorted by
    abs increase strictly with distinct neighboring signs."""
    def dom(x, y):
        return all(a == 0 or a == b for a, b in zip(x, y))

    vecs = [x for x in product(range(q + 1), repeat=n) if any(x)]
    found = []
    for subset in combinations(vecs, n):
        if not all(dom(a, b) or dom(b, a) for a, b in combinations(subset, 2)):
            continue
        labs = sorted((label(x) for x in subset), key=lambda lab: lab[1])
        if all(a[1] < b[1] and a[0] != b[0] for a, b in zip(labs, labs[1:])):
            found.append(subset)
    return found
