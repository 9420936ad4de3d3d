"""Balanced complete p-partite subhypergraphs with rainbow parts in colored Kneser hypergraphs."""
from __future__ import annotations

import json
import os
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from . import _kernels as K
from .bounds import alt_number, cd, ceil_div, is_prime
from .coloring import ColorSearch, chromatic_number, enumerate_proper_colorings
from .config import DEFAULT_CAPS
from .errors import ResourceLimitError
from .hypercore import Coloring, Hypergraph, is_proper
from .kneser import KneserStructure, build_kneser


def part_sizes(r: int, p: int) -> list:
    """``r mod p`` parts of size ceil(r/p), then parts of size floor(r/p)."""
    if r < 0 or p < 2:
        raise ValueError("need r >= 0 and p >= 2")
    big, small = divmod(r, p)
    return [big + 1] * small + [big] * (p - small)


@dataclass(frozen=True)
class PartiteWitness:
    parts: tuple  # p tuples of kg vertex ids

    @property
    def r(self) -> int:
        return sum(len(u) for u in self.parts)

    def colors_per_part(self, c: Coloring) -> list:
        return [[c[u] for u in part] for part in self.parts]

    def to_dict(self) -> dict:
        return {"parts": [list(u) for u in self.parts], "r": self.r}


def witness_problems(k: KneserStructure, c: Coloring, w: PartiteWitness,
                     r: int | None = None) -> list:
    """Independent check of the three witness properties using plain set arithmetic."""
    problems = []
    if len(w.parts) != k.q:
        problems.append(f"expected {k.q} parts, got {len(w.parts)}")
    if r is not None and w.r != r:
        problems.append(f"expected {r} vertices, got {w.r}")
    sizes = [len(u) for u in w.parts]
    if sizes and max(sizes) - min(sizes) > 1:
        problems.append(f"part sizes {sizes} differ by more than one")
    all_ids = [u for part in w.parts for u in part]
    if len(set(all_ids)) != len(all_ids):
        problems.append("a kg vertex appears twice")
    for j, part in enumerate(w.parts):
        cols = [c[u] for u in part]
        if len(set(cols)) != len(cols):
            problems.append(f"part {j + 1} repeats a color: {cols}")
    for j, jj in combinations(range(len(w.parts)), 2):
        for u in w.parts[j]:
            for v in w.parts[jj]:
                if k.base_edge(u) & k.base_edge(v):
                    problems.append(f"base edges of {u} (part {j + 1}) and {v} (part {jj + 1}) meet")
    return problems


def _candidate_order(c: Coloring) -> list:
    size = Counter(c.colors)
    return sorted(range(1, len(c) + 1), key=lambda u: (-size[c[u]], c[u], u))


def find_rainbow_witness(k: KneserStructure, c: Coloring, r: int) -> PartiteWitness | None:
    """Search for ``p = k.q`` parts of sizes ``part_sizes(r, p)``, each rainbow,
    with base edges disjoint across parts (so every transversal is a kg edge)."""
    if len(c) != k.kg.n:
        raise ValueError("coloring does not match the Kneser hypergraph")
    if not is_proper(k.kg, c):
        raise ValueError("coloring is not proper")
    if k.base.n > 62:
        raise ResourceLimitError("witness search supports base hypergraphs with at most 62 vertices")
    p = k.q
    sizes = part_sizes(r, p)
    if r > k.kg.n:
        return None
    part_of_slot, slot_first, first_slot = [], [], []
    for j, s in enumerate(sizes):
        first_slot.append(len(part_of_slot))
        for i in range(s):
            part_of_slot.append(j)
            slot_first.append(i == 0)
    equal_prev = [j > 0 and sizes[j] == sizes[j - 1] and sizes[j] > 0 for j in range(p)]
    cand = np.array([u - 1 for u in _candidate_order(c)], dtype=np.int64)
    vmask = np.array(k.base.masks, dtype=np.int64)
    vcolor = np.array(c.colors, dtype=np.int64)
    pos = np.zeros(max(r, 1), dtype=np.int64)
    ok = K.rainbow_search(cand, vmask, vcolor, np.array(part_of_slot, dtype=np.int64),
                          np.array(slot_first, dtype=np.bool_),
                          np.array(first_slot, dtype=np.int64),
                          np.array(equal_prev, dtype=np.bool_), p, max(c.colors, default=1), pos)
    if not ok:
        return None
    parts = [[] for _ in range(p)]
    for s, j in enumerate(part_of_slot):
        parts[j].append(int(cand[pos[s]]) + 1)
    w = PartiteWitness(tuple(tuple(u) for u in parts))
    problems = witness_problems(k, c, w, r)
    if problems:
        raise AssertionError(f"search produced an invalid witness: {problems}")
    return w


def brute_force_witness(k: KneserStructure, c: Coloring, r: int) -> PartiteWitness | None:
    """Plain enumeration of part assignments, no symmetry reduction."""
    sizes = part_sizes(r, k.q)
    ids = list(range(1, k.kg.n + 1))

    def fill(j, used, chosen):
        if j == len(sizes):
            w = PartiteWitness(tuple(chosen))
            return w if not witness_problems(k, c, w, r) else None
        for part in combinations([u for u in ids if u not in used], sizes[j]):
            found = fill(j + 1, used | set(part), chosen + [part])
            if found is not None:
                return found
        return None

    return fill(0, set(), [])


@dataclass
class SweepReport:
    p: int
    r: int
    mode: str
    max_t: int
    colorings_checked: int = 0
    witnesses_found: int = 0
    improper_skipped: int = 0
    exhaustive: bool = True
    sampled: int = 0
    complete: bool = True
    exploratory: bool = False
    counterexamples: list = field(default_factory=list)
    kriz_violations: int = 0
    search_discrepancies: int = 0
    caps: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.kriz_violations

    def to_dict(self) -> dict:
        return {
            "p": self.p, "r": self.r, "mode": self.mode, "max_t": self.max_t,
            "part_sizes": part_sizes(self.r, self.p),
            "colorings_checked": self.colorings_checked,
            "witnesses_found": self.witnesses_found,
            "improper_skipped": self.improper_skipped,
            "exhaustive": self.exhaustive, "sampled": self.sampled,
            "complete": self.complete, "exploratory": self.exploratory,
            "counterexamples": self.counterexamples,
            "kriz_violations": self.kriz_violations,
            "search_discrepancies": self.search_discrepancies,
            "caps": self.caps,
        }


def random_proper_coloring(kg: Hypergraph, t: int, rng: np.random.Generator) -> Coloring | None:
    """First coloring found by a DFS with random vertex order and random color order."""
    order = [int(v) + 1 for v in rng.permutation(kg.n)]
    try_order = np.array([rng.permutation(t) + 1 for _ in range(max(kg.n, 1))], dtype=np.int64)
    return ColorSearch(kg, t, order=order, canonical=False, try_order=try_order).next()


def sweep_verify(h: Hypergraph, p: int, r_mode: str = "cd", max_t: int | None = None, *,
                 samples: int = 1000, seed: int = 0, force: bool = False,
                 colorings: Iterable[Coloring] | None = None,
                 counterexample_dir: str | None = None,
                 time_budget_s: float | None = None, caps=None) -> SweepReport:
    """Check that every proper coloring of KG^p(h) with at most ``max_t`` colors
    has a witness on ``r`` vertices.

    ``r`` is cd^p(h) (``r_mode="cd"``) or n - alt^p(h) (``r_mode="alt"``).  The
    canonical coloring stream is exhausted when it has at most
    ``caps.sweep_colorings`` members; otherwise ``samples`` seeded random
    colorings are checked as well.  An explicit ``colorings`` iterable replaces
    the generated stream.
    """
    caps = DEFAULT_CAPS if caps is None else caps
    prime = is_prime(p)
    if not prime and not force:
        raise ValueError(f"p={p} is not prime; whether the theorem holds for non-prime p is open "
                         "(use --force / force=True for an exploratory run)")
    if p < 2:
        raise ValueError("p must be >= 2")
    k = build_kneser(h, p, edge_cap=caps.kg_edges)
    if r_mode == "cd":
        r = cd(h, p).value
    elif r_mode == "alt":
        if h.n <= caps.alt_outer_n:
            alt = alt_number(h, p, "exact", outer_cap=caps.alt_outer_n, inner_cap=caps.alt_inner_n)
        else:
            # a heuristic order over-estimates alt, so r only gets smaller: still covered
            alt = alt_number(h, p, "heuristic", seed, inner_cap=caps.alt_inner_n)
        r = h.n - alt.value
    else:
        raise ValueError(f"unknown r_mode {r_mode!r}")
    if max_t is None:
        max_t = max(1, chromatic_number(k.kg).value + 1)
    report = SweepReport(p=p, r=r, mode=r_mode, max_t=max_t, exploratory=not prime,
                         caps={"sweep_colorings": caps.sweep_colorings, "samples": samples,
                               "max_t": max_t, "seed": seed})
    end = None if time_budget_s is None else time.monotonic() + time_budget_s

    def check(c: Coloring):
        if len(c) != k.kg.n or not is_proper(k.kg, c):
            report.improper_skipped += 1
            return
        report.colorings_checked += 1
        w = find_rainbow_witness(k, c, r)
        if w is None:
            w = brute_force_witness(k, c, r)
            if w is not None:
                report.search_discrepancies += 1
        if w is None:
            _record_counterexample(report, c, counterexample_dir)
            return
        report.witnesses_found += 1
        if ceil_div(r, p - 1) > c.used:
            report.kriz_violations += 1

    def out_of_time():
        if end is not None and time.monotonic() >= end:
            report.complete = False
            return True
        return False

    if colorings is not None:
        report.exhaustive = False
        for c in colorings:
            if out_of_time():
                break
            check(c)
        return report

    for i, c in enumerate(enumerate_proper_colorings(k.kg, max_t, canonical=True)):
        if i >= caps.sweep_colorings:
            report.exhaustive = False
            break
        if out_of_time():
            return report
        check(c)
    if not report.exhaustive:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            if out_of_time():
                break
            c = random_proper_coloring(k.kg, max_t, rng)
            if c is None:
                break
            report.sampled += 1
            check(c)
    return report


def _record_counterexample(report: SweepReport, c: Coloring, directory: str | None):
    entry = c.to_dict()
    if directory is not None:
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, f"counterexample_{len(report.counterexamples) + 1}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(entry, fh, sort_keys=True)
            fh.write("\n")
        entry = {"file": path, **entry}
    report.counterexamples.append(entry)
