"""Exact chromatic number, proper-coloring enumeration, local chromatic number."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels as K
from .hypercore import Coloring, Hypergraph, is_proper, neighborhood_closure

UNBOUNDED = "unbounded"

_CHUNK = 1 << 18


class _Deadline:
    def __init__(self, budget_s: float | None):
        self.end = None if budget_s is None else time.monotonic() + budget_s

    def expired(self) -> bool:
        return self.end is not None and time.monotonic() >= self.end


class ColorSearch:
    """Resumable DFS over proper colorings of ``h`` with colors ``1..t``.

    ``order`` lists the 1-based vertices in branching order; with
    ``canonical`` a new color may only be ``1 + max color so far`` along that
    order, which yields one coloring per color-permutation orbit.
    """

    def __init__(self, h: Hypergraph, t: int, order=None, canonical=True, try_order=None):
        if t < 1:
            raise ValueError("t must be >= 1")
        self.h = h
        self.t = t
        nv = h.n
        order = list(range(1, nv + 1)) if order is None else list(order)
        self.order = np.array([v - 1 for v in order], dtype=np.int64)
        self.ptr, self.idx, self.esize = h.incidence
        self.canonical = bool(canonical)
        if try_order is None:
            try_order = np.tile(np.arange(1, t + 1, dtype=np.int64), (max(nv, 1), 1))
        self.try_order = np.ascontiguousarray(try_order, dtype=np.int64)
        self.st = np.zeros(1, dtype=np.int64)
        self.cur = np.zeros(nv + 1, dtype=np.int64)
        self.prefmax = np.zeros(nv + 1, dtype=np.int64)
        self.vc = np.zeros(nv, dtype=np.int64)
        self.cnt = np.zeros((h.m, t + 1), dtype=np.int64)
        self.done = False

    def advance(self, max_steps: int = _CHUNK) -> int:
        if self.done:
            return K.EXHAUSTED
        status = K.color_search(self.order, self.ptr, self.idx, self.esize, self.t,
                                self.canonical, self.try_order, self.st, self.cur,
                                self.prefmax, self.vc, self.cnt, max_steps)
        if status == K.EXHAUSTED:
            self.done = True
        return status

    def coloring(self) -> Coloring:
        return Coloring(tuple(int(c) for c in self.vc), self.t)

    def next(self, deadline: _Deadline | None = None):
        """Next coloring, None when exhausted; raises TimeoutError on deadline."""
        while True:
            status = self.advance()
            if status == K.FOUND:
                return self.coloring()
            if status == K.EXHAUSTED:
                return None
            if deadline is not None and deadline.expired():
                raise TimeoutError


def is_t_colorable(h: Hypergraph, t: int, *, time_budget_s: float | None = None) -> Coloring | None:
    """A proper coloring with at most ``t`` colors, or None.

    Branches in descending-degree order with color-symmetry breaking.  Raises
    TimeoutError if ``time_budget_s`` runs out first.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if h.has_singleton_edge:
        return None
    search = ColorSearch(h, t, order=h.degree_order(), canonical=True)
    found = search.next(_Deadline(time_budget_s))
    if found is None:
        return None
    return Coloring(found.colors, max(found.colors, default=1))


def greedy_coloring(h: Hypergraph) -> Coloring | None:
    """First-fit in degree order; None if a singleton edge makes coloring impossible."""
    if h.has_singleton_edge:
        return None
    colors = [0] * (h.n + 1)
    incident = [[] for _ in range(h.n + 1)]
    for e in h.edges:
        for v in e:
            incident[v].append(e)
    for v in h.degree_order():
        c = 1
        while any(all(colors[u] == c for u in e if u != v) for e in incident[v]):
            c += 1
        colors[v] = c
    return Coloring(tuple(colors[1:]), max(colors[1:], default=1))


@dataclass(frozen=True)
class ChromaticResult:
    value: object  # int, UNBOUNDED, or None on timeout
    witness: Coloring | None
    status: str = "exact"  # exact | timeout
    lower: object = None
    upper: object = None
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        out = {"value": self.value, "status": self.status,
               "witness": None if self.witness is None else list(self.witness.colors)}
        if self.status != "exact":
            out["lower"] = self.lower
            out["upper"] = self.upper
        return out


def chromatic_number(h: Hypergraph, *, time_budget_s: float | None = None,
                     start: int = 1) -> ChromaticResult:
    """Smallest ``t`` with a proper ``t``-coloring, trying ``t = start, start+1, ...``.

    ``start`` may be any certified lower bound.
    """
    t0 = time.monotonic()

    def done(**kw):
        return ChromaticResult(elapsed_ms=int((time.monotonic() - t0) * 1000), **kw)

    if h.has_singleton_edge:
        return done(value=UNBOUNDED, witness=None, lower=UNBOUNDED, upper=UNBOUNDED)
    if h.n == 0:
        return done(value=0, witness=None, lower=0, upper=0)
    if h.m == 0:
        return done(value=1, witness=Coloring((1,) * h.n, 1), lower=1, upper=1)
    greedy = greedy_coloring(h)
    upper = greedy.used
    deadline = _Deadline(time_budget_s)
    t = max(2, start)
    while t < upper:
        remaining = None if deadline.end is None else max(0.0, deadline.end - time.monotonic())
        try:
            found = is_t_colorable(h, t, time_budget_s=remaining)
        except TimeoutError:
            return done(value=None, witness=greedy, status="timeout", lower=t, upper=upper)
        if found is not None:
            return done(value=t, witness=found, lower=t, upper=t)
        t += 1
    return done(value=upper, witness=greedy, lower=upper, upper=upper)


def enumerate_proper_colorings(h: Hypergraph, t: int, canonical: bool = True) -> Iterator[Coloring]:
    """Every proper coloring with colors in ``1..t``, in lexicographic order.

    With ``canonical`` only colorings whose colors first appear in increasing
    vertex order are produced (one per orbit of color permutations).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    search = ColorSearch(h, t, canonical=canonical)
    while True:
        c = search.next()
        if c is None:
            return
        yield c


def _closure_sets(h: Hypergraph) -> list:
    sets = {}
    for e in h.edges:
        for v in e:
            s = neighborhood_closure(h, e - {v})
            sets.setdefault(s, None)
    return list(sets)


def local_value(h: Hypergraph, c: Coloring) -> int:
    """max over edges e and v in e of the number of colors on N[e - {v}]."""
    if h.m == 0:
        raise ValueError("local value is undefined for a hypergraph without edges")
    if not is_proper(h, c):
        raise ValueError("coloring is not proper")
    return max(len({c[u] for u in s}) for s in _closure_sets(h))


@dataclass(frozen=True)
class LocalResult:
    value: int
    witness: Coloring
    witness_t: int
    max_t: int
    status: str = "exact"  # exact | timeout (value is then only an upper bound)
    elapsed_ms: int = 0
    notes: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"value": self.value, "witness": list(self.witness.colors),
                "witness_t": self.witness_t, "max_t": self.max_t, "status": self.status}


def local_chromatic_number(h: Hypergraph, max_t: int | None = None, *,
                           time_budget_s: float | None = None) -> LocalResult:
    """Minimum local value over proper colorings using at most ``max_t`` colors.

    Default cap is ``min(n, chi + 2)``; the true invariant minimizes over all
    ``t``, so the cap is reported alongside the value.
    """
    t0 = time.monotonic()
    if h.m == 0:
        raise ValueError("local chromatic number is undefined for a hypergraph without edges")
    chi = chromatic_number(h)
    if chi.value == UNBOUNDED:
        raise ValueError("hypergraph has no proper coloring")
    if max_t is None:
        max_t = min(h.n, chi.value + 2)
    if max_t < chi.value:
        raise ValueError(f"max_t={max_t} is below the chromatic number {chi.value}")

    sets = _closure_sets(h)
    vsets = [[] for _ in range(h.n)]
    for i, s in enumerate(sets):
        for u in s:
            vsets[u - 1].append(i)
    vs_ptr = np.zeros(h.n + 1, dtype=np.int64)
    vs_ptr[1:] = np.cumsum([len(x) for x in vsets])
    set_of_v = np.array([i for x in vsets for i in x], dtype=np.int64)

    # incumbent: the chi-coloring
    incumbent = chi.witness
    best = local_value(h, incumbent)
    order = np.array([v - 1 for v in h.degree_order()], dtype=np.int64)
    ptr, idx, esize = h.incidence
    nv = h.n
    st = np.array([0, best], dtype=np.int64)
    cur = np.zeros(nv + 1, dtype=np.int64)
    prefmax = np.zeros(nv + 1, dtype=np.int64)
    curmax = np.zeros(nv + 1, dtype=np.int64)
    vc = np.zeros(nv, dtype=np.int64)
    cnt = np.zeros((h.m, max_t + 1), dtype=np.int64)
    scnt = np.zeros((len(sets), max_t + 1), dtype=np.int64)
    sdist = np.zeros(len(sets), dtype=np.int64)
    best_vc = np.array(incumbent.colors, dtype=np.int64)
    stop_at = 2  # every edge is non-monochromatic and lies in some N[e - {v}]
    deadline = _Deadline(time_budget_s)
    status = "exact"
    while st[1] > stop_at:
        code = K.local_search(order, ptr, idx, esize, max_t, set_of_v, vs_ptr, st, cur,
                              prefmax, curmax, vc, cnt, scnt, sdist, best_vc, stop_at, _CHUNK)
        if code == K.EXHAUSTED:
            break
        if deadline.expired():
            status = "timeout"
            break
    value = int(st[1])
    colors = tuple(int(x) for x in best_vc)
    witness = Coloring(colors, max(colors))
    return LocalResult(value=value, witness=witness, witness_t=len(set(colors)), max_t=max_t,
                       status=status, elapsed_ms=int((time.monotonic() - t0) * 1000))
