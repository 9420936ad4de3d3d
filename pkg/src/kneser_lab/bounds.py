"""Colorability defect, alternation numbers and the lower-bound report."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from . import _kernels as K
from .coloring import UNBOUNDED, chromatic_number, is_t_colorable, local_chromatic_number
from .config import DEFAULT_CAPS
from .errors import ResourceLimitError
from .hypercore import Hypergraph, induced
from .kneser import build_kneser


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class SignedVector:
    """Entries in ``0..q``: 0 is the zero symbol, ``j`` stands for omega**j."""

    entries: tuple
    q: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if any(not 0 <= x <= self.q for x in self.entries):
            raise ValueError(f"entries must lie in 0..{self.q}")

    def __len__(self):
        return len(self.entries)

    @property
    def support(self) -> int:
        return sum(1 for x in self.entries if x)

    def classes(self) -> dict:
        """``{j: X^j}`` with 1-based positions."""
        out = {j: set() for j in range(1, self.q + 1)}
        for i, x in enumerate(self.entries, start=1):
            if x:
                out[x].add(i)
        return {j: frozenset(s) for j, s in out.items()}

    def act(self, power: int = 1) -> "SignedVector":
        """Multiply every nonzero entry by omega**power."""
        return SignedVector(tuple((x - 1 + power) % self.q + 1 if x else 0 for x in self.entries),
                            self.q)


def _entries(x) -> tuple:
    return x.entries if isinstance(x, SignedVector) else tuple(x)


def alt_pi(x, pi: Sequence[int] | None = None) -> int:
    """Longest alternating subsequence of ``x[pi(1)], ..., x[pi(n)]`` ignoring zeros.

    ``pi`` lists 1-based positions; default is the identity.  Collapsing runs
    of equal nonzero symbols is optimal.
    """
    xs = _entries(x)
    order = range(1, len(xs) + 1) if pi is None else pi
    if sorted(order) != list(range(1, len(xs) + 1)):
        raise ValueError("pi must be a permutation of 1..n")
    count = 0
    last = 0
    for i in order:
        s = xs[i - 1]
        if s and s != last:
            count += 1
            last = s
    return count


@dataclass(frozen=True)
class DefectResult:
    value: int | None
    witness: frozenset | None
    q: int
    status: str = "exact"  # exact | timeout
    lower: int = 0
    upper: int = 0

    def to_dict(self) -> dict:
        return {"value": self.value, "q": self.q, "status": self.status,
                "witness": None if self.witness is None else sorted(self.witness),
                "lower": self.lower, "upper": self.upper}


def _q_colorable(h: Hypergraph, keep_mask: int, q: int) -> bool:
    keep = [v for v in h.vertices if keep_mask >> (v - 1) & 1]
    return is_t_colorable(induced(h, keep).hypergraph, q) is not None


def _minimal_obstruction(h: Hypergraph, keep_mask: int, q: int) -> int:
    """Shrink a non-q-colorable vertex set to an inclusion-minimal one."""
    w = keep_mask
    for v in h.vertices:
        bit = 1 << (v - 1)
        if w & bit and not _q_colorable(h, w & ~bit, q):
            w &= ~bit
    return w


def cd(h: Hypergraph, q: int, *, time_budget_s: float | None = None) -> DefectResult:
    """q-colorability defect: fewest removed vertices leaving chi <= q.

    Sizes are tried in increasing order, subsets lexicographically.  Every
    failed candidate is shrunk to a minimal obstruction, and later candidates
    missing some known obstruction are skipped (they cannot succeed).
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    full = (1 << h.n) - 1
    obstructions: list = []
    end = None if time_budget_s is None else time.monotonic() + time_budget_s
    for size in range(h.n + 1):
        for ys in combinations(range(1, h.n + 1), size):
            if end is not None and time.monotonic() >= end:
                return DefectResult(None, frozenset(h.vertices), q, "timeout", size, h.n)
            ymask = sum(1 << (v - 1) for v in ys)
            if any(ymask & ob == 0 for ob in obstructions):
                continue
            keep = full & ~ymask
            if _q_colorable(h, keep, q):
                return DefectResult(size, frozenset(ys), q, "exact", size, size)
            obstructions.append(_minimal_obstruction(h, keep, q))
    raise AssertionError("unreachable: removing every vertex always succeeds")


@dataclass(frozen=True)
class AltResult:
    value: int
    permutation: tuple
    vector: tuple  # symbol of each vertex 1..n
    mode: str  # fixed | exact | heuristic
    q: int
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"value": self.value, "mode": self.mode, "q": self.q,
                "permutation": list(self.permutation), "vector": list(self.vector),
                **self.details}


class _AltKernel:
    def __init__(self, h: Hypergraph, q: int):
        if h.n > 62:
            raise ResourceLimitError("alternation search supports at most 62 vertices")
        self.h = h
        self.q = q
        self.emask = np.array(h.masks, dtype=np.int64)
        self.ptr, self.idx, _ = h.incidence
        self.buf = np.zeros(max(h.n, 1), dtype=np.int64)

    def run(self, pi: Sequence[int], stop_at: int | None = None):
        pos_vertex = np.array([v - 1 for v in pi], dtype=np.int64)
        stop = self.h.n + 1 if stop_at is None else stop_at
        best = int(K.max_alt_search(pos_vertex, self.q, self.emask, self.ptr, self.idx,
                                    stop, self.buf))
        vector = [0] * self.h.n
        for i, v in enumerate(pi):
            vector[v - 1] = int(self.buf[i])
        return best, tuple(vector)


def _check_perm(pi, n):
    pi = tuple(int(v) for v in pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError("pi must be a permutation of 1..n")
    return pi


def max_alt_fixed_perm(h: Hypergraph, q: int, pi: Sequence[int] | None = None, *,
                       cap: int | None = None) -> AltResult:
    """max alt_pi(X) over X whose symbol classes each induce no edge of h."""
    if q < 2:
        raise ValueError("q must be >= 2")
    cap = DEFAULT_CAPS.alt_inner_n if cap is None else cap
    if h.n > cap:
        raise ResourceLimitError(
            f"exact alternation search limited to n <= {cap} (n = {h.n}); use heuristic mode")
    pi = tuple(range(1, h.n + 1)) if pi is None else _check_perm(pi, h.n)
    value, vector = _AltKernel(h, q).run(pi)
    return AltResult(value, pi, vector, "fixed", q)


def alt_number(h: Hypergraph, q: int, mode: str = "exact", seed: int = 0, *,
               restarts: int = 8, outer_cap: int | None = None,
               inner_cap: int | None = None) -> AltResult:
    """alt^q(h) = min over vertex orders of the fixed-order maximum.

    ``exact`` scans all orders (reversal gives the same value, so only orders
    with pi(1) < pi(n) are visited).  ``heuristic`` runs seeded first-improvement
    local search over adjacent swaps and returns an upper bound.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    inner_cap = DEFAULT_CAPS.alt_inner_n if inner_cap is None else inner_cap
    if h.n > inner_cap:
        raise ResourceLimitError(f"exact inner search limited to n <= {inner_cap} (n = {h.n})")
    kernel = _AltKernel(h, q)
    n = h.n
    if mode == "exact":
        outer_cap = DEFAULT_CAPS.alt_outer_n if outer_cap is None else outer_cap
        if n > outer_cap:
            raise ResourceLimitError(
                f"exact alternation number limited to n <= {outer_cap} (n = {n}); use heuristic mode")
        best = None
        for pi in permutations(range(1, n + 1)):
            if n >= 2 and pi[0] > pi[-1]:
                continue
            value, vector = kernel.run(pi, None if best is None else best[0])
            if best is None or value < best[0]:
                best = (value, pi, vector)
                if value == 0:
                    break
        value, pi, vector = best
        return AltResult(value, pi, vector, "exact", q)
    if mode != "heuristic":
        raise ValueError(f"unknown mode {mode!r}")

    rng = np.random.default_rng(seed)
    best = None
    for _ in range(max(1, restarts)):
        pi = [int(v) + 1 for v in rng.permutation(n)]
        value, vector = kernel.run(pi)
        improved = True
        while improved:
            improved = False
            for i in range(n - 1):
                pi[i], pi[i + 1] = pi[i + 1], pi[i]
                cand, cand_vec = kernel.run(pi, value)
                if cand < value:
                    value, vector = cand, cand_vec
                    improved = True
                    break
                pi[i], pi[i + 1] = pi[i + 1], pi[i]
        if best is None or value < best[0]:
            best = (value, tuple(pi), vector)
    value, pi, vector = best
    return AltResult(value, pi, vector, "heuristic", q,
                     {"seed": seed, "restarts": max(1, restarts)})


@dataclass
class BoundReport:
    n: int
    q: int
    cd: DefectResult
    alt: AltResult | None
    chi: object = None  # ChromaticResult of KG^q(H) when computed
    chi_local: object = None  # LocalResult of KG^q(H) when computed
    bounds: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n, "q": self.q,
            "cd": self.cd.to_dict(),
            "alt": None if self.alt is None else self.alt.to_dict(),
            "chi": None if self.chi is None else self.chi.to_dict(),
            "chi_local": None if self.chi_local is None else self.chi_local.to_dict(),
            "bounds": self.bounds,
            "consistent": self.consistent,
            "violations": self.violations,
        }


def _theorem_bounds(n: int, q: int, cd_value: int, cd_mode: str,
                    alt_value: int | None, alt_mode: str | None) -> dict:
    out = {}
    if q == 2:
        out["dolnikov"] = {"bound": cd_value, "target": "chi",
                           "inputs": {"cd": cd_value}, "mode": cd_mode}
    out["kriz"] = {"bound": ceil_div(cd_value, q - 1), "target": "chi",
                   "inputs": {"cd": cd_value, "q": q}, "mode": cd_mode}
    if alt_value is not None:
        out["alishahi_hajiabolhassan"] = {
            "bound": ceil_div(n - alt_value, q - 1), "target": "chi",
            "inputs": {"n": n, "alt": alt_value, "q": q}, "mode": alt_mode}
    if q == 2 and cd_value >= 2:
        out["simonyi_tardos_local"] = {"bound": ceil_div(cd_value, 2) + 1, "target": "chi_local",
                                       "inputs": {"cd": cd_value}, "mode": cd_mode}
    if is_prime(q):
        out["local_cd"] = {
            "bound": min(ceil_div(cd_value, q) + 1, ceil_div(cd_value, q - 1)),
            "target": "chi_local", "inputs": {"cd": cd_value, "p": q}, "mode": cd_mode}
        if alt_value is not None:
            r = n - alt_value
            out["local_alt"] = {
                "bound": min(ceil_div(r, q) + 1, ceil_div(r, q - 1)),
                "target": "chi_local", "inputs": {"n": n, "alt": alt_value, "p": q},
                "mode": alt_mode}
    return out


def bound_report(h: Hypergraph, q: int, *, exact: bool = False, seed: int = 0,
                 max_t: int | None = None, time_budget_s: float | None = None,
                 caps=None) -> BoundReport:
    """Lower bounds on chi(KG^q(h)) and chi_l(KG^q(h)), optionally checked against exact values.

    ``exact=True`` also solves chi and chi_l of KG^q(h) and records any bound
    exceeding them as a violation.
    """
    caps = DEFAULT_CAPS if caps is None else caps
    if q < 2:
        raise ValueError("q must be >= 2")
    defect = cd(h, q, time_budget_s=time_budget_s)
    cd_value = defect.value if defect.status == "exact" else defect.lower
    cd_mode = "exact" if defect.status == "exact" else "partial-lower"

    alt = None
    if h.n <= caps.alt_inner_n:
        if h.n <= caps.alt_outer_n:
            alt = alt_number(h, q, "exact", outer_cap=caps.alt_outer_n, inner_cap=caps.alt_inner_n)
        else:
            ident = max_alt_fixed_perm(h, q, cap=caps.alt_inner_n)
            heur = alt_number(h, q, "heuristic", seed, inner_cap=caps.alt_inner_n)
            alt = heur if heur.value <= ident.value else AltResult(
                ident.value, ident.permutation, ident.vector, "heuristic", q, heur.details)
    bounds = _theorem_bounds(h.n, q, cd_value, cd_mode,
                             None if alt is None else alt.value,
                             None if alt is None else alt.mode)
    report = BoundReport(h.n, q, defect, alt, bounds=bounds)
    if exact:
        kg = build_kneser(h, q, edge_cap=caps.kg_edges).kg
        report.chi = chromatic_number(kg, time_budget_s=time_budget_s)
        if kg.m > 0 and report.chi.status == "exact":
            report.chi_local = local_chromatic_number(kg, max_t, time_budget_s=time_budget_s)
        targets = {"chi": report.chi, "chi_local": report.chi_local}
        for name, entry in bounds.items():
            target = targets[entry["target"]]
            if target is None or target.value in (None, UNBOUNDED):
                continue
            # a capped or timed-out local value is still >= the true one
            if entry["bound"] > target.value:
                report.violations.append(
                    {"bound": name, "value": entry["bound"], entry["target"]: target.value})
    return report
