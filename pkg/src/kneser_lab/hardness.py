"""Reduction from maximum independent set to fixed-order alternation.

For a graph G, join G with a copy G' and number v as ``2*rho(v) - 1`` and its
copy as ``2*rho(v)``.  The maximum identity-order alternation over vectors
with edge-free symbol classes (q = 2) then equals ``2 * alpha(G)``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bounds import max_alt_fixed_perm
from .hypercore import Hypergraph


@dataclass(frozen=True)
class JoinInstance:
    source: Hypergraph
    joined: Hypergraph
    rho: tuple  # rho[v - 1] is the rank of source vertex v

    def original(self, v: int) -> int:
        return 2 * self.rho[v - 1] - 1

    def copy(self, v: int) -> int:
        return 2 * self.rho[v - 1]


def join_construction(g: Hypergraph, rho: Sequence[int] | None = None) -> JoinInstance:
    """Join of ``g`` and its copy, numbered by ``rho`` (input order by default)."""
    if not g.is_graph:
        raise ValueError("join construction needs a graph (all edges of size 2)")
    n = g.n
    rho = tuple(range(1, n + 1)) if rho is None else tuple(int(r) for r in rho)
    if sorted(rho) != list(range(1, n + 1)):
        raise ValueError("rho must be a bijection onto 1..n")
    orig = [2 * r - 1 for r in rho]
    copy = [2 * r for r in rho]
    edges = []
    for e in g.edges:
        a, b = sorted(e)
        edges.append((orig[a - 1], orig[b - 1]))
    for e in g.edges:
        a, b = sorted(e)
        edges.append((copy[a - 1], copy[b - 1]))
    for v in range(n):
        for w in range(n):
            edges.append((orig[v], copy[w]))
    return JoinInstance(g, Hypergraph(2 * n, tuple(edges)), rho)


def random_rho(n: int, seed: int) -> tuple:
    rng = np.random.default_rng(seed)
    return tuple(int(r) + 1 for r in rng.permutation(n))


@dataclass(frozen=True)
class IndependenceResult:
    value: int | None
    witness: frozenset
    status: str = "exact"  # exact | timeout
    upper: int | None = None


def _clique_cover_bound(cand: int, adj: list) -> int:
    """Greedy partition of ``cand`` into cliques; an independent set uses one vertex per clique."""
    cliques = 0
    rest = cand
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique = 1 << v
        common = adj[v] & rest
        while common:
            u = (common & -common).bit_length() - 1
            clique |= 1 << u
            common &= adj[u]
        rest &= ~clique
        cliques += 1
    return cliques


def independence_number(g: Hypergraph, *, time_budget_s: float | None = None) -> IndependenceResult:
    """Exact alpha(G) by branch and bound with a greedy clique-cover bound.

    Branches on a maximum-degree vertex of the remaining candidates: take it
    (drop its neighbors) or discard it.
    """
    if not g.is_graph:
        raise ValueError("independence number needs a graph")
    n = g.n
    adj = [0] * n
    for e in g.edges:
        a, b = (v - 1 for v in e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    best = [0, 0]  # size, mask
    end = None if time_budget_s is None else time.monotonic() + time_budget_s
    timed_out = False

    def branch(cand: int, size: int, chosen: int):
        nonlocal timed_out
        if timed_out:
            return
        if end is not None and time.monotonic() >= end:
            timed_out = True
            return
        if cand == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_bound(cand, adj) <= best[0]:
            return
        v = max((u for u in range(n) if cand >> u & 1),
                key=lambda u: ((adj[u] & cand).bit_count(), -u))
        if adj[v] & cand == 0:
            # isolated among candidates: always take it
            branch(cand & ~(1 << v), size + 1, chosen | 1 << v)
            return
        branch(cand & ~(1 << v) & ~adj[v], size + 1, chosen | 1 << v)
        branch(cand & ~(1 << v), size, chosen)

    branch((1 << n) - 1, 0, 0)
    witness = frozenset(v + 1 for v in range(n) if best[1] >> v & 1)
    if timed_out:
        return IndependenceResult(None, witness, "timeout", upper=n)
    return IndependenceResult(best[0], witness, "exact", upper=best[0])


@dataclass(frozen=True)
class ReductionVerdict:
    alpha: int
    max_alt_id: int
    independent_set: frozenset
    alt_vector: tuple
    instance: JoinInstance

    @property
    def equal(self) -> bool:
        return self.max_alt_id == 2 * self.alpha

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "max_alt_id": self.max_alt_id, "equal": self.equal,
                "witnesses": {"independent_set": sorted(self.independent_set),
                              "alt_vector": list(self.alt_vector),
                              "rho": list(self.instance.rho)}}


def verify_reduction(g: Hypergraph, rho: Sequence[int] | None = None, *,
                     cap: int | None = None) -> ReductionVerdict:
    inst = join_construction(g, rho)
    alt = max_alt_fixed_perm(inst.joined, 2, cap=cap)
    alpha = independence_number(g)
    return ReductionVerdict(alpha.value, alt.value, alpha.witness, alt.vector, inst)
