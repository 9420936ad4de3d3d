"""Kneser graphs and hypergraphs KG^q(H)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .config import DEFAULT_CAPS
from .errors import ResourceLimitError
from .hypercore import Hypergraph


@dataclass(frozen=True)
class KneserStructure:
    """``kg`` has one vertex per base edge: kg vertex ``i`` is ``base.edges[i-1]``."""

    base: Hypergraph
    q: int
    kg: Hypergraph

    def base_edge(self, i: int) -> frozenset:
        return self.base.edges[i - 1]

    @property
    def vertex_map(self) -> dict:
        return {i: sorted(e) for i, e in enumerate(self.base.edges, start=1)}

    def sidecar_json(self) -> str:
        data = {"q": self.q, "base_n": self.base.n,
                "vertex_map": {str(i): e for i, e in self.vertex_map.items()}}
        return json.dumps(data, sort_keys=True, indent=2) + "\n"


def complete_ksubsets(n: int, k: int) -> Hypergraph:
    """All k-subsets of [n] in lexicographic order."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return Hypergraph(n, tuple(combinations(range(1, n + 1), k)))


def _disjoint_qsets(masks, q: int, cap: int):
    m = len(masks)
    found = []

    def extend(start, union, chosen):
        if len(chosen) == q:
            if len(found) >= cap:
                raise ResourceLimitError(
                    f"Kneser hypergraph has more than {cap} edges; raise the kg_edges cap")
            found.append(tuple(chosen))
            return
        # not enough edges left to complete the q-set
        for i in range(start, m - (q - len(chosen)) + 1):
            if masks[i] & union == 0:
                chosen.append(i + 1)
                extend(i + 1, union | masks[i], chosen)
                chosen.pop()

    extend(0, 0, [])
    return found


def build_kneser(h: Hypergraph, q: int, edge_cap: int | None = None) -> KneserStructure:
    """KG^q(h): edges are the q-sets of pairwise disjoint base edges."""
    if q < 2:
        raise ValueError("q must be >= 2")
    cap = DEFAULT_CAPS.kg_edges if edge_cap is None else edge_cap
    kg_edges = _disjoint_qsets(h.masks, q, cap)
    return KneserStructure(h, q, Hypergraph(h.m, tuple(kg_edges)))


def is_kneser_edge(k: KneserStructure, ids: Iterable[int]) -> bool:
    ids = set(ids)
    if len(ids) != k.q or not all(1 <= i <= k.kg.n for i in ids):
        return False
    union = 0
    for i in ids:
        mask = k.base.masks[i - 1]
        if mask & union:
            return False
        union |= mask
    return True
