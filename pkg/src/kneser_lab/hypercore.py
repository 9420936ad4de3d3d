"""Hypergraphs, colorings, induced subhypergraphs and the neighborhood operator.

Vertices are the integers ``1..n`` everywhere in the public API and in files.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ParseError

log = logging.getLogger(__name__)

VertexSet = frozenset


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph on vertices ``1..n``.

    ``edges`` keeps first-occurrence order; duplicates are dropped with a
    warning.  The empty edge is rejected.
    """

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        seen = set()
        out = []
        dropped = 0
        for raw in self.edges:
            e = frozenset(int(v) for v in raw)
            if not e:
                raise ValueError("the empty set is not allowed as an edge")
            bad = [v for v in e if not 1 <= v <= self.n]
            if bad:
                raise ValueError(f"vertex id out of range 1..{self.n}: {min(bad)}")
            if e in seen:
                dropped += 1
                continue
            seen.add(e)
            out.append(e)
        if dropped:
            log.warning("dropped %d duplicate edge(s)", dropped)
        object.__setattr__(self, "edges", tuple(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def masks(self) -> tuple:
        """Edges as integer bitmasks, bit ``v-1`` for vertex ``v``."""
        return tuple(sum(1 << (v - 1) for v in e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple:
        deg = [0] * (self.n + 1)
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg[1:])

    @cached_property
    def has_singleton_edge(self) -> bool:
        return any(len(e) == 1 for e in self.edges)

    @property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    @cached_property
    def incidence(self):
        """0-based CSR incidence ``(ptr, edge_ids, edge_sizes)`` for the kernels."""
        lists = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                lists[v - 1].append(i)
        ptr = np.zeros(self.n + 1, dtype=np.int64)
        ptr[1:] = np.cumsum([len(x) for x in lists])
        idx = np.array([i for x in lists for i in x], dtype=np.int64)
        sizes = np.array([len(e) for e in self.edges], dtype=np.int64)
        return ptr, idx, sizes

    def degree_order(self) -> list:
        """Vertices by descending degree, ties by id."""
        return sorted(self.vertices, key=lambda v: (-self.degrees[v - 1], v))

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(" ".join(str(v) for v in sorted(e)) for e in self.edges)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Coloring:
    colors: tuple
    t: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.t < 1:
            raise ValueError("t must be >= 1")
        for c in self.colors:
            if not 1 <= c <= self.t:
                raise ValueError(f"color {c} outside 1..{self.t}")

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        """Color of vertex ``v`` (1-based)."""
        return self.colors[v - 1]

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def to_dict(self) -> dict:
        return {"t": self.t, "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, data: dict) -> "Coloring":
        return cls(tuple(data["colors"]), int(data["t"]))


def coloring_from_json(text: str) -> Coloring:
    try:
        return Coloring.from_dict(json.loads(text))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad coloring file: {exc}") from exc


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``.hg`` text format.

    Line 1 is ``n m``, then ``m`` lines of space-separated vertex ids.  Lines
    starting with ``#`` and blank lines are skipped.
    """
    header = None
    edges: list = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
                raise ParseError("malformed header, expected 'n m'", lineno)
            header = (nums[0], nums[1])
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edges", lineno)
        for v in nums:
            if not 1 <= v <= n:
                raise ParseError(f"vertex id out of range 1..{n}: {v}", lineno)
        if len(set(nums)) != len(nums):
            raise ParseError("repeated vertex in edge", lineno)
        edges.append(nums)
    if header is None:
        raise ParseError("missing header", lineno or 1)
    if len(edges) != header[1]:
        raise ParseError(
            f"declared {header[1]} edges but found {len(edges)} (empty edge lines are not allowed)",
            lineno,
        )
    return Hypergraph(header[0], tuple(edges))


def read_hypergraph(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


class Induced(NamedTuple):
    hypergraph: Hypergraph
    vertex_map: tuple  # vertex_map[i - 1] is the original id of new vertex i


def induced(h: Hypergraph, xs: Iterable[int]) -> Induced:
    keep = sorted(set(xs))
    for v in keep:
        if not 1 <= v <= h.n:
            raise ValueError(f"vertex {v} not in 1..{h.n}")
    new_id = {v: i for i, v in enumerate(keep, start=1)}
    edges = [[new_id[v] for v in e] for e in h.edges if all(v in new_id for v in e)]
    return Induced(Hypergraph(len(keep), tuple(edges)), tuple(keep))


def is_proper(h: Hypergraph, c: Coloring | Sequence[int]) -> bool:
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != h.n:
        raise ValueError(f"coloring has {len(colors)} entries, hypergraph has {h.n} vertices")
    for e in h.edges:
        if len({colors[v - 1] for v in e}) == 1:
            return False
    return True


def neighborhood_closure(h: Hypergraph, xs: Iterable[int]) -> frozenset:
    """``X`` plus every vertex that is the only vertex of some edge outside ``X``."""
    x = frozenset(xs)
    out = set(x)
    for e in h.edges:
        rest = e - x
        if len(rest) == 1:
            out |= rest
    return frozenset(out)
