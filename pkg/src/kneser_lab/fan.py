"""Equivariant labelings of sd(Z_q^{*n}) and their alternating chains.

A vertex of the barycentric subdivision is a nonzero vector over
``{0, 1, ..., q}`` (``j`` standing for omega**j); a simplex is a chain in
the domination order ``X <= Y`` (every nonzero entry of X agrees with Y).
A labeling sends each vertex to ``(sign, abs)`` in ``Z_q x [m]``; it is
proper when no comparable pair gets equal abs with different signs, i.e.
when it is a simplicial map into Z_q^{*m}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

import numpy as np

from .config import DEFAULT_CAPS
from .errors import ResourceLimitError


def rotate(x: tuple, q: int, power: int = 1) -> tuple:
    return tuple((v - 1 + power) % q + 1 if v else 0 for v in x)


def rotate_sign(sign: int, q: int, power: int = 1) -> int:
    return (sign - 1 + power) % q + 1


def dominated(x: tuple, y: tuple) -> bool:
    """``x <= y``: each nonzero entry of x equals the entry of y."""
    return all(a == 0 or a == b for a, b in zip(x, y))


def is_comparable(x: tuple, y: tuple) -> bool:
    if len(x) != len(y):
        raise ValueError("vectors must have the same length")
    return dominated(x, y) or dominated(y, x)


def support(x: tuple) -> int:
    return sum(1 for v in x if v)


@dataclass(frozen=True)
class SdVertices:
    q: int
    n: int
    vectors: tuple  # lexicographic order
    orbits: tuple  # each orbit: (rep, rep*w, rep*w^2, ...), rep lexicographically least

    @property
    def orbit_reps(self) -> tuple:
        return tuple(o[0] for o in self.orbits)


def sd_vertices(q: int, n: int, cap: int | None = None) -> SdVertices:
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    cap = DEFAULT_CAPS.fan_vertices if cap is None else cap
    if (q + 1) ** n > cap:
        raise ResourceLimitError(f"(q+1)^n = {(q + 1) ** n} exceeds the cap {cap}")
    vectors = tuple(x for x in product(range(q + 1), repeat=n) if any(x))
    seen = set()
    orbits = []
    for x in vectors:
        if x in seen:
            continue
        orbit = tuple(rotate(x, q, k) for k in range(q))
        # the action is free: no nontrivial rotation fixes a nonzero vector
        assert len(set(orbit)) == q, f"non-free orbit at {x}"
        seen.update(orbit)
        orbits.append(orbit)
    assert len(orbits) * q == len(vectors)
    return SdVertices(q, n, vectors, tuple(orbits))


@dataclass(frozen=True)
class Labeling:
    q: int
    n: int
    m: int
    assignment: dict  # vector -> (sign, abs)

    def __call__(self, x: tuple) -> tuple:
        return self.assignment[x]

    @classmethod
    def from_reps(cls, q: int, n: int, m: int, rep_labels: dict) -> "Labeling":
        """Extend labels given on orbit representatives equivariantly."""
        assignment = {}
        for rep, (sign, a) in rep_labels.items():
            for k in range(q):
                assignment[rotate(rep, q, k)] = (rotate_sign(sign, q, k), a)
        return cls(q, n, m, assignment)

    def to_dict(self) -> dict:
        sd = sd_vertices(self.q, self.n)
        return {"q": self.q, "n": self.n, "m": self.m,
                "orbit_labels": [{"vector": list(r), "label": list(self.assignment[r])}
                                 for r in sd.orbit_reps]}


@dataclass(frozen=True)
class LabelingCheck:
    proper: bool
    equivariant: bool
    kind: str | None = None  # "equivariance" | "properness"
    orbit: tuple | None = None
    pair: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.proper and self.equivariant


def _comparable_pairs(sd: SdVertices) -> list:
    by_support = sorted(sd.vectors, key=lambda x: (support(x), x))
    pairs = []
    for i, x in enumerate(by_support):
        for y in by_support[i + 1:]:
            if support(y) > support(x) and dominated(x, y):
                pairs.append((x, y))
    return pairs


def check_labeling(lab: Labeling, _sd: SdVertices | None = None, _pairs=None) -> LabelingCheck:
    """First equivariance failure (by orbit), else first improper comparable pair."""
    sd = sd_vertices(lab.q, lab.n) if _sd is None else _sd
    missing = [x for x in sd.vectors if x not in lab.assignment]
    if missing:
        raise ValueError(f"labeling is partial: no label for {missing[0]}")
    for x in sd.vectors:
        sign, a = lab.assignment[x]
        if not (1 <= sign <= lab.q and 1 <= a <= lab.m):
            raise ValueError(f"label {(sign, a)} of {x} outside Z_{lab.q} x [{lab.m}]")
    for orbit in sd.orbits:
        sign, a = lab.assignment[orbit[0]]
        for k, x in enumerate(orbit):
            if lab.assignment[x] != (rotate_sign(sign, lab.q, k), a):
                return LabelingCheck(False, False, "equivariance", orbit=orbit[0])
    pairs = _comparable_pairs(sd) if _pairs is None else _pairs
    for x, y in pairs:
        (sx, ax), (sy, ay) = lab.assignment[x], lab.assignment[y]
        if ax == ay and sx != sy:
            return LabelingCheck(False, True, "properness", pair=(x, y))
    return LabelingCheck(True, True)


@dataclass(frozen=True)
class AlternatingChain:
    vectors: tuple  # X_1 < X_2 < ... < X_n, |X_i| = i
    labels: tuple  # labels[i] belongs to vectors[i]

    def by_abs(self) -> list:
        return sorted(self.labels, key=lambda lab: lab[1])


def is_alternating(labels) -> bool:
    """Sorted by abs, the abs values strictly increase and neighboring signs differ."""
    ordered = sorted(labels, key=lambda lab: lab[1])
    return all(a[1] < b[1] and a[0] != b[0] for a, b in zip(ordered, ordered[1:]))


def maximal_chains(q: int, n: int) -> Iterator[tuple]:
    """All chains X_1 < ... < X_n in sd(Z_q^{*n}), depth first."""
    def grow(x, chain):
        if len(chain) == n:
            yield tuple(chain)
            return
        for i in range(n):
            if x[i] == 0:
                for s in range(1, q + 1):
                    y = x[:i] + (s,) + x[i + 1:]
                    chain.append(y)
                    yield from grow(y, chain)
                    chain.pop()

    yield from grow((0,) * n, [])


def _search_chain(lab: Labeling) -> AlternatingChain | None:
    n = lab.n
    labels = lab.assignment

    def grow(x, chain, used_abs):
        if len(chain) == n:
            labs = [labels[v] for v in chain]
            if is_alternating(labs):
                return AlternatingChain(tuple(chain), tuple(labs))
            return None
        for i in range(n):
            if x[i] == 0:
                for s in range(1, lab.q + 1):
                    y = x[:i] + (s,) + x[i + 1:]
                    a = labels[y][1]
                    if a in used_abs:
                        continue
                    chain.append(y)
                    found = grow(y, chain, used_abs | {a})
                    chain.pop()
                    if found is not None:
                        return found
        return None

    return grow((0,) * n, [], frozenset())


def find_alternating_chain(lab: Labeling) -> AlternatingChain | None:
    """A chain of n vectors whose labels form an alternating simplex, if any."""
    verdict = check_labeling(lab)
    if not verdict.ok:
        raise ValueError(f"labeling must be proper and equivariant ({verdict.kind} fails)")
    return _search_chain(lab)


@dataclass
class FanReport:
    q: int
    n: int
    m: int
    mode: str  # exhaustive | sampled
    labelings: int = 0
    proper: int = 0
    with_chain: int = 0
    violations: int = 0
    counterexamples: list = field(default_factory=list)
    seed: int | None = None

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "m": self.m, "mode": self.mode,
                "labelings": self.labelings, "proper": self.proper,
                "with_chain": self.with_chain, "violations": self.violations,
                "counterexamples": self.counterexamples, "seed": self.seed}


def exhaustive_fan_check(q: int, n: int, m: int, samples: int | None = None, seed: int = 0,
                         cap: int | None = None) -> FanReport:
    """Enumerate (or sample) every equivariant labeling via free choices on orbit
    representatives; every proper one must contain an alternating chain."""
    if m < 1:
        raise ValueError("m must be >= 1")
    cap = DEFAULT_CAPS.fan_labelings if cap is None else cap
    sd = sd_vertices(q, n)
    reps = sd.orbit_reps
    choices = [(s, a) for a in range(1, m + 1) for s in range(1, q + 1)]
    total = len(choices) ** len(reps)
    pairs = _comparable_pairs(sd)
    if samples is None:
        if total > cap:
            raise ResourceLimitError(
                f"{total} labelings exceed the cap {cap}; pass a sample count")
        stream = product(range(len(choices)), repeat=len(reps))
        report = FanReport(q, n, m, "exhaustive")
    else:
        # counter-based: sample i depends only on (seed, i)
        def sampled():
            for i in range(samples):
                rng = np.random.Generator(np.random.Philox(key=seed, counter=i))
                yield tuple(int(v) for v in rng.integers(0, len(choices), size=len(reps)))

        stream = sampled()
        report = FanReport(q, n, m, "sampled", seed=seed)

    for pick in stream:
        report.labelings += 1
        lab = Labeling.from_reps(q, n, m, {r: choices[i] for r, i in zip(reps, pick)})
        if not check_labeling(lab, sd, pairs).ok:
            continue
        report.proper += 1
        if _search_chain(lab) is not None:
            report.with_chain += 1
        else:
            report.violations += 1
            report.counterexamples.append(lab.to_dict()["orbit_labels"])
    return report
