import random

import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from conftest import hypergraphs, random_hypergraph
from kneser_lab import (UNBOUNDED, Coloring, Hypergraph, build_kneser, chromatic_number,
                        complete_ksubsets, enumerate_proper_colorings, is_proper,
                        is_t_colorable, local_chromatic_number, local_value)
from kneser_lab.coloring import ColorSearch


def test_trivial_cases():
    assert chromatic_number(Hypergraph(0, ())).value == 0
    assert chromatic_number(Hypergraph(4, ())).value == 1
    assert chromatic_number(Hypergraph(3, ((2,), (1, 3)))).value == UNBOUNDED


def test_odd_cycle_and_fano_like():
    c5 = Hypergraph(5, tuple((i, i % 5 + 1) for i in range(1, 6)))
    res = chromatic_number(c5)
    assert res.value == 3 and is_proper(c5, res.witness)
    # the Fano plane is not 2-colorable
    fano = Hypergraph(7, ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7),
                          (3, 5, 6)))
    assert is_t_colorable(fano, 2) is None
    assert chromatic_number(fano).value == 3


@given(hypergraphs(max_n=6, max_m=8))
def test_chromatic_matches_bruteforce(h):
    res = chromatic_number(h)
    expect = oracles.chromatic_bruteforce(h.n, h.edges)
    assert res.value == (UNBOUNDED if expect is None else expect)
    if res.witness is not None:
        assert is_proper(h, res.witness)
        assert res.witness.used <= res.value


def test_chromatic_on_random_instances():
    rng = random.Random(3)
    for _ in range(60):
        h = random_hypergraph(rng, rng.randint(2, 7), 12, 2, 3)
        assert chromatic_number(h).value == oracles.chromatic_bruteforce(h.n, h.edges)


@given(hypergraphs(max_n=5, max_m=6))
@settings(max_examples=40)
def test_enumeration_counts(h):
    t = 3
    cols = oracles.all_colorings(h.n, t)
    proper = cols[oracles.proper_mask(cols, h.edges)]
    got = [c.colors for c in enumerate_proper_colorings(h, t, canonical=False)]
    assert len(got) == len(set(got)) == len(proper)
    assert set(got) == {tuple(int(x) for x in row) for row in proper}
    canon = list(enumerate_proper_colorings(h, t))
    for c in canon:
        seen = []
        for x in c.colors:
            if x not in seen:
                seen.append(x)
        assert seen == list(range(1, len(seen) + 1))


def test_canonical_representatives_cover_orbits():
    h = build_kneser(complete_ksubsets(5, 2), 2).kg
    canon = {c.colors for c in enumerate_proper_colorings(h, 3)}
    full = [c.colors for c in enumerate_proper_colorings(h, 3, canonical=False)]

    def normal(colors):
        relabel = {}
        return tuple(relabel.setdefault(x, len(relabel) + 1) for x in colors)

    assert {normal(c) for c in full} == canon


def test_timeout_is_reported():
    h = build_kneser(complete_ksubsets(9, 2), 2).kg
    res = chromatic_number(h, time_budget_s=0.0)
    assert res.status == "timeout" and res.value is None
    assert res.lower <= res.upper


def test_random_order_search_is_proper():
    h = build_kneser(complete_ksubsets(5, 2), 2).kg
    rng = np.random.default_rng(5)
    for _ in range(20):
        order = [int(v) + 1 for v in rng.permutation(h.n)]
        try_order = np.array([rng.permutation(4) + 1 for _ in range(h.n)], dtype=np.int64)
        c = ColorSearch(h, 4, order=order, canonical=False, try_order=try_order).next()
        assert is_proper(h, c)


def test_local_petersen():
    h = build_kneser(complete_ksubsets(5, 2), 2).kg
    res = local_chromatic_number(h, max_t=4)
    assert res.value == 3 and res.status == "exact"
    assert local_value(h, res.witness) == 3


def test_local_rejects_low_cap():
    h = build_kneser(complete_ksubsets(5, 2), 2).kg
    with pytest.raises(ValueError):
        local_chromatic_number(h, max_t=2)


def test_local_matches_bruteforce():
    rng = random.Random(8)
    checked = 0
    while checked < 40:
        h = random_hypergraph(rng, rng.randint(3, 6), 8, 2, 3)
        if h.m == 0:
            continue
        chi = oracles.chromatic_bruteforce(h.n, h.edges)
        max_t = min(h.n, chi + 1)
        res = local_chromatic_number(h, max_t=max_t)
        assert res.value == oracles.local_chromatic_bruteforce(h.n, h.edges, max_t)
        assert res.witness.used <= max_t and is_proper(h, res.witness)
        checked += 1


def test_local_value_rejects_improper():
    h = Hypergraph(2, ((1, 2),))
    with pytest.raises(ValueError):
        local_value(h, Coloring((1, 1), 1))
