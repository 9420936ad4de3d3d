import random

import pytest

import oracles
from kneser_lab import Hypergraph, independence_number, join_construction, verify_reduction
from kneser_lab.hardness import random_rho


def test_join_structure():
    g = Hypergraph(3, ((1, 2),))
    inst = join_construction(g, (2, 3, 1))
    assert inst.joined.n == 6
    assert inst.joined.m == 2 + 9
    assert inst.original(1) == 3 and inst.copy(1) == 4
    assert frozenset({3, 5}) in inst.joined.edges and frozenset({4, 6}) in inst.joined.edges


def test_join_requires_graph():
    with pytest.raises(ValueError):
        join_construction(Hypergraph(3, ((1, 2, 3),)))
    with pytest.raises(ValueError):
        join_construction(Hypergraph(2, ((1, 2),)), (1, 1))


def test_independence_matches_bruteforce():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(0, 10)
        edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.4]
        g = Hypergraph(n, tuple(edges))
        res = independence_number(g)
        assert res.value == oracles.independence_bruteforce(n, edges)
        assert len(res.witness) == res.value
        assert not any(e <= res.witness for e in g.edges)


def test_reduction_small_examples():
    c5 = Hypergraph(5, tuple((i, i % 5 + 1) for i in range(1, 6)))
    v = verify_reduction(c5)
    assert v.alpha == 2 and v.max_alt_id == 4 and v.equal
    d = v.to_dict()
    assert set(d) == {"alpha", "max_alt_id", "equal", "witnesses"}


def test_random_rho_is_seeded_bijection():
    assert random_rho(6, 3) == random_rho(6, 3)
    assert sorted(random_rho(6, 3)) == list(range(1, 7))
