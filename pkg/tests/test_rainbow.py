import json

import numpy as np
import pytest

from kneser_lab import (Coloring, PartiteWitness, build_kneser, complete_ksubsets,
                        enumerate_proper_colorings, find_rainbow_witness, part_sizes,
                        sweep_verify)
from kneser_lab.config import Caps
from kneser_lab.rainbow import brute_force_witness, random_proper_coloring, witness_problems


def test_part_sizes():
    assert part_sizes(4, 3) == [2, 1, 1]
    assert part_sizes(3, 2) == [2, 1]
    assert part_sizes(6, 3) == [2, 2, 2]
    assert part_sizes(0, 2) == [0, 0]


def petersen():
    return build_kneser(complete_ksubsets(5, 2), 2)


def test_witness_on_a_petersen_coloring():
    k = petersen()
    c = next(enumerate_proper_colorings(k.kg, 3))
    w = find_rainbow_witness(k, c, 3)
    assert w is not None and w.r == 3
    assert witness_problems(k, c, w, 3) == []


def test_validator_flags_each_property():
    k = petersen()
    c = next(enumerate_proper_colorings(k.kg, 3))
    ids = {e: i for i, e in enumerate(k.base.edges, 1)}
    a, b, d = ids[frozenset({1, 2})], ids[frozenset({1, 3})], ids[frozenset({4, 5})]
    problems = witness_problems(k, c, PartiteWitness(((a,), (b,))), 2)
    assert any("meet" in p for p in problems)
    same = [u for u in range(1, 11) if c[u] == c[a] and u != a]
    problems = witness_problems(k, c, PartiteWitness(((a, same[0]), (d,))), 3)
    assert any("repeats a color" in p for p in problems)
    problems = witness_problems(k, c, PartiteWitness(((a,), (d,))), 3)
    assert any("expected 3 vertices" in p for p in problems)


def test_search_agrees_with_brute_force():
    k = petersen()
    outcomes = set()
    for i, c in enumerate(enumerate_proper_colorings(k.kg, 4)):
        if i % 7:
            continue
        for r in (3, 4, 5):
            fast = find_rainbow_witness(k, c, r)
            slow = brute_force_witness(k, c, r)
            assert (fast is None) == (slow is None)
            outcomes.add(fast is None)
    assert outcomes == {True, False}


def test_improper_coloring_rejected():
    k = petersen()
    with pytest.raises(ValueError):
        find_rainbow_witness(k, Coloring((1,) * 10, 1), 3)


def test_sweep_petersen_small():
    rep = sweep_verify(complete_ksubsets(5, 2), 2, max_t=3)
    assert rep.ok and rep.exhaustive and rep.r == 3
    assert rep.witnesses_found == rep.colorings_checked > 0


def test_sweep_alt_mode():
    rep = sweep_verify(complete_ksubsets(5, 2), 2, "alt", max_t=3)
    assert rep.r == 3 and rep.ok


def test_sweep_non_prime_needs_force():
    h = complete_ksubsets(8, 2)
    with pytest.raises(ValueError, match="--force"):
        sweep_verify(h, 4)


def test_sweep_sampling_past_cap():
    caps = Caps(sweep_colorings=5)
    rep = sweep_verify(complete_ksubsets(5, 2), 2, max_t=4, samples=25, seed=1, caps=caps)
    assert not rep.exhaustive and rep.sampled == 25 and rep.ok
    again = sweep_verify(complete_ksubsets(5, 2), 2, max_t=4, samples=25, seed=1, caps=caps)
    assert again.to_dict() == rep.to_dict()


def test_random_proper_coloring_is_proper():
    kg = petersen().kg
    rng = np.random.default_rng(0)
    from kneser_lab import is_proper
    for _ in range(10):
        assert is_proper(kg, random_proper_coloring(kg, 3, rng))


def test_counterexample_recording(tmp_path):
    from kneser_lab.rainbow import SweepReport, _record_counterexample
    rep = SweepReport(p=2, r=9, mode="cd", max_t=3)
    _record_counterexample(rep, Coloring((1, 2), 2), str(tmp_path))
    path = tmp_path / "counterexample_1.json"
    assert json.loads(path.read_text()) == {"t": 2, "colors": [1, 2]}
    assert not rep.ok


def test_explicit_colorings_and_improper_skip():
    good = next(enumerate_proper_colorings(petersen().kg, 3))
    rep = sweep_verify(complete_ksubsets(5, 2), 2, colorings=[good, Coloring((1,) * 10, 1)])
    assert rep.colorings_checked == 1 and rep.improper_skipped == 1 and not rep.exhaustive
