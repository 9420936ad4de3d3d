import random
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from kneser_lab import Hypergraph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=6, max_m=8, min_size=1, max_size=3):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return Hypergraph(0, ())
    edge = st.sets(st.integers(1, n), min_size=min(min_size, n), max_size=min(max_size, n))
    edges = draw(st.lists(edge, max_size=max_m, unique_by=frozenset))
    return Hypergraph(n, tuple(edges))


def random_hypergraph(rng: random.Random, n: int, max_m: int, min_size: int = 2,
                      max_size: int = 3) -> Hypergraph:
    m = rng.randint(0, max_m)
    edges = set()
    for _ in range(m):
        size = rng.randint(min(min_size, n), min(max_size, n))
        edges.add(frozenset(rng.sample(range(1, n + 1), size)))
    return Hypergraph(n, tuple(sorted(tuple(sorted(e)) for e in edges)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
