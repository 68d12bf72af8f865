import random

import pytest

from evolalg.fields import GF, QQ
from evolalg.graph import new_graph

from . import oracles

FIELDS = [QQ, GF(2), GF(3), GF(5), GF(7), GF(101)]


def random_graph(rng, max_n, p=None):
    n = rng.randint(0, max_n)
    p = rng.random() if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return new_graph(n, edges)


_CLASSES = {}


def classes(n):
    if n not in _CLASSES:
        _CLASSES[n] = [new_graph(n, e) for e in oracles.graph_classes(n)]
    return _CLASSES[n]


def small_classes(max_n=5):
    return [G for n in range(1, max_n + 1) for G in classes(n)]


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
