import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evolalg.errors import DuplicateEdge, GroupTooLarge, LoopEdge, VertexOutOfRange
from evolalg.graph import (graph_automorphisms, graph_isomorphism, is_automorphism, is_morphism,
                           new_graph)
from evolalg.perm import compose, inverse

from . import oracles
from .conftest import classes, random_graph

K3 = new_graph(3, [(0, 1), (1, 2), (0, 2)])
P3 = new_graph(3, [(0, 1), (1, 2)])


def test_construction():
    assert K3.edges == ((0, 1), (0, 2), (1, 2))
    assert new_graph(4, []).m == 0
    assert new_graph(3, [(2, 0)]).edges == ((0, 2),)
    with pytest.raises(LoopEdge):
        new_graph(2, [(0, 0)])
    with pytest.raises(DuplicateEdge):
        new_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(VertexOutOfRange):
        new_graph(2, [(0, 2)])


def test_morphisms():
    assert is_morphism((0, 1, 2), K3, K3)
    assert not is_morphism((0, 0, 0), K3, K3)
    assert is_morphism((0, 1), new_graph(2, [(0, 1)]), K3)
    assert not is_morphism((0, 2), new_graph(2, [(0, 1)]), P3)


def test_small_orders():
    assert graph_automorphisms(K3).order == 6
    assert graph_automorphisms(P3).order == 2
    assert graph_automorphisms(new_graph(1, [])).order == 1
    trivial = graph_automorphisms(new_graph(1, []))
    assert trivial.generators == ()


@pytest.mark.parametrize("n", range(0, 7))
def test_edgeless_order_is_factorial(n):
    assert graph_automorphisms(new_graph(n, [])).order == math.factorial(n)


def test_cap():
    with pytest.raises(GroupTooLarge):
        graph_automorphisms(new_graph(8, []), cap=1000)


def test_isomorphism_examples():
    K3b = K3.relabel((2, 0, 1))
    f = graph_isomorphism(K3, K3b)
    assert f is not None and is_morphism(f, K3, K3b)
    assert graph_isomorphism(K3, P3) is None
    C1 = new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    C2 = new_graph(4, [(0, 2), (2, 1), (1, 3), (0, 3)])
    f = graph_isomorphism(C1, C2)
    assert f == min(oracles.graph_isomorphisms(4, C1.edges, C2.edges))


def test_random_graphs_against_brute_force():
    rng = random.Random(7)
    for _ in range(150):
        G = random_graph(rng, 7)
        brute = oracles.graph_automorphisms(G.n, G.edges)
        P = graph_automorphisms(G)
        assert P.order == len(brute)
        assert sorted(P.elements()) == sorted(brute)
        for g in P.generators:
            assert is_automorphism(g, G)


def test_automorphisms_form_a_group():
    rng = random.Random(11)
    for _ in range(30):
        G = random_graph(rng, 6)
        elems = set(graph_automorphisms(G).elements())
        assert tuple(range(G.n)) in elems
        for a in elems:
            assert inverse(a) in elems
            for b in elems:
                assert compose(a, b) in elems
        gens = graph_automorphisms(G).generators
        assert oracles.bfs_closure(G.n, gens) == elems


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.data())
def test_isomorphism_symmetric_and_least(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    e1 = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    e2 = data.draw(st.lists(st.sampled_from(pairs), unique=True, min_size=len(e1), max_size=len(e1))) \
        if pairs else []
    G1, G2 = new_graph(n, e1), new_graph(n, e2)
    f, g = graph_isomorphism(G1, G2), graph_isomorphism(G2, G1)
    assert (f is None) == (g is None)
    brute = oracles.graph_isomorphisms(n, G1.edges, G2.edges)
    assert f == (min(brute) if brute else None)


def test_isomorphism_on_relabelled_classes():
    rng = random.Random(3)
    for G in classes(5):
        p = list(range(5))
        rng.shuffle(p)
        H = G.relabel(p)
        f = graph_isomorphism(G, H)
        assert f is not None and is_morphism(f, G, H)
    reps = classes(4)
    for a in reps:
        for b in reps:
            assert (graph_isomorphism(a, b) is not None) == (a == b)
