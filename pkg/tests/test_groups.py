from itertools import permutations

import pytest

from evolalg.errors import ClosureTooLarge, InvalidGroup, NotGenerating, OrderTooLarge
from evolalg.graph import graph_automorphisms, new_graph
from evolalg.groups import (CATALOG, cayley_digraph, cyclic, direct_product, find_group_isomorphism,
                            group_from_permutations, group_from_table, group_isomorphic,
                            minimal_generators, symmetric)
from evolalg.perm import PermGroup

from . import oracles


def test_from_permutations_examples():
    assert group_from_permutations(3, [(1, 0, 2)]).order == 2
    S3 = group_from_permutations(3, [(1, 2, 0), (1, 0, 2)])
    assert S3.order == 6 == len(oracles.bfs_closure(3, [(1, 2, 0), (1, 0, 2)]))
    assert group_from_permutations(3, []).order == 1


def test_closure_cap():
    with pytest.raises(ClosureTooLarge):
        group_from_permutations(8, [(1, 2, 3, 4, 5, 6, 7, 0), (1, 0, 2, 3, 4, 5, 6, 7)], cap=1000)


def test_cross_module_closure():
    for gens in ([(1, 2, 3, 0)], [(1, 0, 2, 3), (0, 1, 3, 2)], [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)]):
        assert group_from_permutations(len(gens[0]), gens).order == \
            PermGroup.from_generators(len(gens[0]), gens).order


def test_invalid_tables():
    with pytest.raises(InvalidGroup):
        group_from_table([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroup):
        group_from_table([[1, 0], [0, 1]])
    # Latin square with identity that is not associative
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(InvalidGroup):
        group_from_table(bad)
    with pytest.raises(InvalidGroup):
        group_from_table([])


def test_isomorphism_examples():
    assert not group_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2)))
    S3_perm = group_from_permutations(3, [(1, 2, 0), (1, 0, 2)])
    S3_table = group_from_table(symmetric(3).table)
    assert group_isomorphic(S3_perm, S3_table)
    assert group_isomorphic(cyclic(1), cyclic(1))
    assert group_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6))
    assert not group_isomorphic(cyclic(6), symmetric(3))


def test_isomorphism_cap():
    with pytest.raises(OrderTooLarge):
        group_isomorphic(cyclic(3), cyclic(3), cap=2)


def test_found_isomorphism_is_homomorphism():
    names = list(CATALOG)
    for a in names:
        for b in names:
            G, H = CATALOG[a](), CATALOG[b]()
            phi = find_group_isomorphism(G, H)
            assert (phi is not None) == (a == b)
            if phi is not None:
                assert sorted(phi) == list(range(G.order))
                for x in range(G.order):
                    for y in range(G.order):
                        assert phi[G.mul(x, y)] == H.mul(phi[x], phi[y])


def test_catalog_orders():
    expected = {"Z2xZ2": 4, "Z2xZ4": 8, "Z2^3": 8, "S3": 6, "D4": 8, "Q8": 8}
    expected.update({f"Z{n}": n for n in range(1, 9)})
    for name, make in CATALOG.items():
        G = make()
        assert G.order == expected[name]
        for a in range(G.order):
            assert G.mul(0, a) == a == G.mul(a, 0)
    profiles = {name: CATALOG[name]().order_profile() for name in ("Z2xZ4", "D4", "Q8")}
    assert profiles["D4"][2] == 5 and profiles["Q8"][2] == 1 and profiles["Z2xZ4"][2] == 3


def test_minimal_generators():
    Z6 = cyclic(6)
    assert minimal_generators(Z6) == (1,)
    assert minimal_generators(cyclic(1)) == ()
    assert len(minimal_generators(direct_product(cyclic(2), cyclic(2)))) == 2
    # greedy: smallest index that generates alone
    G = group_from_table(Z6.table)
    orders = [G.element_order(a) for a in range(6)]
    assert minimal_generators(G)[0] == min(a for a in range(6) if orders[a] == 6)


def test_cayley_examples():
    D = cayley_digraph(cyclic(3), [1])
    assert D.n == 3 and len(D.arcs) == 3 and D.edges == ()
    D = cayley_digraph(cyclic(2), [1])
    assert D.arcs == () and D.edges == ((0, 1, 0),)
    S3 = symmetric(3)
    gens = minimal_generators(S3)
    assert [S3.element_order(g) for g in gens] == [3, 2]
    D = cayley_digraph(S3, gens)
    assert len([a for a in D.arcs if a[2] == 0]) == 6
    assert len([e for e in D.edges if e[2] == 1]) == 3
    with pytest.raises(NotGenerating):
        cayley_digraph(cyclic(4), [2])
    with pytest.raises(NotGenerating):
        cayley_digraph(cyclic(4), [0, 1])


def _cayley_automorphisms(D):
    arcs = {(u, v, c) for u, v, c in D.arcs}
    edges = {(frozenset((u, v)), c) for u, v, c in D.edges}
    count = 0
    for p in permutations(range(D.n)):
        if all((p[u], p[v], c) in arcs for u, v, c in D.arcs) and \
                all((frozenset((p[u], p[v])), c) in edges for u, v, c in D.edges):
            count += 1
    return count


@pytest.mark.parametrize("name", ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4", "Q8", "Z2^3"])
def test_cayley_colour_automorphisms_are_translations(name):
    G = CATALOG[name]()
    assert _cayley_automorphisms(cayley_digraph(G, minimal_generators(G))) == G.order


def test_graph_group_round_trip():
    K4 = new_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    P = graph_automorphisms(K4)
    G = group_from_permutations(4, P.generators)
    assert G.order == 24
    assert group_isomorphic(G, symmetric(4))
    assert not group_isomorphic(G, direct_product(cyclic(3), CATALOG["Z2xZ4"]()))
