import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evolalg import formats
from evolalg.errors import ParseError, ValidationError
from evolalg.evolution import new_algebra
from evolalg.fields import GF, QQ
from evolalg.functor import build_algebra
from evolalg.graph import graph_automorphisms, new_graph
from evolalg.groups import CATALOG
from evolalg.monomial import MonomialMap, algebra_automorphisms

from .conftest import random_graph


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 7), st.data())
def test_graph_round_trip(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    G = new_graph(n, edges)
    text = formats.write_graph(G)
    assert formats.read_graph(text) == G
    assert formats.write_graph(formats.read_graph(text)) == text


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([QQ, GF(2), GF(7)]), st.integers(0, 4), st.data())
def test_algebra_round_trip(F, n, data):
    if F == QQ:
        vals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    else:
        vals = st.integers(0, F.modulus - 1)
    rows = [[data.draw(vals) for _ in range(n)] for _ in range(n)]
    X = new_algebra(F, rows)
    text = formats.write_algebra(X)
    assert formats.read_algebra(text) == X
    assert formats.write_algebra(formats.read_algebra(text)) == text


def test_algebra_file_layout():
    text = formats.write_algebra(build_algebra(new_graph(2, [(0, 1)]), QQ))
    assert text == "evolalg v1\nQ\n3\nv0 v1 e0_1\n1 0 1\n0 1 1\n0 0 1\n"
    assert formats.write_algebra(new_algebra(QQ, [])) == "evolalg v1\nQ\n0\n\n"
    assert formats.read_algebra("evolalg v1\nQ\n0\n\n").dim == 0


def test_group_round_trip():
    for name, make in CATALOG.items():
        G = make()
        assert formats.read_group(formats.write_group_table(G)) == G
    text = formats.write_group_perms(3, [(1, 2, 0), (1, 0, 2)])
    assert formats.read_group(text).order == 6


def test_permgroup_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        P = graph_automorphisms(random_graph(rng, 6))
        text = formats.write_permgroup(P)
        assert formats.read_permgroup(text) == P


def test_monomial_round_trip():
    m = MonomialMap((2, 0, 1), (QQ(Fraction(-1, 2)), QQ(3), QQ(1)))
    assert formats.read_monomial(formats.write_monomial(m), QQ) == m
    F = GF(7)
    for g in algebra_automorphisms(new_algebra(F, [[0, 1], [1, 0]])).generators:
        assert formats.read_monomial(formats.write_monomial(g), F) == g


def test_vertexmap_round_trip():
    assert formats.read_vertexmap(formats.write_vertexmap((2, 0, 1))) == (2, 0, 1)


@pytest.mark.parametrize("text", [
    "",
    "graph v2\n0 0\n",
    "graph v1\n3\n",
    "graph v1\n3 1\n0 x\n",
    "graph v1\n3 2\n0 1\n",
    "graph v1\n3 1\n0 1\ngarbage\n",
    "graph v1\n-1 0\n",
    "evolalg v1\nQ\n2\na b\n1 0\n0\n",
    "evolalg v1\nGF:4\n1\na\n1\n",
    "evolalg v1\nGF:5\n1\na\n7\n",
    "evolalg v1\nQ\n1\na b\n1\n",
    "evolalg v1\nQ\n1\na\n1\n2\n",
    "group v1\nlist 2\n",
    "group v1\ntable 2\n0 1\n",
    "group v1\ntable 0\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        kind = formats.detect_kind(text)
        {"graph": formats.read_graph, "algebra": formats.read_algebra, "group": formats.read_group}[kind](text)


@pytest.mark.parametrize("text", [
    "graph v1\n2 1\n0 0\n",
    "graph v1\n2 2\n0 1\n1 0\n",
    "graph v1\n2 1\n0 5\n",
    "group v1\ntable 2\n0 1\n1 1\n",
    "group v1\nperm 3 1\n0 0 1\n",
    "evolalg v1\nQ\n2\na a\n1 0\n0 1\n",
])
def test_validation_errors(text):
    kind = formats.detect_kind(text)
    with pytest.raises(ValidationError):
        {"graph": formats.read_graph, "algebra": formats.read_algebra, "group": formats.read_group}[kind](text)


def test_trailing_blank_lines_allowed():
    assert formats.read_graph("graph v1\n2 1\n0 1\n\n\n").m == 1


def test_edge_order_normalized_on_read():
    assert formats.read_graph("graph v1\n3 2\n2 1\n1 0\n").edges == ((0, 1), (1, 2))
