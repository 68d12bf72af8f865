"""Finite simple graphs, graph morphisms, and the automorphism/isomorphism engine."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from . import _search
from .errors import DuplicateEdge, GroupTooLarge, LoopEdge, VertexOutOfRange
from .perm import DEFAULT_CAP, Perm, PermGroup, greedy_generators

VertexMap = tuple[int, ...]


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices ``0..n-1``; edges as sorted pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set()

    def _edge_set(self) -> frozenset:
        cached = self.__dict__.get("_es")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_es", cached)
        return cached

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Image of the graph under the vertex bijection ``perm``."""
        return new_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def _structure(self) -> _search.Structure:
        return _search.Structure.undirected(self.n, self.edges)


def new_graph(n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) with {n} vertices")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} given twice")
        seen.add(key)
    return SimpleGraph(n, tuple(sorted(seen)))


def is_morphism(f: Sequence[int], G1: SimpleGraph, G2: SimpleGraph) -> bool:
    """Injective vertex map sending every edge of ``G1`` to an edge of ``G2``."""
    if len(f) != G1.n or any(not 0 <= x < G2.n for x in f):
        return False
    if len(set(f)) != len(f):
        return False
    return all(G2.has_edge(f[u], f[v]) for u, v in G1.edges)


def is_automorphism(p: Sequence[int], G: SimpleGraph) -> bool:
    return len(p) == G.n and is_morphism(p, G, G)


def graph_automorphisms(G: SimpleGraph, cap: int = DEFAULT_CAP) -> PermGroup:
    """Full automorphism group by individualization-refinement.

    The order is exact (product of basic orbit lengths); groups larger than
    ``cap`` are refused.
    """
    found, order = _search.automorphisms(G._structure())
    if order > cap:
        raise GroupTooLarge(f"automorphism group of order {order} exceeds cap {cap}")
    return PermGroup(G.n, tuple(sorted(p for p, _ in found)), order)


def graph_isomorphism(G1: SimpleGraph, G2: SimpleGraph) -> VertexMap | None:
    """Lexicographically least isomorphism ``G1 -> G2`` as an image vector."""
    if G1.n != G2.n or G1.m != G2.m or sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    hit = _search.least_isomorphism(G1._structure(), G2._structure())
    return None if hit is None else hit[0]


def brute_force_automorphisms(G: SimpleGraph) -> list[Perm]:
    """Every automorphism, by filtering all n! permutations."""
    return [p for p in permutations(range(G.n)) if is_morphism(p, G, G)]


def brute_force_group(G: SimpleGraph, cap: int = DEFAULT_CAP) -> PermGroup:
    elements = brute_force_automorphisms(G)
    if len(elements) > cap:
        raise GroupTooLarge(f"automorphism group of order {len(elements)} exceeds cap {cap}")
    return PermGroup(G.n, tuple(greedy_generators(elements, G.n)), len(elements))
