"""Realizing a finite group as the automorphism group of a graph and of an algebra.

The graph is the Cayley digraph of the group with each coloured arc replaced
by an asymmetric gadget.  Nothing here trusts the gadget argument: every graph
is run through the automorphism engine and compared with the requested group
before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from importlib import resources

from .errors import NotRegular, RealizationFailed
from .evolution import EvolutionAlgebra, is_regular
from .fields import FieldDescriptor
from .formats import read_graph
from .functor import build_algebra
from .graph import SimpleGraph, graph_automorphisms, new_graph
from .groups import (FiniteGroup, cayley_digraph, group_from_permutations, group_isomorphic,
                     minimal_generators)
from .monomial import algebra_automorphisms

RETRY_OFFSET = 3


def asymmetric_base_graph() -> SimpleGraph:
    """The connected 6-vertex graph with trivial automorphism group."""
    text = resources.files("evolalg").joinpath("data/asymmetric6.graph").read_text()
    return read_graph(text)


def gadget_graph(G: FiniteGroup, variant: int = 0) -> SimpleGraph:
    """Cayley digraph of ``G`` with arcs and involution edges replaced by gadgets.

    Arc ``g -> h`` of colour i becomes the path g-a-b-h with pendant paths of
    lengths ``2i+1+t`` at ``a`` and ``2i+2+t`` at ``b``; involution edge
    ``{g, h}`` of colour i becomes g-c-h with a pendant path of length
    ``2i+1+t`` at ``c``.  Group elements keep their indices as vertices.
    """
    D = cayley_digraph(G, minimal_generators(G))
    edges: list[tuple[int, int]] = []
    count = D.n

    def fresh() -> int:
        nonlocal count
        count += 1
        return count - 1

    def tail(at: int, length: int) -> None:
        prev = at
        for _ in range(length):
            v = fresh()
            edges.append((prev, v))
            prev = v

    for g, h, color in D.arcs:
        a, b = fresh(), fresh()
        edges += [(g, a), (a, b), (b, h)]
        tail(a, 2 * color + 1 + variant)
        tail(b, 2 * color + 2 + variant)
    for g, h, color in D.edges:
        c = fresh()
        edges += [(g, c), (c, h)]
        tail(c, 2 * color + 1 + variant)
    return new_graph(count, edges)


def _realizes(H: SimpleGraph, G: FiniteGroup) -> bool:
    aut = graph_automorphisms(H)
    if aut.order != G.order:
        return False
    return group_isomorphic(group_from_permutations(H.n, aut.generators), G)


def realize_graph(G: FiniteGroup, variant: int = 0) -> SimpleGraph:
    """A connected simple graph whose automorphism group is isomorphic to ``G``.

    The trivial group always gives the stored asymmetric graph and ``Z2`` at
    variant 0 gives a single edge; everything else goes through the gadget
    construction, retried once with longer tails if verification fails.
    """
    if variant < 0:
        raise ValueError("variant must be non-negative")
    if G.order == 1:
        H = asymmetric_base_graph()
        if _realizes(H, G):
            return H
        raise RealizationFailed("stored asymmetric graph failed verification")
    if G.order == 2 and variant == 0:
        H = new_graph(2, [(0, 1)])
        if _realizes(H, G):
            return H
    for t in (variant, variant + RETRY_OFFSET):
        H = gadget_graph(G, t)
        if H.is_connected() and _realizes(H, G):
            return H
    raise RealizationFailed(f"gadget graphs for variants {variant} and {variant + RETRY_OFFSET} "
                            f"do not realize the group of order {G.order}")


def realize_algebra(G: FiniteGroup, field: FieldDescriptor, variant: int = 0) -> EvolutionAlgebra:
    return build_algebra(realize_graph(G, variant), field)


@dataclass
class VerificationReport:
    group_order: int
    aut_order: int
    aut_group: FiniteGroup
    isomorphic: bool
    scales: list[str] = dc_field(default_factory=list)

    @property
    def all_scales_one(self) -> bool:
        return self.scales == ["1"]

    def lines(self) -> list[str]:
        return [
            f"group order: {self.group_order}",
            f"aut order: {self.aut_order}",
            f"isomorphic: {'yes' if self.isomorphic else 'no'}",
            f"all scales = 1: {'yes' if self.all_scales_one else 'no'}",
            f"observed scales: {' '.join(self.scales)}",
        ]


def verify_realization(G: FiniteGroup, X: EvolutionAlgebra) -> VerificationReport:
    """Compute Aut(X) and test it against ``G`` as an abstract group."""
    if not is_regular(X):
        raise NotRegular("verification needs a regular algebra")
    aut = algebra_automorphisms(X)
    P = aut.group
    H = group_from_permutations(P.degree, P.generators)
    iso = H.order == G.order and group_isomorphic(H, G)
    observed = {s for m in aut.elements() for s in m.scales} or {X.field.one}
    return VerificationReport(G.order, aut.order, H, iso, [str(s) for s in sorted(observed)])
