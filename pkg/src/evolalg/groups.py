"""Finite groups as multiplication tables: closure, isomorphism, Cayley digraphs."""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import ClosureTooLarge, InvalidGroup, NotGenerating, OrderTooLarge
from .perm import check_permutation, compose, identity

CLOSURE_CAP = 10 ** 4
ISOMORPHISM_CAP = 10 ** 4
EXHAUSTIVE_ASSOCIATIVITY = 64
SAMPLED_TRIPLES = 10 ** 5


@dataclass(frozen=True)
class FiniteGroup:
    """``table[a][b]`` is the index of ``a*b``; element 0 is the identity."""

    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        _validate(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def order_profile(self) -> Counter:
        return Counter(self.element_order(a) for a in range(self.order))

    def subgroup(self, gens: Sequence[int]) -> set[int]:
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def _validate(t) -> None:
    n = len(t)
    if n == 0:
        raise InvalidGroup("a group has at least one element")
    full = set(range(n))
    for a, row in enumerate(t):
        if len(row) != n:
            raise InvalidGroup(f"row {a} has {len(row)} entries, expected {n}")
        if set(row) != full:
            raise InvalidGroup(f"row {a} is not a permutation of the elements")
    for b in range(n):
        if {t[a][b] for a in range(n)} != full:
            raise InvalidGroup(f"column {b} is not a permutation of the elements")
    if any(t[0][a] != a or t[a][0] != a for a in range(n)):
        raise InvalidGroup("element 0 is not the identity")
    if n <= EXHAUSTIVE_ASSOCIATIVITY:
        triples = product(range(n), repeat=3)
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLED_TRIPLES))
    for a, b, c in triples:
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise InvalidGroup(f"({a}*{b})*{c} != {a}*({b}*{c})")


def group_from_table(rows: Sequence[Sequence[int]]) -> FiniteGroup:
    return FiniteGroup(tuple(tuple(r) for r in rows))


def group_from_permutations(degree: int, gens: Sequence[Sequence[int]],
                            cap: int = CLOSURE_CAP) -> FiniteGroup:
    """Multiplication table of the generated group; elements numbered in discovery order.

    The product ``a*b`` is the composition "a after b".
    """
    gens = [check_permutation(g, degree) for g in gens]
    e = identity(degree)
    elements = [e]
    index = {e: 0}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureTooLarge(f"generated group exceeds {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    table = [[index[compose(a, b)] for b in elements] for a in elements]
    return FiniteGroup(tuple(tuple(r) for r in table))


def minimal_generators(G: FiniteGroup) -> tuple[int, ...]:
    """Greedy generating set: scan elements upward, keep those that enlarge the span."""
    gens: list[int] = []
    span = {0}
    for a in range(1, G.order):
        if len(span) == G.order:
            break
        if a not in span:
            gens.append(a)
            span = G.subgroup(gens)
    return tuple(gens)


def group_isomorphic(G1: FiniteGroup, G2: FiniteGroup, cap: int = ISOMORPHISM_CAP) -> bool:
    return find_group_isomorphism(G1, G2, cap) is not None


def find_group_isomorphism(G1: FiniteGroup, G2: FiniteGroup,
                           cap: int = ISOMORPHISM_CAP) -> tuple[int, ...] | None:
    """An isomorphism as an image vector, or None.

    Filters on order and element-order multiset, then backtracks over images of
    a greedy generating set of ``G1``, extending each choice along the Cayley
    graph and rejecting on the first inconsistency.
    """
    if max(G1.order, G2.order) > cap:
        raise OrderTooLarge(f"isomorphism test limited to order {cap}")
    if G1.order != G2.order or G1.order_profile() != G2.order_profile():
        return None
    gens = minimal_generators(G1)
    candidates = []
    orders2: dict[int, list[int]] = {}
    for b in range(G2.order):
        orders2.setdefault(G2.element_order(b), []).append(b)
    for g in gens:
        candidates.append(orders2[G1.element_order(g)])

    def extend(images):
        phi = {0: 0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g, h in zip(gens, images):
                y = G1.table[x][g]
                z = G2.table[phi[x]][h]
                if y in phi:
                    if phi[y] != z:
                        return None
                else:
                    phi[y] = z
                    queue.append(y)
        if len(set(phi.values())) != G1.order:
            return None
        return tuple(phi[a] for a in range(G1.order))

    def search(k, images):
        if k == len(gens):
            return extend(images)
        for h in candidates[k]:
            if h in images:
                continue
            found = search(k + 1, images + [h])
            if found is not None:
                return found
        return None

    return search(0, [])


@dataclass(frozen=True)
class ColoredDigraph:
    n: int
    arcs: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int, int], ...]


def cayley_digraph(G: FiniteGroup, S: Sequence[int]) -> ColoredDigraph:
    """Arc ``g -> g*s`` coloured by the position of ``s``; involutions give undirected edges."""
    if 0 in S or len(set(S)) != len(S):
        raise NotGenerating("generator list must avoid the identity and repeats")
    if len(G.subgroup(S)) != G.order:
        raise NotGenerating(f"{list(S)} does not generate the group")
    arcs = []
    edges = []
    for color, s in enumerate(S):
        involution = G.table[s][s] == 0
        for g in range(G.order):
            h = G.table[g][s]
            if involution:
                if g < h:
                    edges.append((g, h, color))
            else:
                arcs.append((g, h, color))
    return ColoredDigraph(G.order, tuple(arcs), tuple(edges))


# --- small named groups ---------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Element ``(g, h)`` gets index ``g * |H| + h``."""
    m = H.order
    rows = []
    for a in range(G.order * m):
        ga, ha = divmod(a, m)
        rows.append(tuple(G.table[ga][gb] * m + H.table[ha][hb]
                          for gb in range(G.order) for hb in range(m)))
    return FiniteGroup(tuple(rows))


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return cyclic(1)
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.insert(0, tuple(list(range(1, n)) + [0]))
    return group_from_permutations(n, gens)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of a regular n-gon (order 2n), n >= 3."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return group_from_permutations(n, [rot, ref])


def quaternion() -> FiniteGroup:
    """Q8 via its left-regular action on the units +-1, +-i, +-j, +-k."""
    # unit u encoded as 2*basis + sign_bit, basis in (1, i, j, k)
    mult = {(0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
            (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
            (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
            (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1)}

    def times(x, y):
        b, s = mult[(x // 2, y // 2)]
        neg = (x % 2) ^ (y % 2) ^ (s < 0)
        return 2 * b + neg

    i_unit, j_unit = 2, 4
    gens = [tuple(times(i_unit, y) for y in range(8)), tuple(times(j_unit, y) for y in range(8))]
    return group_from_permutations(8, gens)


CATALOG = {
    **{f"Z{n}": (lambda n=n: cyclic(n)) for n in range(1, 9)},
    "Z2xZ2": lambda: direct_product(cyclic(2), cyclic(2)),
    "Z2xZ4": lambda: direct_product(cyclic(2), cyclic(4)),
    "Z2^3": lambda: direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))),
    "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4),
    "Q8": quaternion,
}
