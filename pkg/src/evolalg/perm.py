"""Permutations in one-line image notation and small permutation groups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GroupTooLarge, NotAPermutation

Perm = tuple[int, ...]

DEFAULT_CAP = 10 ** 6


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p: Sequence[int], n: int | None = None) -> bool:
    n = len(p) if n is None else n
    return len(p) == n and sorted(p) == list(range(n))


def check_permutation(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(p)
    if not is_permutation(p, n):
        raise NotAPermutation(f"{list(p)} is not a permutation of 0..{(n if n is not None else len(p)) - 1}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: i -> p[q[i]]."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def orbit(point: int, gens: Iterable[Perm]) -> set[int]:
    gens = list(gens)
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def closure(degree: int, gens: Iterable[Perm], cap: int = DEFAULT_CAP) -> list[Perm]:
    """All elements of the generated group, in breadth-first discovery order."""
    gens = [tuple(g) for g in gens]
    e = identity(degree)
    seen = {e}
    order = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                if len(seen) >= cap:
                    raise GroupTooLarge(f"group exceeds {cap} elements")
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def greedy_generators(elements: Iterable[Perm], degree: int) -> list[Perm]:
    """Scan ``elements`` in sorted order, keeping those not yet generated."""
    gens: list[Perm] = []
    generated = {identity(degree)}
    for g in sorted(elements):
        if g in generated:
            continue
        gens.append(g)
        generated = set(closure(degree, gens))
    return gens


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Perm, ...]
    order: int

    def elements(self, cap: int = DEFAULT_CAP) -> list[Perm]:
        return sorted(closure(self.degree, self.generators, cap))

    def __contains__(self, p) -> bool:
        return tuple(p) in set(closure(self.degree, self.generators))

    @classmethod
    def from_generators(cls, degree: int, gens: Iterable[Perm], cap: int = DEFAULT_CAP) -> "PermGroup":
        """Group with order computed by naive closure."""
        gens = sorted({check_permutation(g, degree) for g in gens} - {identity(degree)})
        return cls(degree, tuple(gens), len(closure(degree, gens, cap)))
