"""Individualization-refinement search over vertex-coloured, arc-labelled digraphs.

Both the graph engine and the monomial solver reduce to this: the graph case
uses undirected adjacency, the algebra case uses the zero pattern of the
structure matrix.  Candidate maps found at the leaves can be filtered further
with an ``accept`` callback (the algebra case solves for the scales there).

Partitions are ordered lists of cells, each cell sorted ascending.  Refinement
splits cells by counts of neighbours per cell until the partition is
equitable; the split trace is recorded so two search branches can be compared
without ever building a leaf.
"""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Sequence

from .perm import Perm, orbit

Accept = Callable[[Perm], Any]


class Structure:
    __slots__ = ("n", "colors", "out", "inn", "arcs", "directed")

    def __init__(self, n: int, colors: Sequence[Hashable], arcs: Iterable[tuple[int, int, int]],
                 directed: bool = True):
        self.n = n
        self.colors = list(colors)
        self.directed = directed
        self.out = [[] for _ in range(n)]
        self.inn = [[] for _ in range(n)]
        self.arcs = set()
        for u, v, lab in arcs:
            self.arcs.add((u, v, lab))
            self.out[u].append((v, lab))
            self.inn[v].append((u, lab))

    @classmethod
    def undirected(cls, n: int, edges: Iterable[tuple[int, int]], colors=None) -> "Structure":
        arcs = []
        for u, v in edges:
            arcs.append((u, v, 0))
            arcs.append((v, u, 0))
        return cls(n, colors if colors is not None else [0] * n, arcs, directed=False)

    def maps_onto(self, other: "Structure", perm: Perm) -> bool:
        if len(self.arcs) != len(other.arcs):
            return False
        if any(self.colors[i] != other.colors[perm[i]] for i in range(self.n)):
            return False
        oa = other.arcs
        return all((perm[u], perm[v], lab) in oa for u, v, lab in self.arcs)


def _initial(s: Structure):
    by_color: dict = {}
    for v in range(s.n):
        by_color.setdefault(s.colors[v], []).append(v)
    keys = sorted(by_color)
    return [by_color[k] for k in keys], tuple((k, len(by_color[k])) for k in keys)


def _key(s: Structure, v: int, cell_of: list[int]):
    out = tuple(sorted((cell_of[u], lab) for u, lab in s.out[v]))
    if not s.directed:
        return out
    return out, tuple(sorted((cell_of[u], lab) for u, lab in s.inn[v]))


def refine(s: Structure, cells: list[list[int]]):
    """Equitable refinement; returns the new cells and a trace of the splits."""
    trace = []
    cell_of = [0] * s.n
    while True:
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        new_cells = []
        rnd = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            parts: dict = {}
            for v in cell:
                parts.setdefault(_key(s, v, cell_of), []).append(v)
            ordered = sorted(parts)
            new_cells.extend(parts[k] for k in ordered)
            rnd.append((ci, tuple((k, len(parts[k])) for k in ordered)))
        trace.append(tuple(rnd))
        if len(new_cells) == len(cells):
            return new_cells, tuple(trace)
        cells = new_cells


def individualize(cells: list[list[int]], t: int, v: int) -> list[list[int]]:
    rest = [w for w in cells[t] if w != v]
    return cells[:t] + [[v], rest] + cells[t + 1:]


def target_cell(cells: list[list[int]]) -> int | None:
    """Index of the first smallest non-singleton cell."""
    best = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = i
    return best


class _Path:
    """The leftmost branch of the search tree of one structure."""

    def __init__(self, s: Structure, cells: list[list[int]]):
        self.nodes = []  # (cells, target index, chosen vertex, child trace)
        while True:
            t = target_cell(cells)
            if t is None:
                break
            v = cells[t][0]
            child, tr = refine(s, individualize(cells, t, v))
            self.nodes.append((cells, t, v, tr))
            cells = child
        self.leaf = [c[0] for c in cells]


def _descend(left: Structure, right: Structure, path: _Path, depth: int,
             cells: list[list[int]], accept: Accept | None):
    if depth == len(path.nodes):
        perm = [0] * left.n
        for i, cell in enumerate(cells):
            perm[path.leaf[i]] = cell[0]
        perm = tuple(perm)
        if not left.maps_onto(right, perm):
            return None
        payload = accept(perm) if accept is not None else True
        if payload is None or payload is False:
            return None
        return perm, payload
    _, t, _, trace = path.nodes[depth]
    for w in cells[t]:
        child, tr = refine(right, individualize(cells, t, w))
        if tr != trace:
            continue
        found = _descend(left, right, path, depth + 1, child, accept)
        if found is not None:
            return found
    return None


def automorphisms(s: Structure, accept: Accept | None = None):
    """Strong generators of the (accepted) automorphism group and its order.

    Returns ``(found, order)`` where ``found`` is a list of ``(perm, payload)``.
    The identity must be accepted.  The order is the product of the basic orbit
    lengths along the leftmost branch.
    """
    cells, _ = refine(s, _initial(s)[0])
    path = _Path(s, cells)
    found: list = []
    order = 1
    for k in reversed(range(len(path.nodes))):
        kcells, t, b, trace = path.nodes[k]
        orb = orbit(b, (g for g, _ in found))
        for w in kcells[t]:
            if w in orb:
                continue
            child, tr = refine(s, individualize(kcells, t, w))
            if tr != trace:
                continue
            hit = _descend(s, s, path, k + 1, child, accept)
            if hit is not None:
                found.append(hit)
                orb = orbit(b, (g for g, _ in found))
        order *= len(orb)
    return found, order


def _prepare(left: Structure, right: Structure, fixed: Sequence[tuple[int, int]]):
    if left.n != right.n or len(left.arcs) != len(right.arcs):
        return None
    lc, ltr = _initial(left)
    rc, rtr = _initial(right)
    if ltr != rtr:
        return None
    lc, ltr = refine(left, lc)
    rc, rtr = refine(right, rc)
    if ltr != rtr:
        return None
    for u, w in fixed:
        lt = next(i for i, c in enumerate(lc) if u in c)
        rt = next(i for i, c in enumerate(rc) if w in c)
        if lt != rt:
            return None
        if len(lc[lt]) > 1:
            lc, ltr = refine(left, individualize(lc, lt, u))
            rc, rtr = refine(right, individualize(rc, rt, w))
            if ltr != rtr:
                return None
    return lc, rc


def find_isomorphism(left: Structure, right: Structure, accept: Accept | None = None,
                     fixed: Sequence[tuple[int, int]] = ()):
    """Some ``(perm, payload)`` mapping ``left`` onto ``right`` extending ``fixed``, or None."""
    prep = _prepare(left, right, fixed)
    if prep is None:
        return None
    lc, rc = prep
    return _descend(left, right, _Path(left, lc), 0, rc, accept)


def least_isomorphism(left: Structure, right: Structure, accept: Accept | None = None):
    """The isomorphism with lexicographically least image vector, or None."""
    hit = find_isomorphism(left, right, accept)
    if hit is None:
        return None
    fixed: list[tuple[int, int]] = []
    for u in range(left.n):
        lc, rc = _prepare(left, right, fixed)
        t = next(i for i, c in enumerate(lc) if u in c)
        if len(rc[t]) == 1:
            fixed.append((u, rc[t][0]))
            continue
        for w in rc[t]:
            trial = find_isomorphism(left, right, accept, fixed + [(u, w)])
            if trial is not None:
                fixed.append((u, w))
                hit = trial
                break
        else:  # pragma: no cover - an extension always exists
            raise AssertionError("lost the isomorphism while fixing images")
    if tuple(w for _, w in fixed) != hit[0]:
        hit = find_isomorphism(left, right, accept, fixed)
    return hit
