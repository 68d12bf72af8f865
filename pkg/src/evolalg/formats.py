"""Version-tagged text formats for graphs, algebras, groups and maps.

Every reader rejects anything after the expected content except blank lines,
and every writer output reads back to an equal object.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ParseError
from .evolution import EvolutionAlgebra, new_algebra
from .fields import FieldDescriptor, ScalarMatrix
from .graph import SimpleGraph, new_graph
from .groups import FiniteGroup, group_from_permutations, group_from_table
from .monomial import MonomialMap
from .perm import PermGroup

HEADERS = {
    "graph v1": "graph",
    "evolalg v1": "algebra",
    "group v1": "group",
    "permgroup v1": "permgroup",
    "monomial v1": "monomial",
    "vertexmap v1": "vertexmap",
}


def detect_kind(text: str) -> str:
    first = text.split("\n", 1)[0].strip()
    try:
        return HEADERS[first]
    except KeyError:
        raise ParseError(f"unknown header {first!r}", 1) from None


class _Lines:
    def __init__(self, text: str, header: str):
        self.lines = text.split("\n")
        self.pos = 0
        if self.next().strip() != header:
            raise ParseError(f"expected header {header!r}", 1)

    def next(self) -> str:
        if self.pos >= len(self.lines):
            raise ParseError("unexpected end of file", self.pos + 1)
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def ints(self, count: int | None = None) -> list[int]:
        toks = self.next().split()
        if count is not None and len(toks) != count:
            raise ParseError(f"expected {count} integers, got {len(toks)}", self.pos)
        try:
            return [int(t) for t in toks]
        except ValueError:
            raise ParseError("expected integers", self.pos) from None

    def finish(self):
        for k in range(self.pos, len(self.lines)):
            if self.lines[k].strip():
                raise ParseError("trailing garbage", k + 1)


def _nonneg(value: int, what: str, line: int) -> int:
    if value < 0:
        raise ParseError(f"{what} must be non-negative", line)
    return value


# --- graphs ---

def write_graph(G: SimpleGraph) -> str:
    out = ["graph v1", f"{G.n} {G.m}"]
    out += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(out) + "\n"


def read_graph(text: str) -> SimpleGraph:
    r = _Lines(text, "graph v1")
    n, m = r.ints(2)
    _nonneg(n, "vertex count", r.pos)
    _nonneg(m, "edge count", r.pos)
    edges = [tuple(r.ints(2)) for _ in range(m)]
    r.finish()
    return new_graph(n, edges)


# --- algebras ---

def write_algebra(X: EvolutionAlgebra) -> str:
    out = ["evolalg v1", str(X.field), str(X.dim), " ".join(X.labels)]
    out += [" ".join(str(e) for e in X.matrix.row(k)) for k in range(X.dim)]
    return "\n".join(out) + "\n"


def read_algebra(text: str) -> EvolutionAlgebra:
    r = _Lines(text, "evolalg v1")
    field = FieldDescriptor.parse(r.next())
    (n,) = r.ints(1)
    _nonneg(n, "dimension", r.pos)
    labels = r.next().split()
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}", r.pos)
    rows = []
    for _ in range(n):
        toks = r.next().split()
        if len(toks) != n:
            raise ParseError(f"expected {n} scalars, got {len(toks)}", r.pos)
        try:
            rows.append([field.parse_scalar(t) for t in toks])
        except ParseError as exc:
            raise ParseError(str(exc), r.pos) from None
    r.finish()
    return new_algebra(field, ScalarMatrix.from_rows(field, rows, cols=n), labels)


# --- groups ---

def write_group_table(G: FiniteGroup) -> str:
    out = ["group v1", f"table {G.order}"]
    out += [" ".join(map(str, row)) for row in G.table]
    return "\n".join(out) + "\n"


def write_group_perms(degree: int, gens: Sequence[Sequence[int]]) -> str:
    out = ["group v1", f"perm {degree} {len(gens)}"]
    out += [" ".join(map(str, g)) for g in gens]
    return "\n".join(out) + "\n"


def read_group(text: str) -> FiniteGroup:
    r = _Lines(text, "group v1")
    toks = r.next().split()
    if len(toks) == 2 and toks[0] == "table":
        n = _int(toks[1], r.pos)
        if n < 1:
            raise ParseError("group order must be positive", r.pos)
        rows = [r.ints(n) for _ in range(n)]
        r.finish()
        return group_from_table(rows)
    if len(toks) == 3 and toks[0] == "perm":
        d, k = _int(toks[1], r.pos), _int(toks[2], r.pos)
        _nonneg(d, "degree", r.pos)
        _nonneg(k, "generator count", r.pos)
        gens = [r.ints(d) for _ in range(k)]
        r.finish()
        return group_from_permutations(d, gens)
    raise ParseError("expected 'table n' or 'perm d k'", r.pos)


def _int(tok: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line) from None


# --- permutation groups and maps ---

def write_permgroup(P: PermGroup) -> str:
    out = ["permgroup v1", f"{P.degree} {P.order}"]
    out += [" ".join(map(str, g)) for g in P.generators]
    return "\n".join(out) + "\n"


def read_permgroup(text: str) -> PermGroup:
    r = _Lines(text, "permgroup v1")
    degree, order = r.ints(2)
    gens = []
    while r.pos < len(r.lines) and r.lines[r.pos].strip():
        gens.append(tuple(r.ints(degree)))
    r.finish()
    return PermGroup(degree, tuple(gens), order)


def write_monomial(m: MonomialMap) -> str:
    out = ["monomial v1", str(m.n), " ".join(map(str, m.sigma)), " ".join(str(s) for s in m.scales)]
    return "\n".join(out) + "\n"


def read_monomial(text: str, field: FieldDescriptor) -> MonomialMap:
    r = _Lines(text, "monomial v1")
    (n,) = r.ints(1)
    sigma = r.ints(n)
    toks = r.next().split()
    if len(toks) != n:
        raise ParseError(f"expected {n} scales", r.pos)
    scales = [field.parse_scalar(t) for t in toks]
    r.finish()
    return MonomialMap(tuple(sigma), tuple(scales))


def write_vertexmap(f: Sequence[int]) -> str:
    return f"vertexmap v1\n{len(f)}\n{' '.join(map(str, f))}\n"


def read_vertexmap(text: str) -> tuple[int, ...]:
    r = _Lines(text, "vertexmap v1")
    (n,) = r.ints(1)
    images = r.ints(n)
    r.finish()
    return tuple(images)
