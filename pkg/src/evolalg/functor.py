"""From graphs to evolution algebras and back.

The algebra of a graph has one basis element per vertex (``b_v^2 = b_v``) and
one per edge (``b_e^2 = b_e + b_u + b_w``).  Vertices come first in ascending
order, then edges in lexicographic order, which makes the structure matrix
upper unitriangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotAMorphism, NotInImage, NotRegular, SizeMismatch
from .evolution import EvolutionAlgebra, is_regular, new_algebra
from .fields import FieldDescriptor, ScalarMatrix
from .graph import SimpleGraph, is_morphism, new_graph
from .monomial import MonomialMap


@dataclass(frozen=True)
class FunctorBasisIndex:
    kind: str  # "vertex" or "edge"
    ends: tuple[int, ...]  # (v,) or (u, w)
    position: int

    @property
    def label(self) -> str:
        if self.kind == "vertex":
            return f"v{self.ends[0]}"
        return f"e{self.ends[0]}_{self.ends[1]}"


def functor_basis(G: SimpleGraph) -> list[FunctorBasisIndex]:
    basis = [FunctorBasisIndex("vertex", (v,), v) for v in range(G.n)]
    basis += [FunctorBasisIndex("edge", e, G.n + k) for k, e in enumerate(G.edges)]
    return basis


def build_algebra(G: SimpleGraph, field: FieldDescriptor) -> EvolutionAlgebra:
    n = G.n + G.m
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
    for k, (u, w) in enumerate(G.edges):
        rows[u][G.n + k] = 1
        rows[w][G.n + k] = 1
    labels = [b.label for b in functor_basis(G)]
    return new_algebra(field, ScalarMatrix.from_rows(field, rows, cols=n), labels)


def map_morphism(f: Sequence[int], G1: SimpleGraph, G2: SimpleGraph,
                 field: FieldDescriptor) -> ScalarMatrix:
    """Matrix of the induced algebra map; column j is the image of basis element j."""
    if not is_morphism(f, G1, G2):
        raise NotAMorphism(f"{list(f)} is not a graph morphism")
    n1, n2 = G1.n + G1.m, G2.n + G2.m
    edge_pos = {e: G2.n + k for k, e in enumerate(G2.edges)}
    image = list(f)
    for u, w in G1.edges:
        a, b = f[u], f[w]
        image.append(edge_pos[(min(a, b), max(a, b))])
    rows = [[0] * n1 for _ in range(n2)]
    for j, i in enumerate(image):
        rows[i][j] = 1
    return ScalarMatrix.from_rows(field, rows, cols=n1)


def rebase(X: EvolutionAlgebra, m: MonomialMap) -> EvolutionAlgebra:
    """Structure matrix in the basis ``c_i = scales[i] * b_sigma(i)``.

    New constants: ``w'[k, i] = scales[i]^2 / scales[k] * w[s(k), s(i)]``.
    """
    n = X.dim
    if m.n != n:
        raise SizeMismatch(f"map of size {m.n} on algebra of dimension {n}")
    s, lam = m.sigma, m.scales
    M = X.matrix
    inv = [x.inverse() for x in lam]
    rows = [[lam[i] * lam[i] * inv[k] * M[s[k], s[i]] for i in range(n)] for k in range(n)]
    labels = [X.labels[s[i]] for i in range(n)]
    return new_algebra(X.field, ScalarMatrix.from_rows(X.field, rows, cols=n), labels)


def recover_graph(X: EvolutionAlgebra) -> tuple[SimpleGraph, MonomialMap]:
    """Find ``G`` and ``m`` with ``rebase(X, m)`` equal to the algebra of ``G``.

    Vertex columns have a single nonzero entry, on the diagonal.  Edge columns
    have a nonzero diagonal ``d`` and two more entries in vertex rows; after
    normalizing the vertex rows each must equal ``d^2``.
    """
    if not is_regular(X):
        raise NotRegular("structure matrix is singular")
    n = X.dim
    M = X.matrix
    vertex_cols = []
    edge_cols = []
    for i in range(n):
        nz = [k for k in range(n) if M[k, i]]
        if len(nz) == 1:
            if nz[0] != i:
                raise NotInImage("bad nonzero count", f"column {i} has its only nonzero off the diagonal")
            vertex_cols.append(i)
        elif len(nz) == 3:
            if i not in nz:
                raise NotInImage("bad nonzero count", f"column {i} has a zero diagonal")
            edge_cols.append((i, [k for k in nz if k != i]))
        else:
            raise NotInImage("bad nonzero count", f"column {i} has {len(nz)} nonzero entries")
    vertex_of = {c: v for v, c in enumerate(vertex_cols)}
    vscale = {c: M[c, c] for c in vertex_cols}  # normalized vertex basis: b_c / M[c, c]
    edges: dict[tuple[int, int], int] = {}
    escale = {}
    for i, rows in edge_cols:
        for k in rows:
            if k not in vertex_of:
                raise NotInImage("off-diagonal rows not vertex columns",
                                 f"column {i} has a nonzero in row {k}, which is not a vertex column")
        d = M[i, i]
        for k in rows:
            if M[k, i] * vscale[k] != d * d:
                raise NotInImage("off-diagonal/diagonal mismatch",
                                 f"column {i}: entry in row {k} does not match the squared diagonal")
        a, b = sorted(vertex_of[k] for k in rows)
        if (a, b) in edges:
            raise NotInImage("duplicate edge", f"columns {edges[(a, b)]} and {i} both join {a} and {b}")
        edges[(a, b)] = i
        escale[i] = d.inverse()
    G = new_graph(len(vertex_cols), edges)
    sigma = list(vertex_cols) + [edges[e] for e in G.edges]
    scales = [vscale[c].inverse() for c in vertex_cols] + [escale[edges[e]] for e in G.edges]
    return G, MonomialMap(tuple(sigma), tuple(scales))
