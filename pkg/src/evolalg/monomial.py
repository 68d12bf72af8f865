"""Automorphisms and isomorphisms of regular evolution algebras.

In a regular evolution algebra any two natural bases differ by a permutation
and a rescaling, so every isomorphism is a monomial map
``b_i -> lambda_i * b_sigma(i)``.  The search enumerates the permutations that
preserve the zero pattern of the structure matrix (individualization-refinement
on the pattern digraph) and, for each candidate, solves for the scales exactly.

Scale equations are monomial: for every nonzero entry ``Y[k, i]`` of the
target matrix we need ``lambda_k * lambda_i**-2 == X[s(k), s(i)] / Y[k, i]``.
Most unknowns fall out of the diagonal directly; anything left is solved by
diagonalizing the integer exponent matrix and extracting roots.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from . import _search
from .errors import (FieldMismatch, GroupTooLarge, NotAPermutation, NotRegular,
                     SizeMismatch, ZeroScale)
from .evolution import EvolutionAlgebra, is_regular
from .fields import FieldDescriptor, FieldScalar
from .perm import DEFAULT_CAP, PermGroup, check_permutation


@dataclass(frozen=True)
class MonomialMap:
    """The linear map ``b_i -> scales[i] * b_{sigma[i]}``."""

    sigma: tuple[int, ...]
    scales: tuple[FieldScalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", check_permutation(self.sigma))
        object.__setattr__(self, "scales", tuple(self.scales))
        if len(self.scales) != len(self.sigma):
            raise NotAPermutation(f"{len(self.sigma)} images but {len(self.scales)} scales")
        for i, s in enumerate(self.scales):
            if not s:
                raise ZeroScale(f"scale {i} is zero")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "MonomialMap":
        return cls(tuple(range(n)), (field.one,) * n)

    def __mul__(self, other: "MonomialMap") -> "MonomialMap":
        """``self`` after ``other``."""
        if other.n != self.n:
            raise SizeMismatch("composing monomial maps of different size")
        return MonomialMap(tuple(self.sigma[j] for j in other.sigma),
                           tuple(other.scales[i] * self.scales[other.sigma[i]] for i in range(self.n)))

    def inverse(self) -> "MonomialMap":
        inv = [0] * self.n
        sc = [None] * self.n
        for i, j in enumerate(self.sigma):
            inv[j] = i
            sc[j] = self.scales[i].inverse()
        return MonomialMap(tuple(inv), tuple(sc))

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(self.n)) and all(s == 1 for s in self.scales)

    def sort_key(self):
        return self.sigma, tuple(s.value for s in self.scales)


def is_automorphism(X: EvolutionAlgebra, m: MonomialMap) -> bool:
    """Check ``lambda_i^2 * w[s(j), s(i)] == lambda_j * w[j, i]`` for all i, j."""
    if m.n != X.dim:
        raise SizeMismatch(f"map of size {m.n} on algebra of dimension {X.dim}")
    M = X.matrix
    s, lam = m.sigma, m.scales
    for i in range(X.dim):
        li2 = lam[i] * lam[i]
        for j in range(X.dim):
            if li2 * M[s[j], s[i]] != lam[j] * M[j, i]:
                return False
    return True


# --- exact scale solving -------------------------------------------------

def _diagonalize(A: list[list[int]], ncols: int):
    """Unimodular U, V with U A V diagonal.  Returns (D, U, V, rank)."""
    m = len(A)
    A = [row[:] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    r = 0
    for t in range(min(m, ncols)):
        best = None
        for i in range(t, m):
            for j in range(t, ncols):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // p
                    for M in (A, V):
                        for row in M:
                            row[j] -= q * row[t]
                    dirty = dirty or A[t][j] != 0
            if not dirty:
                break
            cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t + 1, ncols) if A[t][j]]
            _, i, j = min(cand)
            if i != t:
                swap_rows(t, i)
            else:
                swap_cols(t, j)
        r += 1
    return A, U, V, r


def _power_product(field: FieldDescriptor, bases: Sequence[FieldScalar], exps: Sequence[int]) -> FieldScalar:
    out = field.one
    for b, e in zip(bases, exps):
        if e:
            out = out * b ** e
    return out


def solve_monomial_system(field: FieldDescriptor, nvars: int,
                          equations: Sequence[tuple[dict[int, int], FieldScalar]]) -> list[list[FieldScalar]]:
    """All nonzero solutions of ``prod_j x_j**e_j == c`` for each ``(e, c)``.

    Raises ValueError if the solution set is infinite.
    """
    if nvars == 0:
        return [[]] if all(c == 1 for _, c in equations) else []
    A = [[e.get(j, 0) for j in range(nvars)] for e, _ in equations]
    consts = [c for _, c in equations]
    D, U, V, r = _diagonalize(A, nvars)
    rhs = [_power_product(field, consts, U[i]) for i in range(len(equations))]
    if any(rhs[i] != 1 for i in range(r, len(equations))):
        return []
    choices = []
    for k in range(r):
        d = D[k][k]
        c = rhs[k] if d > 0 else rhs[k].inverse()
        roots = field.nth_roots(c, abs(d))
        if not roots:
            return []
        choices.append(roots)
    if r < nvars:
        if not field.is_prime_field:
            raise ValueError("scale equations have infinitely many solutions")
        choices.extend([field.nonzero_elements()] * (nvars - r))
    sols = []
    for ys in product(*choices):
        sols.append([_power_product(field, ys, V[j]) for j in range(nvars)])
    return sols


def solve_scales(target: EvolutionAlgebra, source: EvolutionAlgebra, sigma: Sequence[int],
                 first_only: bool = False) -> list[tuple[FieldScalar, ...]]:
    """All scale vectors making ``(sigma, scales)`` carry ``source`` onto ``target``.

    That is, rebasing ``source`` by the map yields ``target``'s matrix:
    ``target[k, i] * lambda_k == lambda_i**2 * source[s(k), s(i)]``.
    """
    n = target.dim
    Y, X = target.matrix, source.matrix
    field = target.field
    eqs = []
    for i in range(n):
        si = sigma[i]
        for k in range(n):
            y = Y[k, i]
            x = X[sigma[k], si]
            if bool(y) != bool(x):
                return []
            if y:
                eqs.append((k, i, x / y))
    known: dict[int, FieldScalar] = {}
    for k, i, c in eqs:
        if k == i:
            known[i] = c.inverse()
    changed = True
    while changed:
        changed = False
        for k, i, c in eqs:
            if i in known and k not in known:
                known[k] = c * known[i] * known[i]
                changed = True
    unknown = [j for j in range(n) if j not in known]
    if unknown:
        pos = {j: p for p, j in enumerate(unknown)}
        sub = []
        for k, i, c in eqs:
            if k in pos or i in pos:
                e: dict[int, int] = {}
                if k in pos:
                    e[pos[k]] = e.get(pos[k], 0) + 1
                else:
                    c = c / known[k]
                if i in pos:
                    e[pos[i]] = e.get(pos[i], 0) - 2
                else:
                    c = c * known[i] * known[i]
                sub.append((e, c))
        partials = solve_monomial_system(field, len(unknown), sub)
    else:
        partials = [[]]
    out = []
    for part in partials:
        lam = dict(known)
        lam.update(zip(unknown, part))
        vec = tuple(lam[j] for j in range(n))
        if all(vec[k] == c * vec[i] * vec[i] for k, i, c in eqs):
            out.append(vec)
            if first_only:
                break
    return sorted(out, key=lambda v: tuple(s.value for s in v))


# --- search ---------------------------------------------------------------

def _pattern(X: EvolutionAlgebra) -> _search.Structure:
    n = X.dim
    nz = [[bool(X.matrix[k, i]) for i in range(n)] for k in range(n)]
    colors = []
    for i in range(n):
        col = sum(nz[k][i] for k in range(n))
        row = sum(nz[i])
        colors.append((int(nz[i][i]), col, row))
    arcs = [(i, k, 0) for i in range(n) for k in range(n) if k != i and nz[k][i]]
    return _search.Structure(n, colors, arcs)


@dataclass(frozen=True)
class AlgebraAutomorphisms:
    """Automorphism group as a permutation group plus monomial generators.

    Unpacks as ``group, generators``.
    """

    group: PermGroup
    generators: list[MonomialMap]
    field: FieldDescriptor
    dim: int

    def __iter__(self):
        return iter((self.group, self.generators))

    @property
    def order(self) -> int:
        return self.group.order

    def elements(self) -> list[MonomialMap]:
        """Every automorphism, by closure over the generators."""
        return sorted(_monomial_closure(self.generators, self.field, self.dim), key=MonomialMap.sort_key)

    def all_scales_one(self) -> bool:
        return all(s == 1 for g in self.generators for s in g.scales)


def scaled_point_group(n: int, gens: Sequence[MonomialMap], order: int, one: FieldScalar | None) -> PermGroup:
    """Faithful permutation group on the scaled basis points ``(i, mu)``.

    The first ``n`` points are ``(i, 1)``; when every scale is 1 this is just
    the action of the sigmas on basis indices.
    """
    if not gens:
        return PermGroup(n, (), order)
    points = [(i, one) for i in range(n)]
    index = {p: k for k, p in enumerate(points)}
    queue = deque(points)
    while queue:
        i, mu = queue.popleft()
        for g in gens:
            q = (g.sigma[i], mu * g.scales[i])
            if q not in index:
                index[q] = len(points)
                points.append(q)
                queue.append(q)
    perms = []
    for g in gens:
        perms.append(tuple(index[(g.sigma[i], mu * g.scales[i])] for i, mu in points))
    return PermGroup(len(points), tuple(sorted(perms)), order)


def algebra_automorphisms(X: EvolutionAlgebra, cap: int = DEFAULT_CAP) -> AlgebraAutomorphisms:
    """The full automorphism group of a regular evolution algebra."""
    if not is_regular(X):
        raise NotRegular("automorphism group of a non-regular algebra may be infinite")
    n = X.dim

    def accept(perm):
        sols = solve_scales(X, X, perm, first_only=True)
        return sols[0] if sols else None

    found, sigma_order = _search.automorphisms(_pattern(X), accept)
    kernel = solve_scales(X, X, tuple(range(n)))
    order = sigma_order * len(kernel)
    if order > cap:
        raise GroupTooLarge(f"automorphism group of order {order} exceeds cap {cap}")
    gens = [MonomialMap(p, lam) for p, lam in found]
    gens.extend(_kernel_generators(X.field, n, kernel))
    gens.sort(key=MonomialMap.sort_key)
    return AlgebraAutomorphisms(scaled_point_group(n, gens, order, X.field.one), gens, X.field, n)


def _kernel_generators(field, n, kernel) -> list[MonomialMap]:
    ident = tuple(range(n))
    gens: list[MonomialMap] = []
    generated = {MonomialMap.identity(field, n)}
    for lam in kernel:
        m = MonomialMap(ident, lam)
        if m in generated:
            continue
        gens.append(m)
        frontier = list(generated)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in generated:
                        generated.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def brute_force_automorphisms(X: EvolutionAlgebra) -> list[MonomialMap]:
    """Every automorphism: all n! permutations, scales solved exactly for each."""
    if not is_regular(X):
        raise NotRegular("automorphism group of a non-regular algebra may be infinite")
    out = []
    for sigma in permutations(range(X.dim)):
        for lam in solve_scales(X, X, sigma):
            out.append(MonomialMap(sigma, lam))
    return sorted(out, key=MonomialMap.sort_key)


def brute_force_group(X: EvolutionAlgebra) -> AlgebraAutomorphisms:
    elements = brute_force_automorphisms(X)
    gens: list[MonomialMap] = []
    generated = {MonomialMap.identity(X.field, X.dim)}
    for m in elements:
        if m in generated:
            continue
        gens.append(m)
        generated = _monomial_closure(gens, X.field, X.dim)
    return AlgebraAutomorphisms(scaled_point_group(X.dim, gens, len(elements), X.field.one), gens,
                                X.field, X.dim)


def _monomial_closure(gens, field, n) -> set:
    seen = {MonomialMap.identity(field, n)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def algebra_isomorphism(X1: EvolutionAlgebra, X2: EvolutionAlgebra) -> MonomialMap | None:
    """A monomial map ``m`` with ``rebase(X1, m) == X2``, least sigma first."""
    if X1.field != X2.field:
        raise FieldMismatch(f"{X1.field} vs {X2.field}")
    if not is_regular(X1) or not is_regular(X2):
        raise NotRegular("isomorphism search needs regular algebras")
    if X1.dim != X2.dim:
        return None

    def accept(perm):
        sols = solve_scales(X2, X1, perm, first_only=True)
        return sols[0] if sols else None

    hit = _search.least_isomorphism(_pattern(X2), _pattern(X1), accept)
    if hit is None:
        return None
    return MonomialMap(hit[0], hit[1])
