"""Exact scalars over the rationals and prime fields, plus dense exact linear algebra.

Rationals are stored as :class:`fractions.Fraction` (always reduced, positive
denominator); prime-field elements as residues in ``[0, p)``.  Both are wrapped
in :class:`FieldScalar` so that mixing fields is caught instead of silently
producing garbage.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DivisionByZero, FieldMismatch, NotSquare, ParseError

MAX_MODULUS = 2 ** 31

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?\Z")
_RESIDUE_RE = re.compile(r"\d+\Z")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Either the rationals (``kind="Q"``) or GF(p) (``kind="GF"``)."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            if self.modulus != 0:
                raise ValueError("the rationals take no modulus")
        elif self.kind == "GF":
            if not (isinstance(self.modulus, int) and 1 < self.modulus < MAX_MODULUS):
                raise ValueError(f"modulus must be a prime below 2^31, got {self.modulus!r}")
            if not _is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "GF"

    @property
    def characteristic(self) -> int:
        return self.modulus

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF:{self.modulus}"

    @classmethod
    def parse(cls, text: str) -> "FieldDescriptor":
        text = text.strip()
        if text == "Q":
            return QQ
        if text.startswith("GF:") and _RESIDUE_RE.match(text[3:]):
            try:
                return GF(int(text[3:]))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"bad field descriptor {text!r} (expected Q or GF:p)")

    def __call__(self, value) -> "FieldScalar":
        return FieldScalar(self, value)

    @property
    def zero(self) -> "FieldScalar":
        return FieldScalar(self, 0)

    @property
    def one(self) -> "FieldScalar":
        return FieldScalar(self, 1)

    def parse_scalar(self, text: str) -> "FieldScalar":
        if self.kind == "Q":
            if not _RATIONAL_RE.match(text):
                raise ParseError(f"bad rational {text!r}")
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return FieldScalar(self, Fraction(int(num), int(den) if den else 1))
        if not _RESIDUE_RE.match(text):
            raise ParseError(f"bad residue {text!r}")
        r = int(text)
        if r >= self.modulus:
            raise ParseError(f"residue {r} out of range for {self}")
        return FieldScalar(self, r)

    def nonzero_elements(self) -> list["FieldScalar"]:
        if self.kind != "GF":
            raise ValueError("the rationals are infinite")
        return [FieldScalar(self, r) for r in range(1, self.modulus)]

    def nth_roots(self, c: "FieldScalar", d: int) -> list["FieldScalar"]:
        """All x with x**d == c, for nonzero c and d >= 1, in increasing order."""
        if d < 1:
            raise ValueError("root degree must be positive")
        if not c:
            return [self.zero]
        if d == 1:
            return [c]
        if self.kind == "Q":
            return [FieldScalar(self, r) for r in _rational_roots(c.value, d)]
        p = self.modulus
        cv = c.value
        g = math.gcd(d, p - 1)
        if pow(cv, (p - 1) // g, p) != 1:
            return []
        if g == 1:
            # d is invertible mod p-1, so x -> x**d is a bijection
            return [FieldScalar(self, pow(cv, pow(d, -1, p - 1), p))]
        if p < 1 << 16:
            return [FieldScalar(self, r) for r in range(1, p) if pow(r, d, p) == cv]
        from sympy.ntheory.residue_ntheory import nthroot_mod

        roots = nthroot_mod(cv, d, p, all_roots=True) or []
        return [FieldScalar(self, r) for r in sorted(roots)]


QQ = FieldDescriptor("Q")


@lru_cache(maxsize=None)
def GF(p: int) -> FieldDescriptor:
    return FieldDescriptor("GF", p)


def _integer_root(n: int, d: int):
    from sympy import integer_nthroot

    r, exact = integer_nthroot(n, d)
    return r if exact else None


def _rational_roots(q: Fraction, d: int) -> list[Fraction]:
    a, b = q.numerator, q.denominator
    ra = _integer_root(abs(a), d)
    rb = _integer_root(b, d)
    if ra is None or rb is None:
        return []
    r = Fraction(ra, rb)
    if d % 2:
        return [r if a > 0 else -r]
    return [] if a < 0 else [-r, r]


class FieldScalar:
    """An immutable field element in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        if isinstance(value, FieldScalar):
            if value.field != field:
                raise FieldMismatch(f"{value.field} scalar used as {field} scalar")
            value = value.value
        if field.kind == "Q":
            value = Fraction(value)
        else:
            p = field.modulus
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise DivisionByZero(f"{value} has no image in {field}")
                value = value.numerator * pow(value.denominator, -1, p) % p
            else:
                value = int(value) % p
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    def _coerce(self, other) -> "FieldScalar":
        if isinstance(other, FieldScalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field} scalars")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldScalar(self.field, other)
        return NotImplemented

    def _make(self, value) -> "FieldScalar":
        return FieldScalar(self.field, value)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.value * other.value)

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        if not self.value:
            raise DivisionByZero(f"division by zero in {self.field}")
        if self.field.kind == "Q":
            return self._make(1 / self.value)
        return self._make(pow(self.value, -1, self.field.modulus))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return self._make(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.field.kind == "Q":
            return self._make(self.value ** e)
        return self._make(pow(self.value, e, self.field.modulus))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == FieldScalar(self.field, other).value
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        # arbitrary but total order, used only for deterministic sorting
        return self.value < self._coerce(other).value

    def __str__(self):
        v = self.value
        if self.field.kind == "Q" and v.denominator != 1:
            return f"{v.numerator}/{v.denominator}"
        return str(int(v))

    def __repr__(self):
        return f"{self.field}({self})"


def scalar_arith(a: FieldScalar, b: FieldScalar, op: str) -> FieldScalar:
    """Apply ``op`` (one of add, sub, mul, div) to two scalars of the same field."""
    if a.field != b.field:
        raise FieldMismatch(f"cannot combine {a.field} and {b.field} scalars")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


class ScalarMatrix:
    """Dense immutable matrix over one field, stored row-major."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldDescriptor, rows: int, cols: int, entries: Iterable):
        entries = tuple(FieldScalar(field, e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ScalarMatrix is immutable")

    @classmethod
    def from_rows(cls, field: FieldDescriptor, rows: Sequence[Sequence], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(field, len(rows), cols, (e for r in rows for e in r))

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int):
        return cls(field, n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field: FieldDescriptor, rows: int, cols: int):
        return cls(field, rows, cols, [0] * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, rc) -> FieldScalar:
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(rc)
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[FieldScalar, ...]:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def column(self, c: int) -> tuple[FieldScalar, ...]:
        return self.entries[c::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[FieldScalar]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def raw_rows(self) -> list[list]:
        """Rows of underlying values (Fraction or int residue)."""
        return [[e.value for e in self.row(r)] for r in range(self.rows)]

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix(self.field, self.cols, self.rows,
                            (self[r, c] for c in range(self.cols) for r in range(self.rows)))

    def __matmul__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if other.field != self.field:
            raise FieldMismatch(f"cannot multiply {self.field} and {other.field} matrices")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.raw_rows(), other.raw_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum((ai[k] * b[k][j] for k in range(self.cols)), 0))
        return ScalarMatrix(self.field, self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in self.row(r)) for r in range(self.rows))
        return f"ScalarMatrix({self.field}, {self.rows}x{self.cols}, [{body}])"

    def determinant(self) -> FieldScalar:
        return determinant(self)

    def rank(self) -> int:
        return rank(self)


def _bareiss(a: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination (mutates ``a``)."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = a[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                if akk == prev:
                    continue
                for j in range(k + 1, n):
                    ri[j] = ri[j] * akk // prev
            else:
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * akk - aik * rk[j]) // prev
                ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def _integer_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; return the rows and the product of scale factors."""
    out = []
    scale = 1
    for r in rows:
        m = 1
        for x in r:
            m = m * x.denominator // math.gcd(m, x.denominator)
        out.append([int(x * m) for x in r])
        scale *= m
    return out, scale


def _mod_echelon(a: list[list[int]], p: int, ncols: int) -> tuple[int, int]:
    """Gaussian elimination mod p in place; returns (rank, determinant factor)."""
    rank_ = 0
    det = 1
    nrows = len(a)
    for c in range(ncols):
        piv = next((i for i in range(rank_, nrows) if a[i][c] % p), None)
        if piv is None:
            det = 0
            continue
        if piv != rank_:
            a[rank_], a[piv] = a[piv], a[rank_]
            det = -det
        rp = a[rank_]
        pv = rp[c] % p
        det = det * pv % p
        inv = pow(pv, -1, p)
        for i in range(rank_ + 1, nrows):
            f = a[i][c] % p
            if f:
                f = f * inv % p
                ri = a[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * rp[j]) % p
        rank_ += 1
    return rank_, det % p


def determinant(m: ScalarMatrix) -> FieldScalar:
    """Exact determinant; Bareiss over Q, plain elimination over GF(p)."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    rows = m.raw_rows()
    if m.field.kind == "Q":
        ints, scale = _integer_rows(rows)
        return FieldScalar(m.field, Fraction(_bareiss(ints), scale))
    if m.rows == 0:
        return m.field.one
    _, det = _mod_echelon(rows, m.field.modulus, m.cols)
    return FieldScalar(m.field, det)


def rank(m: ScalarMatrix) -> int:
    """Exact rank by elimination."""
    rows = m.raw_rows()
    if m.field.kind == "GF":
        return _mod_echelon(rows, m.field.modulus, m.cols)[0]
    a, _ = _integer_rows(rows)
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        rp = a[r]
        for i in range(r + 1, len(a)):
            f = a[i][c]
            if f:
                ri = a[i]
                row = [ri[j] * rp[c] - f * rp[j] for j in range(m.cols)]
                g = math.gcd(*row)
                a[i] = [x // g for x in row] if g > 1 else row
        r += 1
    return r
