"""Exact scalars, generalized interval entries and matrices.

Every number is a :class:`fractions.Fraction`. An entry is one closed connected
nonempty subset of the real line: a point, a bounded interval, a half-line or
the whole line.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Iterator, Sequence

Scalar = Fraction


def as_scalar(value) -> Fraction:
    """Convert ``value`` to an exact rational.

    Integers, fractions and strings such as ``"-7/2"`` are accepted. Floats are
    rejected because their binary expansion is rarely what the caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction or a string")
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


class Kind(enum.Enum):
    CONSTANT = "constant"
    BOUNDED = "bounded"
    LEFT = "left"  # [a, +inf)
    RIGHT = "right"  # (-inf, b]
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class GInterval:
    """A closed connected nonempty subset of R.

    ``lo``/``hi`` are ``None`` for infinite ends. Use the classmethod
    constructors; ``GInterval.bounded(a, a)`` yields a constant.
    """

    kind: Kind
    lo: Fraction | None = None
    hi: Fraction | None = None

    def __post_init__(self):
        k, lo, hi = self.kind, self.lo, self.hi
        finite_lo = k in (Kind.CONSTANT, Kind.BOUNDED, Kind.LEFT)
        finite_hi = k in (Kind.CONSTANT, Kind.BOUNDED, Kind.RIGHT)
        if (lo is not None) != finite_lo or (hi is not None) != finite_hi:
            raise ValueError(f"endpoints {lo!r}, {hi!r} do not match kind {k.value}")
        if k is Kind.CONSTANT and lo != hi:
            raise ValueError("constant entry needs lo == hi")
        if k is Kind.BOUNDED and not lo < hi:
            raise ValueError(f"bounded entry needs lo < hi, got [{lo}, {hi}]")

    @classmethod
    def constant(cls, a) -> GInterval:
        a = as_scalar(a)
        return cls(Kind.CONSTANT, a, a)

    @classmethod
    def bounded(cls, a, b) -> GInterval:
        a, b = as_scalar(a), as_scalar(b)
        if a > b:
            raise ValueError(f"empty interval [{a}, {b}]")
        if a == b:
            return cls(Kind.CONSTANT, a, a)
        return cls(Kind.BOUNDED, a, b)

    @classmethod
    def left_bounded(cls, a) -> GInterval:
        return cls(Kind.LEFT, as_scalar(a), None)

    @classmethod
    def right_bounded(cls, b) -> GInterval:
        return cls(Kind.RIGHT, None, as_scalar(b))

    @classmethod
    def unbounded(cls) -> GInterval:
        return cls(Kind.UNBOUNDED)

    @property
    def is_constant(self) -> bool:
        return self.kind is Kind.CONSTANT

    @property
    def is_bounded(self) -> bool:
        """True for a nondegenerate bounded interval ``[a, b]``, ``a < b``."""
        return self.kind is Kind.BOUNDED

    @property
    def is_half_bounded(self) -> bool:
        return self.kind in (Kind.LEFT, Kind.RIGHT)

    @property
    def is_unbounded(self) -> bool:
        return self.kind is Kind.UNBOUNDED

    @property
    def value(self) -> Fraction:
        if self.kind is not Kind.CONSTANT:
            raise ValueError(f"{self} is not a constant")
        return self.lo

    def __contains__(self, x) -> bool:
        x = as_scalar(x)
        if self.lo is not None and x < self.lo:
            return False
        if self.hi is not None and x > self.hi:
            return False
        return True

    def issubset(self, other: GInterval) -> bool:
        if other.lo is not None and (self.lo is None or self.lo < other.lo):
            return False
        if other.hi is not None and (self.hi is None or self.hi > other.hi):
            return False
        return True

    def representative(self) -> Fraction:
        """A fixed point of the set: the left end if finite, else the right end, else 0."""
        if self.lo is not None:
            return self.lo
        if self.hi is not None:
            return self.hi
        return Fraction(0)

    def __str__(self) -> str:
        k = self.kind
        if k is Kind.CONSTANT:
            return str(self.lo)
        if k is Kind.BOUNDED:
            return f"[{self.lo},{self.hi}]"
        if k is Kind.LEFT:
            return f"[{self.lo},inf)"
        if k is Kind.RIGHT:
            return f"(-inf,{self.hi}]"
        return "(-inf,inf)"


def _entry(x) -> GInterval:
    return x if isinstance(x, GInterval) else GInterval.constant(x)


@dataclass(frozen=True)
class RMatrix:
    """A p x q matrix of exact rationals. ``RMatrix.empty()`` is the 0 x 0 matrix."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in self.rows)
        ncols = len(rows[0]) if rows else max(self.ncols, 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> RMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def empty(cls) -> RMatrix:
        return cls((), 0)

    @classmethod
    def identity(cls, n: int) -> RMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    @property
    def is_square(self) -> bool:
        return len(self.rows) == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> RMatrix:
        p, q = self.shape
        return RMatrix(tuple(tuple(self.rows[i][j] for i in range(p)) for j in range(q)), p)

    def delete(self, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> RMatrix:
        keep_r, keep_c = _kept(self.shape, rows, cols)
        return RMatrix(tuple(tuple(self.rows[i][j] for j in keep_c) for i in keep_r), len(keep_c))

    def replace(self, i: int, j: int, x) -> RMatrix:
        rows = self.tolist()
        rows[i][j] = as_scalar(x)
        return RMatrix(tuple(map(tuple, rows)), self.ncols)

    def matvec(self, x: Sequence) -> list[Fraction]:
        return [sum((a * as_scalar(b) for a, b in zip(r, x)), Fraction(0)) for r in self.rows]

    def det(self) -> Fraction:
        return det(self)

    def rank(self) -> int:
        return rank(self)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def _kept(shape, rows, cols) -> tuple[list[int], list[int]]:
    p, q = shape
    rows, cols = set(rows), set(cols)
    for i in rows:
        if not 0 <= i < p:
            raise IndexError(f"row index {i} out of range for {p} rows")
    for j in cols:
        if not 0 <= j < q:
            raise IndexError(f"column index {j} out of range for {q} columns")
    return [i for i in range(p) if i not in rows], [j for j in range(q) if j not in cols]


@dataclass(frozen=True)
class GIMatrix:
    """A p x q general closed interval matrix. Indices are 0-based."""

    entries: tuple[tuple[GInterval, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        entries = tuple(tuple(_entry(x) for x in r) for r in self.entries)
        ncols = len(entries[0]) if entries else max(self.ncols, 0)
        if any(len(r) != ncols for r in entries):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> GIMatrix:
        """Build from nested iterables of :class:`GInterval` or plain scalars."""
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_rmatrix(cls, a: RMatrix) -> GIMatrix:
        return cls(tuple(tuple(GInterval.constant(x) for x in r) for r in a.rows), a.ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), self.ncols

    @property
    def is_square(self) -> bool:
        return len(self.entries) == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> GInterval:
        i, j = ij
        return self.entries[i][j]

    def cells(self) -> Iterator[tuple[int, int, GInterval]]:
        for i, r in enumerate(self.entries):
            for j, e in enumerate(r):
                yield i, j, e

    def positions(self, kind: Kind) -> list[tuple[int, int]]:
        return [(i, j) for i, j, e in self.cells() if e.kind is kind]

    def count(self, kind: Kind) -> int:
        return len(self.positions(kind))

    @property
    def is_constant(self) -> bool:
        return all(e.is_constant for _, _, e in self.cells())

    @property
    def is_classical(self) -> bool:
        """Only constant and bounded entries (a classical interval matrix)."""
        return all(e.kind in (Kind.CONSTANT, Kind.BOUNDED) for _, _, e in self.cells())

    def map(self, fn) -> GIMatrix:
        return GIMatrix(tuple(tuple(fn(e) for e in r) for r in self.entries), self.ncols)

    def replace(self, i: int, j: int, entry) -> GIMatrix:
        rows = [list(r) for r in self.entries]
        rows[i][j] = _entry(entry)
        return GIMatrix(tuple(map(tuple, rows)), self.ncols)

    def transpose(self) -> GIMatrix:
        p, q = self.shape
        return GIMatrix(tuple(tuple(self.entries[i][j] for i in range(p)) for j in range(q)), p)

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> GIMatrix:
        """Row ``i`` of the result is row ``row_perm[i]`` of ``self``; same for columns."""
        return GIMatrix(
            tuple(tuple(self.entries[r][c] for c in col_perm) for r in row_perm), self.ncols
        )

    def delete(self, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> GIMatrix:
        return delete(self, rows, cols)

    def to_rmatrix(self) -> RMatrix:
        if not self.is_constant:
            raise ValueError("matrix has nonconstant entries")
        return RMatrix(tuple(tuple(e.lo for e in r) for r in self.entries), self.ncols)

    def representative(self) -> RMatrix:
        """A fixed matrix contained in ``self`` (entrywise :meth:`GInterval.representative`)."""
        return RMatrix(tuple(tuple(e.representative() for e in r) for r in self.entries), self.ncols)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in r) for r in self.entries)


def contains(mu: GIMatrix, a: RMatrix) -> bool:
    """True iff every entry of ``a`` lies in the corresponding entry of ``mu``."""
    if mu.shape != a.shape:
        raise ValueError(f"shape mismatch: {mu.shape} vs {a.shape}")
    return all(a.rows[i][j] in e for i, j, e in mu.cells())


def tilde(mu: GIMatrix) -> GIMatrix:
    """Replace every (-inf, +inf) entry with the constant 0."""
    zero = GInterval.constant(0)
    return mu.map(lambda e: zero if e.is_unbounded else e)


def bar(mu: GIMatrix) -> GIMatrix:
    """Collapse each half-line to its finite endpoint."""
    return mu.map(lambda e: GInterval.constant(e.lo if e.hi is None else e.hi) if e.is_half_bounded else e)


def take_left(mu: GIMatrix) -> GIMatrix:
    return mu.map(lambda e: GInterval.constant(e.lo) if e.is_bounded else e)


def take_right(mu: GIMatrix) -> GIMatrix:
    return mu.map(lambda e: GInterval.constant(e.hi) if e.is_bounded else e)


def delete(mu: GIMatrix, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> GIMatrix:
    """Submatrix with the listed rows and columns removed (0 x 0 is allowed)."""
    keep_r, keep_c = _kept(mu.shape, rows, cols)
    return GIMatrix(tuple(tuple(mu.entries[i][j] for j in keep_c) for i in keep_r), len(keep_c))


def left_matrix(mu: GIMatrix) -> RMatrix:
    """The constant matrix ``bar(tilde(mu))`` with bounded entries at their left ends."""
    return take_left(bar(tilde(mu))).to_rmatrix()


# exact linear algebra


def _as_rows(a) -> list[list[Fraction]]:
    if isinstance(a, RMatrix):
        return a.tolist()
    if isinstance(a, GIMatrix):
        return a.to_rmatrix().tolist()
    return [[as_scalar(x) for x in r] for r in a]


def _integer_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of the scale factors."""
    out, scale = [], 1
    for r in rows:
        d = lcm(*(x.denominator for x in r)) if r else 1
        out.append([x.numerator * (d // x.denominator) for x in r])
        scale *= d
    return out, scale


def _bareiss(m: list[list[int]], want_det: bool) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, det of the leading block with sign)."""
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    sign, prev, r = 1, 1, 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            if want_det:
                return r, 0
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        pr, pv = m[r], m[r][c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for k in range(c + 1, ncols):
                row[k] = (pv * row[k] - f * pr[k]) // prev
            row[c] = 0
        prev = pv
        r += 1
    return r, sign * prev if r else 1


def det(a) -> Fraction:
    """Exact determinant by Bareiss elimination. The 0 x 0 determinant is 1."""
    rows = _as_rows(a)
    n = len(rows)
    ncols = a.shape[1] if isinstance(a, (RMatrix, GIMatrix)) else (len(rows[0]) if rows else 0)
    if n != ncols:
        raise ValueError(f"determinant of a non-square {n}x{ncols} matrix")
    if n == 0:
        return Fraction(1)
    m, scale = _integer_rows(rows)
    r, d = _bareiss(m, want_det=True)
    if r < n:
        return Fraction(0)
    return Fraction(d, scale)


def rank(a) -> int:
    rows = _as_rows(a)
    if not rows:
        return 0
    m, _ = _integer_rows(rows)
    return _bareiss(m, want_det=False)[0]


def sign(x) -> int:
    return (x > 0) - (x < 0)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of ``range(len(perm))`` by cycle counting."""
    seen = [False] * len(perm)
    s = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, k = 0, start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def cofactor(a: RMatrix, i: int, j: int) -> Fraction:
    return (-1) ** (i + j) * det(a.delete([i], [j]))
