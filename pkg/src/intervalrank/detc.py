"""Partial generalized diagonals, det^c and the maximal rank of a general interval matrix.

A pg-diagonal is a set of cells with pairwise distinct rows and columns. It is
*totally nonconstant* when no chosen entry is a single point. ``det^c`` is the
Leibniz sum restricted to permutations that only pass through constant entries.

``Mrk(mu) < p`` for a square ``mu`` exactly when the determinant, viewed as a
polynomial in the nonconstant entries, vanishes identically. Its monomials are
indexed by totally nonconstant pg-diagonals and the coefficient of each is
(up to sign) det^c of the complementary matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator

from .core import GIMatrix, GInterval

__all__ = [
    "PgDiagonal",
    "detc",
    "complementary",
    "totally_nonconstant_diagonals",
    "max_rank_lt_p",
    "max_rank_lt_p_witness",
    "max_rank",
    "full_rank_completion",
]


@dataclass(frozen=True)
class PgDiagonal:
    """Cells ``(i, j)``, 0-based, with distinct rows and distinct columns."""

    cells: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        cells = tuple(sorted((int(i), int(j)) for i, j in self.cells))
        rows = [i for i, _ in cells]
        cols = [j for _, j in cells]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError(f"cells {cells} repeat a row or a column")
        object.__setattr__(self, "cells", cells)

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.cells)

    @property
    def cols(self) -> tuple[int, ...]:
        return tuple(j for _, j in self.cells)

    def is_totally_nonconstant(self, nu: GIMatrix) -> bool:
        return all(not nu.entries[i][j].is_constant for i, j in self.cells)


def _require_square(nu: GIMatrix) -> int:
    p, q = nu.shape
    if p != q:
        raise ValueError(f"expected a square matrix, got {p}x{q}")
    return p


def detc(nu: GIMatrix) -> Fraction:
    """Signed sum over permutations whose every entry is constant; 0 if there are none.

    Expands row by row, skipping nonconstant cells, so the cost is the number
    of constant partial permutations rather than p!.
    """
    p = _require_square(nu)
    if p == 0:
        return Fraction(1)
    ent = nu.entries
    total = Fraction(0)
    used = [False] * p
    perm = [0] * p

    def walk(i: int, acc: Fraction) -> None:
        nonlocal total
        if i == p:
            # parity of perm via inversion count, p is small
            inv = sum(1 for a in range(p) for b in range(a + 1, p) if perm[a] > perm[b])
            total += -acc if inv % 2 else acc
            return
        for j in range(p):
            e = ent[i][j]
            if used[j] or not e.is_constant or e.lo == 0:
                continue
            used[j] = True
            perm[i] = j
            walk(i + 1, acc * e.lo)
            used[j] = False

    walk(0, Fraction(1))
    return total


def complementary(nu: GIMatrix, d: PgDiagonal) -> GIMatrix:
    """The submatrix left after deleting the rows and columns of ``d``."""
    p, q = nu.shape
    for i, j in d.cells:
        if not (0 <= i < p and 0 <= j < q):
            raise IndexError(f"cell {(i, j)} outside a {p}x{q} matrix")
    return nu.delete(d.rows, d.cols)


def totally_nonconstant_diagonals(nu: GIMatrix, k: int) -> Iterator[PgDiagonal]:
    """Yield every totally nonconstant pg-diagonal of length ``k`` (``k = 0`` gives one, empty)."""
    p, q = nu.shape
    if k < 0 or k > min(p, q):
        return
    ent = nu.entries
    for rows in combinations(range(p), k):
        for cols in permutations(range(q), k):
            if all(not ent[i][j].is_constant for i, j in zip(rows, cols)):
                yield PgDiagonal(tuple(zip(rows, cols)))


def max_rank_lt_p_witness(nu: GIMatrix) -> PgDiagonal | None:
    """A pg-diagonal showing ``Mrk(nu) = p``, or ``None`` when ``Mrk(nu) < p``.

    The witness is either a totally nonconstant diagonal of full length or a
    shorter one whose complementary matrix has nonzero det^c.
    """
    p = _require_square(nu)
    for d in totally_nonconstant_diagonals(nu, p):
        return d
    for k in range(p):
        for d in totally_nonconstant_diagonals(nu, k):
            if detc(complementary(nu, d)) != 0:
                return d
    return None


def max_rank_lt_p(nu: GIMatrix) -> bool:
    """True iff every matrix contained in the square ``nu`` is singular."""
    return max_rank_lt_p_witness(nu) is None


def max_rank(mu: GIMatrix) -> int:
    """Largest rank of a matrix contained in ``mu`` (any shape)."""
    p, q = mu.shape
    for t in range(min(p, q), 0, -1):
        for rows in combinations(range(p), t):
            drop_r = [i for i in range(p) if i not in rows]
            for cols in combinations(range(q), t):
                drop_c = [j for j in range(q) if j not in cols]
                if not max_rank_lt_p(mu.delete(drop_r, drop_c)):
                    return t
    return 0


def _two_points(e: GInterval) -> tuple[Fraction, Fraction]:
    if e.is_bounded:
        return e.lo, e.hi
    if e.lo is not None:
        return e.lo, e.lo + 1
    if e.hi is not None:
        return e.hi, e.hi - 1
    return Fraction(0), Fraction(1)


def full_rank_completion(nu: GIMatrix):
    """A constant matrix in the square ``nu`` with nonzero determinant, or ``None``.

    Fixes nonconstant cells one at a time. The determinant is affine in each
    cell, so of two distinct values at least one keeps it not identically zero.
    """
    if max_rank_lt_p(nu):
        return None
    cur = nu
    for i, j, e in nu.cells():
        if e.is_constant:
            continue
        u, v = _two_points(e)
        trial = cur.replace(i, j, GInterval.constant(u))
        cur = trial if not max_rank_lt_p(trial) else cur.replace(i, j, GInterval.constant(v))
    return cur.to_rmatrix()
