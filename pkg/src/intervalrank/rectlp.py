"""Full rank of a rectangular interval matrix via ``|C x| <= D |x|``.

A ``p x q`` classical interval matrix with ``p >= q`` has full column rank iff
the only solution of ``|C x| <= D |x|`` is ``x = 0``. The system is split by
orthant: with ``x = T_s z``, ``z >= 0`` it becomes linear, and ``sum(z) = 1``
excludes the origin. Each piece is decided by an exact phase-one simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .core import GIMatrix, RMatrix, contains, sign
from .rohn import center, radius

__all__ = ["RectResult", "feasible_point", "orthant_system", "rect_check", "rect_full_rank", "completion_killing"]

ZERO = Fraction(0)


def feasible_point(
    a_ub: Sequence[Sequence[Fraction]],
    b_ub: Sequence[Fraction],
    a_eq: Sequence[Sequence[Fraction]] = (),
    b_eq: Sequence[Fraction] = (),
) -> list[Fraction] | None:
    """Some ``x >= 0`` with ``a_ub x <= b_ub`` and ``a_eq x = b_eq``, or ``None``.

    Phase one of the simplex method on a dense tableau of Fractions. Bland's
    rule (lowest index enters, lowest basic index leaves on ties) guarantees
    termination.
    """
    n = len(a_ub[0]) if a_ub else (len(a_eq[0]) if a_eq else 0)
    n_ub, n_eq = len(a_ub), len(a_eq)
    # columns: x (n) | slacks (n_ub) | artificials (added as needed)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int] = []
    needs_art: list[int] = []
    for k in range(n_ub):
        row = [Fraction(v) for v in a_ub[k]] + [ZERO] * n_ub
        row[n + k] = Fraction(1)
        b = Fraction(b_ub[k])
        if b < 0:
            row = [-v for v in row]
            b = -b
            needs_art.append(len(rows))
            basis.append(-1)
        else:
            basis.append(n + k)
        rows.append(row)
        rhs.append(b)
    for k in range(n_eq):
        row = [Fraction(v) for v in a_eq[k]] + [ZERO] * n_ub
        b = Fraction(b_eq[k])
        if b < 0:
            row = [-v for v in row]
            b = -b
        needs_art.append(len(rows))
        basis.append(-1)
        rows.append(row)
        rhs.append(b)
    n_art = len(needs_art)
    width = n + n_ub + n_art
    for r in rows:
        r.extend([ZERO] * n_art)
    for t, r_idx in enumerate(needs_art):
        rows[r_idx][n + n_ub + t] = Fraction(1)
        basis[r_idx] = n + n_ub + t
    art_start = n + n_ub

    # reduced costs for minimising the sum of artificials
    cost = [ZERO] * width
    value = ZERO
    for r_idx in needs_art:
        for j in range(art_start):
            cost[j] -= rows[r_idx][j]
        value -= rhs[r_idx]

    m = len(rows)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                key = (rhs[i] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            # unbounded below cannot happen: the phase-one objective is >= 0
            raise ArithmeticError("phase-one simplex reported an unbounded ray")
        i = best[1]
        piv = rows[i][enter]
        pr = [v / piv for v in rows[i]]
        rows[i], rhs[i] = pr, rhs[i] / piv
        for k in range(m):
            if k != i and rows[k][enter] != 0:
                f = rows[k][enter]
                rows[k] = [a - f * b for a, b in zip(rows[k], pr)]
                rhs[k] -= f * rhs[i]
        f = cost[enter]
        if f != 0:
            cost = [a - f * b for a, b in zip(cost, pr)]
            value -= f * rhs[i]
        basis[i] = enter

    if value != 0:
        return None
    x = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = rhs[i]
    return x


def orthant_system(c: RMatrix, d: RMatrix, s: Sequence[int]):
    """Inequalities in ``z >= 0`` for the orthant ``s``: ``C T_s z <= D z``, ``-C T_s z <= D z``, ``sum z = 1``."""
    p, q = c.shape
    a_ub = []
    for i in range(p):
        a_ub.append([c.rows[i][j] * s[j] - d.rows[i][j] for j in range(q)])
    for i in range(p):
        a_ub.append([-c.rows[i][j] * s[j] - d.rows[i][j] for j in range(q)])
    return a_ub, [ZERO] * (2 * p), [[Fraction(1)] * q], [Fraction(1)]


def completion_killing(mu: GIMatrix, x: Sequence[Fraction]) -> RMatrix:
    """A matrix ``A`` in ``mu`` with ``A x = 0``, given ``|C x| <= D |x|``.

    Row ``i`` is ``C_i - t_i`` where ``t_ij = (C_i x / D_i |x|) D_ij sign(x_j)``,
    so ``|t_ij| <= D_ij`` and ``t_i x = C_i x``.
    """
    c, d = center(mu), radius(mu)
    p, q = mu.shape
    rows = []
    for i in range(p):
        r = sum((c.rows[i][j] * x[j] for j in range(q)), ZERO)
        w = sum((d.rows[i][j] * abs(x[j]) for j in range(q)), ZERO)
        if abs(r) > w:
            raise ValueError(f"row {i} violates |Cx| <= D|x|")
        ratio = r / w if w else ZERO
        rows.append(tuple(c.rows[i][j] - ratio * d.rows[i][j] * sign(x[j]) for j in range(q)))
    return RMatrix(tuple(rows), q)


@dataclass(frozen=True)
class RectResult:
    """Outcome of the rectangular test.

    When not full rank, ``matrix`` is a completion of the input and ``vector``
    a nonzero vector with ``matrix @ vector = 0`` (``side="right"``) or
    ``vector @ matrix = 0`` (``side="left"``, for inputs with ``p < q``).
    """

    full_rank: bool
    matrix: RMatrix | None = None
    vector: tuple[Fraction, ...] | None = None
    side: str = "right"
    orthant: tuple[int, ...] | None = None

    def verify(self, mu: GIMatrix) -> bool:
        if self.full_rank:
            return self.matrix is None
        if self.matrix is None or self.vector is None or not any(self.vector):
            return False
        if not contains(mu, self.matrix):
            return False
        a = self.matrix if self.side == "right" else self.matrix.transpose()
        return all(v == 0 for v in a.matvec(self.vector))


def rect_check(mu: GIMatrix) -> RectResult:
    """Decide full rank of a classical interval matrix of any shape."""
    p, q = mu.shape
    side = "right"
    work = mu
    if p < q:
        work, side = mu.transpose(), "left"
    c, d = center(work), radius(work)
    n = work.shape[1]
    for tail in product((1, -1), repeat=max(n - 1, 0)):
        s = (1, *tail)[:n]
        z = feasible_point(*orthant_system(c, d, s))
        if z is None:
            continue
        x = tuple(si * zi for si, zi in zip(s, z))
        a = completion_killing(work, x)
        if side == "left":
            a = a.transpose()
        return RectResult(False, a, x, side, tuple(s))
    return RectResult(True)


def rect_full_rank(mu: GIMatrix) -> bool:
    return rect_check(mu).full_rank
