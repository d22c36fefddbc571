"""Full rank of square general closed interval matrices.

The decision runs three checks on ``mu`` (``L`` below is ``left_matrix(mu)``,
the constant matrix with unbounded entries at 0, half-lines at their finite
end and bounded entries at their lower end):

1. for every unbounded cell ``(i, j)`` the minor without row ``i`` and column
   ``j`` has maximal rank below ``p - 1``;
2. every even-type vertex matrix of ``bar(tilde(mu))`` has a determinant of
   the same strict sign as ``det(L)``;
3. for every even-type vertex matrix ``g`` of ``tilde(mu)`` and every set of
   half-bounded cells on distinct rows and columns, the signed cofactor
   ``sign_exponent * det(L) * det(minor of bar(g))`` is nonnegative.

Each failing check comes with a certificate, and :func:`singular_completion`
turns any certificate into an exact singular matrix contained in ``mu``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence, Union

from .core import (
    GIMatrix,
    Kind,
    RMatrix,
    bar,
    contains,
    det,
    left_matrix,
    sign,
    take_left,
    tilde,
)
from .detc import PgDiagonal, complementary, detc, full_rank_completion, max_rank_lt_p_witness
from .rohn import even_type_vertices, is_even_type, is_vertex_matrix

__all__ = [
    "HalfBoundedTuple",
    "half_bounded_tuples",
    "sign_exponent",
    "monotone_box_nonneg",
    "lemma1_split",
    "lemma1_full_rank",
    "lemma2_full_rank",
    "lemma3_full_rank",
    "lemma3_full_rank_monotone",
    "Condition1Violation",
    "Condition2Violation",
    "Condition3Violation",
    "SingularWitness",
    "AllConditionsHold",
    "Verdict",
    "full_rank_general",
    "singular_completion",
    "verify_verdict",
]


@dataclass(frozen=True)
class HalfBoundedTuple:
    """An ordered list of half-bounded cells (0-based) on distinct rows and columns.

    ``right[t]`` records whether cell ``t`` is right-bounded, ``(-inf, b]``.
    """

    cells: tuple[tuple[int, int], ...]
    right: tuple[bool, ...]

    def __post_init__(self):
        if len(self.cells) != len(self.right):
            raise ValueError("cells and right flags differ in length")
        rows = [i for i, _ in self.cells]
        cols = [j for _, j in self.cells]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError(f"cells {self.cells} repeat a row or a column")

    @classmethod
    def of(cls, mu: GIMatrix, cells: Iterable[tuple[int, int]]) -> HalfBoundedTuple:
        cells = tuple((int(i), int(j)) for i, j in cells)
        for i, j in cells:
            if not mu.entries[i][j].is_half_bounded:
                raise ValueError(f"cell ({i},{j}) = {mu.entries[i][j]} is not half-bounded")
        return cls(cells, tuple(mu.entries[i][j].kind is Kind.RIGHT for i, j in cells))

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.cells)

    @property
    def cols(self) -> tuple[int, ...]:
        return tuple(j for _, j in self.cells)

    @property
    def chi(self) -> int:
        return sum(self.right)

    def reduced_indices(self) -> list[tuple[int, int]]:
        """1-based positions of each cell in the matrix left after deleting the earlier cells."""
        out = []
        for t, (i, j) in enumerate(self.cells):
            di = sum(1 for r, _ in self.cells[:t] if r < i)
            dj = sum(1 for _, c in self.cells[:t] if c < j)
            out.append((i + 1 - di, j + 1 - dj))
        return out

    def reordered(self, order: Sequence[int]) -> HalfBoundedTuple:
        return HalfBoundedTuple(tuple(self.cells[k] for k in order), tuple(self.right[k] for k in order))


def sign_exponent(tup: HalfBoundedTuple) -> int:
    """``(-1) ** (i_1 + j_1 + sum_{t>=2} (reduced i_t + reduced j_t) + chi)``."""
    if not isinstance(tup, HalfBoundedTuple):
        raise TypeError("expected a HalfBoundedTuple")
    total = sum(i + j for i, j in tup.reduced_indices()) + tup.chi
    return -1 if total % 2 else 1


def half_bounded_tuples(mu: GIMatrix, min_size: int = 1) -> Iterator[HalfBoundedTuple]:
    """Half-bounded cell sets on distinct rows/columns, each in row order, smallest first."""
    cells = [(i, j) for i, j, e in mu.cells() if e.is_half_bounded]
    for s in range(min_size, len(cells) + 1):
        found = False
        for combo in combinations(cells, s):
            rows = {i for i, _ in combo}
            cols = {j for _, j in combo}
            if len(rows) == s and len(cols) == s:
                found = True
                yield HalfBoundedTuple.of(mu, combo)
        if not found and s > 0:
            return


def monotone_box_nonneg(
    poly: Callable[[Sequence[Fraction]], Fraction],
    base: Sequence,
    free_dirs: Iterable[int],
    strict: bool = False,
) -> bool:
    """Whether a polynomial of degree <= 1 in each variable is >= 0 (``> 0`` if ``strict``)
    on ``base`` plus the nonnegative orthant spanned by ``free_dirs``.

    Holds iff the value at ``base`` is >= 0 (> 0) and every partial derivative
    along a free direction is >= 0 on the same region, applied recursively.
    Partials are exact unit differences since each variable enters affinely.
    """
    base = [Fraction(x) for x in base]
    dirs = tuple(sorted(set(free_dirs)))
    memo: dict[frozenset, bool] = {}

    def value(taken: frozenset) -> Fraction:
        # mixed unit difference over the directions in ``taken``, at ``base``
        total = Fraction(0)
        taken = tuple(taken)
        for r in range(len(taken) + 1):
            for sub in combinations(taken, r):
                x = list(base)
                for k in sub:
                    x[k] += 1
                v = Fraction(poly(x))
                total += v if (len(taken) - r) % 2 == 0 else -v
        return total

    def ok(taken: frozenset, strict_here: bool) -> bool:
        key = taken
        if not strict_here and key in memo:
            return memo[key]
        v = value(taken)
        res = (v > 0) if strict_here else (v >= 0)
        if res:
            res = all(ok(taken | {k}, False) for k in dirs if k not in taken)
        if not strict_here:
            memo[key] = res
        return res

    return ok(frozenset(), strict)


def lemma1_split(mu: GIMatrix) -> tuple[GIMatrix, list[tuple[int, int]]]:
    """``(tilde(mu), positions of the (-inf, inf) entries)``."""
    if not mu.is_square:
        raise ValueError("needs a square matrix")
    return tilde(mu), mu.positions(Kind.UNBOUNDED)


def lemma1_full_rank(mu: GIMatrix, tilde_full_rank: Callable[[GIMatrix], bool] | None = None) -> bool:
    """Full rank of ``mu`` as: ``tilde(mu)`` full rank and each unbounded cell's minor
    has maximal rank below ``p - 1``."""
    nu, cells = lemma1_split(mu)
    for i, j in cells:
        if max_rank_lt_p_witness(mu.delete([i], [j])) is not None:
            return False
    return (tilde_full_rank or lemma2_full_rank)(nu)


def _bar_const(mu: GIMatrix) -> RMatrix:
    return bar(mu).to_rmatrix()


def lemma3_full_rank(rho: GIMatrix) -> bool:
    """Full rank of a square matrix with only constant and half-bounded entries."""
    if not rho.is_square:
        raise ValueError("needs a square matrix")
    for i, j, e in rho.cells():
        if not (e.is_constant or e.is_half_bounded):
            raise ValueError(f"entry ({i},{j}) = {e} is neither constant nor half-bounded")
    g = _bar_const(rho)
    dg = det(g)
    if dg == 0:
        return False
    for tup in half_bounded_tuples(rho):
        if sign_exponent(tup) * dg * det(g.delete(tup.rows, tup.cols)) < 0:
            return False
    return True


def lemma3_full_rank_monotone(rho: GIMatrix) -> bool:
    """Same decision as :func:`lemma3_full_rank`, by running :func:`monotone_box_nonneg`
    on ``det(bar(rho)) * det(A(y))`` where half-line cells move by ``y_k >= 0`` away
    from their finite ends."""
    if not rho.is_square:
        raise ValueError("needs a square matrix")
    g = _bar_const(rho)
    cells = [(i, j, -1 if e.kind is Kind.RIGHT else 1) for i, j, e in rho.cells() if e.is_half_bounded]
    for i, j, e in rho.cells():
        if not (e.is_constant or e.is_half_bounded):
            raise ValueError(f"entry ({i},{j}) = {e} is neither constant nor half-bounded")
    dg = det(g)

    def poly(y):
        rows = g.tolist()
        for (i, j, d), yk in zip(cells, y):
            rows[i][j] += d * yk
        return dg * det(rows)

    return monotone_box_nonneg(poly, [0] * len(cells), range(len(cells)), strict=True)


def _even_dets_agree(nu: GIMatrix, ref_sign: int) -> bool:
    for gamma in even_type_vertices(nu):
        if sign(det(_bar_const(gamma))) != ref_sign:
            return False
    return True


def lemma2_full_rank(nu: GIMatrix) -> bool:
    """Full rank of a square matrix without (-inf, inf) entries: every even-type vertex
    matrix is full rank and its collapsed determinant has the sign of ``det(bar(nu_l))``."""
    if not nu.is_square:
        raise ValueError("needs a square matrix")
    if any(e.is_unbounded for _, _, e in nu.cells()):
        raise ValueError("lemma2_full_rank does not accept (-inf, inf) entries")
    ref = sign(det(_bar_const(take_left(nu))))
    if ref == 0:
        return False
    for gamma in even_type_vertices(nu):
        if not lemma3_full_rank(gamma) or sign(det(_bar_const(gamma))) != ref:
            return False
    return True


# verdicts and certificates


@dataclass(frozen=True)
class Condition1Violation:
    """The minor at unbounded cell ``cell`` has a pg-diagonal ``diagonal`` (in minor
    coordinates) that is totally nonconstant of full length, or whose complementary
    matrix has nonzero det^c equal to ``detc_value``."""

    cell: tuple[int, int]
    diagonal: PgDiagonal
    detc_value: Fraction | None
    kind: str = field(default="Condition1Violation", init=False)


@dataclass(frozen=True)
class Condition2Violation:
    """Two constant matrices of ``mu`` whose determinants do not share a strict sign:
    ``left`` is ``L`` and ``vertex`` an even-type vertex matrix of ``bar(tilde(mu))``."""

    left: RMatrix
    vertex: RMatrix
    det_left: Fraction
    det_vertex: Fraction
    kind: str = field(default="Condition2Violation", init=False)


@dataclass(frozen=True)
class Condition3Violation:
    """``value = sign_exponent(tuple) * det(L) * det(minor of bar(vertex))`` is negative."""

    vertex: GIMatrix
    tuple: HalfBoundedTuple
    value: Fraction
    kind: str = field(default="Condition3Violation", init=False)


@dataclass(frozen=True)
class SingularWitness:
    matrix: RMatrix
    kind: str = field(default="SingularWitness", init=False)


@dataclass(frozen=True)
class AllConditionsHold:
    kind: str = field(default="AllConditionsHold", init=False)


Certificate = Union[Condition1Violation, Condition2Violation, Condition3Violation, SingularWitness, AllConditionsHold]


@dataclass(frozen=True)
class Verdict:
    full_rank: bool
    certificate: Certificate
    witness: RMatrix | None = None

    @property
    def decision(self) -> str:
        return "FullRank" if self.full_rank else "NotFullRank"


def _condition1(mu: GIMatrix) -> Condition1Violation | None:
    for i, j in mu.positions(Kind.UNBOUNDED):
        minor = mu.delete([i], [j])
        d = max_rank_lt_p_witness(minor)
        if d is not None:
            value = None if len(d) == minor.shape[0] else detc(complementary(minor, d))
            return Condition1Violation((i, j), d, value)
    return None


def _condition2(mu: GIMatrix, left: RMatrix, det_left: Fraction) -> Condition2Violation | None:
    if det_left == 0:
        return Condition2Violation(left, left, det_left, det_left)
    ref = sign(det_left)
    for v in even_type_vertices(bar(tilde(mu))):
        a = v.to_rmatrix()
        da = det(a)
        if sign(da) != ref:
            return Condition2Violation(left, a, det_left, da)
    return None


def _condition3(mu: GIMatrix, det_left: Fraction) -> Condition3Violation | None:
    tuples = list(half_bounded_tuples(mu))
    if not tuples:
        return None
    for gamma in even_type_vertices(tilde(mu)):
        g = _bar_const(gamma)
        for tup in tuples:
            v = sign_exponent(tup) * det_left * det(g.delete(tup.rows, tup.cols))
            if v < 0:
                return Condition3Violation(gamma, tup, v)
    return None


def full_rank_general(mu: GIMatrix, with_witness: bool = True) -> Verdict:
    """Decide whether every matrix contained in the square ``mu`` is nonsingular.

    Conditions are checked in order 1, 2, 3 and the first failure is returned.
    With ``with_witness`` the verdict also carries an exact singular completion.
    """
    if not mu.is_square:
        raise ValueError(f"full_rank_general needs a square matrix, got {mu.shape[0]}x{mu.shape[1]}")
    cert = _condition1(mu)
    if cert is None:
        left = left_matrix(mu)
        det_left = det(left)
        cert = _condition2(mu, left, det_left)
        if cert is None:
            cert = _condition3(mu, det_left)
    if cert is None:
        return Verdict(True, AllConditionsHold())
    witness = singular_completion(mu, cert) if with_witness else None
    return Verdict(False, cert, witness)


def _walk(mu: GIMatrix, start: RMatrix, target: RMatrix) -> RMatrix | None:
    """Move from ``start`` to ``target`` one cell at a time and stop at the first
    sign change of det, solving the affine equation in that cell exactly."""
    cur, d0 = start, det(start)
    if d0 == 0:
        return cur
    p, q = mu.shape
    for i in range(p):
        for j in range(q):
            x0, x1 = cur.rows[i][j], target.rows[i][j]
            if x0 == x1:
                continue
            nxt = cur.replace(i, j, x1)
            d1 = det(nxt)
            if d1 == 0:
                return nxt
            if sign(d1) != sign(d0):
                slope = (d1 - d0) / (x1 - x0)
                return cur.replace(i, j, x0 - d0 / slope)
            cur, d0 = nxt, d1
    return None


def _condition1_witness(mu: GIMatrix, cert: Condition1Violation) -> RMatrix | None:
    i, j = cert.cell
    b = full_rank_completion(mu.delete([i], [j]))
    if b is None:
        return None
    rows = mu.representative().tolist()
    keep_r = [r for r in range(mu.shape[0]) if r != i]
    keep_c = [c for c in range(mu.shape[1]) if c != j]
    for bi, r in enumerate(keep_r):
        for bj, c in enumerate(keep_c):
            rows[r][c] = b.rows[bi][bj]
    rows[i][j] = Fraction(0)
    a = RMatrix.of(rows)
    slope = (-1) ** (i + j) * det(b)
    return a.replace(i, j, -det(a) / slope)


def _condition3_witness(mu: GIMatrix, cert: Condition3Violation, left: RMatrix) -> RMatrix | None:
    ref = sign(det(left))
    g = _bar_const(cert.vertex)
    t = Fraction(1)
    for _ in range(4096):
        rows = g.tolist()
        for (i, j), right in zip(cert.tuple.cells, cert.tuple.right):
            rows[i][j] += -t if right else t
        a = RMatrix.of(rows)
        if sign(det(a)) != ref:
            return _walk(mu, left, a)
        t *= 2
    return None


def singular_completion(mu: GIMatrix, cert: Certificate) -> RMatrix | None:
    """An exact singular matrix contained in ``mu`` derived from a failing certificate."""
    if isinstance(cert, SingularWitness):
        w = cert.matrix
    elif isinstance(cert, Condition1Violation):
        w = _condition1_witness(mu, cert)
    elif isinstance(cert, Condition2Violation):
        w = _walk(mu, cert.left, cert.vertex)
    elif isinstance(cert, Condition3Violation):
        w = _condition3_witness(mu, cert, left_matrix(mu))
    else:
        return None
    if w is None or not contains(mu, w) or det(w) != 0:
        return None
    return w


def _check_certificate(mu: GIMatrix, cert: Certificate) -> bool:
    p = mu.shape[0]
    if isinstance(cert, SingularWitness):
        return contains(mu, cert.matrix) and det(cert.matrix) == 0
    if isinstance(cert, Condition1Violation):
        i, j = cert.cell
        if not mu.entries[i][j].is_unbounded:
            return False
        minor = mu.delete([i], [j])
        d = cert.diagonal
        if any(not (0 <= a < p - 1 and 0 <= b < p - 1) for a, b in d.cells):
            return False
        if not d.is_totally_nonconstant(minor):
            return False
        if len(d) == p - 1:
            return True
        v = detc(complementary(minor, d))
        return v != 0 and v == cert.detc_value
    if isinstance(cert, Condition2Violation):
        if cert.left != left_matrix(mu):
            return False
        ref = bar(tilde(mu))
        v = GIMatrix.from_rmatrix(cert.vertex)
        if not (is_vertex_matrix(ref, v) and is_even_type(ref, v)):
            return False
        dl, dv = det(cert.left), det(cert.vertex)
        return dl == cert.det_left and dv == cert.det_vertex and (dl == 0 or sign(dl) != sign(dv))
    if isinstance(cert, Condition3Violation):
        nu = tilde(mu)
        if not (is_vertex_matrix(nu, cert.vertex) and is_even_type(nu, cert.vertex)):
            return False
        try:
            tup = HalfBoundedTuple.of(mu, cert.tuple.cells)
        except (ValueError, IndexError):
            return False
        if tup != cert.tuple:
            return False
        g = _bar_const(cert.vertex)
        v = sign_exponent(tup) * det(left_matrix(mu)) * det(g.delete(tup.rows, tup.cols))
        return v < 0 and v == cert.value
    return False


def verify_verdict(mu: GIMatrix, verdict: Verdict) -> bool:
    """Re-check a negative verdict's certificate and witness from scratch.

    A positive verdict carries no certificate to check; it is re-derived instead.
    """
    if verdict.full_rank:
        return full_rank_general(mu, with_witness=False).full_rank
    if not _check_certificate(mu, verdict.certificate):
        return False
    w = verdict.witness
    return w is None or (contains(mu, w) and det(w) == 0)
