"""Classical interval matrices: midpoint/radius form, Rohn's sign-vector test,
vertex matrices and their even/odd type.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .core import GIMatrix, GInterval, Kind, RMatrix, det, sign

__all__ = [
    "center",
    "radius",
    "absmat",
    "cxy",
    "sign_vectors",
    "rohn_matrices",
    "rohn_full_rank_signs",
    "vertex_matrices",
    "even_type_vertices",
    "is_vertex_matrix",
    "is_even_type",
    "rohn_full_rank_vertex",
]


def _check_classical(mu: GIMatrix) -> None:
    for i, j, e in mu.cells():
        if e.kind not in (Kind.CONSTANT, Kind.BOUNDED):
            raise ValueError(f"entry ({i},{j}) = {e} is not a bounded interval")


def _entrywise(mu: GIMatrix, fn) -> RMatrix:
    _check_classical(mu)
    return RMatrix(tuple(tuple(fn(e.lo, e.hi) for e in r) for r in mu.entries), mu.ncols)


def center(mu: GIMatrix) -> RMatrix:
    return _entrywise(mu, lambda m, M: (m + M) / 2)


def radius(mu: GIMatrix) -> RMatrix:
    return _entrywise(mu, lambda m, M: (M - m) / 2)


def absmat(mu: GIMatrix) -> RMatrix:
    return _entrywise(mu, lambda m, M: max(abs(m), abs(M)))


def cxy(mu: GIMatrix, x: Sequence[int], y: Sequence[int]) -> RMatrix:
    """``C - T_x D T_y``: entry (i, j) is the lower end when ``x_i y_j = 1``, else the upper."""
    p, q = mu.shape
    if len(x) != p or len(y) != q:
        raise ValueError(f"sign vectors of lengths {len(x)}, {len(y)} for a {p}x{q} matrix")
    if any(s not in (1, -1) for s in (*x, *y)):
        raise ValueError("sign vector entries must be +1 or -1")
    c, d = center(mu), radius(mu)
    return RMatrix(
        tuple(tuple(c.rows[i][j] - x[i] * d.rows[i][j] * y[j] for j in range(q)) for i in range(p)),
        q,
    )


def sign_vectors(n: int) -> Iterator[tuple[int, ...]]:
    return product((1, -1), repeat=n)


def rohn_matrices(mu: GIMatrix) -> list[RMatrix]:
    """Distinct matrices ``cxy(mu, x, y)``; ``(x, y)`` and ``(-x, -y)`` give the same one."""
    p, q = mu.shape
    seen: dict[RMatrix, None] = {}
    for x in sign_vectors(p):
        if p and x[0] == -1:
            continue
        for y in sign_vectors(q):
            seen.setdefault(cxy(mu, x, y))
    return list(seen)


def rohn_full_rank_signs(mu: GIMatrix) -> bool:
    """All ``det(C_{x,y})`` share one strict sign."""
    if not mu.is_square:
        raise ValueError("Rohn's sign test needs a square matrix")
    first = 0
    for a in rohn_matrices(mu):
        s = sign(det(a))
        if s == 0:
            return False
        if first == 0:
            first = s
        elif s != first:
            return False
    return True


def vertex_matrices(mu: GIMatrix) -> Iterator[GIMatrix]:
    """Every way of fixing each bounded entry at one of its two ends; other entries are copied."""
    cells = mu.positions(Kind.BOUNDED)
    for choice in product((False, True), repeat=len(cells)):
        out = [list(r) for r in mu.entries]
        for (i, j), hi in zip(cells, choice):
            e = mu.entries[i][j]
            out[i][j] = GInterval.constant(e.hi if hi else e.lo)
        yield GIMatrix(tuple(map(tuple, out)), mu.ncols)


def even_type_vertices(mu: GIMatrix) -> Iterator[GIMatrix]:
    """Vertex matrices of even type, generated with the parity test applied as cells are fixed.

    Cells are assigned in row-major order. When a bounded cell is fixed, every
    fully bounded 2x2 submatrix having it as the bottom-right corner is complete
    and its count of lower ends is checked, so the output equals filtering
    :func:`vertex_matrices` with :func:`is_even_type`.
    """
    p, q = mu.shape
    ent = mu.entries
    cells = mu.positions(Kind.BOUNDED)
    bounded = [[e.is_bounded for e in r] for r in ent]
    # for each cell, the (i0, j0) pairs closing a fully bounded 2x2 at that cell
    closers = []
    for i, j in cells:
        cl = []
        for i0 in range(i):
            if not bounded[i0][j]:
                continue
            for j0 in range(j):
                if bounded[i0][j0] and bounded[i][j0]:
                    cl.append((i0, j0))
        closers.append(cl)
    is_min = [[False] * q for _ in range(p)]

    def emit() -> GIMatrix:
        out = [list(r) for r in ent]
        for i, j in cells:
            e = ent[i][j]
            out[i][j] = GInterval.constant(e.lo if is_min[i][j] else e.hi)
        return GIMatrix(tuple(map(tuple, out)), q)

    def walk(k: int) -> Iterator[GIMatrix]:
        if k == len(cells):
            yield emit()
            return
        i, j = cells[k]
        for choice in (True, False):
            is_min[i][j] = choice
            if all(
                (is_min[i0][j0] + is_min[i0][j] + is_min[i][j0] + choice) % 2 == 0
                for i0, j0 in closers[k]
            ):
                yield from walk(k + 1)

    yield from walk(0)


def is_vertex_matrix(mu: GIMatrix, gamma: GIMatrix) -> bool:
    if mu.shape != gamma.shape:
        return False
    for i, j, e in mu.cells():
        g = gamma.entries[i][j]
        if e.is_bounded:
            if not (g.is_constant and g.lo in (e.lo, e.hi)):
                return False
        elif g != e:
            return False
    return True


def is_even_type(mu: GIMatrix, gamma: GIMatrix) -> bool:
    """Every fully bounded 2x2 submatrix of ``mu`` has an even number of lower ends in ``gamma``.

    2x2 submatrices with a constant, half-bounded or unbounded entry are exempt.
    """
    if not is_vertex_matrix(mu, gamma):
        raise ValueError("gamma is not a vertex matrix of mu")
    p, q = mu.shape
    ent, g = mu.entries, gamma.entries

    def low(i, j) -> int:
        return int(g[i][j].lo == ent[i][j].lo)

    for i0 in range(p):
        for i1 in range(i0 + 1, p):
            for j0 in range(q):
                for j1 in range(j0 + 1, q):
                    quad = ((i0, j0), (i0, j1), (i1, j0), (i1, j1))
                    if all(ent[i][j].is_bounded for i, j in quad):
                        if sum(low(i, j) for i, j in quad) % 2:
                            return False
    return True


def rohn_full_rank_vertex(mu: GIMatrix) -> bool:
    """Even-type vertex matrices all have nonzero determinants of one sign."""
    if not mu.is_square:
        raise ValueError("needs a square matrix")
    _check_classical(mu)
    first = 0
    for gamma in even_type_vertices(mu):
        s = sign(det(gamma.to_rmatrix()))
        if s == 0 or (first and s != first):
            return False
        first = s
    return True

