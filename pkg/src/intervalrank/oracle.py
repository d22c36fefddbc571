"""Brute-force and randomized checks that do not rely on the full-rank criteria.

* :func:`vertex_det_range` enumerates vertex matrices. The determinant is
  affine in every entry, so over a box its extremes sit at vertices.
* :func:`singular_witness` samples completions on a rational grid and, for
  every sample and every nonconstant cell, solves exactly for the value of that
  cell that makes the determinant vanish.
* :func:`sample_max_rank` is a lower bound for the maximal rank.

Samples are drawn as integer numerators over a common denominator so that all
batch arithmetic runs on Python integers (numpy object arrays) and stays exact.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial, lcm
from typing import Iterator

import numpy as np

from .core import GIMatrix, Kind, RMatrix, _bareiss, as_scalar, contains, det, permutation_sign

log = logging.getLogger(__name__)

__all__ = [
    "SampleConfig",
    "vertex_det_range",
    "vertex_det_range_naive",
    "is_singular_witness",
    "singular_witness",
    "sample_completions",
    "sample_max_rank",
]

_INT64_SAFE = 2**62
_CHUNK = 4096


@dataclass(frozen=True)
class SampleConfig:
    """Sampling parameters. ``cap`` bounds how far half-lines and R are sampled;
    ``grid`` is the number of grid steps per unit length on top of the common
    denominator of the endpoints."""

    seed: int = 0
    trials: int = 1000
    cap: Fraction = Fraction(1000)
    grid: int = 1024

    def __post_init__(self):
        object.__setattr__(self, "cap", as_scalar(self.cap))
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.cap <= 0:
            raise ValueError("cap must be positive")
        if self.grid < 1:
            raise ValueError("grid must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


def _batched_det(m: np.ndarray) -> np.ndarray:
    """Leibniz determinant of a stack ``(N, n, n)``; the 0 x 0 determinant is 1."""
    n = m.shape[1]
    total = np.zeros(m.shape[0], dtype=m.dtype)
    if n == 0:
        return total + 1
    for perm in permutations(range(n)):
        term = m[:, 0, perm[0]]
        for i in range(1, n):
            term = term * m[:, i, perm[i]]
        if permutation_sign(perm) > 0:
            total = total + term
        else:
            total = total - term
    return total


def _dtype_for(bound: int, n: int):
    return np.int64 if factorial(max(n, 1)) * bound ** max(n, 1) < _INT64_SAFE else object


def vertex_det_range_naive(mu: GIMatrix) -> tuple[Fraction, Fraction]:
    """Min and max of det over all 2^k vertex matrices, one determinant at a time."""
    _check_bounded_square(mu)
    cells = mu.positions(Kind.BOUNDED)
    base = mu.representative().tolist()
    dets = []
    for choice in product((0, 1), repeat=len(cells)):
        rows = [list(r) for r in base]
        for (i, j), c in zip(cells, choice):
            e = mu.entries[i][j]
            rows[i][j] = e.hi if c else e.lo
        dets.append(det(rows))
    return min(dets), max(dets)


def _check_bounded_square(mu: GIMatrix) -> None:
    if not mu.is_square:
        raise ValueError("vertex_det_range needs a square matrix")
    for i, j, e in mu.cells():
        if e.kind not in (Kind.CONSTANT, Kind.BOUNDED):
            raise ValueError(f"entry ({i},{j}) = {e} is not bounded")


def vertex_det_range(mu: GIMatrix) -> tuple[Fraction, Fraction]:
    """Min and max of det over the vertex matrices of a classical interval matrix.

    Expanding along the first row, ``det = sum_j a_0j c_0j`` where the cofactors
    ``c_0j`` do not involve row 0, so for each vertex choice of rows 1.. the
    extremes over row 0 are taken entrywise. Rows 1.. are enumerated in batches.
    """
    _check_bounded_square(mu)
    p = mu.shape[0]
    if p == 0:
        return Fraction(1), Fraction(1)
    d = lcm(*(x.denominator for _, _, e in mu.cells() for x in (e.lo, e.hi)))
    lo = [[int(e.lo * d) for e in r] for r in mu.entries]
    hi = [[int(e.hi * d) for e in r] for r in mu.entries]
    bound = max(max(abs(v) for r in lo + hi for v in r), 1)
    dtype = _dtype_for(bound, p)
    lo0 = np.array(lo[0], dtype=dtype)
    hi0 = np.array(hi[0], dtype=dtype)
    cells = [(i, j) for i, j, e in mu.cells() if i > 0 and e.is_bounded]
    k = len(cells)
    best_lo = best_hi = None
    base = np.array([r for r in lo[1:]], dtype=dtype).reshape(p - 1, p)
    for start in range(0, 2**k, _CHUNK):
        idx = np.arange(start, min(2**k, start + _CHUNK), dtype=np.int64)
        batch = np.repeat(base[None, :, :], len(idx), axis=0)
        for b, (i, j) in enumerate(cells):
            bit = ((idx >> b) & 1).astype(bool)
            col = np.where(bit, hi[i][j], lo[i][j])
            batch[:, i - 1, j] = col.astype(dtype) if dtype is object else col
        lows, highs = 0, 0
        for j in range(p):
            minor = np.delete(batch, j, axis=2)
            c = _batched_det(minor)
            if j % 2:
                c = -c
            a, b = lo0[j] * c, hi0[j] * c
            lows = lows + np.minimum(a, b)
            highs = highs + np.maximum(a, b)
        mn, mx = int(np.min(lows)), int(np.max(highs))
        best_lo = mn if best_lo is None else min(best_lo, mn)
        best_hi = mx if best_hi is None else max(best_hi, mx)
    scale = d**p
    return Fraction(best_lo, scale), Fraction(best_hi, scale)


def is_singular_witness(mu: GIMatrix, a: RMatrix) -> bool:
    return a.shape == mu.shape and contains(mu, a) and det(a) == 0


def _ranges(mu: GIMatrix, cfg: SampleConfig) -> tuple[int, list[list[tuple[int, int]]]]:
    """Common denominator and per-cell integer numerator ranges."""
    dens = [cfg.cap.denominator]
    for _, _, e in mu.cells():
        dens += [x.denominator for x in (e.lo, e.hi) if x is not None]
    d = lcm(*dens) * cfg.grid
    cap = int(cfg.cap * d)
    out = []
    for r in mu.entries:
        row = []
        for e in r:
            lo = int(e.lo * d) if e.lo is not None else None
            hi = int(e.hi * d) if e.hi is not None else None
            if lo is None and hi is None:
                lo, hi = -cap, cap
            elif hi is None:
                hi = lo + cap
            elif lo is None:
                lo = hi - cap
            row.append((lo, hi))
        out.append(row)
    return d, out


def _draw(rng: np.random.Generator, lo: int, hi: int, n: int) -> np.ndarray:
    if lo == hi:
        return np.full(n, lo, dtype=object)
    if -(2**62) < lo and hi < 2**62:
        return rng.integers(lo, hi, size=n, endpoint=True).astype(object)
    # endpoints beyond int64: offset draws from a Python-int base
    span = hi - lo
    if span < 2**62:
        return rng.integers(0, span, size=n, endpoint=True).astype(object) + lo
    return np.array([lo + int(rng.integers(0, 2**62)) * span // 2**62 for _ in range(n)], dtype=object)


def _sample_batches(mu: GIMatrix, cfg: SampleConfig) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(denominator, numerators)`` batches, ``numerators`` shaped ``(N, p, q)``.

    Batch ``b`` uses the generator seeded with ``(cfg.seed, b)``, so the stream
    only depends on the config.
    """
    p, q = mu.shape
    d, ranges = _ranges(mu, cfg)
    done, b = 0, 0
    while done < cfg.trials:
        n = min(_CHUNK, cfg.trials - done)
        rng = np.random.default_rng([cfg.seed, b])
        batch = np.empty((n, p, q), dtype=object)
        for i in range(p):
            for j in range(q):
                batch[:, i, j] = _draw(rng, *ranges[i][j], n)
        yield d, batch
        done += n
        b += 1


def sample_completions(mu: GIMatrix, cfg: SampleConfig) -> Iterator[RMatrix]:
    """The sampled completions themselves, in order."""
    for d, batch in _sample_batches(mu, cfg):
        for m in batch:
            yield RMatrix(tuple(tuple(Fraction(int(v), d) for v in r) for r in m), mu.ncols)


def _batched_cofactors(batch: np.ndarray) -> list[list[np.ndarray]]:
    p = batch.shape[1]
    cof = []
    for i in range(p):
        row = []
        for j in range(p):
            minor = np.delete(np.delete(batch, i, axis=1), j, axis=2)
            c = _batched_det(minor)
            row.append(-c if (i + j) % 2 else c)
        cof.append(row)
    return cof


def _per_trial_cofactors(batch: np.ndarray) -> tuple[np.ndarray, list[list[np.ndarray]]]:
    n, p, _ = batch.shape
    dets = np.empty(n, dtype=object)
    cof = [[np.empty(n, dtype=object) for _ in range(p)] for _ in range(p)]
    for t in range(n):
        m = [[int(v) for v in r] for r in batch[t]]
        dets[t] = _int_det(m)
        for i in range(p):
            for j in range(p):
                minor = [r[:j] + r[j + 1:] for k, r in enumerate(m) if k != i]
                c = _int_det(minor)
                cof[i][j][t] = -c if (i + j) % 2 else c
    return dets, cof


def _int_det(m: list[list[int]]) -> int:
    if not m:
        return 1
    work = [r[:] for r in m]
    r, d = _bareiss(work, want_det=True)
    return d if r == len(m) else 0


def singular_witness(mu: GIMatrix, cfg: SampleConfig | None = None) -> RMatrix | None:
    """Search for a singular matrix contained in the square ``mu``.

    For each sample ``A`` and nonconstant cell ``(i, j)``, ``det`` is affine in
    ``a_ij`` with slope equal to the cofactor, so the zeroing value is
    ``a_ij - det(A) / cof_ij``. The first hit, in sample then row-major cell
    order, is verified exactly and returned. ``None`` proves nothing.
    """
    cfg = cfg or SampleConfig()
    if not mu.is_square:
        raise ValueError("singular_witness needs a square matrix")
    p = mu.shape[0]
    free = [(i, j, e) for i, j, e in mu.cells() if not e.is_constant]
    for d, batch in _sample_batches(mu, cfg):
        if p <= 5:
            cof = _batched_cofactors(batch)
            dets = sum((batch[:, 0, j] * cof[0][j] for j in range(p)), np.zeros(len(batch), dtype=object))
        else:
            dets, cof = _per_trial_cofactors(batch)
        hits = np.zeros(len(batch), dtype=bool) | (dets == 0)
        first_cell = np.full(len(batch), -1)
        for k, (i, j, e) in enumerate(free):
            c = cof[i][j]
            # zeroing value is num / den with den = d * c
            num = batch[:, i, j] * c - dets
            den = c * d
            ok = c != 0
            sq = den * den
            if e.lo is not None:
                ok &= (num * den * e.lo.denominator - e.lo.numerator * sq) >= 0
            if e.hi is not None:
                ok &= (num * den * e.hi.denominator - e.hi.numerator * sq) <= 0
            ok = ok.astype(bool)
            new = ok & ~hits
            first_cell[new] = k
            hits |= ok
        if not hits.any():
            continue
        t = int(np.argmax(hits))
        rows = [[Fraction(int(v), d) for v in r] for r in batch[t]]
        if first_cell[t] >= 0 and dets[t] != 0:
            i, j, _ = free[first_cell[t]]
            c = int(cof[i][j][t])
            rows[i][j] = Fraction(int(batch[t, i, j]) * c - int(dets[t]), d * c)
        w = RMatrix.of(rows)
        if is_singular_witness(mu, w):
            return w
        log.error("candidate witness failed exact verification: %s", w)  # pragma: no cover
    return None


def sample_max_rank(mu: GIMatrix, cfg: SampleConfig | None = None) -> int:
    """Largest rank among sampled completions (a lower bound for the maximal rank)."""
    cfg = cfg or SampleConfig()
    p, q = mu.shape
    top = min(p, q)
    best = 0
    for _, batch in _sample_batches(mu, cfg):
        for m in batch:
            r = _bareiss([[int(v) for v in row] for row in m], want_det=False)[0]
            if r > best:
                best = r
                if best == top:
                    return best
    return best
