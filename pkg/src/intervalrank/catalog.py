"""Worked matrices used by the self-test and the acceptance suite, plus random instances."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import GIMatrix, GInterval, RMatrix
from .textio import parse_matrix

ALPHA = parse_matrix(
    """
    (-inf,inf) [1,inf)  1     1  4
    1          [2,3]    6     2  4
    (-inf,2]   0        [1,4] 0  [3,6]
    0          [-1,2]   3     1  2
    3          0        3     1  2
    """
)

# bar(tilde(ALPHA)) at lower ends, and one even-type vertex matrix of it
ALPHA_LEFT = RMatrix.of(
    [[0, 1, 1, 1, 4], [1, 2, 6, 2, 4], [2, 0, 1, 0, 3], [0, -1, 3, 1, 2], [3, 0, 3, 1, 2]]
)
ALPHA_VERTEX = RMatrix.of(
    [[0, 1, 1, 1, 4], [1, 2, 6, 2, 4], [2, 0, 1, 0, 3], [0, 2, 3, 1, 2], [3, 0, 3, 1, 2]]
)
ALPHA_SINGULAR = RMatrix.of(
    [[0, 1, 1, 1, 4], [1, 2, 6, 2, 4], [2, 0, 1, 0, 3], [0, Fraction(6, 5), 3, 1, 2], [3, 0, 3, 1, 2]]
)

BETA = parse_matrix(
    """
    [2,inf) 1     2  (-inf,inf)
    [1,2]   0     3  2
    3       [3,7] 5  3
    0       0     0  [1,inf)
    """
)

DELTA = parse_matrix(
    """
    (-inf,inf) 1      2         (-inf,inf)
    [1,2]      [1,2]  9         2
    3          [1,5]  4         0
    2          [1,2]  [-1,inf)  3
    """
)

VERTEX_DEMO = parse_matrix("[1,2] [2,3] [2,inf) ; [-3,4] [-1,5] [1,4]")
VERTEX_DEMO_EVEN = parse_matrix("1 2 [2,inf) ; 4 5 1")
VERTEX_DEMO_ODD = parse_matrix("1 3 [2,inf) ; 4 5 1")


def _rational(rng: random.Random, lo: int, hi: int, dens: tuple[int, ...]) -> Fraction:
    d = rng.choice(dens)
    return Fraction(rng.randint(lo * d, hi * d), d)


def random_entry(
    rng: random.Random,
    kinds: tuple[str, ...] = ("constant", "bounded"),
    lo: int = -5,
    hi: int = 5,
    dens: tuple[int, ...] = (1, 2, 3),
) -> GInterval:
    kind = rng.choice(kinds)
    if kind == "constant":
        return GInterval.constant(_rational(rng, lo, hi, dens))
    if kind == "bounded":
        while True:
            a, b = sorted((_rational(rng, lo, hi, dens), _rational(rng, lo, hi, dens)))
            if a < b:
                return GInterval.bounded(a, b)
    if kind == "left":
        return GInterval.left_bounded(_rational(rng, lo, hi, dens))
    if kind == "right":
        return GInterval.right_bounded(_rational(rng, lo, hi, dens))
    if kind == "unbounded":
        return GInterval.unbounded()
    raise ValueError(f"unknown entry kind {kind!r}")


def random_matrix(rng: random.Random, p: int, q: int | None = None, **kw) -> GIMatrix:
    q = p if q is None else q
    return GIMatrix.of([[random_entry(rng, **kw) for _ in range(q)] for _ in range(p)])
