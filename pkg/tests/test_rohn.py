import random
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import matrices
from intervalrank import GIMatrix, GInterval, RMatrix, cxy, det, is_even_type, vertex_matrices
from intervalrank.catalog import VERTEX_DEMO, VERTEX_DEMO_EVEN, VERTEX_DEMO_ODD, random_matrix
from intervalrank.core import take_left, take_right
from intervalrank.oracle import vertex_det_range
from intervalrank.rohn import (
    absmat,
    center,
    even_type_vertices,
    radius,
    rohn_full_rank_signs,
    rohn_full_rank_vertex,
    rohn_matrices,
)

B = GInterval.bounded


def test_center_radius_absmat():
    mu = GIMatrix.of([[B(1, 3)]])
    assert center(mu) == RMatrix.of([[2]])
    assert radius(mu) == RMatrix.of([[1]])
    assert absmat(mu) == RMatrix.of([[3]])
    assert absmat(GIMatrix.of([[B(-3, 4)]])) == RMatrix.of([[4]])
    const = GIMatrix.of([[1, 2], [3, 4]])
    assert center(const) == const.to_rmatrix()
    assert radius(const) == RMatrix.of([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        center(GIMatrix.of([[GInterval.left_bounded(0)]]))


def test_cxy_corners():
    mu = GIMatrix.of([[B(1, 2), B(3, 5)], [B(-1, 0), B(2, 7)]])
    assert cxy(mu, (1, 1), (1, 1)) == take_left(mu).to_rmatrix()
    assert cxy(mu, (1, 1), (-1, -1)) == take_right(mu).to_rmatrix()
    # hand-evaluated: row 1 at lower ends, row 2 at upper ends
    assert cxy(mu, (1, -1), (1, 1)) == RMatrix.of([[1, 3], [0, 7]])


def test_cxy_row_locality():
    rng = random.Random(3)
    for _ in range(30):
        mu = random_matrix(rng, 3)
        base = cxy(mu, (1, 1, 1), (1, 1, 1))
        flipped = cxy(mu, (1, -1, 1), (1, 1, 1))
        for i in (0, 2):
            assert base.rows[i] == flipped.rows[i]
        c = center(mu)
        assert all(
            flipped[1, j] - c[1, j] == -(base[1, j] - c[1, j]) for j in range(3)
        )


def test_rohn_signs_examples():
    assert rohn_full_rank_signs(GIMatrix.of([[B(1, 2)]]))
    assert not rohn_full_rank_signs(GIMatrix.of([[B(-1, 1)]]))
    assert rohn_full_rank_signs(GIMatrix.of([[B(2, 3), B(0, 1)], [B(0, 1), B(2, 3)]]))
    assert not rohn_full_rank_signs(GIMatrix.of([[B(1, 2), B(0, 1)], [B(0, 1), B(1, 2)]]))


def test_vertex_matrices():
    const = GIMatrix.of([[1, 2], [3, 4]])
    assert list(vertex_matrices(const)) == [const]
    vs = list(vertex_matrices(VERTEX_DEMO))
    assert len(vs) == 32
    assert VERTEX_DEMO_EVEN in vs and VERTEX_DEMO_ODD in vs
    assert len(list(vertex_matrices(GIMatrix.of([[B(0, 1)] * 2] * 2)))) == 16


def test_even_type_demo():
    assert is_even_type(VERTEX_DEMO, VERTEX_DEMO_EVEN)
    assert not is_even_type(VERTEX_DEMO, VERTEX_DEMO_ODD)
    with pytest.raises(ValueError):
        is_even_type(VERTEX_DEMO, GIMatrix.of([[0, 2, 2], [4, 5, 1]]))


def test_sparse_bounded_cells_make_every_vertex_even():
    mu = GIMatrix.of([[B(0, 1), 2, 3], [4, 5, B(1, 2)], [6, B(-1, 1), 7]])
    assert all(is_even_type(mu, g) for g in vertex_matrices(mu))
    assert len(list(even_type_vertices(mu))) == 8


@given(matrices(max_p=3, square=False, kinds=("constant", "bounded", "bounded", "left", "unbounded")))
@settings(max_examples=150, deadline=None)
def test_even_generator_equals_filter(mu):
    filtered = [g for g in vertex_matrices(mu) if is_even_type(mu, g)]
    assert list(even_type_vertices(mu)) == filtered


def test_fully_bounded_even_count_and_sign_vectors():
    rng = random.Random(5)
    for p in (1, 2, 3, 4):
        mu = random_matrix(rng, p, kinds=("bounded",))
        evens = {g.to_rmatrix() for g in even_type_vertices(mu)}
        assert len(evens) == 2 ** (2 * p - 1)
        assert set(rohn_matrices(mu)) == evens


def test_rohn_vertex_examples():
    assert rohn_full_rank_vertex(GIMatrix.of([[2, 1], [1, 2]]))
    assert not rohn_full_rank_vertex(GIMatrix.of([[B(-1, 1)]]))


def test_three_way_small():
    rng = random.Random(11)
    for _ in range(200):
        mu = random_matrix(rng, rng.randint(1, 3))
        lo, hi = vertex_det_range(mu)
        ref = lo > 0 or hi < 0
        assert rohn_full_rank_signs(mu) == ref
        assert rohn_full_rank_vertex(mu) == ref


def test_vertex_dets_bound_completions():
    rng = random.Random(12)
    for _ in range(50):
        mu = random_matrix(rng, 3)
        lo, hi = vertex_det_range(mu)
        for choice in product((0, 1, 2), repeat=2):
            rows = [[e.lo + (e.hi - e.lo) * c / 2 for e in r] for r, c in zip(mu.entries, choice + (1,))]
            assert lo <= det(rows) <= hi
