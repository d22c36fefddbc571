import random
from dataclasses import replace
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import matrices
from intervalrank import GIMatrix, GInterval, RMatrix, contains, det, full_rank_general, tilde, verify_verdict
from intervalrank.catalog import ALPHA, ALPHA_LEFT, BETA, DELTA, random_matrix
from intervalrank.genfull import (
    Condition3Violation,
    HalfBoundedTuple,
    half_bounded_tuples,
    lemma1_full_rank,
    lemma1_split,
    lemma2_full_rank,
    lemma3_full_rank,
    lemma3_full_rank_monotone,
    monotone_box_nonneg,
    sign_exponent,
    singular_completion,
)
from intervalrank.oracle import vertex_det_range

B = GInterval.bounded
L = GInterval.left_bounded
R = GInterval.right_bounded
U = GInterval.unbounded


def test_sign_exponent_examples():
    mu = GIMatrix.of([[L(0), R(0)], [R(0), L(0)]])
    assert sign_exponent(HalfBoundedTuple.of(mu, [(0, 0)])) == 1
    assert sign_exponent(HalfBoundedTuple.of(mu, [(0, 1)])) == 1
    t = HalfBoundedTuple.of(mu, [(0, 0), (1, 1)])
    assert t.reduced_indices() == [(1, 1), (1, 1)]
    assert sign_exponent(t) == 1
    with pytest.raises(ValueError):
        HalfBoundedTuple.of(mu, [(0, 0), (0, 1)])
    with pytest.raises(ValueError):
        HalfBoundedTuple.of(GIMatrix.of([[1]]), [(0, 0)])


def test_half_bounded_tuples_enumerates_matchings():
    mu = GIMatrix.of([[L(0)] * 3] * 3)
    counts = {}
    for t in half_bounded_tuples(mu):
        counts[len(t)] = counts.get(len(t), 0) + 1
    assert counts == {1: 9, 2: 18, 3: 6}


def test_monotone_box_examples():
    assert monotone_box_nonneg(lambda x: x[0], [0], [0])
    assert not monotone_box_nonneg(lambda x: 1 - x[0], [0], [0])
    assert monotone_box_nonneg(lambda x: x[0] * x[1] - 1, [1, 1], [0, 1])
    assert not monotone_box_nonneg(lambda x: x[0] * x[1] - 1, [1, 1], [0, 1], strict=True)
    # only the listed direction is free
    assert monotone_box_nonneg(lambda x: x[0] - x[1], [0, 0], [0])


def test_lemma1_split():
    assert lemma1_split(BETA.replace(0, 3, 0)) == (BETA.replace(0, 3, 0), [])
    assert lemma1_split(ALPHA) == (tilde(ALPHA), [(0, 0)])
    assert lemma1_split(DELTA)[1] == [(0, 0), (0, 3)]


def test_lemma2_examples():
    assert lemma2_full_rank(GIMatrix.of([[2, 1], [1, 2]]))
    assert not lemma2_full_rank(GIMatrix.of([[B(-1, 1)]]))
    assert lemma2_full_rank(tilde(BETA))
    with pytest.raises(ValueError):
        lemma2_full_rank(BETA)


def test_lemma3_examples():
    assert lemma3_full_rank(GIMatrix.of([[2, 1], [1, 2]]))
    assert not lemma3_full_rank(GIMatrix.of([[L(-1)]]))
    assert lemma3_full_rank(GIMatrix.of([[L(1)]]))
    with pytest.raises(ValueError):
        lemma3_full_rank(GIMatrix.of([[B(0, 1)]]))


@given(matrices(max_p=3, kinds=("constant", "left", "right")))
@settings(max_examples=200, deadline=None)
def test_lemma3_two_routes_agree(rho):
    assert lemma3_full_rank(rho) == lemma3_full_rank_monotone(rho)
    assert full_rank_general(rho).full_rank == lemma3_full_rank(rho)


def test_golden_alpha():
    v = full_rank_general(ALPHA)
    assert not v.full_rank
    cert = v.certificate
    assert cert.kind == "Condition2Violation"
    assert cert.left == ALPHA_LEFT and cert.det_left == -88
    assert cert.det_vertex > 0
    assert contains(ALPHA, v.witness) and det(v.witness) == 0
    assert verify_verdict(ALPHA, v)


def test_golden_beta():
    v = full_rank_general(BETA)
    assert v.full_rank and v.certificate.kind == "AllConditionsHold" and v.witness is None


def test_golden_delta():
    v = full_rank_general(DELTA)
    assert not v.full_rank
    assert v.certificate.kind == "Condition1Violation"
    assert DELTA[v.certificate.cell].is_unbounded
    assert verify_verdict(DELTA, v)


def test_condition3_case():
    # det = x - 2 on x >= 1: negative at the end, growing along the half-line
    mu = GIMatrix.of([[L(1), 1], [2, 1]])
    v = full_rank_general(mu)
    assert isinstance(v.certificate, Condition3Violation)
    assert v.witness == RMatrix.of([[2, 1], [2, 1]])
    # det = x y - 2 on x >= 3, y <= 1: positive at the corner, falls as y decreases
    mu = GIMatrix.of([[L(3), 1], [2, R(1)]])
    v = full_rank_general(mu)
    assert isinstance(v.certificate, Condition3Violation)
    assert v.certificate.tuple.cells == ((1, 1),) and v.certificate.value == -3
    assert det(v.witness) == 0 and contains(mu, v.witness)
    assert verify_verdict(mu, v)


def test_tampered_certificates_fail():
    v = full_rank_general(ALPHA)
    bad = replace(v, certificate=replace(v.certificate, det_vertex=v.certificate.det_vertex + 1))
    assert not verify_verdict(ALPHA, bad)
    v3 = full_rank_general(GIMatrix.of([[L(3), 1], [2, R(1)]]))
    bad3 = replace(v3, certificate=replace(v3.certificate, value=Fraction(-1, 7)))
    assert not verify_verdict(GIMatrix.of([[L(3), 1], [2, R(1)]]), bad3)
    vd = full_rank_general(DELTA)
    bad1 = replace(vd, certificate=replace(vd.certificate, cell=(1, 1)))
    assert not verify_verdict(DELTA, bad1)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        full_rank_general(GIMatrix.of([[1, 2]]))


def test_one_by_one_cases():
    assert not full_rank_general(GIMatrix.of([[U()]])).full_rank
    assert full_rank_general(GIMatrix.of([[L(1)]])).full_rank
    assert not full_rank_general(GIMatrix.of([[R(0)]])).full_rank
    assert full_rank_general(GIMatrix.of([[R(-1)]])).full_rank


def test_bounded_only_matches_vertex_oracle():
    rng = random.Random(31)
    for _ in range(200):
        mu = random_matrix(rng, rng.randint(1, 3))
        lo, hi = vertex_det_range(mu)
        assert full_rank_general(mu).full_rank == (lo > 0 or hi < 0)


@given(matrices(max_p=3))
@settings(max_examples=200, deadline=None)
def test_lemma_route_agrees(mu):
    assert lemma1_full_rank(mu) == full_rank_general(mu, with_witness=False).full_rank


@given(matrices(max_p=3))
@settings(max_examples=200, deadline=None)
def test_negative_verdicts_carry_verified_witness(mu):
    v = full_rank_general(mu)
    if not v.full_rank:
        assert v.witness is not None
        assert contains(mu, v.witness) and det(v.witness) == 0
        assert verify_verdict(mu, v)
        assert singular_completion(mu, v.certificate) == v.witness


@given(matrices(max_p=3), st.data())
@settings(max_examples=150, deadline=None)
def test_permutation_equivariance(mu, data):
    p = mu.shape[0]
    rp = data.draw(st.permutations(range(p)))
    cp = data.draw(st.permutations(range(p)))
    assert full_rank_general(mu.permute(rp, cp)).full_rank == full_rank_general(mu).full_rank
    assert full_rank_general(mu.transpose()).full_rank == full_rank_general(mu).full_rank


def test_signed_cofactor_order_invariance_small():
    rng = random.Random(2)
    for _ in range(20):
        g = [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        mu = GIMatrix.of([[L(x) if rng.random() < 0.5 else R(x) for x in r] for r in g])
        a = RMatrix.of(g)
        for t in half_bounded_tuples(mu):
            vals = {
                sign_exponent(t.reordered(o)) * det(a.delete(t.rows, t.cols))
                for o in permutations(range(len(t)))
            }
            assert len(vals) == 1
