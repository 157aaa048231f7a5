from fractions import Fraction
from itertools import combinations

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from micz.exactnum import KMatrix, Scalar
from micz.monopole import (
    FieldPoint,
    anticommutator_form_constant,
    check_curvature_agreement,
    check_lemma_part1,
    check_lemma_part2,
    check_lemma_part3,
    eval_curvature,
    eval_potential,
    is_perfect_square_norm,
    jet_curvature,
    perturb_first_entry,
    sample_points,
)
from micz.spinrep import half_spinor, spinor_rep, trivial_rep, vector_rep, young_power_rep
from oracles import SympyMonopole, kmatrix_to_sympy

H = Fraction(1, 2)


def test_point_ordering_and_validation():
    p = FieldPoint.of(3, 4, 0, 12)
    assert p.greek == (12, 3, 4, 0)
    assert p.coords == (3, 4, 0, 12)
    assert p.r == Scalar(13)
    with pytest.raises(ValueError):
        FieldPoint.of(0, 0, 0)
    with pytest.raises(ValueError):
        FieldPoint.of(0, 0, -2)
    # the positive x_0 axis is fine
    assert FieldPoint.of(0, 0, 2).r == Scalar(2)


def test_sampling_is_deterministic_and_valid():
    pts = sample_points(5, 20, seed=3)
    assert pts == sample_points(5, 20, seed=3)
    assert pts != sample_points(5, 20, seed=4)
    assert len(pts) == 20
    assert not any(pts[0].greek[1:]) and pts[0].greek[0] > 0
    assert pts[1].greek[0] < 0
    assert any(not is_perfect_square_norm(p) for p in pts)
    assert sum(is_perfect_square_norm(p) for p in pts) >= 10


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10 ** 6))
def test_sampled_points_avoid_origin_and_string(D, seed):
    for p in sample_points(D, 6, seed):
        assert p.norm2 > 0
        assert p.r + p.greek[0] != Scalar(0)


def test_special_point():
    rep = half_spinor(4, 1)
    p = FieldPoint.from_greek([7, 0, 0, 0, 0])
    fe = eval_curvature(rep, p)
    assert all(a.is_zero() for a in fe.A)
    for b in range(1, 5):
        assert fe.f(0, b).is_zero()
    for a, b in combinations(range(1, 5), 2):
        assert fe.f(a, b) == rep.gen(a, b) * Fraction(-1, 49)


def test_dirac_profile_D3():
    for mu in (H, 1, Fraction(-3, 2)):
        rep = young_power_rep(2, mu)
        x1, x2, x0 = Fraction(2), Fraction(-1, 3), Fraction(5, 7)
        p = FieldPoint.of(x1, x2, x0)
        g = (p.r * (p.r + x0)).inverse()
        A = eval_potential(rep, p).A
        assert A[0].is_zero()
        assert A[1] == KMatrix.scalar(g * (-mu * x2), 1)
        assert A[2] == KMatrix.scalar(g * (mu * x1), 1)


def test_trivial_rep_fields_vanish():
    rep = trivial_rep(3)
    fe = eval_curvature(rep, FieldPoint.of(1, 2, 3, 4))
    assert all(a.is_zero() for a in fe.A)
    assert all(f.is_zero() for f in fe.F.values())


def test_closed_form_equals_jet_form_at_345():
    rep = spinor_rep(3)
    p = FieldPoint.of(3, 4, 0, 0)
    closed = eval_curvature(rep, p).F
    assert closed == jet_curvature(rep, p)


@pytest.mark.parametrize("D,mu,pt", [
    (3, H, (2, 3, 6)),
    (3, 1, (1, -1, Fraction(1, 2))),
    (4, H, (1, 2, 2, 4)),
    (5, H, (1, 0, 2, 0, -2)),
])
def test_curvature_matches_sympy(D, mu, pt):
    rep = young_power_rep(D - 1, mu)
    gens = {k: kmatrix_to_sympy(rep.gen(*k)) for k in combinations(range(1, D), 2)}
    S = SympyMonopole(D, gens, 0)
    p = FieldPoint.from_greek(pt)
    F = eval_curvature(rep, p).F
    for mu_, nu in combinations(range(D), 2):
        diff = kmatrix_to_sympy(F[(mu_, nu)]) - S.at(S.F[(mu_, nu)], pt)
        assert diff.applyfunc(lambda e: sp.radsimp(sp.expand(e))) == sp.zeros(*diff.shape), (mu_, nu)


def test_part1_examples():
    assert check_lemma_part1(half_spinor(4, 1), 5, [FieldPoint.of(3, 4, 0, 0, 0)]).passed
    r = check_lemma_part1(spinor_rep(3), 4, sample_points(4, 20, seed=1))
    assert r.passed and r.points_checked == 20


def test_part1_negative_control():
    rep = spinor_rep(3)
    pts = sample_points(4, 3, seed=2)
    r = check_lemma_part1(rep, 4, pts, F_override=perturb_first_entry)
    assert not r.passed
    assert "x_mu F_mu_nu = 0" in {f["where"]["identity"] for f in r.failures}


def test_curvature_agreement_includes_irrational_points():
    pts = [FieldPoint.of(1, 1, 1), FieldPoint.of(Fraction(1, 2), 3, -2)]
    assert not is_perfect_square_norm(pts[0])
    assert check_curvature_agreement(young_power_rep(2, Fraction(3, 2)), 3, pts).passed


def test_part2_examples():
    assert check_lemma_part2(2, H, [FieldPoint.from_greek([5, 0, 0, 0, 0])]).passed
    r = check_lemma_part2(2, 1, sample_points(5, 10, seed=5))
    assert r.passed and r.points_checked == 10
    assert check_lemma_part2(3, -H, sample_points(7, 10, seed=6)).passed


def test_part2_reads_casimir_from_rep():
    pts = sample_points(5, 3, seed=1)
    assert check_lemma_part2(2, 1, pts).info["c2"] == Scalar(4)
    small = check_lemma_part2(2, 1, pts, rep=half_spinor(4, 1))
    assert small.passed and small.info["c2"] == Scalar(Fraction(3, 2))


def test_part2_fails_off_young_powers():
    # the vector of so(4) has a scalar Casimir but is not a Cartan power of a half-spinor
    assert not check_lemma_part2(2, 1, sample_points(5, 3, seed=1), rep=vector_rep(4)).passed


def test_part3_examples():
    assert check_lemma_part3(2, [FieldPoint.of(3, 4, 0, 12)]).passed
    assert check_lemma_part3(3, sample_points(6, 10, seed=8)).passed


def test_part3_fails_for_mu_one():
    r = check_lemma_part3(2, sample_points(4, 4, seed=0), rep=young_power_rep(3, 1))
    assert not r.passed
    assert r.info["shape_holds_for_some_constant"] is False


def test_anticommutator_constants():
    assert anticommutator_form_constant(spinor_rep(3)) == Scalar(1)
    assert anticommutator_form_constant(spinor_rep(5)) == Scalar(2)
    assert anticommutator_form_constant(young_power_rep(3, 1)) is None


def test_wrong_algebra_rejected():
    with pytest.raises(ValueError):
        check_lemma_part1(spinor_rep(3), 5, sample_points(5, 1))
    with pytest.raises(ValueError):
        check_lemma_part3(2, sample_points(4, 1), rep=spinor_rep(5))
