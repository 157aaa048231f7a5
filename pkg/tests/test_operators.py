import dataclasses
from fractions import Fraction
from itertools import combinations

import pytest
import sympy as sp

from micz.exactnum import KMatrix, Scalar
from micz.monopole import FieldPoint, sample_points
from micz.operators import (
    RELATIONS,
    ProblemSpec,
    apply_hamiltonian,
    apply_Lab,
    apply_nabla,
    apply_runge_lenz,
    check_lrl_square,
    check_symmetry_algebra,
    constant_section,
    random_polynomial_sections,
    relation_residuals,
    section_from_polynomial,
)
from oracles import SympyMonopole, kmatrix_to_sympy, scalar_to_sympy

H = Fraction(1, 2)


def row(*xs):
    return KMatrix.from_rows([list(xs)])


def test_problem_spec_constants():
    assert ProblemSpec.build(5, 1).delta == 2
    assert ProblemSpec.build(5, -H).delta == Fraction(3, 4)
    assert ProblemSpec.build(6, H).delta == 1
    assert ProblemSpec.build(7, Fraction(3, 2)).cbar2 == casimir_s2mu(3, Fraction(3, 2))
    with pytest.raises(ValueError):
        ProblemSpec.build(4, 1)


def casimir_s2mu(n, mu):
    return n * mu * mu + n * (n - 1) * abs(mu)


def test_nabla_without_charge_is_plain_derivative():
    spec = ProblemSpec.build(3, 0)
    p = FieldPoint.of(1, 2, 2)
    poly = [{(1, 2, 0): Scalar(3), (0, 0, 1): Scalar(1)}]
    s = section_from_polynomial(spec, p, poly)
    # d/dx0 of 3 x0 x1^2 + x2 at greek (2, 1, 2) is 3
    assert apply_nabla(spec, 0, s).value() == row(3)
    assert apply_nabla(spec, 1, s).value() == row(12)


def test_nabla_examples_at_special_point():
    spec = ProblemSpec.build(5, H)
    p = FieldPoint.from_greek([3, 0, 0, 0, 0])
    v = [1, Scalar(0, 2)]
    const = section_from_polynomial(spec, p, constant_section(spec, v))
    assert apply_nabla(spec, 0, const).value().is_zero()
    lin = section_from_polynomial(spec, p, [{(0, 1, 0, 0, 0): Scalar.coerce(c)} for c in v])
    assert apply_nabla(spec, 1, lin).value() == row(*v)


def test_hamiltonian_examples():
    spec = ProblemSpec.build(3, 0)
    p = FieldPoint.of(0, 0, 1)
    const = section_from_polynomial(spec, p, constant_section(spec, [1]))
    assert apply_hamiltonian(spec, const).value() == row(-1)
    r2 = [{(2, 0, 0): Scalar(1), (0, 2, 0): Scalar(1), (0, 0, 2): Scalar(1)}]
    assert apply_hamiltonian(spec, section_from_polynomial(spec, p, r2)).value() == row(-4)
    q = FieldPoint.of(3, 4, 12)
    assert apply_hamiltonian(spec, section_from_polynomial(spec, q, constant_section(spec, [1]))).value() == \
        row(Fraction(-1, 13))


def test_angular_momentum_examples():
    spec = ProblemSpec.build(3, 0)
    p = FieldPoint.of(1, 2, 3)
    r2 = [{(2, 0, 0): Scalar(1), (0, 2, 0): Scalar(1), (0, 0, 2): Scalar(1)}]
    s = section_from_polynomial(spec, p, r2)
    for a, b in combinations(range(3), 2):
        assert apply_Lab(spec, a, b, s).value().is_zero()
    assert apply_Lab(spec, 1, 1, s).value().is_zero()
    spec = ProblemSpec.build(5, 1)
    p = FieldPoint.from_greek([2, 0, 0, 0, 0])
    v = [1, 2, Scalar(0, 1)]
    s = section_from_polynomial(spec, p, constant_section(spec, v))
    col = KMatrix.from_columns([[Scalar.coerce(x) for x in v]])
    for a, b in combinations(range(1, 5), 2):
        assert apply_Lab(spec, a, b, s).value() == (spec.rep.gen(a, b) @ col).T * -1
        assert apply_Lab(spec, b, a, s).value() == (spec.rep.gen(a, b) @ col).T


def test_runge_lenz_trivial_constant():
    spec = ProblemSpec.build(5, 0)
    p = FieldPoint.from_greek([4, 0, 0, 0, 0])
    s = section_from_polynomial(spec, p, constant_section(spec, [7]))
    assert apply_runge_lenz(spec, 0, s).value() == row(7)
    for b in range(1, 5):
        assert apply_runge_lenz(spec, b, s).value().is_zero()


def test_order_accounting():
    spec = ProblemSpec.build(3, H)
    p = FieldPoint.of(1, 2, 2)
    s = section_from_polynomial(spec, p, random_polynomial_sections(spec, 1)[0])
    assert s.order == 4
    assert apply_nabla(spec, 1, s).order == 3
    assert apply_hamiltonian(spec, s).order == 2
    assert apply_runge_lenz(spec, 2, apply_runge_lenz(spec, 1, s)).order == 0
    with pytest.raises(ValueError):
        apply_hamiltonian(spec, s.truncate(1))
    with pytest.raises(ValueError):
        list(relation_residuals(spec, "L-x", s))


def test_random_sections_are_seeded_and_nonzero():
    spec = ProblemSpec.build(4, H)
    a = random_polynomial_sections(spec, 4, seed=9)
    assert a == random_polynomial_sections(spec, 4, seed=9)
    assert a != random_polynomial_sections(spec, 4, seed=10)
    assert all(any(comp) for comp in a)
    assert all(sum(e) <= 3 for sec in a for comp in sec for e in comp)


@pytest.mark.parametrize("D,mu,pt", [
    (3, 0, (1, 1, 1)),
    (3, H, (2, 3, 6)),
    (3, 1, (2, 3, 6)),
    (4, H, (1, 2, 2, 4)),
])
def test_operators_match_sympy(D, mu, pt):
    spec = ProblemSpec.build(D, mu)
    gens = {k: kmatrix_to_sympy(spec.rep.gen(*k)) for k in combinations(range(1, D), 2)}
    S = SympyMonopole(D, gens, spec.delta)
    poly = random_polynomial_sections(spec, 1, seed=5)[0]
    x = S.x
    psi = sp.Matrix([
        sum((scalar_to_sympy(c) * sp.prod([x[k] ** e[k] for k in range(D)]) for e, c in comp.items()), sp.Integer(0))
        for comp in poly
    ])
    p = FieldPoint.from_greek(pt)
    s = section_from_polynomial(spec, p, poly)

    def same(ours, theirs):
        d = kmatrix_to_sympy(ours).T - S.at(theirs, pt)
        return d.applyfunc(lambda e: sp.radsimp(sp.expand(e))) == sp.zeros(*d.shape)

    assert same(apply_hamiltonian(spec, s).value(), S.h(psi))
    assert same(apply_Lab(spec, 1, 2, s).value(), S.L(1, 2, psi))
    assert same(apply_Lab(spec, 0, 1, s).value(), S.L(0, 1, psi))
    assert same(apply_runge_lenz(spec, 1, s).value(), S.A_vec(1, psi))


def test_commutator_antisymmetry():
    spec = ProblemSpec.build(3, H)
    p = FieldPoint.of(2, 3, 6)
    s = section_from_polynomial(spec, p, random_polynomial_sections(spec, 1, seed=2)[0])
    x = apply_Lab(spec, 0, 1, apply_runge_lenz(spec, 2, s)) - apply_runge_lenz(spec, 2, apply_Lab(spec, 0, 1, s))
    y = apply_runge_lenz(spec, 2, apply_Lab(spec, 0, 1, s)) - apply_Lab(spec, 0, 1, apply_runge_lenz(spec, 2, s))
    assert x.value() == -y.value()


@pytest.mark.parametrize("D,mu", [(3, H), (4, H), (5, 1)])
def test_symmetry_algebra_small(D, mu):
    spec = ProblemSpec.build(D, mu)
    r = check_symmetry_algebra(spec, sample_points(D, 2, seed=1), random_polynomial_sections(spec, 1, seed=1))
    assert r.passed, r.failures
    assert set(r.info["checks_per_relation"]) == set(RELATIONS)


@pytest.mark.parametrize("D,mu", [(3, 0), (4, 0), (5, H)])
def test_lrl_square_small(D, mu):
    spec = ProblemSpec.build(D, mu)
    assert check_lrl_square(spec, sample_points(D, 2, seed=4), random_polynomial_sections(spec, 1, seed=4)).passed


def test_wrong_centrifugal_term_breaks_runge_lenz_conservation():
    spec = ProblemSpec.build(3, H)
    bad = dataclasses.replace(spec, delta=spec.delta + 1, _backgrounds={})
    pts = sample_points(3, 2, seed=1)
    secs = random_polynomial_sections(spec, 1, seed=1)
    assert check_symmetry_algebra(spec, pts, secs, ["A-h"]).passed
    assert not check_symmetry_algebra(bad, pts, secs, ["A-h"]).passed


def test_wrong_cbar2_breaks_lrl_square():
    spec = ProblemSpec.build(3, H)
    bad = dataclasses.replace(spec, cbar2=spec.cbar2 + 1, _backgrounds={})
    pts = sample_points(3, 2, seed=1)
    secs = random_polynomial_sections(spec, 1, seed=1)
    assert not check_lrl_square(bad, pts, secs).passed


def test_doubled_curvature_breaks_algebra():
    spec = ProblemSpec.build(3, H)
    pts = sample_points(3, 2, seed=1)
    for p in pts:
        bg = spec.background(p)
        bg.r2F = {k: {g: j * 2 for g, j in f.items()} for k, f in bg.r2F.items()}
    r = check_symmetry_algebra(spec, pts, random_polynomial_sections(spec, 1, seed=1), ["L-L", "L-A"])
    assert not r.passed
