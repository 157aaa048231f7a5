import csv
import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from micz.spectrum import (
    casimir_energy,
    casimir_hamiltonian_check,
    energy_level,
    expected_exponent,
    indicial_roots,
    level_table,
    level_table_csv,
    radial_coeffs,
    radial_ode_residual,
    spectrum_report,
    theorem_energy,
    verify_radial_ode,
)
from oracles import hydrogen_degeneracy, hydrogen_energy

H = Fraction(1, 2)


def charges(D):
    return [Fraction(0), H] if D % 2 == 0 else [Fraction(k, 2) for k in range(-3, 4)]


MATRIX = [(D, mu) for D in range(3, 9) for mu in charges(D)]


def test_indicial_examples():
    r = indicial_roots(3, 0, 0)
    assert (r.s_plus, r.s_minus, r.admissible) == (1, 0, 1)
    assert indicial_roots(5, H, 0).admissible == Fraction(5, 2)
    assert indicial_roots(4, H, 1).admissible == 3


def test_radial_examples():
    gs = radial_coeffs(3, 0, 1, 0)
    assert (gs.coeffs, gs.lam, gs.energy) == ((1,), 1, -H)
    two_s = radial_coeffs(3, 0, 2, 0)
    assert two_s.coeffs == (1, -H) and two_s.lam == H
    assert radial_coeffs(5, H, 1, 1).lam == Fraction(2, 7)
    with pytest.raises(ValueError):
        radial_coeffs(3, 0, 0, 0)


def test_ode_examples_and_corruption():
    assert verify_radial_ode(radial_coeffs(3, 0, 2, 0)).passed
    sol = radial_coeffs(4, H, 2, 0)
    assert verify_radial_ode(sol).passed
    bad = list(sol.coeffs)
    bad[1] += 1
    assert not verify_radial_ode(sol, bad).passed


def printed_recursion(sol):
    """The recursion with right side (1 - lam(m+s-1)) a_{m-1}, as typeset."""
    a = [Fraction(1)]
    for m in range(1, sol.k):
        num = 1 - sol.lam * (m + sol.s - 1)
        den = (m + sol.s) * (m + sol.s - 1) - sol.s * (sol.s - 1)
        a.append(a[-1] * num / den)
    return a


def test_printed_recursion_differs_by_minus_two():
    sol = radial_coeffs(3, 0, 3, 0)
    alt = printed_recursion(sol)
    assert not verify_radial_ode(sol, alt).passed
    assert all(x == y * (-2) ** m for m, (x, y) in enumerate(zip(sol.coeffs, alt)))


def test_energy_examples():
    lev = energy_level(3, 0, 1)
    assert (lev.energy, lev.degeneracy) == (Fraction(-1, 8), 4)
    lev = energy_level(5, H, 0)
    assert lev.energy == Fraction(-2, 25)
    assert [(c.k, c.l) for c in lev.constituents] == [(1, 0)]
    assert energy_level(4, H, 0).energy == Fraction(-1, 8)


def test_casimir_examples():
    for I in range(6):
        assert casimir_hamiltonian_check(3, 0, I).passed
    for I in range(4):
        assert casimir_hamiltonian_check(5, 1, I).passed
        assert casimir_hamiltonian_check(6, H, I).passed


def test_level_table_examples():
    t = level_table(3, 0, 2)
    assert [lv["E"] for lv in t["levels"]] == ["-1/2", "-1/8", "-1/18"]
    assert [lv["degeneracy"] for lv in t["levels"]] == [1, 4, 9]
    assert [lv["degeneracy"] for lv in level_table(3, H, 1)["levels"]] == [2, 6]
    assert [lv["degeneracy"] for lv in level_table(4, 0, 1)["levels"]] == [1, 5]


def test_json_and_csv_schema():
    t = level_table(4, H, 2)
    back = json.loads(json.dumps(t))
    assert set(back) == {"D", "mu", "levels"}
    assert back["mu"] == "1/2"
    for lv in back["levels"]:
        assert set(lv) == {"I", "E", "weight", "degeneracy", "constituents"}
        for c in lv["constituents"]:
            assert set(c) == {"k", "l", "weight", "dim"}
            assert lv["I"] == c["k"] + c["l"] - 1
        assert sum(c["dim"] for c in lv["constituents"]) == lv["degeneracy"]
    rows = list(csv.DictReader(io.StringIO(level_table_csv(t))))
    assert len(rows) == sum(len(lv["constituents"]) for lv in t["levels"])
    assert rows[0]["E"] == "-1/8" and "." not in level_table_csv(t)


def test_invalid_charge():
    with pytest.raises(ValueError):
        energy_level(6, 1, 0)
    with pytest.raises(ValueError):
        energy_level(3, 0, -1)


@pytest.mark.parametrize("D,mu", MATRIX)
def test_three_way_agreement(D, mu):
    assert spectrum_report(D, mu, 6).passed
    for I in range(7):
        E = theorem_energy(D, mu, I)
        assert casimir_energy(D, mu, I) == E
        lev = energy_level(D, mu, I)
        assert lev.energy == E
        for l in range(I + 1):
            assert radial_coeffs(D, mu, I + 1 - l, l).energy == E


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(MATRIX), st.integers(1, 5), st.integers(0, 4))
def test_radial_solutions_solve_ode(case, k, l):
    D, mu = case
    sol = radial_coeffs(D, mu, k, l)
    assert all(c == 0 for c in radial_ode_residual(sol))
    assert sol.s == expected_exponent(D, mu, l)
    assert sol.coeffs[0] == 1 and len(sol.coeffs) == k


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(MATRIX), st.integers(0, 20))
def test_energies_negative_and_increasing(case, I):
    D, mu = case
    assert theorem_energy(D, mu, I) < theorem_energy(D, mu, I + 1) < 0


@pytest.mark.parametrize("I", range(7))
def test_hydrogen_oracle(I):
    lev = energy_level(3, 0, I)
    assert lev.energy == hydrogen_energy(I + 1)
    assert lev.degeneracy == hydrogen_degeneracy(I + 1)
    assert energy_level(3, H, I).degeneracy == (I + 1) * (I + 2)
