"""Bound-state spectrum: indicial exponents, terminating radial series, level tables.

The radial recursion used here comes from substituting y = r^s sum a_m r^m
into y'' - 2 lam y' + (2/r - C/r^2) y = 0:

    a_m ((m+s)(m+s-1) - s(s-1)) = 2 (lam (m+s-1) - 1) a_{m-1}

so the series terminates after a_{k-1} exactly when lam = 1/(k+s-1).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .repcalc import (
    HALF,
    IrrepLabel,
    cbar2,
    check_charge,
    delta_D,
    paper_weight_HI,
    paper_weight_Rl,
    rank_n,
)
from .report import Report


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    p, q = isqrt(x.numerator), isqrt(x.denominator)
    if p * p != x.numerator or q * q != x.denominator:
        return None
    return Fraction(p, q)


def centrifugal_constant(D: int, mu, l: int) -> Fraction:
    """C = c2[l] - cbar2 + delta_D + (D-1)(D-3)/4."""
    c2l = paper_weight_Rl(D, mu, l)[0].casimir
    return c2l - cbar2(D, mu) + delta_D(D, mu) + Fraction((D - 1) * (D - 3), 4)


@dataclass(frozen=True)
class IndicialRoots:
    s_plus: Fraction
    s_minus: Fraction

    @property
    def admissible(self) -> Fraction:
        # the smaller root is not square integrable at r = 0
        return self.s_plus


def indicial_roots(D: int, mu, l: int) -> IndicialRoots:
    """Roots of s(s-1) = C."""
    C = centrifugal_constant(D, mu, l)
    root = _rational_sqrt(Fraction(1, 4) + C)
    if root is None:
        raise ArithmeticError(f"indicial roots are irrational for D={D}, mu={mu}, l={l}")
    return IndicialRoots(HALF + root, HALF - root)


def expected_exponent(D: int, mu, l: int) -> Fraction:
    """l + n + |mu| for odd D, l + n + mu - 1/2 for even D."""
    mu = check_charge(D, mu)
    n = rank_n(D)
    return l + n + abs(mu) if D % 2 else l + n + mu - HALF


@dataclass(frozen=True)
class RadialSolution:
    D: int
    mu: Fraction
    k: int
    l: int
    s: Fraction
    lam: Fraction
    energy: Fraction
    coeffs: tuple[Fraction, ...]
    C: Fraction


def radial_coeffs(D: int, mu, k: int, l: int) -> RadialSolution:
    mu = check_charge(D, mu)
    if k < 1 or l < 0:
        raise ValueError("need k >= 1 and l >= 0")
    s = indicial_roots(D, mu, l).admissible
    lam = 1 / (k + s - 1)
    coeffs = [Fraction(1)]
    for m in range(1, k):
        num = 2 * (lam * (m + s - 1) - 1)
        den = (m + s) * (m + s - 1) - s * (s - 1)
        coeffs.append(coeffs[-1] * num / den)
    if lam * (k + s - 1) - 1 != 0:
        raise ArithmeticError("series does not terminate")
    return RadialSolution(D, mu, k, l, s, lam, -lam * lam / 2, tuple(coeffs), centrifugal_constant(D, mu, l))


def radial_ode_residual(sol: RadialSolution, coeffs: Sequence[Fraction] | None = None) -> list[Fraction]:
    """Coefficients (in r^m) of r^{2-s} (y'' - 2 lam y' + (2/r - C/r^2) y)."""
    a = list(sol.coeffs if coeffs is None else coeffs)
    s, lam, C = sol.s, sol.lam, sol.C
    out = [Fraction(0)] * (len(a) + 1)
    for m, am in enumerate(a):
        out[m] += am * ((m + s) * (m + s - 1) - C)
        out[m + 1] += am * (2 - 2 * lam * (m + s))
    return out


def verify_radial_ode(sol: RadialSolution, coeffs: Sequence[Fraction] | None = None) -> Report:
    rep = Report("radial-ode", {"D": sol.D, "mu": sol.mu, "k": sol.k, "l": sol.l})
    for m, c in enumerate(radial_ode_residual(sol, coeffs)):
        rep.zero(c, power=m)
    return rep


# -- levels -------------------------------------------------------------------------

def theorem_energy(D: int, mu, I: int) -> Fraction:
    mu = check_charge(D, mu)
    n = rank_n(D)
    shift = n + abs(mu) if D % 2 else n + mu - HALF
    return -HALF / (I + shift) ** 2


@dataclass(frozen=True)
class Constituent:
    k: int
    l: int
    irrep: IrrepLabel


@dataclass(frozen=True)
class LevelSpectrum:
    D: int
    mu: Fraction
    I: int
    energy: Fraction
    irrep: IrrepLabel
    degeneracy: int
    constituents: tuple[Constituent, ...]

    def to_json(self) -> dict:
        return {
            "I": self.I,
            "E": str(self.energy),
            "weight": [str(x) for x in self.irrep.weight],
            "degeneracy": self.degeneracy,
            "constituents": [
                {"k": c.k, "l": c.l, "weight": [str(x) for x in c.irrep.weight], "dim": c.irrep.dim}
                for c in self.constituents
            ],
        }


def energy_level(D: int, mu, I: int) -> LevelSpectrum:
    mu = check_charge(D, mu)
    if I < 0:
        raise ValueError("I must be non-negative")
    E = theorem_energy(D, mu, I)
    parts = []
    for l in range(I + 1):
        k = I + 1 - l
        sol = radial_coeffs(D, mu, k, l)
        if sol.energy != E:
            raise ArithmeticError(f"E_kl = {sol.energy} differs from E_I = {E} at (k, l) = ({k}, {l})")
        parts.extend(Constituent(k, l, lab) for lab in paper_weight_Rl(D, mu, l))
    label = paper_weight_HI(D, mu, I)
    total = sum(c.irrep.dim for c in parts)
    if total != label.dim:
        raise ArithmeticError(f"constituent dimensions sum to {total}, level irrep has {label.dim}")
    return LevelSpectrum(D, mu, I, E, label, label.dim, tuple(parts))


def casimir_energy(D: int, mu, I: int) -> Fraction:
    """-(1/2) / (c2[so(D+1)] + ((D-1)/2)^2 - cbar2)."""
    c2 = paper_weight_HI(D, mu, I).casimir
    return -HALF / (c2 + Fraction(D - 1, 2) ** 2 - cbar2(D, mu))


def casimir_hamiltonian_check(D: int, mu, I: int) -> Report:
    mu = check_charge(D, mu)
    rep = Report("casimir-hamiltonian", {"D": D, "mu": mu, "I": I})
    E = theorem_energy(D, mu, I)
    rep.equal(casimir_energy(D, mu, I), E, I=I)
    rep.info = {"E": E}
    return rep


def spectrum_report(D: int, mu, I_max: int) -> Report:
    """Closed energy formula, terminating radial series and Casimir relation agree, plus ODE and branching checks."""
    mu = check_charge(D, mu)
    rep = Report("spectrum", {"D": D, "mu": mu, "I_max": I_max})
    prev = None
    for I in range(I_max + 1):
        E = theorem_energy(D, mu, I)
        rep.truth(E < 0 and (prev is None or E > prev), check="negative-and-increasing", I=I)
        prev = E
        rep.equal(casimir_energy(D, mu, I), E, check="casimir", I=I)
        for l in range(I + 1):
            sol = radial_coeffs(D, mu, I + 1 - l, l)
            rep.equal(sol.energy, E, check="radial-termination", I=I, l=l)
            rep.equal(sol.s, expected_exponent(D, mu, l), check="indicial-exponent", l=l)
            rep.absorb(verify_radial_ode(sol))
        label = paper_weight_HI(D, mu, I)
        dims = sum(x.dim for l in range(I + 1) for x in paper_weight_Rl(D, mu, l))
        rep.equal(dims, label.dim, check="degeneracy", I=I)
    return rep


def level_table(D: int, mu, I_max: int) -> dict:
    mu = check_charge(D, mu)
    return {"D": D, "mu": str(mu), "levels": [energy_level(D, mu, I).to_json() for I in range(I_max + 1)]}


def level_table_csv(table: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["D", "mu", "I", "E", "weight", "degeneracy", "k", "l", "constituent_weight", "constituent_dim"])
    for lev in table["levels"]:
        for c in lev["constituents"]:
            w.writerow([table["D"], table["mu"], lev["I"], lev["E"], " ".join(lev["weight"]), lev["degeneracy"],
                        c["k"], c["l"], " ".join(c["weight"]), c["dim"]])
    return buf.getvalue()
