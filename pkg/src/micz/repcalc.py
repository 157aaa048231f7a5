"""Weight-level calculus for so(m): Casimir values, Weyl dimensions, level labels.

The Casimir is normalized as <lambda, lambda + 2 rho> in the orthonormal
e^j basis, which is (1/2) sum_{a,b} M_ab M_ab for generators obeying the
standard so(m) commutation relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .exactnum import as_rat

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class AlgebraType:
    series: str  # "B" for so(2n+1), "D" for so(2n)
    rank: int

    def __post_init__(self):
        if self.series not in ("B", "D"):
            raise ValueError(f"series must be 'B' or 'D', got {self.series!r}")
        if self.rank < 1:
            raise ValueError("rank must be at least 1")

    @classmethod
    def so(cls, m: int) -> AlgebraType:
        if m < 2:
            raise ValueError(f"so({m}) is not handled")
        return cls("B", (m - 1) // 2) if m % 2 else cls("D", m // 2)

    @property
    def m(self) -> int:
        return 2 * self.rank + (1 if self.series == "B" else 0)

    def rho(self) -> tuple[Fraction, ...]:
        n = self.rank
        if self.series == "D":
            return tuple(Fraction(n - j) for j in range(1, n + 1))
        return tuple(Fraction(2 * (n - j) + 1, 2) for j in range(1, n + 1))

    def positive_roots(self) -> list[tuple[int, ...]]:
        n = self.rank
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                for s in (-1, 1):
                    r = [0] * n
                    r[i], r[j] = 1, s
                    roots.append(tuple(r))
        if self.series == "B":
            for i in range(n):
                r = [0] * n
                r[i] = 1
                roots.append(tuple(r))
        return roots

    def __str__(self) -> str:
        return f"so({self.m})"


def weight(entries: Sequence) -> tuple[Fraction, ...]:
    return tuple(as_rat(x) for x in entries)


def check_weight(alg: AlgebraType, w: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Validate a dominant integral weight; returns it as a tuple of Fractions."""
    w = weight(w)
    if len(w) != alg.rank:
        raise ValueError(f"{alg} weights have {alg.rank} entries, got {len(w)}")
    if any((2 * x).denominator != 1 for x in w):
        raise ValueError(f"weight entries must be half-integers: {w}")
    if any((x - w[0]).denominator != 1 for x in w):
        raise ValueError(f"weight entries must be congruent mod 1: {w}")
    if alg.series == "D" and alg.rank == 1:
        return w
    head = list(w[:-1])
    last = abs(w[-1]) if alg.series == "D" else w[-1]
    chain = head + [last]
    if any(x < y for x, y in zip(chain, chain[1:])) or last < 0:
        raise ValueError(f"weight {tuple(str(x) for x in w)} is not dominant for {alg}")
    return w


def casimir_value(alg: AlgebraType, w: Sequence) -> Fraction:
    w = check_weight(alg, w)
    return sum((x * (x + 2 * r) for x, r in zip(w, alg.rho())), Fraction(0))


def _ip(x: Sequence, y: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def weyl_dim(alg: AlgebraType, w: Sequence) -> int:
    w = check_weight(alg, w)
    rho = alg.rho()
    shifted = [a + b for a, b in zip(w, rho)]
    roots = alg.positive_roots()
    num = prod((_ip(shifted, r) for r in roots), start=Fraction(1))
    den = prod((_ip(rho, r) for r in roots), start=Fraction(1))
    d = num / den
    if d.denominator != 1 or d < 1:
        raise ArithmeticError(f"Weyl formula gave non-integer {d}")
    return int(d)


@dataclass(frozen=True)
class IrrepLabel:
    algebra: AlgebraType
    weight: tuple[Fraction, ...]
    dim: int
    casimir: Fraction

    @classmethod
    def of(cls, alg: AlgebraType, w: Sequence) -> IrrepLabel:
        w = check_weight(alg, w)
        return cls(alg, w, weyl_dim(alg, w), casimir_value(alg, w))

    def to_json(self) -> dict:
        return {
            "series": self.algebra.series,
            "rank": self.algebra.rank,
            "weight": [str(x) for x in self.weight],
            "dim": self.dim,
            "casimir": str(self.casimir),
        }

    def __str__(self) -> str:
        return f"{self.algebra}({', '.join(str(x) for x in self.weight)})"


# -- charge and dimension bookkeeping ---------------------------------------

EVEN_D_RESTRICTION = "for even D the magnetic charge must be mu = 0 or mu = 1/2"


def check_charge(D: int, mu) -> Fraction:
    """Validate (D, mu) and return mu as a Fraction."""
    if D < 3:
        raise ValueError(f"dimension D must be at least 3, got {D}")
    mu = as_rat(mu)
    if (2 * mu).denominator != 1:
        raise ValueError(f"mu must be a half-integer, got {mu}")
    if D % 2 == 0 and mu not in (0, HALF):
        raise ValueError(f"{EVEN_D_RESTRICTION} (got D={D}, mu={mu})")
    return mu


def rank_n(D: int) -> int:
    return D // 2


def gauge_algebra(D: int) -> AlgebraType:
    return AlgebraType.so(D - 1)


def gauge_weight(D: int, mu) -> tuple[Fraction, ...]:
    """Highest weight of s^{2 mu} as a representation of so(D-1)."""
    mu = check_charge(D, mu)
    alg = gauge_algebra(D)
    if D % 2:
        a = abs(mu)
        return (a,) * (alg.rank - 1) + (mu,)
    return (mu,) * alg.rank


def gauge_label(D: int, mu) -> IrrepLabel:
    return IrrepLabel.of(gauge_algebra(D), gauge_weight(D, mu))


def cbar2(D: int, mu) -> Fraction:
    """Casimir of so(D-1) on s^{2 mu}, from the weight."""
    return gauge_label(D, mu).casimir


def delta_D(D: int, mu) -> Fraction:
    mu = check_charge(D, mu)
    n = rank_n(D)
    if D % 2:
        return (n - 1) * abs(mu) + mu * mu
    return (n - 1) * mu


def paper_weight_Rl(D: int, mu, l: int) -> list[IrrepLabel]:
    """Angular irreps of so(D) at orbital label l (a +/- pair for even D, mu = 1/2)."""
    mu = check_charge(D, mu)
    if l < 0:
        raise ValueError("l must be non-negative")
    alg = AlgebraType.so(D)
    n = alg.rank
    if D % 2:
        a = abs(mu)
        return [IrrepLabel.of(alg, (l + a,) + (a,) * (n - 1))]
    if mu == 0:
        return [IrrepLabel.of(alg, (Fraction(l),) + (Fraction(0),) * (n - 1))]
    head = (l + HALF,) + (HALF,) * (n - 2)
    return [IrrepLabel.of(alg, head + (HALF,)), IrrepLabel.of(alg, head + (-HALF,))]


def paper_weight_HI(D: int, mu, I: int) -> IrrepLabel:
    """Irrep of so(D+1) carried by the level-I bound states."""
    mu = check_charge(D, mu)
    if I < 0:
        raise ValueError("I must be non-negative")
    alg = AlgebraType.so(D + 1)
    n = alg.rank
    if D % 2:
        a = abs(mu)
        return IrrepLabel.of(alg, (I + a,) + (a,) * (n - 2) + (mu,))
    return IrrepLabel.of(alg, (I + mu,) + (mu,) * (n - 1))


def branching_sum_check(D: int, mu, I: int):
    from .report import Report

    label = paper_weight_HI(D, mu, I)
    parts = [x.dim for l in range(I + 1) for x in paper_weight_Rl(D, mu, l)]
    rep = Report("branching-sum", {"D": D, "mu": as_rat(mu), "I": I})
    rep.info = {"level_dim": label.dim, "constituent_dims": parts, "sum": sum(parts)}
    rep.equal(label.dim, sum(parts))
    return rep
