"""Hamiltonian, angular momentum and Runge-Lenz operators acting on jets of sections.

A section near a point is a matrix whose rows are Taylor monomials (graded
by degree, see ``exactnum.jet``) and whose columns are components in the
gauge representation.  Differential operators act on the rows, gauge
generators act on the columns.  Each operator lowers the jet order by its
differential order, and results are cached on the input section so that
compositions reuse shared pieces.

Gauge fields are stored Lie-algebra valued: ``{(a, b): scalar jet}``
meaning sum over a < b of jet * M_ab.  The curvature is derived from the
potential with the so(m) structure constants, which the representation
checks in ``spinrep`` certify for every representation used here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .clifford import structure_constants
from .exactnum import Jet, KMatrix, Scalar, derivative_matrix, jet_of_radius, monomials
from .exactnum.jet import MAX_ORDER
from .monopole import FieldPoint
from .repcalc import cbar2, check_charge, delta_D, rank_n
from .report import Report
from .spinrep import RepSO, young_power_rep

I = Scalar.I
HALF = Fraction(1, 2)

LieField = dict[tuple[int, int], Jet]
# component index -> {exponent tuple (Greek order): coefficient}
PolySection = list[dict[tuple[int, ...], Scalar]]

RELATIONS = ("L-h", "L-L", "L-A", "A-h", "A-A")
_NEEDED_ORDER = {"L-h": 3, "L-L": 2, "L-A": 3, "A-h": 4, "A-A": 4}


@dataclass
class ProblemSpec:
    D: int
    mu: Fraction
    rep: RepSO
    delta: Fraction
    cbar2: Fraction
    _backgrounds: dict = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, D: int, mu, budget: int | None = None) -> ProblemSpec:
        mu = check_charge(D, mu)
        rep = young_power_rep(D - 1, mu, budget)
        return cls(D, mu, rep, delta_D(D, mu), cbar2(D, mu))

    @property
    def n(self) -> int:
        return rank_n(self.D)

    @property
    def N(self) -> int:
        return self.rep.dim

    def background(self, p: FieldPoint) -> Background:
        bg = self._backgrounds.get(p)
        if bg is None:
            if p.D != self.D:
                raise ValueError(f"point has {p.D} coordinates, expected {self.D}")
            bg = self._backgrounds[p] = Background(self, p)
        return bg


class Background:
    """Jets of the potential, curvature and scalar coefficients at one point."""

    def __init__(self, spec: ProblemSpec, p: FieldPoint, order: int = MAX_ORDER):
        self.spec, self.point, self.order = spec, p, order
        D, base = spec.D, p.greek
        self.x = [Jet.variable(k, base, order) for k in range(D)]
        r = jet_of_radius(base, order)
        inv_r = r.inverse()
        self.inv_r = inv_r
        g = -(inv_r * (r + self.x[0]).inverse())
        # A_b = sum_a g x_a M_ab
        self.A: list[LieField] = [{}]
        gx = [None] + [g * self.x[a] for a in range(1, D)]
        for b in range(1, D):
            fld = {}
            for a in range(1, D):
                if a != b:
                    key, sign = ((a, b), 1) if a < b else ((b, a), -1)
                    fld[key] = gx[a] if sign > 0 else -gx[a]
            self.A.append(fld)
        self.r2F = {k: _scale_field(f, (r * r).truncate(order - 1)) for k, f in self._curvature().items()}
        self.V = inv_r * inv_r * (spec.delta / 2) - inv_r
        self.x_over_r = [self.x[b] * inv_r for b in range(D)]
        self.Mt = {k: m.T for k, m in _generators(spec.rep).items()}

    def _curvature(self) -> dict[tuple[int, int], LieField]:
        """F = dA - dA + i[A, A] at one order below the potential."""
        D, lo = self.spec.D, self.order - 1
        A = [{k: j.truncate(lo) for k, j in f.items()} for f in self.A]
        out = {}
        for mu, nu in combinations(range(D), 2):
            fld: dict[tuple[int, int], Jet] = {}
            for k, j in self.A[nu].items():
                _acc(fld, k, j.deriv(mu))
            for k, j in self.A[mu].items():
                _acc(fld, k, -j.deriv(nu))
            for G, jg in A[mu].items():
                for H, jh in A[nu].items():
                    sc = structure_constants(*G, *H)
                    if not sc:
                        continue
                    prod = jg * jh
                    for K, c in sc.items():
                        _acc(fld, K, prod.scale(I * c))
            out[(mu, nu)] = {k: j for k, j in fld.items() if not j.is_zero()}
        return out

    def field_value(self, fld: LieField) -> KMatrix:
        N = self.spec.N
        out = KMatrix.zeros(N)
        for k, j in fld.items():
            out = out + self.spec.rep.gen(*k) * j.value()
        return out


def _acc(fld: dict, k, j: Jet):
    fld[k] = fld[k] + j if k in fld else j


def _scale_field(fld: LieField, s: Jet) -> LieField:
    return {k: j * s for k, j in fld.items()}


def _generators(rep: RepSO) -> dict[tuple[int, int], KMatrix]:
    return {(a, b): rep.gen(a, b) for a, b in combinations(range(1, rep.m + 1), 2)}


# -- sections ---------------------------------------------------------------------

@dataclass(eq=False)
class SectionJet:
    spec: ProblemSpec
    point: FieldPoint
    order: int
    data: KMatrix
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def bg(self) -> Background:
        return self.spec.background(self.point)

    def value(self) -> KMatrix:
        """Components at the base point, as a 1 x N row."""
        return self.data.take([0], range(self.data.cols))

    def truncate(self, order: int) -> SectionJet:
        if order > self.order:
            raise ValueError(f"cannot raise jet order {self.order} to {order}")
        if order == self.order:
            return self
        rows = len(monomials(self.spec.D, order))
        return SectionJet(self.spec, self.point, order, self.data.take(range(rows), range(self.data.cols)))

    def _like(self, data: KMatrix, order: int) -> SectionJet:
        return SectionJet(self.spec, self.point, order, data)

    def _align(self, other: SectionJet) -> tuple[SectionJet, SectionJet]:
        o = min(self.order, other.order)
        return self.truncate(o), other.truncate(o)

    def __add__(self, other: SectionJet) -> SectionJet:
        a, b = self._align(other)
        return self._like(a.data + b.data, a.order)

    def __sub__(self, other: SectionJet) -> SectionJet:
        a, b = self._align(other)
        return self._like(a.data - b.data, a.order)

    def __neg__(self) -> SectionJet:
        return self._like(-self.data, self.order)

    def __mul__(self, x) -> SectionJet:
        return self._like(self.data * x, self.order)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.data.is_zero()

    def memo(self, key, fn: Callable[[], SectionJet]) -> SectionJet:
        hit = self.cache.get(key)
        if hit is None:
            hit = self.cache[key] = fn()
        return hit


def section_from_polynomial(spec: ProblemSpec, p: FieldPoint, poly: PolySection, order: int = MAX_ORDER) -> SectionJet:
    """Taylor-expand a polynomial section at ``p`` (exact for any order)."""
    if len(poly) != spec.N:
        raise ValueError(f"section needs {spec.N} components, got {len(poly)}")
    D = spec.D
    xs = [Jet.variable(k, p.greek, order) for k in range(D)]
    cache: dict[tuple[int, ...], Jet] = {}

    def mono(e):
        hit = cache.get(e)
        if hit is None:
            hit = Jet.constant(1, p.greek, order)
            for k, m in enumerate(e):
                for _ in range(m):
                    hit = hit * xs[k]
            cache[e] = hit
        return hit

    cols = []
    for comp in poly:
        acc = Jet.constant(0, p.greek, order)
        for e, c in comp.items():
            acc = acc + mono(tuple(e)).scale(Scalar.coerce(c))
        cols.append(acc)
    return SectionJet(spec, p, order, KMatrix.from_columns([j.scalars() for j in cols]))


def random_polynomial_sections(spec: ProblemSpec, count: int, seed: int = 0, degree: int = 3, terms: int = 5) -> list[PolySection]:
    """Seeded polynomial sections with small Gaussian-integer coefficients; never identically zero."""
    rng = random.Random(seed)
    exps = [e for e in monomials(spec.D, degree)]
    out = []
    while len(out) < count:
        sec = []
        for _ in range(spec.N):
            comp: dict[tuple[int, ...], Scalar] = {}
            for _ in range(terms):
                e = rng.choice(exps)
                c = Scalar.coerce(rng.randint(-3, 3)) + I * rng.randint(-2, 2)
                comp[e] = comp.get(e, Scalar.coerce(0)) + c
            sec.append({e: c for e, c in comp.items() if c})
        if any(sec):
            out.append(sec)
    return out


# -- operators --------------------------------------------------------------------

def _need(s: SectionJet, k: int):
    if s.order < k:
        raise ValueError(f"operator needs jet order >= {k}, section has order {s.order}")


def _gauge_times(s: SectionJet, fld: LieField, out_order: int) -> KMatrix:
    """(sum_G f_G M_G) s, truncated to ``out_order``."""
    bg = s.bg
    acc = None
    for G, j in fld.items():
        rotated = s.cache.get(("Mt", G))
        if rotated is None:
            rotated = s.cache[("Mt", G)] = s.data @ bg.Mt[G]
        term = j.conv(out_order, s.order) @ rotated
        acc = term if acc is None else acc + term
    if acc is None:
        acc = KMatrix.zeros(len(monomials(s.spec.D, out_order)), s.data.cols)
    return acc


def _scalar_times(s: SectionJet, f: Jet, out_order: int) -> KMatrix:
    return f.conv(out_order, s.order) @ s.data


def apply_nabla(spec: ProblemSpec, alpha: int, s: SectionJet) -> SectionJet:
    """(d_alpha + i A_alpha) s."""
    _need(s, 1)

    def go():
        k = s.order - 1
        d = derivative_matrix(spec.D, s.order, alpha) @ s.data
        if s.bg.A[alpha]:
            d = d + _gauge_times(s, s.bg.A[alpha], k) * I
        return s._like(d, k)

    return s.memo(("nabla", alpha), go)


def apply_hamiltonian(spec: ProblemSpec, s: SectionJet) -> SectionJet:
    """-(1/2) nabla.nabla s + (delta / (2 r^2) - 1/r) s."""
    _need(s, 2)

    def go():
        k = s.order - 2
        acc = _scalar_times(s, s.bg.V, k)
        for a in range(spec.D):
            acc = acc - apply_nabla(spec, a, apply_nabla(spec, a, s)).data * HALF
        return s._like(acc, k)

    return s.memo(("h",), go)


def apply_Lab(spec: ProblemSpec, alpha: int, beta: int, s: SectionJet) -> SectionJet:
    """-i (x_alpha nabla_beta - x_beta nabla_alpha) s + r^2 F_{alpha beta} s."""
    _need(s, 1)
    k = s.order - 1
    if alpha == beta:
        return s._like(KMatrix.zeros(len(monomials(spec.D, k)), s.data.cols), k)
    if alpha > beta:
        return -apply_Lab(spec, beta, alpha, s)

    def go():
        bg = s.bg
        xa, xb = bg.x[alpha], bg.x[beta]
        nb, na = apply_nabla(spec, beta, s), apply_nabla(spec, alpha, s)
        acc = (xa.conv(k) @ nb.data - xb.conv(k) @ na.data) * (-I)
        if bg.r2F[(alpha, beta)]:
            acc = acc + _gauge_times(s, bg.r2F[(alpha, beta)], k)
        return s._like(acc, k)

    return s.memo(("L", alpha, beta), go)


def apply_runge_lenz(spec: ProblemSpec, beta: int, s: SectionJet) -> SectionJet:
    """-(i/2) sum_alpha (nabla_alpha L_{alpha beta} + L_{alpha beta} nabla_alpha) s + (x_beta / r) s."""
    _need(s, 2)

    def go():
        k = s.order - 2
        acc = None
        for a in range(spec.D):
            if a == beta:
                continue
            t1 = apply_nabla(spec, a, apply_Lab(spec, a, beta, s))
            t2 = apply_Lab(spec, a, beta, apply_nabla(spec, a, s))
            term = t1.data + t2.data
            acc = term if acc is None else acc + term
        acc = acc * (-I * HALF) + _scalar_times(s, s.bg.x_over_r[beta], k)
        return s._like(acc, k)

    return s.memo(("A", beta), go)


# -- relation checks ------------------------------------------------------------------

def _L(spec, a, b):
    return lambda s: apply_Lab(spec, a, b, s)


def _A(spec, b):
    return lambda s: apply_runge_lenz(spec, b, s)


def _h(spec):
    return lambda s: apply_hamiltonian(spec, s)


def _comm(X, Y, s: SectionJet) -> SectionJet:
    return X(Y(s)) - Y(X(s))


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def relation_residuals(spec: ProblemSpec, relation: str, s: SectionJet) -> Iterable[tuple[dict, KMatrix]]:
    """Yield (indices, order-0 residual) for one relation on one section jet."""
    if relation not in _NEEDED_ORDER:
        raise ValueError(f"unknown relation {relation!r}; choose from {RELATIONS}")
    D = spec.D
    s = s.truncate(_NEEDED_ORDER[relation])
    pairs = list(combinations(range(D), 2))
    h = _h(spec)
    if relation == "L-h":
        for mu, nu in pairs:
            yield {"mu": mu, "nu": nu}, _comm(_L(spec, mu, nu), h, s).value()
    elif relation == "L-L":
        for i, (mu, nu) in enumerate(pairs):
            for al, be in pairs[i:]:
                lhs = _comm(_L(spec, mu, nu), _L(spec, al, be), s)
                rhs = (apply_Lab(spec, nu, be, s) * _delta(mu, al)
                       - apply_Lab(spec, mu, be, s) * _delta(nu, al)
                       - apply_Lab(spec, nu, al, s) * _delta(mu, be)
                       + apply_Lab(spec, mu, al, s) * _delta(nu, be)) * I
                yield {"mu": mu, "nu": nu, "alpha": al, "beta": be}, (lhs - rhs).value()
    elif relation == "L-A":
        for mu, nu in pairs:
            for lam in range(D):
                lhs = _comm(_L(spec, mu, nu), _A(spec, lam), s)
                rhs = (apply_runge_lenz(spec, nu, s) * _delta(mu, lam)
                       - apply_runge_lenz(spec, mu, s) * _delta(nu, lam)) * I
                yield {"mu": mu, "nu": nu, "lambda": lam}, (lhs - rhs).value()
    elif relation == "A-h":
        for mu in range(D):
            yield {"mu": mu}, _comm(_A(spec, mu), h, s).value()
    elif relation == "A-A":
        for mu, nu in pairs:
            lhs = _comm(_A(spec, mu), _A(spec, nu), s)
            rhs = apply_hamiltonian(spec, apply_Lab(spec, mu, nu, s)) * (-2 * I)
            yield {"mu": mu, "nu": nu}, (lhs - rhs).value()


def _spec_params(spec: ProblemSpec) -> dict:
    return {"D": spec.D, "mu": spec.mu}


def check_symmetry_algebra(
    spec: ProblemSpec,
    points: Sequence[FieldPoint],
    sections: Sequence[PolySection],
    relations: Sequence[str] = RELATIONS,
) -> Report:
    out = Report("symmetry-algebra", _spec_params(spec))
    per: dict[str, int] = {}
    for p in points:
        for si, poly in enumerate(sections):
            s = section_from_polynomial(spec, p, poly)
            for rel in relations:
                for idx, res in relation_residuals(spec, rel, s):
                    per[rel] = per.get(rel, 0) + 1
                    out.zero(res, relation=rel, point=str(p), section=si, **idx)
        out.points_checked += 1
    out.info = {"checks_per_relation": per, "sections": len(sections)}
    return out


def lrl_square_residual(spec: ProblemSpec, s: SectionJet) -> KMatrix:
    """sum_mu A_mu A_mu s - s - ((D-1)^2/2 - 2 cbar2 + sum_{mu,nu} L_mn L_mn) h s at the base point."""
    D = spec.D
    s = s.truncate(4)
    lhs = None
    for mu in range(D):
        t = apply_runge_lenz(spec, mu, apply_runge_lenz(spec, mu, s))
        lhs = t if lhs is None else lhs + t
    hs = apply_hamiltonian(spec, s)
    coef = Fraction((D - 1) ** 2, 2) - 2 * spec.cbar2
    rhs = s + hs * coef
    for mu, nu in combinations(range(D), 2):
        rhs = rhs + apply_Lab(spec, mu, nu, apply_Lab(spec, mu, nu, hs)) * 2
    return (lhs - rhs).value()


def check_lrl_square(spec: ProblemSpec, points: Sequence[FieldPoint], sections: Sequence[PolySection]) -> Report:
    out = Report("runge-lenz-square", _spec_params(spec))
    for p in points:
        for si, poly in enumerate(sections):
            s = section_from_polynomial(spec, p, poly)
            out.zero(lrl_square_residual(spec, s), point=str(p), section=si)
        out.points_checked += 1
    return out


def constant_section(spec: ProblemSpec, vector: Sequence) -> PolySection:
    zero = (0,) * spec.D
    return [{zero: Scalar.coerce(v)} if Scalar.coerce(v) else {} for v in vector]
