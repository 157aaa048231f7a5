"""The generalized Dirac monopole: potential, curvature and their identities.

Coordinates follow the physics ordering r = (x_1, ..., x_{D-1}, x_0); inside
this module points are stored by Greek index (x_0 first) so that jet variable
``k`` is the coordinate x_k.  The gauge is singular on the negative x_0 axis.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import isqrt
from typing import Sequence

from .exactnum import Jet, KMatrix, MatrixJet, Scalar, as_rat, commutator, jet_of_radius
from .report import Report
from .spinrep import RepSO

I = Scalar.I


@dataclass(frozen=True)
class FieldPoint:
    greek: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coords) -> FieldPoint:
        """From physics-ordered coordinates (x_1, ..., x_{D-1}, x_0)."""
        c = [as_rat(x) for x in coords]
        return cls.from_greek([c[-1]] + c[:-1])

    @classmethod
    def from_greek(cls, greek: Sequence) -> FieldPoint:
        g = tuple(as_rat(x) for x in greek)
        if len(g) < 2:
            raise ValueError("points need at least two coordinates")
        if not any(g):
            raise ValueError("the origin is excluded")
        if not any(g[1:]) and g[0] < 0:
            raise ValueError("point lies on the gauge string (negative x_0 axis)")
        return cls(g)

    @property
    def D(self) -> int:
        return len(self.greek)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return self.greek[1:] + self.greek[:1]

    @property
    def norm2(self) -> Fraction:
        return sum(x * x for x in self.greek)

    @cached_property
    def r(self) -> Scalar:
        return Scalar.sqrt_of(self.norm2)

    def x(self, mu: int) -> Fraction:
        return self.greek[mu]

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


class PointJets:
    """Scalar jets of the coordinate functions, r and gauge factors at one point."""

    def __init__(self, p: FieldPoint, order: int):
        self.point = p
        self.order = order
        self.D = p.D
        base = p.greek
        self.x = [Jet.variable(k, base, order) for k in range(self.D)]
        self.r = jet_of_radius(base, order)
        self.inv_r = self.r.inverse()
        self.r_plus_x0 = self.r + self.x[0]
        if not self.r_plus_x0.value():
            raise ValueError("point lies on the gauge string")
        self.inv_r_plus_x0 = self.r_plus_x0.inverse()
        # A_b = g x_a M_ab with g = -1/(r(r + x_0))
        self.g = -(self.inv_r * self.inv_r_plus_x0)
        self._memo: dict = {}

    def memo(self, key, fn):
        hit = self._memo.get(key)
        if hit is None:
            hit = fn()
            self._memo[key] = hit
        return hit

    def gx(self, a: int) -> Jet:
        return self.memo(("gx", a), lambda: self.g * self.x[a])


# -- sampling -----------------------------------------------------------------

def sample_points(D: int, count: int, seed: int = 0, generic_fraction: Fraction = Fraction(1, 4)) -> list[FieldPoint]:
    """Deterministic valid points: the special point, one near the gauge string, then random.

    Most random points have integer coordinates with a perfect-square norm;
    about ``generic_fraction`` of them are plain rational points, which
    brings sqrt(norm) into the field extension.
    """
    rng = random.Random(seed)
    pts: list[FieldPoint] = []
    if count >= 1:
        pts.append(FieldPoint.from_greek([rng.randint(1, 9)] + [0] * (D - 1)))
    if count >= 2:
        # x_0 < 0 with a small transverse part; norm 13 * k
        k = rng.randint(1, 3)
        pts.append(FieldPoint.from_greek([-12 * k, 5 * k] + [0] * (D - 2)))
    while len(pts) < count:
        if rng.random() < generic_fraction:
            v = [rng.randint(-7, 7) for _ in range(D)]
            den = rng.choice([1, 1, 2, 3])
            greek = [Fraction(x, den) for x in v]
        else:
            t = [rng.randint(-4, 4) for _ in range(D - 1)]
            q = rng.randint(1, 4)
            v = [2 * q * x for x in t] + [sum(x * x for x in t) - q * q]
            rng.shuffle(v)
            greek = [x * rng.choice([1, -1]) for x in v]
        try:
            pts.append(FieldPoint.from_greek(greek))
        except ValueError:
            continue
    return pts


def is_perfect_square_norm(p: FieldPoint) -> bool:
    n2 = p.norm2
    return all(isqrt(z) ** 2 == z for z in (n2.numerator, n2.denominator))


# -- fields ---------------------------------------------------------------------

def _gen(rep: RepSO, a: int, b: int) -> KMatrix:
    return rep.gen(a, b)


@dataclass
class FieldEval:
    rep: RepSO
    point: FieldPoint
    A: list[KMatrix]
    F: dict[tuple[int, int], KMatrix] = field(default_factory=dict)

    def f(self, mu: int, nu: int) -> KMatrix:
        if mu == nu:
            return KMatrix.zeros(self.rep.dim)
        if mu < nu:
            return self.F[(mu, nu)]
        return -self.F[(nu, mu)]


def potential_jets(rep: RepSO, pj: PointJets) -> list[MatrixJet]:
    """A_0 = 0 and A_b = -x_a M_ab / (r (r + x_0)) as matrix jets."""
    N, D = rep.dim, pj.D
    zero = MatrixJet.constant(KMatrix.zeros(N), pj.point.greek, pj.order)
    out = [zero]
    for b in range(1, D):
        acc = zero
        for a in range(1, D):
            if a != b:
                acc = acc + MatrixJet.from_scalar(pj.gx(a), _gen(rep, a, b))
        out.append(acc)
    return out


def curvature_jets(rep: RepSO, pj: PointJets) -> dict[tuple[int, int], MatrixJet]:
    """The printed closed form of F_{mu nu} (mu < nu), as matrix jets."""
    N, D = rep.dim, pj.D
    base, order = pj.point.greek, pj.order
    x, r, inv_r = pj.x, pj.r, pj.inv_r
    zero = MatrixJet.constant(KMatrix.zeros(N), base, order)
    inv_r3 = inv_r ** 3
    out = {}
    for b in range(1, D):
        acc = zero
        for a in range(1, D):
            if a != b:
                acc = acc + MatrixJet.from_scalar(inv_r3 * x[a], _gen(rep, a, b))
        out[(0, b)] = acc
    u = (inv_r * pj.inv_r_plus_x0) ** 2
    w = (x[0] * inv_r) + 2
    uw = u * w
    two_g = pj.g * 2  # -2 / (r (r + x_0))
    comm = {}
    for a, b in combinations(range(1, D), 2):
        acc = MatrixJet.from_scalar(two_g, _gen(rep, a, b))
        for c in range(1, D):
            if c != b:
                acc = acc + MatrixJet.from_scalar(pj.memo(("uwx", c, a), lambda: uw * x[c] * x[a]), _gen(rep, c, b))
            if c != a:
                acc = acc - MatrixJet.from_scalar(pj.memo(("uwx", c, b), lambda: uw * x[c] * x[b]), _gen(rep, c, a))
        for c in range(1, D):
            for d in range(1, D):
                if d == a or c == b:
                    continue
                key = (d, a, c, b)
                if key not in comm:
                    comm[key] = commutator(_gen(rep, d, a), _gen(rep, c, b)) * I
                if comm[key].is_zero():
                    continue
                coef = pj.memo(("uxx", min(c, d), max(c, d)), lambda: u * x[c] * x[d])
                acc = acc + MatrixJet.from_scalar(coef, comm[key])
        out[(a, b)] = acc
    return out


def eval_potential(rep: RepSO, p: FieldPoint) -> FieldEval:
    pj = PointJets(p, 0)
    return FieldEval(rep, p, [a.value() for a in potential_jets(rep, pj)])


def eval_curvature(rep: RepSO, p: FieldPoint) -> FieldEval:
    pj = PointJets(p, 0)
    fe = FieldEval(rep, p, [a.value() for a in potential_jets(rep, pj)])
    fe.F = {k: v.value() for k, v in curvature_jets(rep, pj).items()}
    return fe


def jet_curvature(rep: RepSO, p: FieldPoint) -> dict[tuple[int, int], KMatrix]:
    """F = dA - dA + i[A, A] from order-1 jets of the potential."""
    pj = PointJets(p, 1)
    A = potential_jets(rep, pj)
    vals = [a.value() for a in A]
    out = {}
    for mu, nu in combinations(range(p.D), 2):
        d_mu_A_nu = A[nu].deriv(mu).value()
        d_nu_A_mu = A[mu].deriv(nu).value()
        out[(mu, nu)] = d_mu_A_nu - d_nu_A_mu + commutator(vals[mu], vals[nu]) * I
    return out


# -- identity checks ------------------------------------------------------------

def _params(rep: RepSO, D: int, **extra) -> dict:
    out = {"D": D, "rep": rep.name or str(rep.algebra)}
    if rep.highest_weight is not None:
        out["weight"] = [str(x) for x in rep.highest_weight]
    out.update(extra)
    return out


def check_curvature_agreement(rep: RepSO, D: int, points: Sequence[FieldPoint]) -> Report:
    out = Report("curvature-closed-form-vs-jet", _params(rep, D))
    for p in points:
        closed = eval_curvature(rep, p).F
        derived = jet_curvature(rep, p)
        for k in closed:
            out.zero(closed[k] - derived[k], point=str(p), munu=k)
        out.points_checked += 1
    return out


def check_lemma_part1(rep: RepSO, D: int, points: Sequence[FieldPoint], F_override=None) -> Report:
    """The representation-independent identities (F^2, covariant derivative, transversality, commutators).

    ``F_override`` maps the curvature dict to a replacement; it exists for negative controls.
    """
    if rep.m != D - 1:
        raise ValueError(f"{rep} is not a representation of so({D - 1})")
    out = Report("lemma-part1", _params(rep, D))
    N = rep.dim
    cas = rep.casimir()
    pairs = list(combinations(range(D), 2))
    for p in points:
        where = str(p)
        pj = PointJets(p, 1)
        A = [a.value() for a in potential_jets(rep, pj)]
        Fj = curvature_jets(rep, pj)
        F = {k: v.value() for k, v in Fj.items()}
        dF = {(k, kap): Fj[k].deriv(kap).value() for k in Fj for kap in range(D)}
        if F_override is not None:
            F = F_override(F)
        x = [Scalar.coerce(v) for v in p.greek]
        r2 = Scalar.coerce(p.norm2)
        inv_r2 = r2.inverse()
        i_inv_r2 = I * inv_r2
        two_x = [v * 2 for v in x]
        xx = {(a, b): x[a] * x[b] for a in range(D) for b in range(D)}

        def f(mu, nu):
            if mu == nu:
                return KMatrix.zeros(N)
            return F[(mu, nu)] if mu < nu else -F[(nu, mu)]

        def df(mu, nu, kap):
            if mu == nu:
                return KMatrix.zeros(N)
            return dF[((mu, nu), kap)] if mu < nu else -dF[((nu, mu), kap)]

        # F_{mu nu} F^{mu nu} = (2 / r^4) c2
        sq = KMatrix.zeros(N)
        for k in pairs:
            sq = sq + F[k] @ F[k]
        out.zero(sq * 2 - cas * (2 * inv_r2 * inv_r2), identity="F.F = 2 c2 / r^4", point=where)

        # [nabla_kappa, F_{mu nu}] = (x_mu F_{nu kappa} + x_nu F_{kappa mu} - 2 x_kappa F_{mu nu}) / r^2
        cov = {}
        for (mu, nu) in pairs:
            for kap in range(D):
                lhs = df(mu, nu, kap) + commutator(A[kap], f(mu, nu)) * I
                cov[(mu, nu, kap)] = lhs
                rhs = (f(nu, kap) * x[mu] + f(kap, mu) * x[nu] - f(mu, nu) * two_x[kap]) * inv_r2
                out.zero(lhs - rhs, identity="covariant derivative of F", point=where, mu=mu, nu=nu, kappa=kap)

        # x_mu A_mu = 0, x_mu F_{mu nu} = 0, [nabla_mu, F_{mu nu}] = 0
        acc = KMatrix.zeros(N)
        for mu in range(D):
            acc = acc + A[mu] * x[mu]
        out.zero(acc, identity="x.A = 0", point=where)
        for nu in range(D):
            acc = KMatrix.zeros(N)
            div = KMatrix.zeros(N)
            for mu in range(D):
                acc = acc + f(mu, nu) * x[mu]
                if mu != nu:
                    div = div + (cov[(mu, nu, mu)] if mu < nu else -cov[(nu, mu, mu)])
            out.zero(acc, identity="x_mu F_mu_nu = 0", point=where, nu=nu)
            out.zero(div, identity="[nabla_mu, F_mu_nu] = 0", point=where, nu=nu)

        # r^2 [F_mn, F_ab] + i(F_mb d_an - F_nb d_am + F_am d_bn - F_an d_bm)
        #   = (i / r^2)(x_m x_a F_bn + x_m x_b F_na - x_n x_a F_bm - x_n x_b F_ma)
        for (m_, n_) in pairs:
            for (a_, b_) in pairs:
                lhs = commutator(F[(m_, n_)], F[(a_, b_)]) * r2
                if a_ == n_:
                    lhs = lhs + f(m_, b_) * I
                if a_ == m_:
                    lhs = lhs - f(n_, b_) * I
                if b_ == n_:
                    lhs = lhs + f(a_, m_) * I
                if b_ == m_:
                    lhs = lhs - f(a_, n_) * I
                rhs = (f(b_, n_) * xx[m_, a_] + f(n_, a_) * xx[m_, b_]
                       - f(b_, m_) * xx[n_, a_] - f(m_, a_) * xx[n_, b_]) * i_inv_r2
                out.zero(lhs - rhs, identity="quartic commutator", point=where, pairs=((m_, n_), (a_, b_)))
        out.points_checked += 1
    return out


def _ff_residuals(F: dict, D: int, p: FieldPoint, kappa: Scalar, lam: Scalar, N: int):
    """r^2 F_la F_lb - kappa (d_ab / r^2 - x_a x_b / r^4) - i lam F_ab for all a <= b."""
    x = [Scalar.coerce(v) for v in p.greek]
    r2 = Scalar.coerce(p.norm2)
    inv_r2 = r2.inverse()

    def f(mu, nu):
        if mu == nu:
            return KMatrix.zeros(N)
        return F[(mu, nu)] if mu < nu else -F[(nu, mu)]

    out = {}
    for a in range(D):
        for b in range(a, D):
            lhs = KMatrix.zeros(N)
            for l in range(D):
                lhs = lhs + f(l, a) @ f(l, b)
            lhs = lhs * r2
            scal = (inv_r2 if a == b else Scalar.coerce(0)) - x[a] * x[b] * inv_r2 * inv_r2
            out[(a, b)] = lhs - KMatrix.scalar(kappa * scal, N) - f(a, b) * (I * lam)
    return out


def check_lemma_part2(n: int, mu, points: Sequence[FieldPoint], rep: RepSO | None = None) -> Report:
    """Odd D = 2n+1 in s^{2 mu} of so(2n): r^2 F F = (c2/n)(...) + i(n-1) F."""
    from .spinrep import young_power_rep

    mu = as_rat(mu)
    rep = rep if rep is not None else young_power_rep(2 * n, mu)
    D = 2 * n + 1
    if rep.m != 2 * n:
        raise ValueError(f"{rep} is not a representation of so({2 * n})")
    c2 = rep.casimir().scalar_multiple_of_identity()
    if c2 is None:
        raise ValueError("the Casimir is not scalar in this representation")
    out = Report("lemma-part2", _params(rep, D, n=n, mu=mu))
    kappa = c2 / n
    for p in points:
        F = eval_curvature(rep, p).F
        for k, res in _ff_residuals(F, D, p, kappa, Scalar.coerce(n - 1), rep.dim).items():
            out.zero(res, point=str(p), ab=k)
        out.points_checked += 1
    out.info = {"c2": c2}
    return out


def anticommutator_form_constant(rep: RepSO) -> Scalar | None:
    """c with sum_k {M_ka, M_kb} = c d_ab Id, or None if no such constant exists."""
    m, N = rep.m, rep.dim
    c = None
    for a in range(1, m + 1):
        for b in range(a, m + 1):
            acc = KMatrix.zeros(N)
            for k in range(1, m + 1):
                ka, kb = rep.gen(k, a), rep.gen(k, b)
                acc = acc + ka @ kb + kb @ ka
            if a != b:
                if not acc.is_zero():
                    return None
                continue
            s = acc.scalar_multiple_of_identity()
            if s is None or (c is not None and s != c):
                return None
            c = s
    return c


def check_lemma_part3(n: int, points: Sequence[FieldPoint], rep: RepSO | None = None) -> Report:
    """Even D = 2n in the spinor of so(2n-1): r^2 F F = ((n-1)/2)(...) + i(n - 3/2) F.

    Any other representation may be substituted; the printed constants are
    kept, and the report also says whether the identity's shape can hold with
    some other constant.
    """
    from .spinrep import spinor_rep

    D = 2 * n
    rep = rep if rep is not None else spinor_rep(2 * n - 1)
    if rep.m != 2 * n - 1:
        raise ValueError(f"{rep} is not a representation of so({2 * n - 1})")
    out = Report("lemma-part3", _params(rep, D, n=n))
    kappa = Scalar.coerce(Fraction(n - 1, 2))
    lam = Scalar.coerce(Fraction(2 * n - 3, 2))
    for p in points:
        F = eval_curvature(rep, p).F
        for k, res in _ff_residuals(F, D, p, kappa, lam, rep.dim).items():
            out.zero(res, point=str(p), ab=k)
        out.points_checked += 1
    c = anticommutator_form_constant(rep)
    out.info = {"shape_holds_for_some_constant": c is not None, "constant": c}
    return out


def perturb_first_entry(F: dict) -> dict:
    """Negative control: add 1 to one entry of F_{0,1}."""
    out = dict(F)
    k = min(out)
    m = out[k]
    bump = KMatrix.from_rows([[1 if (i, j) == (0, 0) else 0 for j in range(m.cols)] for i in range(m.rows)])
    out[k] = m + bump
    return out
