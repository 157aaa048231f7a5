"""Euclidean gamma matrices and the spin generators they induce.

Convention (fixed so that entries are reproducible):

* d = 2: (s1, s2); d = 3: (s1, s2, s3), with s_k the Pauli matrices.
* From d = 2k+1 to d = 2k+2: g_a -> g_a (x) s1 for every old gamma, plus Id (x) s2.
* From d = 2k+2 to d = 2k+3: append Id (x) s3.

Matrices have size 2**(d//2).  For even d = 2n the chirality is
(-i)**n g_1 ... g_d; it equals 2**n H_1 ... H_n with H_j = -g_{2j-1,2j}, so
the +1 eigenspace holds the weight (1/2, ..., 1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exactnum import KMatrix, Scalar, anticommutator, commutator
from .report import Report

I = Scalar.I

SIGMA = (
    KMatrix.from_rows([[0, 1], [1, 0]]),
    KMatrix.from_rows([[0, -I], [I, 0]]),
    KMatrix.from_rows([[1, 0], [0, -1]]),
)

Generators = dict[tuple[int, int], KMatrix]


@dataclass(frozen=True)
class GammaSet:
    d: int
    gammas: tuple[KMatrix, ...]
    chirality: KMatrix | None

    @property
    def size(self) -> int:
        return self.gammas[0].rows


@lru_cache(maxsize=None)
def build_gammas(d: int) -> GammaSet:
    if d < 2:
        raise ValueError(f"need at least two gamma matrices, got d={d}")
    gs = list(SIGMA[:2]) if d == 2 else list(SIGMA)
    cur = len(gs)
    while cur < d:
        if cur % 2 == 1:
            eye = KMatrix.identity(gs[0].rows)
            gs = [g.kron(SIGMA[0]) for g in gs] + [eye.kron(SIGMA[1])]
        else:
            gs = gs + [KMatrix.identity(gs[0].rows // 2).kron(SIGMA[2])]
        cur += 1
    chir = None
    if d % 2 == 0:
        prod = KMatrix.identity(gs[0].rows)
        for g in gs:
            prod = prod @ g
        chir = prod * ((-I) ** (d // 2))
    return GammaSet(d, tuple(gs), chir)


def _check_index(g: GammaSet, a: int):
    if not 1 <= a <= g.d:
        raise IndexError(f"gamma index {a} outside 1..{g.d}")


@lru_cache(maxsize=None)
def _gamma_ab(d: int, a: int, b: int) -> KMatrix:
    g = build_gammas(d)
    if a == b:
        return KMatrix.zeros(g.size)
    return commutator(g.gammas[a - 1], g.gammas[b - 1]) * (I / 4)


def gamma_ab(g: GammaSet, a: int, b: int) -> KMatrix:
    """(i/4)[g_a, g_b], indices 1-based."""
    _check_index(g, a)
    _check_index(g, b)
    if build_gammas(g.d) is g:
        return _gamma_ab(g.d, a, b)
    if a == b:
        return KMatrix.zeros(g.size)
    return commutator(g.gammas[a - 1], g.gammas[b - 1]) * (I / 4)


def spin_generators(g: GammaSet) -> Generators:
    return {(a, b): gamma_ab(g, a, b) for a, b in combinations(range(1, g.d + 1), 2)}


def gen(gens: Generators, a: int, b: int, n: int) -> KMatrix:
    """M_ab from a generator table stored for a < b only."""
    if a == b:
        return KMatrix.zeros(n)
    if a < b:
        return gens[(a, b)]
    return -gens[(b, a)]


def structure_constants(a: int, b: int, c: int, d: int) -> dict[tuple[int, int], Scalar]:
    """[M_ab, M_cd] = sum_K coeff_K M_K (K = (p, q), p < q), from the so(m) relation."""
    out: dict[tuple[int, int], Scalar] = {}

    def put(p, q, x):
        if p == q:
            return
        if p > q:
            p, q, x = q, p, -x
        out[(p, q)] = out.get((p, q), Scalar.coerce(0)) + x

    # [M_ab, M_cd] = i(M_ad d_bc - M_bd d_ac + M_ca d_bd - M_cb d_ad)
    if b == c:
        put(a, d, I)
    if a == c:
        put(b, d, -I)
    if b == d:
        put(c, a, I)
    if a == d:
        put(c, b, -I)
    return {k: v for k, v in out.items() if v}


def so_commutator_report(gens: Generators, m: int, identity: str = "so-commutators") -> Report:
    """Residual of -[M_ab, M_cd] = -i M_ad d_bc + i M_bd d_ac - i M_ca d_bd + i M_cb d_ad."""
    rep = Report(identity, {"m": m})
    if not gens:
        rep.checks += 1
        return rep
    n = next(iter(gens.values())).rows
    pairs = list(combinations(range(1, m + 1), 2))
    prods = {}
    for p in pairs:
        for q in pairs:
            prods[p, q] = gens[p] @ gens[q]
    idx = range(1, m + 1)
    dl = lambda x, y: 1 if x == y else 0  # noqa: E731
    for a in idx:
        for b in idx:
            for c in idx:
                for d in idx:
                    if a == b or c == d:
                        continue
                    sab = 1 if a < b else -1
                    scd = 1 if c < d else -1
                    p, q = (min(a, b), max(a, b)), (min(c, d), max(c, d))
                    lhs = -(prods[p, q] - prods[q, p]) * (sab * scd)
                    rhs = KMatrix.zeros(n)
                    for (x, y, s, dd) in ((a, d, -1, dl(b, c)), (b, d, 1, dl(a, c)),
                                          (c, a, -1, dl(b, d)), (c, b, 1, dl(a, d))):
                        if dd:
                            rhs = rhs + gen(gens, x, y, n) * (I * s)
                    rep.zero(lhs - rhs, a=a, b=b, c=c, d=d)
    return rep


def verify_so_commutators(g: GammaSet) -> Report:
    return so_commutator_report(spin_generators(g), g.d, "gamma-so-commutators")


def casimir_of(gens: Generators, n: int) -> KMatrix:
    """(1/2) sum_{a,b} M_ab M_ab = sum_{a<b} M_ab^2."""
    out = KMatrix.zeros(n)
    for m in gens.values():
        out = out + m @ m
    return out


def casimir_matrix(g: GammaSet) -> KMatrix:
    return casimir_of(spin_generators(g), g.size)


def chirality_projectors(g: GammaSet) -> tuple[KMatrix, KMatrix]:
    if g.chirality is None:
        raise ValueError("chirality exists only for even d")
    eye = KMatrix.identity(g.size)
    half = Fraction(1, 2)
    return (eye + g.chirality) * half, (eye - g.chirality) * half


def verify_clifford(g: GammaSet) -> Report:
    """Clifford relation, Hermiticity, chirality, commutators and Casimir scalarness."""
    rep = Report("clifford", {"d": g.d, "size": g.size})
    eye = KMatrix.identity(g.size)
    for a in range(g.d):
        ga = g.gammas[a]
        rep.zero(ga - ga.H, check="hermitian", a=a + 1)
        for b in range(a, g.d):
            target = eye * 2 if a == b else KMatrix.zeros(g.size)
            rep.zero(anticommutator(ga, g.gammas[b]) - target, check="anticommutator", a=a + 1, b=b + 1)
    gens = spin_generators(g)
    for (a, b), m in gens.items():
        rep.zero(m - m.H, check="generator-hermitian", a=a, b=b)
    rep.absorb(verify_so_commutators(g))
    cas = casimir_matrix(g)
    if g.chirality is None:
        rep.truth(cas.scalar_multiple_of_identity() is not None, check="casimir-scalar")
    else:
        chi = g.chirality
        rep.zero(chi @ chi - eye, check="chirality-square")
        rep.zero(chi - chi.H, check="chirality-hermitian")
        for a, ga in enumerate(g.gammas):
            rep.zero(anticommutator(chi, ga), check="chirality-anticommutes", a=a + 1)
        pp, pm = chirality_projectors(g)
        rep.zero(pp @ pp - pp, check="projector-idempotent", sign="+")
        rep.zero(pm @ pm - pm, check="projector-idempotent", sign="-")
        rep.zero(pp @ pm, check="projectors-orthogonal")
        for (a, b), m in gens.items():
            rep.zero(commutator(pp, m), check="projector-commutes", a=a, b=b)
        for p, sign in ((pp, "+"), (pm, "-")):
            rep.zero(restricted_scalar_residual(cas, p), check="casimir-scalar-on-half", sign=sign)
    return rep


def restricted_scalar_residual(m: KMatrix, proj: KMatrix) -> KMatrix:
    """m P - c P for the c read off a non-zero diagonal entry of the projector P."""
    mp = m @ proj
    i = next(i for i in range(proj.rows) if proj.entry(i, i))
    return mp - proj * (mp.entry(i, i) / proj.entry(i, i))
