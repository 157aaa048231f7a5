"""Explicit matrix representations of so(m) built from spinors.

A :class:`RepSO` stores generators M_ab (a < b, 1-based) in some basis of
its carrier space, plus the Hermitian form ``gram`` in which the generators
are self-adjoint (``None`` means the standard one).  Cartan powers are cut
out of tensor powers as cyclic submodules, so their bases are reduced
row-echelon rather than orthonormal; that is what the Gram matrix is for.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .clifford import (
    Generators,
    build_gammas,
    casimir_of,
    gen,
    so_commutator_report,
    spin_generators,
)
from .exactnum import KMatrix, Scalar, anticommutator, commutator
from .exactnum.linalg import SpanBuilder, columns_of, joint_eigenspace, nullspace
from .repcalc import HALF, AlgebraType, casimir_value, check_weight, weyl_dim
from .report import Report

I = Scalar.I
DEFAULT_BUDGET = 192
BUDGET_ENV = "MICZ_SIZE_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


def size_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


@dataclass(eq=False)
class RepSO:
    algebra: AlgebraType
    dim: int
    generators: Generators
    highest_weight: tuple[Fraction, ...] | None
    gram: KMatrix | None = None
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def m(self) -> int:
        return self.algebra.m

    def gen(self, a: int, b: int) -> KMatrix:
        return gen(self.generators, a, b, self.dim)

    def casimir(self) -> KMatrix:
        if "casimir" not in self._cache:
            self._cache["casimir"] = casimir_of(self.generators, self.dim)
        return self._cache["casimir"]

    def weight_operators(self) -> list[KMatrix]:
        """H_j = -M_{2j-1, 2j}."""
        return [-self.gen(2 * j - 1, 2 * j) for j in range(1, self.algebra.rank + 1)]

    def form(self) -> KMatrix:
        return self.gram if self.gram is not None else KMatrix.identity(self.dim)

    def is_adjoint(self, x: KMatrix, y: KMatrix) -> bool:
        """Whether y is the adjoint of x for the invariant Hermitian form."""
        g = self.form()
        return g @ y == x.H @ g

    def __repr__(self) -> str:
        return f"RepSO({self.name or self.algebra}, dim={self.dim})"


# -- basic constructors -----------------------------------------------------

def trivial_rep(m: int) -> RepSO:
    alg = AlgebraType.so(m)
    gens = {p: KMatrix.zeros(1) for p in combinations(range(1, m + 1), 2)}
    return RepSO(alg, 1, gens, (Fraction(0),) * alg.rank, name="trivial")


def restrict(gens: Generators, basis: KMatrix, pivots: Sequence[int]) -> Generators:
    """Generators on the invariant column span of ``basis`` (reduced echelon at ``pivots``)."""
    out = {}
    for key, m in gens.items():
        mb = m @ basis
        r = mb.take(rows=pivots)
        if basis @ r != mb:
            raise ArithmeticError(f"subspace is not invariant under M{key}")
        out[key] = r
    return out


def _span(columns: KMatrix) -> tuple[KMatrix, list[int]]:
    sb = SpanBuilder(columns.rows)
    for c in columns_of(columns):
        sb.add(c)
    return sb.basis(), sb.sorted_pivots()


def _gram_or_none(basis: KMatrix, ambient: KMatrix | None) -> KMatrix | None:
    g = basis.H @ basis if ambient is None else basis.H @ ambient @ basis
    return None if g == KMatrix.identity(g.rows) else g


@lru_cache(maxsize=None)
def _spinor(m: int) -> tuple[RepSO, ...]:
    if m < 2:
        raise ValueError(f"spinors need m >= 2, got {m}")
    g = build_gammas(m)
    gens = spin_generators(g)
    alg = AlgebraType.so(m)
    n = alg.rank
    if m % 2:
        return (RepSO(alg, g.size, gens, (HALF,) * n, name=f"s[so({m})]"),)
    out = []
    for sign, label in ((1, "+"), (-1, "-")):
        basis, piv = _span(nullspace(g.chirality - KMatrix.scalar(sign, g.size)))
        hw = (HALF,) * (n - 1) + (HALF * sign,)
        out.append(RepSO(alg, basis.cols, restrict(gens, basis, piv), hw,
                         gram=_gram_or_none(basis, None), name=f"s{label}[so({m})]"))
    return tuple(out)


def spinor_rep(m: int) -> RepSO | tuple[RepSO, RepSO]:
    """s for odd m, the pair (s_+, s_-) for even m."""
    reps = _spinor(m)
    return reps[0] if m % 2 else reps


def half_spinor(m: int, sign: int) -> RepSO:
    if m % 2:
        raise ValueError("half-spinors exist only for even m")
    return _spinor(m)[0 if sign > 0 else 1]


def dirac_spinor(m: int) -> RepSO:
    """The full 2**(m//2)-dimensional spinor (reducible for even m)."""
    g = build_gammas(m)
    return RepSO(AlgebraType.so(m), g.size, spin_generators(g), None, name=f"dirac[so({m})]")


@lru_cache(maxsize=None)
def vector_rep(m: int) -> RepSO:
    """Defining representation, (M_ab)_{cd} = i (d_ac d_bd - d_ad d_bc)."""
    alg = AlgebraType.so(m)
    gens = {}
    for a, b in combinations(range(1, m + 1), 2):
        rows = [[0] * m for _ in range(m)]
        rows[a - 1][b - 1] = I
        rows[b - 1][a - 1] = -I
        gens[(a, b)] = KMatrix.from_rows(rows)
    hw = (Fraction(1),) + (Fraction(0),) * (alg.rank - 1)
    return RepSO(alg, m, gens, hw, name=f"vector[so({m})]")


def tensor_product(r1: RepSO, r2: RepSO) -> RepSO:
    if r1.algebra != r2.algebra:
        raise ValueError("tensor product of representations of different algebras")
    e1, e2 = KMatrix.identity(r1.dim), KMatrix.identity(r2.dim)
    gens = {k: r1.generators[k].kron(e2) + e1.kron(r2.generators[k]) for k in r1.generators}
    gram = None
    if r1.gram is not None or r2.gram is not None:
        gram = r1.form().kron(r2.form())
    return RepSO(r1.algebra, r1.dim * r2.dim, gens, None, gram=gram, name=f"{r1.name}*{r2.name}")


def tensor_power(rep: RepSO, k: int) -> RepSO:
    out = rep
    for _ in range(k - 1):
        out = tensor_product(out, rep)
    return out


# -- weights and lowering operators -----------------------------------------

def lowering_operators(rep: RepSO) -> dict[tuple[int, ...], KMatrix]:
    """E_{-alpha} for every positive root alpha, keyed by alpha."""
    n, m = rep.algebra.rank, rep.m
    out = {}
    for j, k in combinations(range(1, n + 1), 2):
        for eta2 in (1, -1):
            root = [0] * n
            root[j - 1], root[k - 1] = 1, eta2
            out[tuple(root)] = e_generator(rep, -1, j, -eta2, k)
    if rep.algebra.series == "B":
        for j in range(1, n + 1):
            root = [0] * n
            root[j - 1] = 1
            out[tuple(root)] = (rep.gen(2 * j - 1, m) - rep.gen(2 * j, m) * I) * Fraction(-1, 2)
    return out


def e_generator(rep: RepSO, eta: int, j: int, eta2: int, k: int) -> KMatrix:
    """E_{eta e^j + eta' e^k} (j < k) in the Cartan-basis normalization."""
    a1, a2, b1, b2 = 2 * j - 1, 2 * j, 2 * k - 1, 2 * k
    return (rep.gen(a1, b1) + rep.gen(a2, b1) * (I * eta) + rep.gen(a1, b2) * (I * eta2)
            - rep.gen(a2, b2) * (eta * eta2)) * Fraction(-1, 2)


def weight_space(rep: RepSO, w: Sequence) -> KMatrix:
    """Basis (columns) of the joint eigenspace of the H_j with eigenvalues w."""
    return joint_eigenspace(rep.weight_operators(), [Scalar.coerce(Fraction(x)) for x in w])


def top_vector(rep: RepSO) -> KMatrix:
    if rep.highest_weight is None:
        raise ValueError(f"{rep} has no recorded highest weight")
    space = weight_space(rep, rep.highest_weight)
    if space.cols != 1:
        raise ArithmeticError(f"top weight space of {rep} has dimension {space.cols}")
    return space


def weights(rep: RepSO) -> dict[tuple[Fraction, ...], int]:
    """Weight multiplicities, read off when the H_j are diagonal, else by eigenspaces."""
    hs = rep.weight_operators()
    if all(h == KMatrix.diag([h.entry(i, i) for i in range(h.rows)]) for h in hs):
        out: dict = {}
        for i in range(rep.dim):
            w = tuple(h.entry(i, i).to_fraction() for h in hs)
            out[w] = out.get(w, 0) + 1
        return out
    bound = rep.highest_weight[0] if rep.highest_weight else Fraction(rep.dim)
    base = bound - int(bound)
    steps = [base + k for k in range(-int(bound) - 1, int(bound) + 2) if abs(base + k) <= bound]
    out = {}
    for w in product(steps, repeat=rep.algebra.rank):
        c = weight_space(rep, w).cols
        if c:
            out[w] = c
    return out


def cyclic_rep(rep: RepSO, start: KMatrix, hw: tuple[Fraction, ...], name: str = "") -> RepSO:
    """Submodule generated from ``start`` by repeated lowering, with restricted generators."""
    lows = list(lowering_operators(rep).values())
    sb = SpanBuilder(rep.dim)
    queue = [start]
    sb.add(columns_of(start)[0])
    while queue:
        v = queue.pop()
        for op in lows:
            w = op @ v
            if not w.is_zero() and sb.add(columns_of(w)[0]):
                queue.append(w)
    basis, piv = sb.basis(), sb.sorted_pivots()
    gens = restrict(rep.generators, basis, piv)
    gram = _gram_or_none(basis, rep.gram)
    return RepSO(rep.algebra, basis.cols, gens, hw, gram=gram, name=name)


def cartan_power(rep: RepSO, k: int, budget: int | None = None) -> RepSO:
    """Top irreducible component of the k-fold tensor power (highest weight k * lambda)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return trivial_rep(rep.m)
    if k == 1:
        return rep
    limit = size_budget(budget)
    if k * rep.dim ** k > limit:
        raise BudgetExceeded(f"k * dim**k = {k * rep.dim ** k} exceeds the size budget {limit}")
    key = ("cartan_power", k)
    if key in rep._cache:
        return rep._cache[key]
    top = top_vector(rep)
    start = top
    for _ in range(k - 1):
        start = start.kron(top)
    hw = tuple(k * x for x in rep.highest_weight)
    out = cyclic_rep(tensor_power(rep, k), start, hw, name=f"{rep.name}^{k}")
    rep._cache[key] = out
    return out


def young_power_rep(m: int, mu, budget: int | None = None) -> RepSO:
    """s^{2 mu} of so(m): signed mu picks s_+ or s_- for even m."""
    mu = Fraction(mu)
    k = abs(2 * mu)
    if k.denominator != 1:
        raise ValueError(f"mu must be a half-integer, got {mu}")
    k = int(k)
    if k == 0:
        return trivial_rep(m)
    if m % 2:
        if mu < 0:
            raise ValueError("negative charge needs an even-dimensional gauge algebra")
        return cartan_power(spinor_rep(m), k, budget)
    return cartan_power(half_spinor(m, 1 if mu > 0 else -1), k, budget)


def verify_rep(rep: RepSO) -> Report:
    """Commutators, Casimir scalar equal to its weight value, Weyl dimension, weights."""
    out = Report("rep-invariants", {"rep": rep.name or str(rep.algebra), "dim": rep.dim})
    out.absorb(so_commutator_report(rep.generators, rep.m))
    if rep.highest_weight is None:
        return out
    hw = check_weight(rep.algebra, rep.highest_weight)
    c2 = casimir_value(rep.algebra, hw)
    out.zero(rep.casimir() - KMatrix.scalar(c2, rep.dim), check="casimir", value=c2)
    out.equal(rep.dim, weyl_dim(rep.algebra, hw), check="weyl-dim")
    ws = weights(rep)
    out.equal(ws.get(hw, 0), 1, check="top-weight-multiplicity")
    out.truth(all(sum(w) <= sum(hw) for w in ws), check="top-weight-maximal")
    out.truth(all((2 * x).denominator == 1 for w in ws for x in w), check="half-integer-spectrum")
    for a, b in combinations(range(1, rep.m + 1), 2):
        out.truth(rep.is_adjoint(rep.gen(a, b), rep.gen(a, b)), check="self-adjoint", a=a, b=b)
    return out


# -- Cartan basis and the O-operators ----------------------------------------

@dataclass(eq=False)
class CartanBasis:
    rep: RepSO
    H: list[KMatrix]
    E: dict[tuple[int, ...], KMatrix]

    @property
    def n(self) -> int:
        return len(self.H)

    def root(self, *pairs: tuple[int, int]) -> tuple[int, ...]:
        r = [0] * self.n
        for sign, j in pairs:
            r[j - 1] += sign
        return tuple(r)

    def e(self, s1: int, j: int, s2: int, k: int) -> KMatrix:
        """E_{s1 e^j + s2 e^k}."""
        return self.E[self.root((s1, j), (s2, k))]

    def simple_lowering(self, i: int) -> KMatrix:
        """E_{-alpha^i} with alpha^i = e^i - e^{i+1} (i < n) and alpha^n = e^{n-1} + e^n."""
        if i < self.n:
            return self.e(-1, i, 1, i + 1)
        return self.e(-1, self.n - 1, -1, self.n)


def cartan_basis(rep: RepSO) -> CartanBasis:
    if rep.algebra.series != "D":
        raise ValueError("the Cartan basis here is for so(2n)")
    n = rep.algebra.rank
    E = {}
    for j, k in combinations(range(1, n + 1), 2):
        for eta, eta2 in product((1, -1), repeat=2):
            r = [0] * n
            r[j - 1], r[k - 1] = eta, eta2
            E[tuple(r)] = e_generator(rep, eta, j, eta2, k)
    return CartanBasis(rep, rep.weight_operators(), E)


def verify_cartan_basis(cb: CartanBasis) -> Report:
    rep = cb.rep
    out = Report("cartan-basis", {"rep": rep.name, "dim": rep.dim})
    roots = set(cb.E)
    for i, h in enumerate(cb.H):
        for h2 in cb.H:
            out.zero(commutator(h, h2), check="[H,H]")
        for a, ea in cb.E.items():
            out.zero(commutator(h, ea) - ea * a[i], check="[H,E]", i=i + 1, root=a)
    for a, ea in cb.E.items():
        neg = tuple(-x for x in a)
        out.truth(rep.is_adjoint(ea, cb.E[neg]), check="E(-a) adjoint of E(a)", root=a)
        for b, eb in cb.E.items():
            s = tuple(x + y for x, y in zip(a, b))
            if s not in roots and any(s):
                out.zero(commutator(ea, eb), check="[E,E] non-root", a=a, b=b)
    return out


def su2_triple_report(cb: CartanBasis) -> Report:
    out = Report("su2-triples", {"rep": cb.rep.name})
    for i in range(2, cb.n + 1):
        e, f = cb.e(1, 1, -1, i), cb.e(-1, 1, 1, i)
        h = cb.H[0] - cb.H[i - 1]
        out.zero(commutator(h, e) - e * 2, check="[h,e]=2e", i=i)
        out.zero(commutator(h, f) + f * 2, check="[h,f]=-2f", i=i)
        out.zero(commutator(e, f) - h, check="[e,f]=h", i=i)
    return out


@dataclass
class OOperators:
    O: KMatrix
    Odag: KMatrix
    O1: KMatrix
    residual_square: KMatrix
    residual_anticommutator: KMatrix


def build_O_operators(cb: CartanBasis) -> OOperators:
    n = cb.n
    if n < 2:
        raise ValueError("the O-operators need rank n >= 2")
    rep = cb.rep
    N = rep.dim
    O = KMatrix.zeros(N)
    Odag = KMatrix.zeros(N)
    O1 = cb.H[0] @ cb.H[0]
    for i in range(2, n + 1):
        O = O + cb.e(-1, 1, -1, i) @ cb.e(-1, 1, 1, i)
        Odag = Odag + cb.e(1, 1, -1, i) @ cb.e(1, 1, 1, i)
        O1 = O1 + (anticommutator(cb.e(-1, 1, -1, i), cb.e(1, 1, 1, i))
                   + anticommutator(cb.e(-1, 1, 1, i), cb.e(1, 1, -1, i))) * HALF
    sq = KMatrix.zeros(N)
    ac = KMatrix.zeros(N)
    for k in range(1, rep.m + 1):
        g1, g2 = rep.gen(1, k), rep.gen(2, k)
        sq = sq + g1 @ g1
        ac = ac + anticommutator(g1, g2)
    r1 = sq - (O1 + Odag + O)
    r2 = ac - (Odag - O) * (2 / I)
    return OOperators(O, Odag, O1, r1, r2)


def o_reduction_report(cb: CartanBasis) -> Report:
    ops = build_O_operators(cb)
    out = Report("O-reduction", {"rep": cb.rep.name, "n": cb.n})
    out.zero(ops.residual_square, check="sum_k M_1k^2 = O1 + O^dag + O")
    out.zero(ops.residual_anticommutator, check="sum_k {M_1k, M_2k} = (2/i)(O^dag - O)")
    out.truth(cb.rep.is_adjoint(ops.O, ops.Odag), check="O^dag is the adjoint of O")
    return out


def verify_claim(rep: RepSO, mu) -> Report:
    """O = O^dag = 0 and O1 = mu(n + mu - 1) Id = (c2/n) Id on s_+^{2 mu}."""
    mu = Fraction(mu)
    n = rep.algebra.rank
    out = Report("claim", {"n": n, "mu": mu, "dim": rep.dim})
    if rep.algebra.series != "D" or n < 2:
        raise ValueError("the claim concerns so(2n) with n >= 2")
    cb = cartan_basis(rep)
    ops = build_O_operators(cb)
    value = mu * (n + mu - 1)
    c2 = casimir_value(rep.algebra, (mu,) * n)
    out.zero(ops.O, check="O = 0")
    out.zero(ops.Odag, check="O^dag = 0")
    out.zero(ops.O1 - KMatrix.scalar(value, rep.dim), check="O1 = mu(n+mu-1)")
    out.zero(rep.casimir() - KMatrix.scalar(c2, rep.dim), check="casimir = c2")
    out.equal(value, c2 / n, check="mu(n+mu-1) = c2/n")
    out.info = {"O1_value": value, "c2": c2}
    return out


def identity_odd_residuals(rep: RepSO) -> dict[tuple[int, int], KMatrix]:
    """sum_k {M_ki, M_kj} - (d_ij / n) sum_{a,b} M_ab^2 for all i <= j."""
    n = rep.algebra.rank
    total = rep.casimir() * 2
    out = {}
    for i in range(1, rep.m + 1):
        for j in range(i, rep.m + 1):
            acc = KMatrix.zeros(rep.dim)
            for k in range(1, rep.m + 1):
                acc = acc + anticommutator(rep.gen(k, i), rep.gen(k, j))
            if i == j:
                acc = acc - total * Fraction(1, n)
            out[(i, j)] = acc
    return out


def verify_identity_odd(rep: RepSO) -> Report:
    out = Report("anticommutator-identity-so(2n)", {"rep": rep.name, "n": rep.algebra.rank})
    for (i, j), r in identity_odd_residuals(rep).items():
        out.zero(r, i=i, j=j)
    return out


def verify_identity_even(m: int) -> Report:
    """sum_k {M_ki, M_kj} = (n - 1) d_ij Id in the spinor of so(2n - 1)."""
    if m % 2 == 0 or m < 3:
        raise ValueError("needs odd m >= 3")
    rep = spinor_rep(m)
    n = (m + 1) // 2
    out = Report("anticommutator-identity-so(2n-1)", {"m": m, "n": n})
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            acc = KMatrix.zeros(rep.dim)
            for k in range(1, m + 1):
                acc = acc + anticommutator(rep.gen(k, i), rep.gen(k, j))
            target = KMatrix.scalar(n - 1, rep.dim) if i == j else KMatrix.zeros(rep.dim)
            out.zero(acc - target, i=i, j=j)
    return out


def ladder_operators(cb: CartanBasis) -> tuple[dict[int, KMatrix], dict[int, KMatrix]]:
    """Lower-index O_k (k = 1..n) and upper-index O^k (k = 0..n-1) operators."""
    n = cb.n
    ops = build_O_operators(cb)
    low = {1: ops.O1}
    low[2] = commutator(ops.O1, cb.simple_lowering(1)) * -2
    for k in range(3, n + 1):
        low[k] = commutator(low[k - 1], cb.simple_lowering(k - 1)) * I
    up = {n - 1: commutator(low[n - 1], cb.simple_lowering(n)) * -I}
    for k in range(n - 1, 0, -1):
        up[k - 1] = commutator(up[k], cb.simple_lowering(k)) * -I
    return low, up


def verify_ladder_properties(cb: CartanBasis) -> Report:
    n = cb.n
    if n < 2:
        raise ValueError("ladder operators need rank n >= 2")
    rep = cb.rep
    out = Report("ladder", {"rep": rep.name, "n": n})
    ops = build_O_operators(cb)
    low, up = ladder_operators(cb)
    simple = {j: cb.simple_lowering(j) for j in range(1, n + 1)}
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            if k != n - 1 and j != k:
                out.zero(commutator(low[k], simple[j]), check="[O_k, E(-a^j)] = 0", k=k, j=j)
            if k == n - 1 and j not in (n - 1, n):
                out.zero(commutator(low[k], simple[j]), check="[O_{n-1}, E(-a^j)] = 0", j=j)
    for k in range(0, n):
        for j in range(1, n + 1):
            if j != k:
                out.zero(commutator(up[k], simple[j]), check="[O^k, E(-a^j)] = 0", k=k, j=j)
    out.zero(up[0] - ops.O * (4 * I), check="O^0 = 4i O")
    for j in range(1, n + 1):
        out.zero(commutator(ops.O, simple[j]), check="[O, E(-a^j)] = 0", j=j)
    # structure facts used in the reduction
    for j in range(2, n):
        out.zero(commutator(cb.e(-1, 1, 1, j), simple[j]) + cb.e(-1, 1, 1, j + 1) * I,
                 check="[E(-e1+ej), E(-a^j)] = -i E(-e1+e(j+1))", j=j)
        out.zero(commutator(cb.e(-1, 1, -1, j + 1), simple[j]) - cb.e(-1, 1, -1, j) * I,
                 check="[E(-e1-e(j+1)), E(-a^j)] = i E(-e1-ej)", j=j)
    if n >= 3:
        out.zero(commutator(cb.e(-1, 1, 1, n - 1), simple[n]) + cb.e(-1, 1, -1, n) * I,
                 check="[E(-e1+e(n-1)), E(-a^n)] = -i E(-e1-en)")
        out.zero(commutator(cb.e(-1, 1, 1, n), simple[n]) - cb.e(-1, 1, -1, n - 1) * I,
                 check="[E(-e1+en), E(-a^n)] = i E(-e1-e(n-1))")
    if rep.highest_weight is not None:
        top = top_vector(rep)
        for i in range(2, n + 1):
            out.zero(cb.e(-1, 1, 1, i) @ top, check="E(-e1+ei)|top> = 0", i=i)
        out.zero(ops.O @ top, check="O|top> = 0")
        for k in range(2, n + 1):
            out.zero(low[k] @ top, check="O_k|top> = 0", k=k)
        for k in range(0, n):
            out.zero(up[k] @ top, check="O^k|top> = 0", k=k)
    return out


def conjecture_probe(rep: RepSO) -> Report:
    """Evaluate the so(2n) anticommutator identity in ``rep``; the outcome is recorded only."""
    res = identity_odd_residuals(rep)
    bad = {k: v for k, v in res.items() if not v.is_zero()}
    out = Report("conjecture-probe", {"rep": rep.name, "dim": rep.dim})
    out.checks = 1
    out.info = {
        "highest_weight": [str(x) for x in rep.highest_weight] if rep.highest_weight else None,
        "residual_vanishes": not bad,
        "nonzero_index_pairs": [list(k) for k in sorted(bad)][:10],
    }
    return out


def so4_vector_from_spinors() -> RepSO:
    """so(4) vector representation cut out of s_+ (x) s_- by lowering its top vector."""
    sp, sm = half_spinor(4, 1), half_spinor(4, -1)
    prod_rep = tensor_product(sp, sm)
    start = top_vector(sp).kron(top_vector(sm))
    return cyclic_rep(prod_rep, start, (Fraction(1), Fraction(0)), name="vector[so(4)] in s+*s-")
