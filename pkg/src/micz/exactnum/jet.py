"""Truncated multivariate Taylor expansions ("jets") with exact coefficients.

A jet of order ``k`` at base point ``b`` stores the Taylor coefficients
``c_g`` of ``f(b + h) = sum_g c_g h^g`` for every multi-index ``g`` of total
degree at most ``k``.  Monomials are ordered by degree first, so the
coefficients of a lower-order truncation are a prefix of the higher-order
list; everything below relies on that.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

import flint

from .kmatrix import KMatrix, _fmpq, _frac, _KEYS
from .scalar import Scalar, ScalarLike, as_rat, join_radicands

MAX_ORDER = 4

MultiIndex = tuple[int, ...]


# -- monomial bookkeeping ---------------------------------------------------

@lru_cache(maxsize=None)
def monomials(nvars: int, order: int) -> tuple[MultiIndex, ...]:
    out = []
    for deg in range(order + 1):
        block = []
        for combo in combinations_with_replacement(range(nvars), deg):
            g = [0] * nvars
            for v in combo:
                g[v] += 1
            block.append(tuple(g))
        out.extend(sorted(block, reverse=True))
    return tuple(out)


def n_monomials(nvars: int, order: int) -> int:
    return comb(nvars + order, order)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, order: int) -> dict[MultiIndex, int]:
    return {g: i for i, g in enumerate(monomials(nvars, order))}


@lru_cache(maxsize=None)
def product_table(nvars: int, order: int) -> tuple[tuple[int, int, int], ...]:
    """Triples (i, j, k) with monomial_i + monomial_j == monomial_k."""
    monos = monomials(nvars, order)
    index = monomial_index(nvars, order)
    out = []
    for k, g in enumerate(monos):
        for i, a in enumerate(monos):
            if sum(a) > sum(g):
                break
            if all(x <= y for x, y in zip(a, g)):
                out.append((i, index[tuple(y - x for x, y in zip(a, g))], k))
    return tuple(out)


@lru_cache(maxsize=None)
def derivative_table(nvars: int, order: int, var: int) -> tuple[tuple[int, int, int], ...]:
    """Triples (src, dst, factor) for d/dx_var from order to order - 1."""
    index = monomial_index(nvars, order)
    out = []
    for dst, g in enumerate(monomials(nvars, order - 1)):
        up = list(g)
        up[var] += 1
        out.append((index[tuple(up)], dst, up[var]))
    return tuple(out)


@lru_cache(maxsize=None)
def derivative_matrix(nvars: int, order: int, var: int) -> KMatrix:
    rows, cols = n_monomials(nvars, order - 1), n_monomials(nvars, order)
    flat = [0] * (rows * cols)
    for src, dst, fac in derivative_table(nvars, order, var):
        flat[dst * cols + src] = fac
    return KMatrix(rows, cols, {(0, 0): flint.fmpq_mat(rows, cols, flat)})


def _check_order(order: int):
    if not 0 <= order <= MAX_ORDER:
        raise ValueError(f"jet order must be in 0..{MAX_ORDER}, got {order}")


def _parts(x: Scalar) -> dict[tuple[int, int], flint.fmpq]:
    return {k: _fmpq(v) for k, v in zip(_KEYS, x.components) if v}


def _mul_key(k1, k2, t):
    (p1, q1), (p2, q2) = k1, k2
    fac = (-1 if p1 and p2 else 1) * (t if q1 and q2 else 1)
    return ((p1 + p2) % 2, (q1 + q2) % 2), fac


# -- scalar jets ------------------------------------------------------------

class Jet:
    """Scalar-valued jet with coefficients in Q(i, sqrt(t))."""

    __slots__ = ("base", "order", "t", "_c", "_conv", "_scalars")

    def __init__(self, base: Sequence, order: int, comps: dict, t: int = 1):
        _check_order(order)
        self.base = tuple(as_rat(x) for x in base)
        self.order = order
        m = n_monomials(len(self.base), order)
        comps = {k: list(v[:m]) for k, v in comps.items() if any(v[:m])}
        self.t = t if any(q for _, q in comps) else 1
        self._c = comps
        self._conv: dict = {}
        self._scalars = None

    @property
    def nvars(self) -> int:
        return len(self.base)

    @property
    def size(self) -> int:
        return n_monomials(self.nvars, self.order)

    # -- constructors ----------------------------------------------------
    @classmethod
    def constant(cls, value: ScalarLike, base: Sequence, order: int) -> Jet:
        value = Scalar.coerce(value)
        m = n_monomials(len(base), order)
        comps = {}
        for k, v in _parts(value).items():
            lst = [flint.fmpq(0)] * m
            lst[0] = v
            comps[k] = lst
        return cls(base, order, comps, value.t)

    @classmethod
    def variable(cls, var: int, base: Sequence, order: int) -> Jet:
        """The coordinate function x_var expanded at ``base``."""
        m = n_monomials(len(base), order)
        lst = [flint.fmpq(0)] * m
        lst[0] = _fmpq(as_rat(base[var]))
        if order >= 1:
            e = [0] * len(base)
            e[var] = 1
            lst[monomial_index(len(base), order)[tuple(e)]] = flint.fmpq(1)
        return cls(base, order, {(0, 0): lst})

    @classmethod
    def from_coefficients(cls, coeffs: dict[MultiIndex, ScalarLike], base: Sequence, order: int) -> Jet:
        index = monomial_index(len(base), order)
        m = len(index)
        comps: dict = {}
        t = 1
        for g, v in coeffs.items():
            if sum(g) > order:
                continue
            v = Scalar.coerce(v)
            t = join_radicands(t, v.t)
            for k, q in _parts(v).items():
                comps.setdefault(k, [flint.fmpq(0)] * m)[index[tuple(g)]] = q
        return cls(base, order, comps, t)

    # -- access ----------------------------------------------------------
    def scalars(self) -> list[Scalar]:
        if self._scalars is None:
            out = []
            for i in range(self.size):
                parts = [Fraction(0)] * 4
                for k, lst in self._c.items():
                    if lst[i]:
                        parts[_KEYS.index(k)] = _frac(lst[i])
                out.append(Scalar._raw(*parts, self.t))
            self._scalars = out
        return self._scalars

    def coefficient(self, alpha: MultiIndex) -> Scalar:
        idx = monomial_index(self.nvars, self.order).get(tuple(alpha))
        if idx is None:
            raise KeyError(f"multi-index {alpha} beyond order {self.order}")
        return self.scalars()[idx]

    def coefficients(self) -> dict[MultiIndex, Scalar]:
        monos = monomials(self.nvars, self.order)
        return {g: x for g, x in zip(monos, self.scalars()) if x}

    def value(self) -> Scalar:
        return self.scalars()[0]

    def gradient(self) -> list[Scalar]:
        if self.order < 1:
            raise ValueError("gradient needs order >= 1")
        return [self.coefficient(tuple(int(i == v) for i in range(self.nvars))) for v in range(self.nvars)]

    def is_zero(self) -> bool:
        return not self._c

    def truncate(self, order: int) -> Jet:
        if order > self.order:
            raise ValueError("cannot raise the order of a jet")
        if order == self.order:
            return self
        return Jet(self.base, order, self._c, self.t)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> Jet:
        if isinstance(other, Jet):
            if other.base != self.base:
                raise ValueError("jets live at different base points")
            return other
        return Jet.constant(Scalar.coerce(other), self.base, self.order)

    def __add__(self, other) -> Jet:
        o = self._coerce(other)
        order = min(self.order, o.order)
        m = n_monomials(self.nvars, order)
        t = join_radicands(self.t, o.t)
        comps = {k: list(v[:m]) for k, v in self._c.items()}
        for k, v in o._c.items():
            if k in comps:
                comps[k] = [x + y for x, y in zip(comps[k], v)]
            else:
                comps[k] = list(v[:m])
        return Jet(self.base, order, comps, t)

    __radd__ = __add__

    def __neg__(self) -> Jet:
        return Jet(self.base, self.order, {k: [-x for x in v] for k, v in self._c.items()}, self.t)

    def __sub__(self, other) -> Jet:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Jet:
        return (-self) + other

    def scale(self, x: ScalarLike) -> Jet:
        x = Scalar.coerce(x)
        t = join_radicands(self.t, x.t)
        comps: dict = {}
        for kx, qx in _parts(x).items():
            for k, v in self._c.items():
                key, fac = _mul_key(k, kx, t)
                q = qx * fac
                new = [y * q for y in v]
                comps[key] = [a + b for a, b in zip(comps[key], new)] if key in comps else new
        return Jet(self.base, self.order, comps, t)

    def __mul__(self, other) -> Jet:
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, Jet):
            return NotImplemented
        o = self._coerce(other)
        order = min(self.order, o.order)
        m = n_monomials(self.nvars, order)
        table = product_table(self.nvars, order)
        t = join_radicands(self.t, o.t)
        comps: dict = {}
        for k1, a in self._c.items():
            for k2, b in o._c.items():
                key, fac = _mul_key(k1, k2, t)
                acc = comps.setdefault(key, [flint.fmpq(0)] * m)
                for i, j, k in table:
                    x, y = a[i], b[j]
                    if x and y:
                        acc[k] += fac * x * y if fac != 1 else x * y
        return Jet(self.base, order, comps, t)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Jet:
        if isinstance(other, Jet):
            return self * other.inverse()
        return self.scale(Scalar.coerce(1) / Scalar.coerce(other))

    def __rtruediv__(self, other) -> Jet:
        return self.inverse().scale(Scalar.coerce(other))

    def __pow__(self, k: int) -> Jet:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = Jet.constant(1, self.base, self.order)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Jet):
            return NotImplemented
        return (self.base, self.order) == (other.base, other.order) and (self - other).is_zero()

    __hash__ = None

    def deriv(self, var: int) -> Jet:
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 jet")
        m = n_monomials(self.nvars, self.order - 1)
        comps = {}
        table = derivative_table(self.nvars, self.order, var)
        for k, v in self._c.items():
            out = [flint.fmpq(0)] * m
            for src, dst, fac in table:
                out[dst] = v[src] * fac
            comps[k] = out
        return Jet(self.base, self.order - 1, comps, self.t)

    def _series(self, coeffs: Sequence[Scalar]) -> Jet:
        """sum_k coeffs[k] * u**k where u is the jet minus its constant term."""
        c0 = self.value()
        u = self - c0
        out = Jet.constant(coeffs[self.order], self.base, self.order)
        for k in range(self.order - 1, -1, -1):
            out = out * u + coeffs[k]
        return out

    def inverse(self) -> Jet:
        c0 = self.value()
        if not c0:
            raise ZeroDivisionError("jet with vanishing constant term has no inverse")
        inv = c0.inverse()
        coeffs, p = [], inv
        for _ in range(self.order + 1):
            coeffs.append(p)
            p = -p * inv
        return self._series(coeffs)

    def sqrt(self, root: ScalarLike) -> Jet:
        """Square root whose constant term is ``root`` (``root**2`` must match)."""
        root = Scalar.coerce(root)
        c0 = self.value()
        if root * root != c0:
            raise ValueError(f"{root} is not a square root of {c0}")
        if not c0:
            raise ZeroDivisionError("square root is not smooth at a zero")
        inv = c0.inverse()
        coeffs, p = [], root
        for k in range(self.order + 1):
            coeffs.append(p * _binom_half(k))
            p = p * inv
        return self._series(coeffs)

    # -- linear-operator views --------------------------------------------
    def conv(self, out_order: int, in_order: int | None = None) -> KMatrix:
        """Matrix of ``g -> (self * g)`` from order-``in_order`` to order-``out_order`` coefficients."""
        in_order = out_order if in_order is None else in_order
        if out_order > min(self.order, in_order):
            raise ValueError("product order exceeds available jet order")
        key = (out_order, in_order)
        hit = self._conv.get(key)
        if hit is not None:
            return hit
        rows = n_monomials(self.nvars, out_order)
        cols = n_monomials(self.nvars, in_order)
        table = product_table(self.nvars, out_order)
        comps = {}
        for k, v in self._c.items():
            flat = [0] * (rows * cols)
            for i, j, kk in table:
                if v[i]:
                    flat[kk * cols + j] = v[i]
            comps[k] = flint.fmpq_mat(rows, cols, flat)
        out = KMatrix(rows, cols, comps, self.t)
        self._conv[key] = out
        return out

    def __repr__(self) -> str:
        return f"Jet(order={self.order}, value={self.value()})"


@lru_cache(maxsize=None)
def _binom_half(k: int) -> Fraction:
    out = Fraction(1)
    for j in range(k):
        out *= (Fraction(1, 2) - j) / (j + 1)
    return out


def jet_of_radius(base: Sequence, order: int) -> Jet:
    """Jet of r = |x| at a non-zero base point; constant term sqrt(sum x_i^2)."""
    base = tuple(as_rat(x) for x in base)
    s = sum(x * x for x in base)
    if s == 0:
        raise ValueError("the radius is not smooth at the origin")
    rho = sum((Jet.variable(i, base, order) ** 2 for i in range(len(base))), Jet.constant(0, base, order))
    return rho.sqrt(Scalar.sqrt_of(s))


def jet_inverse(j: Jet) -> Jet:
    return j.inverse()


# -- matrix-valued jets -----------------------------------------------------

class MatrixJet:
    """Jet whose Taylor coefficients are square KMatrix values."""

    __slots__ = ("base", "order", "coeffs")

    def __init__(self, base: Sequence, order: int, coeffs: Sequence[KMatrix]):
        _check_order(order)
        self.base = tuple(as_rat(x) for x in base)
        self.order = order
        m = n_monomials(len(self.base), order)
        if len(coeffs) < m:
            raise ValueError("too few coefficients")
        self.coeffs = tuple(coeffs[:m])

    @property
    def nvars(self) -> int:
        return len(self.base)

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs[0].shape

    @classmethod
    def constant(cls, mat: KMatrix, base: Sequence, order: int) -> MatrixJet:
        zero = KMatrix.zeros(*mat.shape)
        m = n_monomials(len(base), order)
        return cls(base, order, [mat] + [zero] * (m - 1))

    @classmethod
    def from_scalar(cls, jet: Jet, mat: KMatrix) -> MatrixJet:
        """The jet of f(x) * mat for a scalar jet f and a constant matrix."""
        zero = KMatrix.zeros(*mat.shape)
        return cls(jet.base, jet.order, [mat * c if c else zero for c in jet.scalars()])

    def value(self) -> KMatrix:
        return self.coeffs[0]

    def coefficient(self, alpha: MultiIndex) -> KMatrix:
        return self.coeffs[monomial_index(self.nvars, self.order)[tuple(alpha)]]

    def truncate(self, order: int) -> MatrixJet:
        if order > self.order:
            raise ValueError("cannot raise the order of a jet")
        return MatrixJet(self.base, order, self.coeffs)

    def _align(self, other: MatrixJet) -> int:
        if other.base != self.base:
            raise ValueError("jets live at different base points")
        return min(self.order, other.order)

    def __add__(self, other: MatrixJet) -> MatrixJet:
        if not isinstance(other, MatrixJet):
            return NotImplemented
        order = self._align(other)
        return MatrixJet(self.base, order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> MatrixJet:
        return MatrixJet(self.base, self.order, [-a for a in self.coeffs])

    def __sub__(self, other: MatrixJet) -> MatrixJet:
        return self + (-other)

    def __mul__(self, other) -> MatrixJet:
        """Multiply by a scalar or by a scalar jet (Leibniz rule)."""
        if isinstance(other, Jet):
            order = min(self.order, other.order)
            f = other.scalars()
            out = [KMatrix.zeros(*self.shape) for _ in range(n_monomials(self.nvars, order))]
            for i, j, k in product_table(self.nvars, order):
                if f[i] and not self.coeffs[j].is_zero():
                    out[k] = out[k] + self.coeffs[j] * f[i]
            return MatrixJet(self.base, order, out)
        try:
            x = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return MatrixJet(self.base, self.order, [a * x for a in self.coeffs])

    __rmul__ = __mul__

    def __matmul__(self, other: MatrixJet) -> MatrixJet:
        if not isinstance(other, MatrixJet):
            return NotImplemented
        order = self._align(other)
        out = [KMatrix.zeros(self.shape[0], other.shape[1]) for _ in range(n_monomials(self.nvars, order))]
        for i, j, k in product_table(self.nvars, order):
            a, b = self.coeffs[i], other.coeffs[j]
            if not a.is_zero() and not b.is_zero():
                out[k] = out[k] + a @ b
        return MatrixJet(self.base, order, out)

    def deriv(self, var: int) -> MatrixJet:
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 jet")
        m = n_monomials(self.nvars, self.order - 1)
        out = [None] * m
        for src, dst, fac in derivative_table(self.nvars, self.order, var):
            out[dst] = self.coeffs[src] * fac
        return MatrixJet(self.base, self.order - 1, out)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixJet):
            return NotImplemented
        return self.base == other.base and self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None


def jet_commutator(a: MatrixJet, b: MatrixJet) -> MatrixJet:
    return a @ b - b @ a
