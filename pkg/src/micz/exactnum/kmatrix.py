"""Dense exact matrices over Q(i, sqrt(t)).

Storage is one ``flint.fmpq_mat`` per non-zero component, keyed by
``(p, q)`` for the basis element ``i**p * sqrt(t)**q``.  Components that
vanish are dropped, so purely rational or purely Gaussian matrices cost
one or two rational products per multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import flint

from .scalar import Scalar, ScalarLike, join_radicands

_KEYS = ((0, 0), (1, 0), (0, 1), (1, 1))


@lru_cache(maxsize=None)
def _zero(rows: int, cols: int) -> flint.fmpq_mat:
    return flint.fmpq_mat(rows, cols)


def _fmpq(x: Fraction) -> flint.fmpq:
    return flint.fmpq(x.numerator, x.denominator)


def _frac(q: flint.fmpq) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def _scalar_parts(x: Scalar) -> dict[tuple[int, int], Fraction]:
    return {k: v for k, v in zip(_KEYS, x.components) if v}


class KMatrix:
    __slots__ = ("rows", "cols", "t", "_c")

    def __init__(self, rows: int, cols: int, comps: dict | None = None, t: int = 1):
        self.rows, self.cols = rows, cols
        zero = _zero(rows, cols)
        comps = {k: m for k, m in (comps or {}).items() if m != zero}
        if not any(q for _, q in comps):
            t = 1
        self.t = t
        self._c = comps

    # -- construction ----------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> KMatrix:
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> KMatrix:
        return cls(n, n, {(0, 0): _identity(n)})

    @classmethod
    def from_rational(cls, m: flint.fmpq_mat) -> KMatrix:
        return cls(m.nrows(), m.ncols(), {(0, 0): m})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> KMatrix:
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat: dict[tuple[int, int], list] = {}
        t = 1
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                x = Scalar.coerce(x)
                t = join_radicands(t, x.t)
                for key, v in _scalar_parts(x).items():
                    flat.setdefault(key, [0] * (nr * nc))[i * nc + j] = _fmpq(v)
        return cls(nr, nc, {k: flint.fmpq_mat(nr, nc, v) for k, v in flat.items()}, t)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]]) -> KMatrix:
        return cls.from_rows(list(zip(*columns))) if columns else cls(0, 0)

    @classmethod
    def scalar(cls, x: ScalarLike, n: int) -> KMatrix:
        return cls.identity(n) * x

    @classmethod
    def diag(cls, entries: Sequence[ScalarLike]) -> KMatrix:
        n = len(entries)
        return cls.from_rows([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # -- inspection ------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def components(self) -> dict[tuple[int, int], flint.fmpq_mat]:
        return dict(self._c)

    def entry(self, i: int, j: int) -> Scalar:
        parts = [Fraction(0)] * 4
        for key, m in self._c.items():
            parts[_KEYS.index(key)] = _frac(m[i, j])
        return Scalar._raw(*parts, self.t)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        return self.entry(*ij)

    def to_rows(self) -> list[list[Scalar]]:
        lists = {k: m.entries() for k, m in self._c.items()}
        out = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                parts = [Fraction(0)] * 4
                for key, flat in lists.items():
                    q = flat[i * self.cols + j]
                    if q:
                        parts[_KEYS.index(key)] = _frac(q)
                row.append(Scalar._raw(*parts, self.t))
            out.append(row)
        return out

    def column(self, j: int) -> list[Scalar]:
        return [self.entry(i, j) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not self._c

    def is_real(self) -> bool:
        return all(p == 0 for p, _ in self._c)

    def nonzero_entries(self, limit: int = 5) -> list[tuple[int, int, Scalar]]:
        out = []
        if not self._c:
            return out
        for i, row in enumerate(self.to_rows()):
            for j, x in enumerate(row):
                if x:
                    out.append((i, j, x))
                    if len(out) >= limit:
                        return out
        return out

    def scalar_multiple_of_identity(self) -> Scalar | None:
        """Return c when the matrix is c*Id, else None."""
        if self.rows != self.cols:
            return None
        if self.rows == 0:
            return Scalar.coerce(0)
        c = self.entry(0, 0)
        return c if self == KMatrix.scalar(c, self.rows) else None

    def trace(self) -> Scalar:
        return sum((self.entry(i, i) for i in range(self.rows)), Scalar.coerce(0))

    # -- algebra ---------------------------------------------------------
    def _check_shape(self, other: KMatrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: KMatrix) -> KMatrix:
        if not isinstance(other, KMatrix):
            return NotImplemented
        self._check_shape(other)
        t = join_radicands(self.t, other.t)
        c = dict(self._c)
        for k, m in other._c.items():
            c[k] = c[k] + m if k in c else m
        return KMatrix(self.rows, self.cols, c, t)

    def __neg__(self) -> KMatrix:
        return KMatrix(self.rows, self.cols, {k: -m for k, m in self._c.items()}, self.t)

    def __sub__(self, other: KMatrix) -> KMatrix:
        if not isinstance(other, KMatrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other: KMatrix) -> KMatrix:
        if not isinstance(other, KMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        t = join_radicands(self.t, other.t)
        out: dict = {}
        for (p1, q1), a in self._c.items():
            for (p2, q2), b in other._c.items():
                prod = a * b
                fac = (-1 if p1 and p2 else 1) * (t if q1 and q2 else 1)
                if fac != 1:
                    prod = prod * fac
                key = ((p1 + p2) % 2, (q1 + q2) % 2)
                out[key] = out[key] + prod if key in out else prod
        return KMatrix(self.rows, other.cols, out, t)

    def __mul__(self, x: ScalarLike) -> KMatrix:
        if isinstance(x, KMatrix):
            raise TypeError("use @ for matrix products")
        try:
            x = Scalar.coerce(x)
        except TypeError:
            return NotImplemented
        t = join_radicands(self.t, x.t)
        out: dict = {}
        for (p2, q2), v in _scalar_parts(x).items():
            fq = _fmpq(v)
            for (p1, q1), a in self._c.items():
                fac = fq * ((-1 if p1 and p2 else 1) * (t if q1 and q2 else 1))
                key = ((p1 + p2) % 2, (q1 + q2) % 2)
                term = a * fac
                out[key] = out[key] + term if key in out else term
        return KMatrix(self.rows, self.cols, out, t)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, KMatrix):
            return NotImplemented
        if self.shape != other.shape or self._c.keys() != other._c.keys():
            return False
        if self._c and self.t != other.t:
            return False
        return all(self._c[k] == other._c[k] for k in self._c)

    __hash__ = None

    def conj(self) -> KMatrix:
        return KMatrix(
            self.rows, self.cols, {k: (-m if k[0] else m) for k, m in self._c.items()}, self.t
        )

    @property
    def T(self) -> KMatrix:
        return KMatrix(self.cols, self.rows, {k: m.transpose() for k, m in self._c.items()}, self.t)

    @property
    def H(self) -> KMatrix:
        return self.conj().T

    def kron(self, other: KMatrix) -> KMatrix:
        t = join_radicands(self.t, other.t)
        out: dict = {}
        for (p1, q1), a in self._c.items():
            for (p2, q2), b in other._c.items():
                prod = _kron(a, b)
                fac = (-1 if p1 and p2 else 1) * (t if q1 and q2 else 1)
                if fac != 1:
                    prod = prod * fac
                key = ((p1 + p2) % 2, (q1 + q2) % 2)
                out[key] = out[key] + prod if key in out else prod
        return KMatrix(self.rows * other.rows, self.cols * other.cols, out, t)

    def take(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> KMatrix:
        """Submatrix on the given row/column index lists."""
        rows = range(self.rows) if rows is None else list(rows)
        cols = range(self.cols) if cols is None else list(cols)
        nr, nc = len(rows), len(cols)
        out = {}
        for k, m in self._c.items():
            flat = m.entries()
            w = self.cols
            out[k] = flint.fmpq_mat(nr, nc, [flat[i * w + j] for i in rows for j in cols])
        return KMatrix(nr, nc, out, self.t)

    def __repr__(self) -> str:
        return f"KMatrix({self.rows}x{self.cols}, t={self.t}, parts={sorted(self._c)})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.to_rows())


@lru_cache(maxsize=None)
def _identity(n: int) -> flint.fmpq_mat:
    return flint.fmpq_mat(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])


def _kron(a: flint.fmpq_mat, b: flint.fmpq_mat) -> flint.fmpq_mat:
    ar, ac, br, bc = a.nrows(), a.ncols(), b.nrows(), b.ncols()
    fa, fb = a.entries(), b.entries()
    zero = flint.fmpq(0)
    out = [zero] * (ar * br * ac * bc)
    width = ac * bc
    for i in range(ar):
        for j in range(ac):
            x = fa[i * ac + j]
            if not x:
                continue
            for k in range(br):
                row = (i * br + k) * width + j * bc
                for m in range(bc):
                    y = fb[k * bc + m]
                    if y:
                        out[row + m] = x * y
    return flint.fmpq_mat(ar * br, ac * bc, out)


def commutator(a: KMatrix, b: KMatrix) -> KMatrix:
    return a @ b - b @ a


def anticommutator(a: KMatrix, b: KMatrix) -> KMatrix:
    return a @ b + b @ a


def hstack(mats: Iterable[KMatrix]) -> KMatrix:
    mats = list(mats)
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("hstack needs equal row counts")
    cols = sum(m.cols for m in mats)
    t = 1
    for m in mats:
        t = join_radicands(t, m.t)
    out = {}
    for key in _KEYS:
        if not any(key in m._c for m in mats):
            continue
        flat = []
        lists = [m._c[key].entries() if key in m._c else None for m in mats]
        for i in range(rows):
            for m, lst in zip(mats, lists):
                if lst is None:
                    flat.extend([0] * m.cols)
                else:
                    flat.extend(lst[i * m.cols:(i + 1) * m.cols])
        out[key] = flint.fmpq_mat(rows, cols, flat)
    return KMatrix(rows, cols, out, t)


def block_diag(mats: Sequence[KMatrix]) -> KMatrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    t = 1
    for m in mats:
        t = join_radicands(t, m.t)
    out = {}
    for key in _KEYS:
        if not any(key in m._c for m in mats):
            continue
        flat = [0] * (rows * cols)
        r0 = c0 = 0
        for m in mats:
            if key in m._c:
                lst = m._c[key].entries()
                for i in range(m.rows):
                    base = (r0 + i) * cols + c0
                    flat[base:base + m.cols] = lst[i * m.cols:(i + 1) * m.cols]
            r0 += m.rows
            c0 += m.cols
        out[key] = flint.fmpq_mat(rows, cols, flat)
    return KMatrix(rows, cols, out, t)
