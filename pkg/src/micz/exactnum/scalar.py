"""Exact scalars in Q(i, sqrt(t)).

A :class:`Scalar` is ``(a + b i) + (c + d i) sqrt(t)`` with rational
components.  The radicand is kept canonical: a squarefree positive integer,
with ``t == 1`` meaning "no extension".  Any rational radicand passed in is
rewritten (``sqrt(p/q) = f/q * sqrt(t)`` with ``p q = f^2 t``), so two scalars
built over the same square root always compare by components.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rat = Fraction
ScalarLike = Union[int, Fraction, "Scalar"]


def as_rat(x: int | Fraction | str) -> Fraction:
    """Coerce to an exact rational.  Floats are refused on purpose."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@lru_cache(maxsize=4096)
def split_square(m: int) -> tuple[int, int]:
    """Return ``(f, t)`` with ``m == f*f*t`` and ``t`` squarefree."""
    if m <= 0:
        raise ValueError("split_square needs a positive integer")
    f, t, p = 1, m, 2
    while p * p <= t:
        while t % (p * p) == 0:
            t //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return f, t


def radicand_factor(s: int | Fraction) -> tuple[Fraction, int]:
    """sqrt(s) == factor * sqrt(t) with t squarefree."""
    s = as_rat(s)
    if s <= 0:
        raise ValueError(f"radicand must be positive, got {s}")
    f, t = split_square(s.numerator * s.denominator)
    return Fraction(f, s.denominator), t


def join_radicands(t1: int, t2: int) -> int:
    if t1 == 1:
        return t2
    if t2 == 1 or t1 == t2:
        return t1
    raise ValueError(f"mismatched radicands sqrt({t1}) and sqrt({t2})")


def _cmul(a, b, c, d):
    return a * c - b * d, a * d + b * c


class Scalar:
    __slots__ = ("a", "b", "c", "d", "t")

    def __init__(self, a=0, b=0, c=0, d=0, s=1):
        a, b, c, d = as_rat(a), as_rat(b), as_rat(c), as_rat(d)
        f, t = radicand_factor(s)
        c, d = c * f, d * f
        if t == 1:
            a, b, c, d = a + c, b + d, Fraction(0), Fraction(0)
        self._set(a, b, c, d, t)

    def _set(self, a, b, c, d, t):
        if not c and not d:
            t = 1
        self.a, self.b, self.c, self.d, self.t = a, b, c, d, t

    @classmethod
    def _raw(cls, a, b, c, d, t) -> Scalar:
        obj = cls.__new__(cls)
        obj._set(a, b, c, d, t)
        return obj

    @classmethod
    def sqrt_of(cls, s: int | Fraction) -> Scalar:
        """The positive square root of a positive rational."""
        f, t = radicand_factor(s)
        if t == 1:
            return cls._raw(f, Fraction(0), Fraction(0), Fraction(0), 1)
        return cls._raw(Fraction(0), Fraction(0), f, Fraction(0), t)

    @classmethod
    def coerce(cls, x: ScalarLike) -> Scalar:
        if isinstance(x, Scalar):
            return x
        return cls._raw(as_rat(x), Fraction(0), Fraction(0), Fraction(0), 1)

    I: Scalar  # set below

    # -- structure -------------------------------------------------------
    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c, self.d

    @property
    def radicand(self) -> int:
        return self.t

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def is_zero(self) -> bool:
        return not self

    # -- arithmetic ------------------------------------------------------
    def __neg__(self) -> Scalar:
        return Scalar._raw(-self.a, -self.b, -self.c, -self.d, self.t)

    def __pos__(self) -> Scalar:
        return self

    def __add__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        t = join_radicands(self.t, o.t)
        return Scalar._raw(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d, t)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        t = join_radicands(self.t, o.t)
        # (x1 + y1 r)(x2 + y2 r) with x, y in Q(i) and r*r = t
        x1, y1 = (self.a, self.b), (self.c, self.d)
        x2, y2 = (o.a, o.b), (o.c, o.d)
        xx = _cmul(*x1, *x2)
        yy = _cmul(*y1, *y2)
        xy = _cmul(*x1, *y2)
        yx = _cmul(*y1, *x2)
        return Scalar._raw(
            xx[0] + t * yy[0], xx[1] + t * yy[1], xy[0] + yx[0], xy[1] + yx[1], t
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("Scalar division by zero")
        t = self.t
        # 1/(x + y r) = (x - y r) / (x^2 - t y^2), then divide by a Gaussian rational.
        x, y = (self.a, self.b), (self.c, self.d)
        x2 = _cmul(*x, *x)
        y2 = _cmul(*y, *y)
        w = (x2[0] - t * y2[0], x2[1] - t * y2[1])
        nrm = w[0] * w[0] + w[1] * w[1]
        winv = (w[0] / nrm, -w[1] / nrm)
        p = _cmul(*x, *winv)
        q = _cmul(-y[0], -y[1], *winv)
        return Scalar._raw(p[0], p[1], q[0], q[1], t)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = Scalar.coerce(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conj(self) -> Scalar:
        """Complex conjugate (sqrt(t) is real and positive)."""
        return Scalar._raw(self.a, -self.b, self.c, -self.d, self.t)

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.t, self.a, self.b, self.c, self.d) == (o.t, o.a, o.b, o.c, o.d)

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.a)
        return hash((self.t, self.a, self.b, self.c, self.d))

    # -- text ------------------------------------------------------------
    def __str__(self) -> str:
        parts = []
        root = f"*sqrt({self.t})"
        for coef, suffix in ((self.a, ""), (self.b, "*i"), (self.c, root), (self.d, "*i" + root)):
            if not coef:
                continue
            txt = f"{coef}{suffix}"
            if parts and not txt.startswith("-"):
                txt = "+" + txt
            parts.append(txt)
        return "".join(parts) or "0"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Inverse of ``str``: accepts e.g. ``"3/25-4/25*i"`` or ``"1+2*sqrt(5)"``."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty scalar string")
        pos, a, b, c, d, t = 0, *(Fraction(0),) * 4, 1
        for m in _TERM.finditer(text):
            if m.start() != pos:
                break
            pos = m.end()
            coef = Fraction(m.group(1))
            imag = bool(m.group(2))
            if m.group(3):
                t = join_radicands(t, int(m.group(3)))
                if imag:
                    d += coef
                else:
                    c += coef
            elif imag:
                b += coef
            else:
                a += coef
        if pos != len(text):
            raise ValueError(f"cannot parse scalar {text!r}")
        return cls(a, b, c, d, t)


_TERM = re.compile(r"([+-]?\d+(?:/\d+)?)(\*i)?(?:\*sqrt\((\d+)\))?")

Scalar.I = Scalar._raw(Fraction(0), Fraction(1), Fraction(0), Fraction(0), 1)


def scalar_arith(a: ScalarLike, b: ScalarLike, op: str) -> Scalar:
    """Binary field operation, ``op`` one of ``+ - * /`` (``×``/``÷`` also accepted)."""
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operation {op!r}")
