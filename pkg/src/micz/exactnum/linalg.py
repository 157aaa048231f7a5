"""Gaussian elimination over Q(i).

Vectors are lists of ``(re, im)`` pairs of ``flint.fmpq``; these helpers are
only used on representation matrices, which never need a square root.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import flint

from .kmatrix import KMatrix, hstack

Gauss = tuple[flint.fmpq, flint.fmpq]
_ZERO = flint.fmpq(0)


def _gmul(x: Gauss, y: Gauss) -> Gauss:
    return x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]


def _ginv(x: Gauss) -> Gauss:
    n = x[0] * x[0] + x[1] * x[1]
    return x[0] / n, -x[1] / n


def _nz(x: Gauss) -> bool:
    return bool(x[0]) or bool(x[1])


def columns_of(m: KMatrix) -> list[list[Gauss]]:
    if m.t != 1:
        raise ValueError("elimination helpers work over Q(i) only")
    comps = m.components()
    re = comps.get((0, 0))
    im = comps.get((1, 0))
    out = []
    for j in range(m.cols):
        out.append([
            (re[i, j] if re is not None else _ZERO, im[i, j] if im is not None else _ZERO)
            for i in range(m.rows)
        ])
    return out


def from_columns(cols: Sequence[Sequence[Gauss]], rows: int) -> KMatrix:
    k = len(cols)
    re = flint.fmpq_mat(rows, k)
    im = flint.fmpq_mat(rows, k)
    for j, v in enumerate(cols):
        for i, (a, b) in enumerate(v):
            if a:
                re[i, j] = a
            if b:
                im[i, j] = b
    return KMatrix(rows, k, {(0, 0): re, (1, 0): im})


class SpanBuilder:
    """Incrementally maintained reduced row-echelon basis of a subspace.

    Every stored vector has a 1 at its pivot coordinate and 0 at the pivot
    coordinates of all other stored vectors.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.vectors: list[list[Gauss]] = []
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.vectors)

    def reduce(self, v: Sequence[Gauss]) -> list[Gauss]:
        v = list(v)
        for p, b in zip(self.pivots, self.vectors):
            c = v[p]
            if _nz(c):
                v = [(x[0] - (c[0] * y[0] - c[1] * y[1]), x[1] - (c[0] * y[1] + c[1] * y[0]))
                     if _nz(y) else x for x, y in zip(v, b)]
        return v

    def add(self, v: Sequence[Gauss]) -> bool:
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if _nz(x)), None)
        if p is None:
            return False
        inv = _ginv(v[p])
        v = [_gmul(x, inv) if _nz(x) else x for x in v]
        for k, b in enumerate(self.vectors):
            c = b[p]
            if _nz(c):
                self.vectors[k] = [(x[0] - (c[0] * y[0] - c[1] * y[1]), x[1] - (c[0] * y[1] + c[1] * y[0]))
                                   if _nz(y) else x for x, y in zip(b, v)]
        self.vectors.append(v)
        self.pivots.append(p)
        return True

    def contains(self, v: Sequence[Gauss]) -> bool:
        return not any(_nz(x) for x in self.reduce(v))

    def basis(self) -> KMatrix:
        order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
        return from_columns([self.vectors[k] for k in order], self.dim)

    def sorted_pivots(self) -> list[int]:
        return sorted(self.pivots)


def rank(m: KMatrix) -> int:
    sb = SpanBuilder(m.rows)
    for c in columns_of(m):
        sb.add(c)
    return len(sb)


def nullspace(m: KMatrix) -> KMatrix:
    """Columns spanning the kernel of ``m`` (shape cols x k)."""
    sb = SpanBuilder(m.cols)
    for row in columns_of(m.T):
        sb.add(row)
    pivots = set(sb.pivots)
    by_pivot = dict(zip(sb.pivots, sb.vectors))
    one = (flint.fmpq(1), _ZERO)
    out = []
    for f in range(m.cols):
        if f in pivots:
            continue
        v = [(_ZERO, _ZERO)] * m.cols
        v[f] = one
        for p, row in by_pivot.items():
            c = row[f]
            if _nz(c):
                v[p] = (-c[0], -c[1])
        out.append(v)
    return from_columns(out, m.cols)


def joint_eigenspace(mats: Iterable[KMatrix], values: Iterable) -> KMatrix:
    """Kernel of the stacked ``M_j - v_j Id``: the simultaneous eigenspace."""
    blocks = [m - KMatrix.scalar(v, m.rows) for m, v in zip(mats, values)]
    return nullspace(vstack(blocks))


def vstack(mats: Sequence[KMatrix]) -> KMatrix:
    return hstack([m.T for m in mats]).T
