"""Verification reports: counts of exact checks plus the worst offending residual."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactnum import KMatrix, Scalar

MAX_FAILURES_KEPT = 10


def exact_str(x: Any) -> Any:
    """JSON-friendly exact rendering of scalars, fractions and nested containers."""
    if isinstance(x, (Scalar, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): exact_str(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact_str(v) for v in x]
    return x


@dataclass
class Report:
    identity: str
    params: dict = field(default_factory=dict)
    checks: int = 0
    points_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    n_failures: int = 0
    worst: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.n_failures == 0 and self.checks > 0

    def fail(self, where: dict, entries: list[str] | None = None):
        self.n_failures += 1
        entries = entries or []
        if len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append({"where": exact_str(where), "residual": entries})
        if len(entries) > len(self.worst) or not self.worst:
            self.worst = entries

    def zero(self, residual: KMatrix | Scalar | Fraction | int, **where) -> bool:
        """Record one exact check that ``residual`` vanishes."""
        self.checks += 1
        if isinstance(residual, KMatrix):
            if residual.is_zero():
                return True
            entries = [f"[{i},{j}]={v}" for i, j, v in residual.nonzero_entries()]
        else:
            if not residual:
                return True
            entries = [str(residual)]
        self.fail(where, entries)
        return False

    def equal(self, lhs, rhs, **where) -> bool:
        self.checks += 1
        if lhs == rhs:
            return True
        self.fail(where, [f"lhs={exact_str(lhs)}", f"rhs={exact_str(rhs)}"])
        return False

    def truth(self, ok: bool, **where) -> bool:
        self.checks += 1
        if not ok:
            self.fail(where)
        return ok

    def absorb(self, other: Report) -> Report:
        self.checks += other.checks
        for f in other.failures:
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append({"identity": other.identity, **f})
        if other.n_failures and len(other.worst) >= len(self.worst):
            self.worst = other.worst
        self.n_failures += other.n_failures
        return self

    def to_dict(self) -> dict:
        out = {"identity": self.identity}
        out.update(exact_str(self.params))
        out.update(
            points_checked=self.points_checked,
            checks=self.checks,
            failures=self.n_failures,
            max_residual_entries=self.worst,
            failure_samples=self.failures,
        )
        if self.info:
            out["info"] = exact_str(self.info)
        out["pass"] = self.passed
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={exact_str(v)}" for k, v in self.params.items())
        return f"{status} {self.identity} {params} checks={self.checks} failures={self.n_failures}".replace("  ", " ")
