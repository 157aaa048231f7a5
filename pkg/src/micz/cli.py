"""Command-line front end: ``micz <command> [--dim D] [--mu p/q] ...``.

Exit status: 0 when every exact check passed, 1 when any failed, 2 for an
invalid (D, mu) combination or other usage error, 3 when a representation
would exceed the size budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Iterator

from . import monopole as mp
from . import operators as ops
from . import spectrum as sp
from . import spinrep as sr
from .clifford import build_gammas, verify_clifford
from .repcalc import EVEN_D_RESTRICTION, branching_sum_check, check_charge
from .report import Report, exact_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
COMMANDS = (
    "verify-clifford", "verify-monopole", "verify-operators", "verify-rep", "verify-claim",
    "verify-ladder", "conjecture-probe", "spectrum", "level-table", "all",
)
ALL_DIMS = range(3, 8)
MONOPOLE_POINTS = 20
OPERATOR_POINTS, OPERATOR_SECTIONS = 5, 3
MAX_ABS_MU = Fraction(3, 2)
_FRACTION = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(ValueError):
    pass


def parse_mu(text: str) -> Fraction:
    if not _FRACTION.match(text.strip()):
        raise argparse.ArgumentTypeError(f"mu must be an exact integer or fraction like 1/2, got {text!r}")
    return Fraction(text.strip())


def allowed_charges(D: int, max_abs: Fraction = MAX_ABS_MU) -> list[Fraction]:
    if D % 2 == 0:
        return [Fraction(0), Fraction(1, 2)]
    out = [Fraction(0)]
    k = Fraction(1, 2)
    while k <= max_abs:
        out += [k, -k]
        k += Fraction(1, 2)
    return out


def _charge(args) -> Fraction:
    try:
        return check_charge(args.dim, args.mu)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _need_dim(args, lo: int = 3) -> int:
    if args.dim is None:
        raise UsageError("--dim is required for this command")
    if args.dim < lo:
        raise UsageError(f"dimension D must be at least {lo}, got {args.dim}")
    return args.dim


# -- suites -------------------------------------------------------------------

def suite_clifford(args) -> Iterator[Report]:
    dims = [args.dim] if args.dim is not None else range(2, 9)
    for d in dims:
        if d < 2:
            raise UsageError(f"gamma dimension must be at least 2, got {d}")
        yield verify_clifford(build_gammas(d))


def suite_monopole(args) -> Iterator[Report]:
    D = _need_dim(args)
    mu = _charge(args)
    rep = sr.young_power_rep(D - 1, mu, args.budget)
    pts = mp.sample_points(D, args.points or MONOPOLE_POINTS, args.seed)
    for r in (mp.check_curvature_agreement(rep, D, pts), mp.check_lemma_part1(rep, D, pts)):
        r.params["mu"] = mu
        yield r
    if D % 2:
        yield mp.check_lemma_part2((D - 1) // 2, mu, pts, rep)
    elif mu:
        r = mp.check_lemma_part3(D // 2, pts, rep)
        r.params["mu"] = mu
        yield r


def suite_operators(args) -> Iterator[Report]:
    D = _need_dim(args)
    mu = _charge(args)
    spec = ops.ProblemSpec.build(D, mu, args.budget)
    pts = mp.sample_points(D, args.points or OPERATOR_POINTS, args.seed)
    secs = ops.random_polynomial_sections(spec, args.sections or OPERATOR_SECTIONS, args.seed)
    rels = [r for r in ops.RELATIONS if ops._NEEDED_ORDER[r] <= args.order]
    yield ops.check_symmetry_algebra(spec, pts, secs, rels)
    if args.order >= 4:
        yield ops.check_lrl_square(spec, pts, secs)


def suite_rep(args) -> Iterator[Report]:
    D = _need_dim(args)
    mu = _charge(args)
    rep = sr.young_power_rep(D - 1, mu, args.budget)
    yield sr.verify_rep(rep)
    if D % 2 and D >= 5:
        yield sr.verify_identity_odd(rep)
    elif D % 2 == 0 and mu:
        yield sr.verify_identity_even(D - 1)


def _claim_rep(args) -> tuple[sr.RepSO, Fraction]:
    D = _need_dim(args, 5)
    mu = _charge(args)
    if D % 2 == 0:
        raise UsageError("the Cartan-basis suites concern so(2n), i.e. odd D >= 5")
    if mu < 0:
        raise UsageError("the Cartan-basis suites concern s_+^{2 mu}, so mu >= 0")
    return sr.young_power_rep(D - 1, mu, args.budget), mu


def suite_claim(args) -> Iterator[Report]:
    rep, mu = _claim_rep(args)
    yield sr.verify_claim(rep, mu)
    yield sr.o_reduction_report(sr.cartan_basis(rep))


def suite_ladder(args) -> Iterator[Report]:
    rep, _ = _claim_rep(args)
    cb = sr.cartan_basis(rep)
    yield sr.verify_cartan_basis(cb)
    yield sr.su2_triple_report(cb)
    yield sr.o_reduction_report(cb)
    yield sr.verify_ladder_properties(cb)


def suite_probe(args) -> Iterator[Report]:
    D = _need_dim(args, 5)
    if D % 2 == 0:
        raise UsageError("the probe concerns so(2n), i.e. odd D >= 5")
    m = D - 1
    reps = [sr.trivial_rep(m)]
    for k in (1, 2):
        reps += [sr.cartan_power(sr.half_spinor(m, 1), k, args.budget),
                 sr.cartan_power(sr.half_spinor(m, -1), k, args.budget)]
    reps.append(sr.vector_rep(m))
    if m == 4:
        reps.append(sr.so4_vector_from_spinors())
    for rep in reps:
        yield sr.conjecture_probe(rep)


def suite_spectrum(args) -> Iterator[Report]:
    D = _need_dim(args)
    mu = _charge(args)
    yield sp.spectrum_report(D, mu, args.levels)
    for I in range(args.levels + 1):
        yield sp.casimir_hamiltonian_check(D, mu, I)
        yield branching_sum_check(D, mu, I)


def suite_all(args) -> Iterator[Report]:
    sub = argparse.Namespace(**vars(args))
    sub.dim = None
    # the operator suite dominates the run time; keep it light unless asked
    light = argparse.Namespace(**vars(args))
    light.points = args.points or 3
    light.sections = args.sections or 1
    yield from suite_clifford(sub)
    for D in ALL_DIMS:
        for mu in allowed_charges(D):
            sub.dim, sub.mu = D, mu
            yield from suite_rep(sub)
            yield from suite_monopole(sub)
            light.dim, light.mu = D, mu
            yield from suite_operators(light)
            yield from suite_spectrum(sub)
            if D % 2 and D >= 5 and mu >= 0:
                yield from suite_claim(sub)
                if mu:
                    yield from suite_ladder(sub)


SUITES: dict[str, Callable] = {
    "verify-clifford": suite_clifford,
    "verify-monopole": suite_monopole,
    "verify-operators": suite_operators,
    "verify-rep": suite_rep,
    "verify-claim": suite_claim,
    "verify-ladder": suite_ladder,
    "conjecture-probe": suite_probe,
    "spectrum": suite_spectrum,
    "all": suite_all,
}


# -- output -----------------------------------------------------------------------

CSV_HEADER = ("identity", "params", "checks", "failures", "pass")


def _csv_line(r: Report) -> str:
    params = ";".join(f"{k}={exact_str(v)}" for k, v in r.params.items())
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow([r.identity, params, r.checks, r.n_failures, str(r.passed).lower()])
    return buf.getvalue()


def emit(r: Report, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
    elif fmt == "csv":
        out.write(_csv_line(r) + "\n")
    else:
        out.write(r.line() + "\n")
        if r.info and r.identity in ("conjecture-probe", "lemma-part3", "claim"):
            out.write("    info: " + json.dumps(r.to_dict().get("info"), sort_keys=True) + "\n")
        for f in r.failures[:3]:
            out.write("    failure: " + json.dumps(f, sort_keys=True) + "\n")


def _level_table_text(table: dict) -> str:
    lines = [f"D={table['D']} mu={table['mu']}", "I  E  weight  degeneracy  constituents(k,l:dim)"]
    for lev in table["levels"]:
        cons = " ".join(f"({c['k']},{c['l']}:{c['dim']})" for c in lev["constituents"])
        lines.append(f"{lev['I']}  {lev['E']}  ({', '.join(lev['weight'])})  {lev['degeneracy']}  {cons}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="micz", description="Exact verification of the monopole Kepler problem in D dimensions.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--dim", "-D", type=int, default=None, help="space dimension D (gamma dimension for verify-clifford)")
    p.add_argument("--mu", type=parse_mu, default=Fraction(0), help="magnetic charge as an exact fraction, e.g. 1/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=None,
                   help=f"sample points (default {MONOPOLE_POINTS} for monopole, {OPERATOR_POINTS} for operators)")
    p.add_argument("--sections", type=int, default=None, help=f"polynomial test sections (default {OPERATOR_SECTIONS})")
    p.add_argument("--order", type=int, default=4, choices=range(2, 5), help="jet order of test sections")
    p.add_argument("--budget", type=int, default=None, help="size budget for k * dim^k in tensor powers")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--levels", type=int, default=None, help="highest level I for spectrum tables")
    return p


def _attach_negative_mu(argv: list[str]) -> list[str]:
    """Rewrite ``--mu -3/2`` as ``--mu=-3/2`` so argparse does not read it as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--mu":
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and _FRACTION.match(nxt):
                out.append(f"--mu={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _attach_negative_mu(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.levels is None:
        args.levels = 4 if args.command == "all" else 3
    if (args.points is not None and args.points < 1) or (args.sections is not None and args.sections < 1) or args.levels < 0:
        err.write("micz: --points and --sections must be positive and --levels non-negative\n")
        return EXIT_USAGE
    try:
        if args.command == "level-table":
            _need_dim(args)
            _charge(args)
            table = sp.level_table(args.dim, args.mu, args.levels)
            if args.format == "json":
                out.write(json.dumps(table, sort_keys=True) + "\n")
            elif args.format == "csv":
                out.write(sp.level_table_csv(table))
            else:
                out.write(_level_table_text(table))
            return EXIT_OK
        if args.format == "csv":
            out.write(",".join(CSV_HEADER) + "\n")
        ok = True
        count = 0
        for r in SUITES[args.command](args):
            emit(r, args.format, out)
            ok = ok and r.passed
            count += 1
        if args.command == "spectrum" and args.format == "text":
            out.write(_level_table_text(sp.level_table(args.dim, args.mu, args.levels)))
        return EXIT_OK if ok and count else EXIT_FAIL
    except UsageError as e:
        msg = str(e)
        if args.dim is not None and args.dim % 2 == 0 and EVEN_D_RESTRICTION not in msg and "mu" in msg:
            msg += f" ({EVEN_D_RESTRICTION})"
        err.write(f"micz: error: {msg}\n")
        return EXIT_USAGE
    except sr.BudgetExceeded as e:
        err.write(f"micz: size budget exceeded: {e}\n")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())
