"""Command-line front end: verify, sweep, bezout, table.

Exit codes: 0 all checks pass, 1 usage or configuration error, 2 a
mathematical invariant failed.  Sweep output is byte-identical for a given
configuration at any parallelism level: work items go to a pool, results
are buffered and emitted in (c, n, m) lexicographic order.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO

import mpmath

from . import bounds as _bounds
from .bounds import (
    BOUND_NAMES,
    BoundReport,
    DivisorReport,
    InvariantViolation,
    bound_report,
    combinatorial_checks,
    floor_half_frontier,
    verify_divisor,
)
from .poly import BezoutCertificate, bezout_certificate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1

SWEEP_COLUMNS = (
    "c", "m", "n", "L", "D_num", "D_den", "quotient",
    "hc", "hc_bound", "star_x", "star_y", "logL",
) + BOUND_NAMES


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad input; the contract reserves 2 for
    # mathematical violations, so route everything through UsageError.
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def fmt_log(x) -> str:
    """Decimal with 15 significant digits; deterministic."""
    return mpmath.nstr(x, 15)


def js_int(v: int):
    """Integers beyond 64-bit become strings so JSON consumers stay lossless."""
    return v if _INT64_MIN <= v <= _INT64_MAX else str(v)


def divisor_to_json(r: DivisorReport) -> dict:
    return {
        "c": r.c,
        "m": r.m,
        "n": r.n,
        "L": js_int(r.L),
        "numerator": js_int(r.numerator),
        "denominator": js_int(r.denominator),
        "D_num": js_int(r.D.numerator),
        "D_den": js_int(r.D.denominator),
        "quotient": js_int(r.quotient_check),
        "hc": js_int(r.hc_value),
        "hc_bound": js_int(r.hc_bound),
        "star_x": js_int(r.star_x),
        "star_y": js_int(r.star_y),
    }


def bounds_to_json(r: BoundReport) -> dict:
    return {
        "c": r.c,
        "m": r.m,
        "n": r.n,
        "logL": fmt_log(r.logL),
        "bounds": {
            name: {
                "applicable": bv.applicable,
                "log_value": fmt_log(bv.log_value) if bv.applicable else None,
            }
            for name, bv in r.bounds.items()
        },
    }


def certificate_to_json(cert: BezoutCertificate) -> dict:
    # the zero polynomial serializes as [0], not []
    def ints(coeffs):
        return [js_int(v) for v in coeffs] if coeffs else [0]

    alpha = [
        [js_int(co.a.numerator), js_int(co.a.denominator),
         js_int(co.b.numerator), js_int(co.b.denominator)]
        for co in cert.alpha.coeffs
    ] or [[0, 1, 0, 1]]
    return {
        "c": cert.c,
        "k": cert.k,
        "d": js_int(cert.d),
        "alpha": alpha,
        "r": ints(cert.r.coeffs),
        "s": ints(cert.s.coeffs),
        "A": ints(cert.A.coeffs),
        "B": ints(cert.B.coeffs),
    }


@dataclass(frozen=True)
class SweepConfig:
    c_min: int
    c_max: int
    n_min: int
    n_max: int
    m_policy: str = "all"  # all | half_ceil | fixed:<m> | frontier
    output_format: str = "csv"  # csv | json
    parallelism: int = 1

    def validate(self) -> None:
        if self.c_min < 1 or self.c_min > self.c_max:
            raise UsageError(f"need 1 <= c_min <= c_max, got {self.c_min}..{self.c_max}")
        if self.n_min < 1 or self.n_min > self.n_max:
            raise UsageError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.parallelism < 1:
            raise UsageError(f"need parallelism >= 1, got {self.parallelism}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"unknown output format {self.output_format!r}")
        self.m_values(1)  # policy syntax check

    def m_values(self, n: int) -> list[int]:
        """The m grid for one n under this policy, ascending."""
        policy = self.m_policy
        if policy == "all":
            return list(range(1, n + 1))
        if policy == "half_ceil":
            return [(n + 1) // 2]
        if policy == "frontier":
            return [max(1, n - floor_half_frontier(n))]
        if policy.startswith("fixed:"):
            try:
                m = int(policy.split(":", 1)[1])
            except ValueError:
                raise UsageError(f"bad m policy {policy!r}") from None
            if m < 1:
                raise UsageError(f"fixed m must be >= 1, got {m}")
            return [m] if m <= n else []
        raise UsageError(f"unknown m policy {policy!r}")

    def triples(self) -> list[tuple[int, int, int]]:
        """All (c, m, n) work items, already in canonical (c, n, m) order."""
        out = []
        for c in range(self.c_min, self.c_max + 1):
            for n in range(self.n_min, self.n_max + 1):
                for m in self.m_values(n):
                    out.append((c, m, n))
        return out


def _sweep_row(triple: tuple[int, int, int]) -> tuple[dict, list[str]]:
    """One sweep work item; must stay top-level picklable for process pools."""
    c, m, n = triple
    violations: list[str] = []
    try:
        dr = verify_divisor(c, m, n)
    except InvariantViolation as exc:
        dr = exc.report
        violations.append(str(exc))
    try:
        br = bound_report(c, m, n)
    except InvariantViolation as exc:
        br = exc.report
        violations.append(str(exc))
    row = {"c": c, "m": m, "n": n}
    if dr is not None:
        row.update(
            L=dr.L, D_num=dr.D.numerator, D_den=dr.D.denominator,
            quotient=dr.quotient_check, hc=dr.hc_value, hc_bound=dr.hc_bound,
            star_x=dr.star_x, star_y=dr.star_y,
        )
    if br is not None:
        row["logL"] = fmt_log(br.logL)
        for name, bv in br.bounds.items():
            row[name] = fmt_log(bv.log_value) if bv.applicable else None
    return row, violations


def _emit_sweep(rows: Iterable[tuple[dict, list[str]]], cfg: SweepConfig, out: TextIO) -> int:
    code = EXIT_OK
    writer = None
    if cfg.output_format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
    for row, violations in rows:
        if violations:
            code = EXIT_VIOLATION
            triple = (row.get("c"), row.get("m"), row.get("n"))
            for v in violations:
                print(f"VIOLATION at (c,m,n)={triple}: {v}", file=sys.stderr)
        if cfg.output_format == "csv":
            cells = []
            for col in SWEEP_COLUMNS:
                v = row.get(col)
                cells.append("NA" if v is None else str(v))
            writer.writerow(cells)
        else:
            obj = {col: _json_cell(col, row.get(col)) for col in SWEEP_COLUMNS}
            out.write(json.dumps(obj) + "\n")
    return code


def _json_cell(col: str, v):
    if v is None:
        return None
    if col in ("c", "m", "n"):
        return v
    if isinstance(v, int):
        return js_int(v)
    return v  # logL and bound columns are preformatted strings


def cmd_verify(args) -> int:
    _require(args.c >= 1, f"need c >= 1, got {args.c}")
    _require(1 <= args.m <= args.n, f"need 1 <= m <= n, got m={args.m}, n={args.n}")
    violations: list[str] = []
    try:
        dr = verify_divisor(args.c, args.m, args.n)
    except InvariantViolation as exc:
        dr = exc.report
        violations.append(str(exc))
    try:
        br = bound_report(args.c, args.m, args.n)
    except InvariantViolation as exc:
        br = exc.report
        violations.append(str(exc))
    checks = combinatorial_checks(args.c, args.m, args.n)
    if not checks.binom_ok:
        violations.append("L < m * C(n, m)")
    if checks.two_n_ok is False:
        violations.append("L < 2^n")
    doc = {
        "divisor": divisor_to_json(dr) if dr is not None else None,
        "bounds": bounds_to_json(br) if br is not None else None,
        "checks": {"binom_ok": checks.binom_ok, "two_n_ok": checks.two_n_ok},
        "ok": not violations,
    }
    if violations:
        doc["violations"] = violations
    with _open_out(args.out) as out:
        out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        c_min=args.c_min, c_max=args.c_max,
        n_min=args.n_min, n_max=args.n_max,
        m_policy=args.m_policy, output_format=args.format,
        parallelism=args.parallelism,
    )
    cfg.validate()
    triples = cfg.triples()
    with _open_out(args.out) as out:
        if cfg.parallelism > 1:
            with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
                # map preserves input order, so emission stays canonical
                results = pool.map(_sweep_row, triples, chunksize=8)
                return _emit_sweep(results, cfg, out)
        return _emit_sweep(map(_sweep_row, triples), cfg, out)


def cmd_bezout(args) -> int:
    _require(args.c >= 1, f"need c >= 1, got {args.c}")
    _require(args.k >= 0, f"need k >= 0, got {args.k}")
    cert = bezout_certificate(args.c, args.k)
    cert.verify()  # re-verified immediately before emission
    with _open_out(args.out) as out:
        out.write(json.dumps(certificate_to_json(cert), indent=2) + "\n")
    return EXIT_OK


def cmd_table(args) -> int:
    _require(args.c >= 1, f"need c >= 1, got {args.c}")
    _require(args.n_max >= 1, f"need n_max >= 1, got {args.n_max}")
    code = EXIT_OK
    with _open_out(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(("c", "n", "m", "logL") + BOUND_NAMES)
        for n in range(1, args.n_max + 1):
            for m in range(1, n + 1):
                try:
                    br = bound_report(args.c, m, n)
                except InvariantViolation as exc:
                    br = exc.report
                    code = EXIT_VIOLATION
                    print(f"VIOLATION at (c,m,n)=({args.c},{m},{n}): {exc}", file=sys.stderr)
                    if br is None:
                        writer.writerow([args.c, n, m] + ["NA"] * (1 + len(BOUND_NAMES)))
                        continue
                cells = [args.c, n, m, fmt_log(br.logL)]
                for name in BOUND_NAMES:
                    bv = br.bounds[name]
                    if bv.applicable:
                        with mpmath.workprec(_bounds.PRECISION_BITS):
                            cells.append(fmt_log(bv.log_value / br.logL))
                    else:
                        cells.append("NA")
                writer.writerow(cells)
    return code


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


class _open_out:
    """Context manager for --out <path|stdout> that never closes stdout."""

    def __init__(self, target: Optional[str]):
        self.target = target
        self.handle: Optional[TextIO] = None

    def __enter__(self) -> TextIO:
        if self.target in (None, "stdout", "-"):
            return sys.stdout
        self.handle = open(self.target, "w", newline="")
        return self.handle

    def __exit__(self, *exc) -> None:
        if self.handle is not None:
            self.handle.close()


def build_parser() -> _Parser:
    parser = _Parser(prog="quadlcm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check one (c, m, n) triple and print JSON")
    p_verify.add_argument("--c", type=int, required=True)
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--out", default="stdout")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="verify a grid of triples, CSV or JSON lines")
    p_sweep.add_argument("--c-min", type=int, required=True)
    p_sweep.add_argument("--c-max", type=int, required=True)
    p_sweep.add_argument("--n-min", type=int, required=True)
    p_sweep.add_argument("--n-max", type=int, required=True)
    p_sweep.add_argument("--m-policy", default="all",
                         help="all | half_ceil | fixed:<m> | frontier")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--parallelism", type=int, default=1)
    p_sweep.add_argument("--out", default="stdout")
    p_sweep.set_defaults(func=cmd_sweep)

    p_bezout = sub.add_parser("bezout", help="emit the certificate for (c, k) as JSON")
    p_bezout.add_argument("--c", type=int, required=True)
    p_bezout.add_argument("--k", type=int, required=True)
    p_bezout.add_argument("--out", default="stdout")
    p_bezout.set_defaults(func=cmd_bezout)

    p_table = sub.add_parser("table", help="bound tightness ratios log(bound)/log(L), CSV")
    p_table.add_argument("--c", type=int, required=True)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--out", default="stdout")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        msg = str(exc)
        if "usage:" not in msg:
            msg = f"{parser.prog}: error: {msg}\n{parser.format_usage()}"
        print(msg, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
