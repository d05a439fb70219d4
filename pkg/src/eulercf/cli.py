"""Command-line interface: ``eulercf eval|table|verify|bench``.

Exit codes: 0 success, 1 usage or domain error, 2 non-convergence,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bench import ComparatorUnavailable, bench
from .closed_forms import MAX_EXPONENT
from .engine import DEFAULT_MAX_DEPTH, eval_fixed, is_floating
from .errors import CFError, ConvergenceError, DomainError, PoleError
from .families import REGISTRY, CFFamily, make_family
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_NOCONV, EXIT_VERIFY = 0, 1, 2, 3
PARAM_ALIASES = {"\N{GREEK SMALL LETTER THETA}": "theta", "th": "theta"}
CSV_HEADER = ("depth", "convergent", "abs_error", "rel_error")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    family: str
    params: dict = field(default_factory=dict)
    tol: float = 1e-15
    max_depth: int = DEFAULT_MAX_DEPTH
    format: str = "text"
    seed: int = 0


@dataclass(frozen=True)
class TableRow:
    depth: int
    convergent: float
    abs_error: float
    rel_error: float


def parse_number(text: str):
    """'p/q' and integers parse exactly; anything else as a float."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        try:
            value = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad rational {text!r}") from None
        return value.numerator if value.denominator == 1 else value
    if re.fullmatch(r"[+-]?\d+", text):
        return int(text)
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"bad number {text!r}") from None


def parse_params(items: Sequence[str]) -> dict:
    params = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"--param expects name=value, got {item!r}")
        name, value = item.split("=", 1)
        name = PARAM_ALIASES.get(name.strip(), name.strip())
        params[name] = parse_number(value)
    return params


def parse_depths(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text or "")
    if not m or int(m.group(1)) > int(m.group(2)):
        raise UsageError(f"--depths expects a..b with a <= b, got {text!r}")
    return range(int(m.group(1)), int(m.group(2)) + 1)


def build_family(config: RunConfig) -> CFFamily:
    if config.family not in REGISTRY:
        raise UsageError(
            f"unknown family {config.family!r}; valid families: {', '.join(REGISTRY)}"
        )
    try:
        return make_family(config.family, **config.params)
    except TypeError as exc:
        raise UsageError(str(exc)) from None


def fmt(x) -> str:
    """Shortest round-trip decimal for floats; p/q for exact rationals."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    return repr(float(x))


def _config_echo(config: RunConfig, **extra) -> dict:
    echo = {
        "family": config.family,
        "params": {k: fmt(v) for k, v in config.params.items()},
        "tol": config.tol,
        "max_depth": config.max_depth,
    }
    echo.update(extra)
    return echo


def _emit_records(records: list[dict], config: RunConfig, out, *, echo: dict, header=None):
    if config.format == "json":
        json.dump({"config": echo, "rows": records}, out, indent=2)
        out.write("\n")
    elif config.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        keys = header or list(records[0])
        writer.writerow(keys)
        for r in records:
            writer.writerow([r[k] for k in keys])
    else:
        keys = header or list(records[0])
        widths = {k: max(len(k), *(len(str(r[k])) for r in records)) for k in keys}
        out.write("  ".join(k.rjust(widths[k]) for k in keys) + "\n")
        for r in records:
            out.write("  ".join(str(r[k]).rjust(widths[k]) for k in keys) + "\n")


def cmd_eval(config: RunConfig, out=sys.stdout) -> int:
    family = build_family(config)
    try:
        report = family.evaluate(config.tol, config.max_depth)
        code = EXIT_OK
    except ConvergenceError as exc:
        report, code = exc.report, EXIT_NOCONV
    record = {
        "value": fmt(float(report.value)),
        "depth_used": report.depth_used,
        "converged": report.converged,
        "terminated_finitely": report.terminated_finitely,
        "est_error": None if report.est_error is None else repr(report.est_error),
    }
    if not is_floating(report.value):
        record["exact"] = fmt(Fraction(report.value))
    if config.format == "json":
        json.dump({"config": _config_echo(config), "result": record}, out, indent=2)
        out.write("\n")
    elif config.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(list(record))
        writer.writerow(["" if v is None else v for v in record.values()])
    else:
        for k, v in record.items():
            out.write(f"{k}: {v}\n")
    return code


def table_rows(family: CFFamily, depths: range) -> list[TableRow]:
    oracle = family.oracle().value
    rows = []
    for d in depths:
        try:
            value = float(eval_fixed(family.stream, d))
        except ZeroDivisionError:
            value = float("nan")
        err = abs(value - oracle)
        rows.append(TableRow(d, value, err, err / max(abs(oracle), 1e-300)))
    return rows


def cmd_table(config: RunConfig, depths: range, out=sys.stdout) -> int:
    family = build_family(config)
    rows = table_rows(family, depths)
    records = [
        {"depth": r.depth, "convergent": fmt(r.convergent), "abs_error": fmt(r.abs_error), "rel_error": fmt(r.rel_error)}
        for r in rows
    ]
    echo = _config_echo(config, depths=f"{depths.start}..{depths.stop - 1}")
    _emit_records(records, config, out, echo=echo, header=list(CSV_HEADER))
    return EXIT_OK


def cmd_verify(suite: str, bound: int, seed: int, out=sys.stdout, err=sys.stderr, fmt_: str = "text") -> int:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; valid suites: {', '.join(SUITES)}")
    if not 1 <= bound <= MAX_EXPONENT:
        raise UsageError(f"--bound must be in 1..{MAX_EXPONENT}, got {bound}")
    cases = run_suite(suite, bound, seed)
    if fmt_ == "json":
        json.dump(
            {"suite": suite, "bound": bound, "seed": seed, "cases": [asdict(c) for c in cases]},
            out,
            indent=2,
        )
        out.write("\n")
    failed = [c for c in cases if not c.passed]
    if fmt_ != "json":
        for c in cases:
            out.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}\n")
        out.write(f"{len(cases) - len(failed)}/{len(cases)} passed\n")
    if failed:
        err.write(f"verification failed: {failed[0].name}: {failed[0].detail}\n")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bench(config: RunConfig, comparator: str = "taylor", out=sys.stdout, repeats: int = 5) -> int:
    if comparator != "taylor":
        raise UsageError(f"unknown comparator {comparator!r}; valid: taylor")
    family = build_family(config)
    try:
        report = bench(family, config.tol, config.max_depth, repeats)
    except ComparatorUnavailable as exc:
        raise UsageError(str(exc)) from None
    record = {
        "cf_depth": report.cf_depth,
        "taylor_terms": report.taylor_terms,
        "taylor_method": report.taylor_method,
        "oracle": fmt(report.oracle),
        "cf_median_s": f"{report.cf_seconds:.3e}",
        "taylor_median_s": "" if report.taylor_seconds is None else f"{report.taylor_seconds:.3e}",
    }
    _emit_records([record], config, out, echo=_config_echo(config, comparator=comparator))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    families = ", ".join(f"{k}({','.join(v[1])})" for k, v in REGISTRY.items())
    parser = _Parser(prog="eulercf", description="Euler continued fractions for special functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, family=True):
        if family:
            p.add_argument("--family", required=True, help=f"one of: {families}")
            p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                           help="decimal or p/q; repeatable")
            p.add_argument("--tol", type=float, default=1e-15)
            p.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
        p.add_argument("--format", choices=("csv", "json", "text"), default="text")
        p.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("eval", help="evaluate a family adaptively"))
    p = sub.add_parser("table", help="convergents against the closed form")
    common(p)
    p.add_argument("--depths", default="0..20", help="inclusive range a..b")
    p.set_defaults(format="csv")
    p = sub.add_parser("verify", help="run an exact or floating verification suite")
    common(p, family=False)
    p.add_argument("--suite", required=True, choices=tuple(SUITES))
    p.add_argument("--bound", type=int, default=5)
    p = sub.add_parser("bench", help="continued-fraction depth versus Taylor terms")
    common(p)
    p.add_argument("--comparator", default="taylor")
    p.add_argument("--repeats", type=int, default=5)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args.suite, args.bound, args.seed, out, err, args.format)
        if not args.tol > 0:
            raise UsageError("--tol must be positive")
        if args.max_depth < 1:
            raise UsageError("--max-depth must be >= 1")
        config = RunConfig(args.family, parse_params(args.param), args.tol, args.max_depth, args.format, args.seed)
        if args.command == "eval":
            return cmd_eval(config, out)
        if args.command == "table":
            return cmd_table(config, parse_depths(args.depths), out)
        return cmd_bench(config, args.comparator, out, args.repeats)
    except (UsageError, DomainError) as exc:
        err.write(f"eulercf: error: {exc}\n")
        return EXIT_USAGE
    except PoleError as exc:
        err.write(f"eulercf: {exc}\n")
        return EXIT_NOCONV
    except CFError as exc:
        err.write(f"eulercf: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
