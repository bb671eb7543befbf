"""Command-line surface: chi, sum-formula, snake, verify.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 engine
mismatch. Stdout is deterministic (in particular independent of --jobs);
timing lines go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chi import (
    ChiResult,
    EngineMismatchError,
    chi,
    snake_parameters,
)
from .partitions import (
    Partition,
    PartitionError,
    degree,
    dominates_strictly,
    format_partition,
    intersect,
    parse_partition,
)
from .skew import SkewShape, ascii_rows, has_two_by_two, is_connected
from .sumformula import sum_formula_table, table_json_dict, table_text
from .verify import CHECK_NAMES, run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_ENGINE_MISMATCH = 3

_REASON_TEXT = {
    "equal": "equal weights",
    "degree_mismatch": "degree mismatch",
    "not_comparable": "mu not strictly dominated",
    "disconnected_or_overconnected": "shapes are not connected skew hooks",
}


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True)


def _chi_text(result: ChiResult) -> str:
    if result.trivial_reason is not None:
        return f"chi = 1 ({_REASON_TEXT[result.trivial_reason]})"
    line = f"chi = {result.value.render()}"
    if not result.value.is_unit:
        line += f" = {result.value.factored()}"
    if result.snake is not None:
        line += f"; ell={result.snake.ell} d={result.snake.d} r={result.snake.r}"
    return line


def _chi_json(mu: Partition, lam: Partition, result: ChiResult) -> dict:
    payload = result.value.json_dict()
    payload.update(
        {
            "mu": list(mu),
            "lambda": list(lam),
            "method": result.method,
            "trivial_reason": result.trivial_reason,
            "snake": None
            if result.snake is None
            else {
                "nu": list(result.snake.nu),
                "ell": result.snake.ell,
                "d": result.snake.d,
                "r": result.snake.r,
            },
        }
    )
    return payload


def _cmd_chi(args) -> int:
    mu = parse_partition(args.mu)
    lam = parse_partition(args.lam)
    result = chi(mu, lam, method=args.method)
    if args.json:
        print(_dump(_chi_json(mu, lam, result)))
    else:
        print(_chi_text(result))
    return EXIT_OK


def _cmd_sum_formula(args) -> int:
    lam = parse_partition(args.lam)
    table = sum_formula_table(lam, prime_filter=args.prime)
    if args.json:
        print(_dump(table_json_dict(table)))
    else:
        text = table_text(table)
        if text:
            print(text)
    return EXIT_OK


def _shape_defects(name: str, shape: SkewShape) -> list[str]:
    defects = []
    if not is_connected(shape):
        defects.append(f"{name} disconnected")
    if has_two_by_two(shape):
        defects.append(f"{name} overconnected")
    return defects


def _cmd_snake(args) -> int:
    mu = parse_partition(args.mu)
    lam = parse_partition(args.lam)
    trivial_reason: str | None = None
    mu_strip = lam_strip = None
    snake = None
    if degree(mu) != degree(lam):
        trivial_reason = "degree mismatch"
    elif mu == lam:
        trivial_reason = "equal weights"
    elif not dominates_strictly(mu, lam):
        trivial_reason = "mu not strictly dominated"
    else:
        nu = intersect(mu, lam)
        mu_strip = SkewShape(mu, nu)
        lam_strip = SkewShape(lam, nu)
        defects = _shape_defects("mu/nu", mu_strip) + _shape_defects(
            "lambda/nu", lam_strip
        )
        if defects:
            trivial_reason = "; ".join(defects)
        else:
            snake = snake_parameters(mu, lam)
    if args.json:
        payload = {
            "mu": list(mu),
            "lambda": list(lam),
            "nu": None if mu_strip is None else list(mu_strip.inner),
            "mu_shape": None if mu_strip is None else ascii_rows(mu_strip),
            "lambda_shape": None if lam_strip is None else ascii_rows(lam_strip),
            "ell": None if snake is None else snake.ell,
            "d": None if snake is None else snake.d,
            "r": None if snake is None else snake.r,
            "trivial_reason": trivial_reason,
        }
        print(_dump(payload))
        return EXIT_OK
    if mu_strip is not None and lam_strip is not None:
        print("mu/nu:")
        for row in ascii_rows(mu_strip):
            print(row)
        print("lambda/nu:")
        for row in ascii_rows(lam_strip):
            print(row)
    if snake is not None:
        print(f"ell={snake.ell} d={snake.d} r={snake.r}")
    else:
        print(f"trivial: {trivial_reason}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.checks in (None, "all"):
        names = list(CHECK_NAMES)
    else:
        names = [token.strip() for token in args.checks.split(",") if token.strip()]
        for name in names:
            if name not in CHECK_NAMES:
                raise ValueError(f"unknown check name: {name}")
    reports = run_checks(names, args.max_degree, args.jobs)
    for report in reports:
        print(f"# {report.check_name}: {report.elapsed:.2f}s", file=sys.stderr)
    if args.json:
        payload = [
            {
                "check": report.check_name,
                "pairs_tested": report.pairs_tested,
                "passed": report.passed,
                "failures": [
                    {"mu": list(mu), "lambda": list(lam), "detail": detail}
                    for mu, lam, detail in report.failures
                ],
            }
            for report in reports
        ]
        print(_dump(payload))
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            print(
                f"{report.check_name}: pairs={report.pairs_tested} "
                f"failures={len(report.failures)} {status}"
            )
            for mu, lam, detail in report.failures:
                print(
                    f"  mu={format_partition(mu)} lambda={format_partition(lam)}: "
                    f"{detail}"
                )
        passed = sum(1 for report in reports if report.passed)
        overall = "PASS" if passed == len(reports) else "FAIL"
        print(f"verify: {overall} ({passed}/{len(reports)} checks)")
    return EXIT_OK if all(report.passed for report in reports) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylchi",
        description=(
            "Exact torsion Euler characteristics between integral Weyl modules "
            "of the general linear group, and the Jantzen sum-formula "
            "multiplicities they encode."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    chi_parser = sub.add_parser("chi", help="evaluate one pair")
    chi_parser.add_argument("--mu", required=True, help='partition, e.g. "2,1,1"')
    chi_parser.add_argument("--lambda", dest="lam", required=True, help="partition")
    chi_parser.add_argument(
        "--method", choices=["closed", "recursive", "both"], default="both"
    )
    chi_parser.add_argument("--json", action="store_true")
    chi_parser.set_defaults(func=_cmd_chi)

    sum_parser = sub.add_parser(
        "sum-formula", help="sum-formula multiplicity table for one highest weight"
    )
    sum_parser.add_argument("--lambda", dest="lam", required=True, help="partition")
    sum_parser.add_argument("--prime", type=int, default=None)
    sum_parser.add_argument("--json", action="store_true")
    sum_parser.set_defaults(func=_cmd_sum_formula)

    snake_parser = sub.add_parser("snake", help="border-strip geometry of one pair")
    snake_parser.add_argument("--mu", required=True, help="partition")
    snake_parser.add_argument("--lambda", dest="lam", required=True, help="partition")
    snake_parser.add_argument("--json", action="store_true")
    snake_parser.set_defaults(func=_cmd_snake)

    verify_parser = sub.add_parser("verify", help="run the invariant sweeps")
    verify_parser.add_argument("--max-degree", type=int, default=10)
    verify_parser.add_argument(
        "--checks",
        default="all",
        help="comma-separated subset of: " + ", ".join(CHECK_NAMES),
    )
    verify_parser.add_argument("--jobs", type=int, default=1)
    verify_parser.add_argument("--json", action="store_true")
    verify_parser.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENGINE_MISMATCH
    except (PartitionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
