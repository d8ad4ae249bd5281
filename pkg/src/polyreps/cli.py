"""Command line interface.

Exit codes: 0 success (all checks passed), 1 a check failed, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .bell import log_polynomial, taylor_coeffs, BellTable
from .crosscheck import BFileParseError, crosscheck_sequence, load_bfile
from .divisorside import divisor_lhs, jha_square_lhs, jha_triangular_lhs
from .exactnum import DomainError, factorial, format_exact
from .polygonal import PolygonalSpec, theta_series, triple_product_series
from .repcount import table_for
from .series import log as series_log
from .verify import (
    CLI_IDENTITY_NAMES,
    SuiteConfig,
    reports_to_csv,
    reports_to_json,
    reports_to_summary,
    run_suite,
)


def _write_csv(rows, header) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_theta(args) -> int:
    spec = PolygonalSpec(args.s)
    series = theta_series(spec, args.n_max) if args.form == "sum" else triple_product_series(spec, args.n_max)
    _write_csv(((n, format_exact(c)) for n, c in enumerate(series)), ("n", "coeff"))
    return 0


def cmd_reps(args) -> int:
    spec = PolygonalSpec(args.s)
    if args.j < 0:
        raise DomainError(f"j must be >= 0, got {args.j}")
    row = table_for(spec, args.j, args.n_max).rows[args.j][: args.n_max + 1]
    if args.format == "json":
        print(json.dumps({"s": args.s, "j": args.j, "counts": [str(c) for c in row]}))
    else:
        _write_csv(enumerate(row), ("n", "count"))
    return 0


def cmd_lhs(args) -> int:
    if args.form == "divisor":
        if args.s is None:
            raise DomainError("--s is required for the divisor form")
        value = divisor_lhs(args.n, args.s)
    elif args.form == "jha-square":
        value = jha_square_lhs(args.n)
    else:
        value = jha_triangular_lhs(args.n)
    print(format_exact(value))
    return 0


def cmd_bell(args) -> int:
    spec = PolygonalSpec(args.s)
    if args.n < 1:
        raise DomainError(f"n must be >= 1, got {args.n}")
    g = taylor_coeffs(spec, args.n)
    table = BellTable(g.args(args.n))
    logs = series_log(theta_series(spec, args.n)) if spec.s >= 4 else None
    rows = []
    for n in range(1, args.n + 1):
        big_l = log_polynomial(n, g, table=table)
        rows.append((
            n,
            format_exact(big_l),
            format_exact(big_l / factorial(n)),
            format_exact(logs[n]) if logs is not None else "",
        ))
    _write_csv(rows, ("n", "L_n", "L_n_over_factorial", "log_coeff"))
    return 0


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_verify(args) -> int:
    if args.identity == "all":
        identities = SuiteConfig().identities
    else:
        identities = (CLI_IDENTITY_NAMES[args.identity],)
    config = SuiteConfig(
        identities=identities,
        s_min=args.s_min,
        s_max=args.s_max,
        n_min=1,
        n_max=args.n_max,
        primes=args.p,
    )
    reports = run_suite(config)
    if args.format == "json":
        sys.stdout.write(reports_to_json(reports))
    elif args.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        sys.stdout.write(reports_to_summary(reports))
    return 1 if any(r.failed for r in reports) else 0


def cmd_crosscheck(args) -> int:
    kind = {"polygonal": "polygonal_values", "theta": "theta_coeffs"}[args.kind]
    fixture = load_bfile(args.fixture)
    report = crosscheck_sequence(kind, PolygonalSpec(args.s), fixture, args.limit, j=args.j)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyreps",
        description="Exact identities for representations by generalized polygonal numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="coefficients of G_s(q) as CSV")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--form", choices=("sum", "product"), default="sum")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("reps", help="representation counts t_{s,j}(n) for n <= n-max")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("lhs", help="divisor-sum side of the identity")
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", choices=("divisor", "jha-square", "jha-tri"), default="divisor")
    p.set_defaults(func=cmd_lhs)

    p = sub.add_parser("bell", help="logarithmic polynomials L_1..L_N next to log G_s coefficients")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("verify", help="run identity checks over ranges")
    p.add_argument("--identity", choices=("all", *CLI_IDENTITY_NAMES), default="all")
    p.add_argument("--s-min", type=int, default=4)
    p.add_argument("--s-max", type=int, default=12)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--p", type=_parse_primes, default=(3, 5, 7, 11, 13), help="comma-separated primes")
    p.add_argument("--format", choices=("json", "csv", "summary"), default="summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crosscheck", help="compare against an OEIS b-file")
    p.add_argument("--fixture", required=True)
    p.add_argument("--kind", choices=("polygonal", "theta"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--j", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, BFileParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
