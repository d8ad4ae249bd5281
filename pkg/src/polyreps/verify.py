"""Exact verification of the divisor-sum / representation-count identities.

Each ``check_*`` function evaluates both sides of one identity at one
parameter point and returns a :class:`VerificationReport`.  ``run_suite``
sweeps configured ranges and returns the reports in a fixed order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .bell import BellTable, log_polynomial, taylor_coeffs
from .divisorside import (
    check_prime_pair,
    delta1,
    delta2,
    divisor_lhs,
    jha_square_lhs,
    jha_triangular_lhs,
    pentagonal_lhs,
    prime_corollary_rhs_value,
)
from .exactnum import DomainError, binomial, divisors, factorial, format_exact
from .polygonal import PolygonalSpec, as_spec, theta_series, triple_product_series
from .repcount import RepTable, table_for
from .series import log as series_log

IDENTITIES = (
    "lemma1",
    "lemma2",
    "binomial_identity",
    "theorem1",
    "cor_s4",
    "cor_s6",
    "cor_s5",
    "cor_prime",
    "triple_product",
    "crosscheck",
)

CLI_IDENTITY_NAMES = {
    "theorem1": "theorem1",
    "lemma1": "lemma1",
    "lemma2": "lemma2",
    "binomial": "binomial_identity",
    "cor-s4": "cor_s4",
    "cor-s6": "cor_s6",
    "cor-s5": "cor_s5",
    "cor-prime": "cor_prime",
    "triple-product": "triple_product",
    "crosscheck": "crosscheck",
}


@dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    parameters: dict
    lhs: str | None
    rhs: str | None
    passed: bool
    details: dict = field(default_factory=dict)
    skipped: str | None = None

    @property
    def failed(self) -> bool:
        return not self.passed and self.skipped is None

    def to_dict(self) -> dict:
        return {
            "identity_name": self.identity_name,
            "parameters": dict(self.parameters),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
            "details": dict(self.details),
            "skipped": self.skipped,
        }


def _report(name: str, params: dict, lhs: Fraction, rhs: Fraction, **details) -> VerificationReport:
    return VerificationReport(
        identity_name=name,
        parameters=params,
        lhs=format_exact(lhs),
        rhs=format_exact(rhs),
        passed=lhs == rhs,
        details={k: format_exact(v) for k, v in details.items()},
    )


class Session:
    """Per-s cache of the objects the checks share: the representation
    table, log G_s, Taylor coefficients and the Bell memo table.
    """

    def __init__(self, s: int | PolygonalSpec, n_max: int):
        self.spec = as_spec(s)
        self.n_max = n_max

    @cached_property
    def table(self) -> RepTable:
        return table_for(self.spec, self.n_max, self.n_max)

    @cached_property
    def log_theta(self):
        return series_log(theta_series(self.spec, self.n_max))

    @cached_property
    def taylor(self):
        return taylor_coeffs(self.spec, max(self.n_max, 1))

    @cached_property
    def bell(self) -> BellTable:
        return BellTable(self.taylor.args(self.taylor.n_max))


def _session(s, n: int, session: Session | None) -> Session:
    if session is not None and session.spec.s == as_spec(s).s and session.n_max >= n:
        return session
    return Session(s, n)


def theorem_rhs(n: int, s: int, table: RepTable) -> Fraction:
    """sum_{j=1}^n ((-1)^j / j) C(n, j) t_{s,j}(n)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if s < 4:
        raise DomainError(f"theorem_rhs needs s >= 4, got {s}")
    if table.spec.s != s:
        raise DomainError(f"table is for s={table.spec.s}, not s={s}")
    if not table.covers(n, n):
        raise DomainError(f"table (j <= {table.j_max}, n <= {table.n_max}) too small for n={n}")
    total = Fraction(0)
    for j in range(1, n + 1):
        t = table.rows[j][n]
        if t:
            total += Fraction((-1) ** j * binomial(n, j) * t, j)
    return total


def check_theorem1(n: int, s: int, session: Session | None = None) -> VerificationReport:
    as_spec(s).require_theorem_range()
    sess = _session(s, n, session)
    return _report("theorem1", {"s": s, "n": n}, divisor_lhs(n, s), theorem_rhs(n, s, sess.table))


def check_lemma1(n: int, s: int, session: Session | None = None) -> VerificationReport:
    """Divisor sum vs L_n/n! vs the negated q^n coefficient of log G_s."""
    as_spec(s).require_theorem_range()
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    sess = _session(s, n, session)
    divisor_side = divisor_lhs(n, s)
    bell_side = log_polynomial(n, sess.taylor, table=sess.bell) / factorial(n)
    log_side = -sess.log_theta[n]
    agree = divisor_side == bell_side == log_side
    return VerificationReport(
        identity_name="lemma1",
        parameters={"s": s, "n": n},
        lhs=format_exact(divisor_side),
        rhs=format_exact(bell_side),
        passed=agree,
        details={"neg_log_coefficient": format_exact(log_side)},
    )


def lemma2_rhs(n: int, k: int, table: RepTable) -> Fraction:
    """(n!/k!) sum_{j=1}^k (-1)^(k-j) C(k, j) t_{s,j}(n)."""
    total = 0
    for j in range(1, k + 1):
        total += (-1) ** (k - j) * binomial(k, j) * table.count(j, n)
    return Fraction(factorial(n) * total, factorial(k))


def check_lemma2(n: int, k: int, s: int, session: Session | None = None) -> VerificationReport:
    # the alternating sum expands (G_s - 1)^k, so G_s(0) must be 1: s >= 4
    as_spec(s).require_theorem_range()
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    sess = _session(s, n, session)
    return _report(
        "lemma2", {"s": s, "n": n, "k": k}, sess.bell(n, k), lemma2_rhs(n, k, sess.table)
    )


def check_binomial_identity(n: int, j: int) -> VerificationReport:
    """sum_{k=j}^n C(k, j)/k against C(n, j)/j."""
    if not 1 <= j <= n:
        raise DomainError(f"need 1 <= j <= n, got j={j}, n={n}")
    lhs = sum((Fraction(binomial(k, j), k) for k in range(j, n + 1)), Fraction(0))
    return _report("binomial_identity", {"n": n, "j": j}, lhs, Fraction(binomial(n, j), j))


def _s5_structure_ok(n: int) -> bool:
    # delta conditions at v = 3 must pick out n/d = 1, 2 (mod 3) and n/d = 0 (mod 3)
    for d in divisors(n):
        m = n // d
        if (delta1(m, 3) == 1) != (m % 3 in (1, 2)):
            return False
        if (delta2(m, 3) == 1) != (m % 3 == 0):
            return False
    return True


def check_corollary(
    kind: str, n: int, p: int | None = None, session: Session | None = None
) -> VerificationReport:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if kind == "cor_s4":
        sess = _session(4, n, session)
        return _report(kind, {"s": 4, "n": n}, jha_square_lhs(n), theorem_rhs(n, 4, sess.table))
    if kind == "cor_s6":
        sess = _session(6, n, session)
        return _report(kind, {"s": 6, "n": n}, jha_triangular_lhs(n), theorem_rhs(n, 6, sess.table))
    if kind == "cor_s5":
        sess = _session(5, n, session)
        lhs = divisor_lhs(n, 5)
        rhs = theorem_rhs(n, 5, sess.table)
        explicit = pentagonal_lhs(n)
        structural = _s5_structure_ok(n)
        return VerificationReport(
            identity_name=kind,
            parameters={"s": 5, "n": n},
            lhs=format_exact(lhs),
            rhs=format_exact(rhs),
            passed=lhs == rhs == explicit and structural,
            details={"explicit_lhs": format_exact(explicit), "structure": str(structural).lower()},
        )
    if kind == "cor_prime":
        if p is None:
            raise DomainError("cor_prime needs p")
        check_prime_pair(n, p)
        sess = _session(p + 2, n, session)
        return _report(
            kind,
            {"s": p + 2, "n": n, "p": p},
            theorem_rhs(n, p + 2, sess.table),
            prime_corollary_rhs_value(n, p),
        )
    raise DomainError(f"unknown corollary kind {kind!r}")


def check_triple_product(s: int, order: int) -> VerificationReport:
    spec = as_spec(s)
    direct = theta_series(spec, order)
    product = triple_product_series(spec, order)
    mismatch = next((i for i in range(order + 1) if direct[i] != product[i]), None)
    at = order if mismatch is None else mismatch
    return VerificationReport(
        identity_name="triple_product",
        parameters={"s": s, "n": order},
        lhs=format_exact(direct[at]),
        rhs=format_exact(product[at]),
        passed=mismatch is None,
        details={} if mismatch is None else {"first_mismatch": str(mismatch)},
    )


@dataclass(frozen=True)
class SuiteConfig:
    """Ranges for a verification sweep.

    ``identities`` uses the report names (``theorem1``, ``cor_s4``, ...).
    Corollaries with a fixed s ignore the s range; ``primes`` feeds
    ``cor_prime``; ``crosscheck`` runs the bundled b-file comparisons.
    """

    identities: tuple[str, ...] = (
        "lemma1",
        "lemma2",
        "binomial_identity",
        "theorem1",
        "cor_s4",
        "cor_s6",
        "cor_s5",
        "cor_prime",
        "triple_product",
        "crosscheck",
    )
    s_min: int = 4
    s_max: int = 12
    n_min: int = 1
    n_max: int = 60
    primes: tuple[int, ...] = (3, 5, 7, 11, 13)

    @property
    def s_values(self) -> range:
        return range(self.s_min, self.s_max + 1)

    @property
    def n_values(self) -> range:
        return range(self.n_min, self.n_max + 1)


def _skip(name: str, params: dict, reason: str) -> VerificationReport:
    return VerificationReport(name, params, None, None, False, skipped=reason)


def _guarded(name: str, params: dict, fn, *args, **kwargs) -> VerificationReport:
    try:
        return fn(*args, **kwargs)
    except DomainError as exc:
        return _skip(name, params, str(exc))


def _sort_key(r: VerificationReport):
    p = r.parameters
    return (
        IDENTITIES.index(r.identity_name),
        p.get("s", 0),
        p.get("n", 0),
        p.get("k", p.get("j", 0)),
        p.get("p", 0),
    )


def run_suite(config: SuiteConfig) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    sessions: dict[int, Session] = {}
    n_top = config.n_max

    def session(s: int) -> Session:
        if s not in sessions:
            sessions[s] = Session(s, max(n_top, 1))
        return sessions[s]

    wanted = set(config.identities)
    unknown = wanted - set(IDENTITIES)
    if unknown:
        raise DomainError(f"unknown identities: {sorted(unknown)}")
    n_values = list(config.n_values)
    s_values = list(config.s_values)

    for name in dict.fromkeys(config.identities):
        if name == "theorem1":
            for s in s_values:
                for n in n_values:
                    params = {"s": s, "n": n}
                    if s < 4:
                        reports.append(_skip(name, params, f"theorem needs s >= 4, got s = {s}"))
                        continue
                    reports.append(_guarded(name, params, check_theorem1, n, s, session(s)))
        elif name == "lemma1":
            for s in s_values:
                for n in n_values:
                    params = {"s": s, "n": n}
                    if s < 4:
                        reports.append(_skip(name, params, f"lemma needs s >= 4, got s = {s}"))
                        continue
                    reports.append(_guarded(name, params, check_lemma1, n, s, session(s)))
        elif name == "lemma2":
            for s in s_values:
                for n in n_values:
                    for k in range(1, n + 1):
                        params = {"s": s, "n": n, "k": k}
                        if s < 4:
                            reports.append(_skip(name, params, f"lemma needs s >= 4, got s = {s}"))
                            continue
                        reports.append(_guarded(name, params, check_lemma2, n, k, s, session(s)))
        elif name == "binomial_identity":
            for n in n_values:
                for j in range(1, n + 1):
                    reports.append(check_binomial_identity(n, j))
        elif name in ("cor_s4", "cor_s6", "cor_s5"):
            s = {"cor_s4": 4, "cor_s6": 6, "cor_s5": 5}[name]
            for n in n_values:
                params = {"s": s, "n": n}
                reports.append(_guarded(name, params, check_corollary, name, n, None, session(s)))
        elif name == "cor_prime":
            for p in config.primes:
                for n in n_values:
                    if n % p or n % (p * p) == 0:
                        continue
                    params = {"s": p + 2, "n": n, "p": p}
                    reports.append(
                        _guarded(name, params, check_corollary, name, n, p, session(p + 2))
                    )
        elif name == "triple_product":
            for s in s_values:
                params = {"s": s, "n": n_top}
                if s < 4:
                    reports.append(_skip(name, params, "product expansion needs s >= 4"))
                    continue
                reports.append(check_triple_product(s, n_top))
        elif name == "crosscheck":
            from .crosscheck import run_default_crosschecks

            reports.extend(run_default_crosschecks())
    reports.sort(key=_sort_key)
    return reports


def summarize(reports: Iterable[VerificationReport]) -> dict[str, dict[str, int]]:
    summary: dict[str, dict[str, int]] = {}
    for r in reports:
        row = summary.setdefault(r.identity_name, {"passed": 0, "failed": 0, "skipped": 0})
        if r.skipped is not None:
            row["skipped"] += 1
        elif r.passed:
            row["passed"] += 1
        else:
            row["failed"] += 1
    return {k: summary[k] for k in IDENTITIES if k in summary}


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=False) + "\n"


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["identity_name", "parameters", "lhs", "rhs", "passed", "skipped"])
    for r in reports:
        params = ";".join(f"{k}={v}" for k, v in r.parameters.items())
        writer.writerow([r.identity_name, params, r.lhs or "", r.rhs or "", str(r.passed).lower(), r.skipped or ""])
    return buf.getvalue()


def reports_to_summary(reports: list[VerificationReport]) -> str:
    lines = []
    total = {"passed": 0, "failed": 0, "skipped": 0}
    for name, row in summarize(reports).items():
        lines.append(f"{name:<18} passed={row['passed']:<6} failed={row['failed']:<4} skipped={row['skipped']}")
        for key in total:
            total[key] += row[key]
    lines.append(f"{'total':<18} passed={total['passed']:<6} failed={total['failed']:<4} skipped={total['skipped']}")
    failures = [r for r in reports if r.failed]
    for r in failures[:20]:
        lines.append(f"FAIL {r.identity_name} {r.parameters}: lhs={r.lhs} rhs={r.rhs}")
    return "\n".join(lines) + "\n"
