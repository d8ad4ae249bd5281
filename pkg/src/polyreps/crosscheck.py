"""OEIS b-file parsing and comparison against bundled fixtures."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .exactnum import DomainError
from .polygonal import PolygonalSpec, polygonal_values, theta_series
from .repcount import table_for
from .verify import VerificationReport

KINDS = ("polygonal_values", "theta_coeffs")

_DATA_LINE = re.compile(r"^(-?\d+)\s+(-?\d+)$")


class BFileParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class BFileSequence:
    sequence_id: str
    entries: tuple[tuple[int, int], ...]
    comments: tuple[str, ...] = field(default=(), compare=False)

    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def parse_bfile(text: bytes | str, sequence_id: str = "") -> BFileSequence:
    """Parse ``index value`` lines; '#' lines are kept as comments."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise BFileParseError(text[: exc.start].count(b"\n") + 1, "non-ASCII byte") from None
    entries: list[tuple[int, int]] = []
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(raw.rstrip())
            if not sequence_id:
                m = re.match(r"#\s*(A\d{6})\b", line)
                if m:
                    sequence_id = m.group(1)
            continue
        m = _DATA_LINE.match(line)
        if m is None:
            raise BFileParseError(lineno, f"expected 'index value', got {raw!r}")
        index, value = int(m.group(1)), int(m.group(2))
        if entries and index <= entries[-1][0]:
            raise BFileParseError(lineno, f"index {index} does not increase (previous {entries[-1][0]})")
        entries.append((index, value))
    return BFileSequence(sequence_id, tuple(entries), tuple(comments))


def format_bfile(seq: BFileSequence) -> str:
    lines = list(seq.comments) + [f"{i} {v}" for i, v in seq.entries]
    return "\n".join(lines) + "\n"


def fixture_names() -> list[str]:
    root = resources.files("polyreps") / "fixtures"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".txt"))


def read_fixture_text(name: str) -> str:
    return (resources.files("polyreps") / "fixtures" / name).read_text(encoding="ascii")


def _id_from_filename(path: str) -> str:
    m = re.match(r"b(\d{6})\.txt$", Path(path).name)
    return f"A{m.group(1)}" if m else ""


def load_fixture(name: str) -> BFileSequence:
    """Load a bundled fixture by file name (``b001318.txt``) or A-number."""
    if re.fullmatch(r"A\d{6}", name):
        name = f"b{name[1:]}.txt"
    return parse_bfile(read_fixture_text(name), _id_from_filename(name))


def load_bfile(path: str | Path) -> BFileSequence:
    return parse_bfile(Path(path).read_bytes(), _id_from_filename(str(path)))


def crosscheck_sequence(
    kind: str, spec: PolygonalSpec, fixture: BFileSequence, limit: int, j: int = 1
) -> VerificationReport:
    """Compare computed data against a fixture over the computed range.

    polygonal_values: sorted distinct F_s values <= limit, matched in order
    against the fixture's values.  theta_coeffs: q^n coefficients of G_s^j
    for n <= limit, matched by fixture index.
    """
    if limit < 0:
        raise DomainError(f"limit must be >= 0, got {limit}")
    params = {"kind": kind, "sequence_id": fixture.sequence_id, "s": spec.s, "limit": limit}
    if kind == "polygonal_values":
        computed = polygonal_values(spec, limit)
        if len(fixture.entries) < len(computed):
            raise DomainError(
                f"fixture has {len(fixture.entries)} terms, need {len(computed)} for values <= {limit}"
            )
        pairs = [(idx, c, v) for c, (idx, v) in zip(computed, fixture.entries)]
        # the fixture must not hold a value <= limit that we failed to produce
        if len(fixture.entries) > len(computed):
            idx, v = fixture.entries[len(computed)]
            if v <= limit:
                pairs.append((idx, None, v))
    elif kind == "theta_coeffs":
        params["j"] = j
        coeffs = table_for(spec, j, limit).rows[j] if j != 1 else theta_series(spec, limit).coeffs
        lookup = fixture.as_dict()
        missing = [n for n in range(limit + 1) if n not in lookup]
        if missing:
            raise DomainError(f"fixture lacks index {missing[0]} (needed up to {limit})")
        pairs = [(n, int(coeffs[n]), lookup[n]) for n in range(limit + 1)]
    else:
        raise DomainError(f"unknown crosscheck kind {kind!r}; expected one of {KINDS}")

    params["compared"] = len(pairs)
    for idx, computed_value, expected in pairs:
        if computed_value != expected:
            return VerificationReport(
                identity_name="crosscheck",
                parameters=params,
                lhs="missing" if computed_value is None else str(computed_value),
                rhs=str(expected),
                passed=False,
                details={"first_mismatch_index": str(idx)},
            )
    last = pairs[-1] if pairs else (None, 0, 0)
    return VerificationReport(
        identity_name="crosscheck",
        parameters=params,
        lhs=str(last[1]),
        rhs=str(last[2]),
        passed=True,
    )


# (fixture, kind, s, j, limit) checked by the default suite
DEFAULT_CHECKS = (
    ("b001318.txt", "polygonal_values", 5, 1, 1000),
    ("b000290.txt", "polygonal_values", 4, 1, 3600),
    ("b000217.txt", "polygonal_values", 6, 1, 1830),
    ("b000217.txt", "polygonal_values", 3, 1, 1830),
    ("b001082.txt", "polygonal_values", 8, 1, 1000),
    ("b000122.txt", "theta_coeffs", 4, 1, 200),
    ("b010054.txt", "theta_coeffs", 6, 1, 200),
    ("b004018.txt", "theta_coeffs", 4, 2, 200),
)


def run_default_crosschecks() -> list[VerificationReport]:
    return [
        crosscheck_sequence(kind, PolygonalSpec(s), load_fixture(name), limit, j=j)
        for name, kind, s, j, limit in DEFAULT_CHECKS
    ]
