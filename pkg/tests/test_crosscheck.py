import pytest

from polyreps.crosscheck import (
    BFileParseError,
    crosscheck_sequence,
    fixture_names,
    format_bfile,
    load_fixture,
    parse_bfile,
    read_fixture_text,
    run_default_crosschecks,
)
from polyreps.exactnum import DomainError
from polyreps.polygonal import PolygonalSpec


def test_parse_examples():
    assert parse_bfile(b"1 1\n2 2\n3 5\n").entries == ((1, 1), (2, 2), (3, 5))
    seq = parse_bfile("# A000045 comment\n0 0\n")
    assert seq.entries == ((0, 0),)
    assert seq.sequence_id == "A000045"
    assert parse_bfile("\n  \n4 -7\n\n5 123456789012345678901234567890\n").entries[-1][1] == (
        123456789012345678901234567890
    )


def test_parse_errors_report_line():
    with pytest.raises(BFileParseError) as exc:
        parse_bfile("1 x\n")
    assert exc.value.line == 1
    with pytest.raises(BFileParseError) as exc:
        parse_bfile("# c\n1 1\n2 2 2\n")
    assert exc.value.line == 3
    with pytest.raises(BFileParseError) as exc:
        parse_bfile("1 1\n1 2\n")
    assert exc.value.line == 2


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_roundtrip(name):
    text = read_fixture_text(name)
    assert format_bfile(parse_bfile(text)) == text


def test_all_default_crosschecks_pass():
    reports = run_default_crosschecks()
    assert len(reports) >= 7
    assert all(r.passed for r in reports), [r for r in reports if not r.passed]


def test_pentagonal_and_squares():
    r = crosscheck_sequence("polygonal_values", PolygonalSpec(5), load_fixture("A001318"), 100)
    assert r.passed and r.parameters["compared"] == 17
    r = crosscheck_sequence("polygonal_values", PolygonalSpec(4), load_fixture("A000290"), 400)
    assert r.passed


def test_corrupted_fixture_fails_at_first_mismatch():
    text = read_fixture_text("b001318.txt").replace("\n8 26\n", "\n8 27\n")
    r = crosscheck_sequence("polygonal_values", PolygonalSpec(5), parse_bfile(text), 100)
    assert not r.passed
    assert r.details["first_mismatch_index"] == "8"
    assert (r.lhs, r.rhs) == ("26", "27")

    text = read_fixture_text("b004018.txt").replace("\n25 12\n", "\n25 11\n")
    r = crosscheck_sequence("theta_coeffs", PolygonalSpec(4), parse_bfile(text), 100, j=2)
    assert r.details["first_mismatch_index"] == "25"


def test_extra_fixture_value_is_a_mismatch():
    # fixture lists 3 as a square: computed list runs out before the fixture does
    seq = parse_bfile("0 0\n1 1\n2 3\n3 4\n")
    r = crosscheck_sequence("polygonal_values", PolygonalSpec(4), seq, 4)
    assert not r.passed


def test_range_mismatch():
    short = parse_bfile("0 0\n1 1\n2 2\n")
    with pytest.raises(DomainError):
        crosscheck_sequence("polygonal_values", PolygonalSpec(5), short, 100)
    with pytest.raises(DomainError):
        crosscheck_sequence("theta_coeffs", PolygonalSpec(4), short, 10)
    with pytest.raises(DomainError):
        crosscheck_sequence("bogus", PolygonalSpec(4), short, 1)


def test_longer_fixture_is_fine():
    r = crosscheck_sequence("theta_coeffs", PolygonalSpec(4), load_fixture("A000122"), 10)
    assert r.passed and r.parameters["compared"] == 11
