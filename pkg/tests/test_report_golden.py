"""Golden tests: report output must match the checked-in files byte-for-byte."""

from pathlib import Path

import pytest

from ddr5sc import report

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.mark.parametrize("number", report.ALL_TABLES)
def test_table_text_matches_golden(number):
    expected = (GOLDEN_DIR / f"table{number}.txt").read_text(encoding="utf-8")
    assert report.build_table(number).as_text() == expected


@pytest.mark.parametrize("number", report.ALL_TABLES)
def test_table_csv_matches_golden(number):
    expected = (GOLDEN_DIR / f"table{number}.csv").read_bytes()
    assert report.build_table(number).as_csv().encode("utf-8") == expected


def test_full_report_matches_golden():
    expected = (GOLDEN_DIR / "report_all.txt").read_text(encoding="utf-8")
    assert report.render_report() == expected


def test_csv_golden_uses_crlf_line_endings():
    raw = (GOLDEN_DIR / "table1.csv").read_bytes()
    assert b"\r\n" in raw


def test_report_rejects_unknown_table():
    with pytest.raises(ValueError):
        report.build_table(6)
