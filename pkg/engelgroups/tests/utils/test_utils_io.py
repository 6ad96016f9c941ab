import json

import pandas as pd
import pytest

from engelgroups.utils.io import (
    format_csv,
    format_jsonl,
    records_to_dataframe,
    report_header,
    write_report,
)

RECORDS = [
    {"check": "order", "n": 0, "passed": True, "violations": [], "notes": ["a", "b"]},
    {"check": "order", "n": 1, "passed": False, "violations": [{"word": "b1^3"}], "trace": [1]},
]
CONFIG = {"command": "verify", "suite": "order", "seed": 0}


def test_report_header():
    header = report_header(CONFIG, "verification")
    assert header["config"] == CONFIG
    assert header["provenance"]["verification_software_name"] == "engelgroups"
    assert "verification_software_version" in header["provenance"]


def test_format_jsonl():
    lines = format_jsonl(RECORDS, CONFIG, "experiment").splitlines()
    assert len(lines) == 3
    assert json.loads(lines[0])["provenance"]["experiment_software_name"] == "engelgroups"
    assert json.loads(lines[2]) == RECORDS[1]
    # keys are sorted, so equal records give equal lines
    assert lines[1].index('"check"') < lines[1].index('"n"')


def test_records_to_dataframe():
    df = records_to_dataframe(RECORDS)
    assert isinstance(df, pd.DataFrame)
    assert df["violations"].tolist() == [0, 1]
    assert df.loc[0, "notes"] == 2
    assert df.loc[1, "trace"] == "[1]"


def test_format_csv():
    text = format_csv(RECORDS)
    assert text.splitlines()[0].split(",")[:3] == ["check", "n", "passed"]
    assert len(text.splitlines()) == 3


@pytest.mark.parametrize("fmt, suffix", [("jsonl", ".jsonl"), ("csv", ".csv")])
def test_write_report(tmp_path, fmt, suffix):
    path = tmp_path / "nested" / f"report{suffix}"
    write_report(RECORDS, CONFIG, path, fmt)
    text = path.read_text(encoding="utf-8")
    assert text.endswith("\n")
    if fmt == "jsonl":
        assert json.loads(text.splitlines()[0])["config"] == CONFIG
    else:
        assert text.startswith("check,")


def test_write_report_is_deterministic(tmp_path):
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_report(RECORDS, CONFIG, first)
    write_report(RECORDS, CONFIG, second)
    assert first.read_bytes() == second.read_bytes()


def test_write_report_to_stdout(capsys):
    write_report(RECORDS[:1], CONFIG)
    out = capsys.readouterr().out
    assert len(out.splitlines()) == 2


def test_write_report_rejects_format(tmp_path):
    with pytest.raises(ValueError, match="not a supported report format"):
        write_report(RECORDS, CONFIG, tmp_path / "r.nc", "netcdf4")
