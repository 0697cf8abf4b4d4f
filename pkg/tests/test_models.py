import io

import pytest
from pydantic import ValidationError

from hyperelliptic_census.core.errors import MalformedInputError, PreconditionError
from hyperelliptic_census.core.models import (
    CurveRecord,
    OutputFormat,
    ResiduePattern,
    RunConfig,
)
from hyperelliptic_census.core.streaming import read_census, write_records


def _record():
    return CurveRecord(genus=3, n=1, field_poly=3, v="1", u="0,0,0,0,0,0,0,1",
                       counts=[3, 5, 3], weil=[0, 0, -2], two_rank=0)


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig(genus=0)
    with pytest.raises(ValidationError):
        RunConfig(n=19)
    with pytest.raises(ValidationError):
        RunConfig(format="xml")
    assert RunConfig().format == OutputFormat.jsonl.value


def test_require_enumerable_names_pair():
    with pytest.raises(PreconditionError) as exc:
        RunConfig(genus=4, n=4).require_enumerable()
    assert "(5, 15)" in str(exc.value)
    RunConfig(genus=4, n=3).require_enumerable()


def test_jobs_resolution(monkeypatch):
    monkeypatch.setenv("HYPERELLIPTIC_CENSUS_JOBS", "3")
    assert RunConfig().resolved_jobs() == 3
    assert RunConfig(jobs=5).resolved_jobs() == 5
    monkeypatch.delenv("HYPERELLIPTIC_CENSUS_JOBS")
    assert RunConfig().resolved_jobs() >= 1


def test_row_shape():
    row = _record().to_row()
    assert row["v"] == [1] and row["u"] == [0] * 7 + [1]
    assert row["q"] == 2
    assert CurveRecord.from_row(row) == _record()


def test_rows_from_csv_strings():
    row = {"genus": "3", "n": "1", "q": "2", "field_poly": "3", "v": "1", "u": "0,0,0,0,0,0,0,1",
           "counts": "3,5,3", "weil": "0,0,-2", "two_rank": "0"}
    assert CurveRecord.from_row(row) == _record()
    bare = dict(row, counts="", weil="", two_rank="")
    parsed = CurveRecord.from_row(bare)
    assert parsed.counts is None and parsed.weil is None and parsed.two_rank is None


def test_bad_row():
    with pytest.raises(MalformedInputError):
        CurveRecord.from_row({"genus": 3, "n": 1})
    with pytest.raises(MalformedInputError):
        CurveRecord.from_row({"genus": 3, "n": 1, "field_poly": 3, "v": [], "u": [1]})


def test_residue_pattern_parse():
    assert ResiduePattern.parse("011").bits == (0, 1, 1)
    with pytest.raises(MalformedInputError):
        ResiduePattern.parse("012")


@pytest.mark.parametrize("fmt,suffix", [(OutputFormat.jsonl, ".jsonl"), (OutputFormat.csv, ".csv")])
def test_write_and_read_back(tmp_path, fmt, suffix):
    path = tmp_path / f"census{suffix}"
    with open(path, "w", newline="") as handle:
        write_records([_record()], handle, fmt)
    assert read_census(str(path)) == [_record()]


def test_jsonl_to_stream():
    buf = io.StringIO()
    write_records([_record()], buf, OutputFormat.jsonl)
    assert buf.getvalue().count("\n") == 1
    assert '"v": [1]' in buf.getvalue()
