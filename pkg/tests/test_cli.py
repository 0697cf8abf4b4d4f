import json

import pytest
import yaml
from click.testing import CliRunner

from hyperelliptic_census.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def _lines(result):
    return [line for line in result.output.splitlines() if line.strip()]


def _patterns(result):
    return [line.split()[0] for line in _lines(result)]


def test_obstructions_genus3(runner):
    result = runner.invoke(cli, ["obstructions", "--genus", "3"])
    assert result.exit_code == 0, result.output
    assert _patterns(result) == ["011", "101"]
    for line in _lines(result):
        assert line.endswith("obstructed witness=none certificates=none"), line


def test_obstructions_higher_power(runner):
    result = runner.invoke(cli, ["obstructions", "--genus", "4", "--higher-power"])
    assert result.exit_code == 0
    assert "0101" in _patterns(result)
    assert "1100" not in _patterns(result)
    line = next(line for line in _lines(result) if line.startswith("0101 "))
    assert "k=2 mod 4 N=3" in line and "k=4 mod 8 N=3" in line, line


def test_obstructions_all_text(runner):
    result = runner.invoke(cli, ["obstructions", "--genus", "3", "--all"])
    assert result.exit_code == 0
    lines = _lines(result)
    assert len(lines) == 8
    feasible = [line for line in lines if " feasible " in line]
    assert len(feasible) == 6
    assert all("witness=none" not in line for line in feasible), "feasible patterns name a partition"


def test_obstructions_all_csv(runner):
    result = runner.invoke(cli, ["obstructions", "--genus", "3", "--all", "--format", "csv"])
    assert result.exit_code == 0
    lines = _lines(result)
    assert lines[0] == "pattern,verdict,witness,certificates"
    assert len(lines) == 1 + 8
    assert any(line.startswith("011,obstructed") for line in lines)


def test_enumerate_rejects_gcd(runner):
    result = runner.invoke(cli, ["enumerate", "--genus", "4", "--n", "4"])
    assert result.exit_code == 2
    assert "gcd" in result.output


def test_count_example(runner):
    result = runner.invoke(cli, ["count", "--genus", "3", "--n", "1", "--v", "1",
                                 "--u", "0,0,0,0,0,0,0,1", "--ext", "3"])
    assert result.exit_code == 0, result.output
    assert "N=[3,5,3]" in result.output


def test_count_malformed(runner):
    result = runner.invoke(cli, ["count", "--genus", "3", "--v", "1", "--u", "0,x", "--ext", "1"])
    assert result.exit_code == 3


def test_weil_report(runner):
    result = runner.invoke(cli, ["weil", "--q", "2", "--genus", "3", "--coeffs", "0,0,-2"])
    assert result.exit_code == 0, result.output
    assert _lines(result) == ["valid: yes", "two_rank: 0", "pattern: 000", "verdict: feasible"]
    bad = runner.invoke(cli, ["weil", "--q", "2", "--genus", "3", "--coeffs", "0,1,1"])
    assert "verdict: obstructed" in bad.output
    assert runner.invoke(cli, ["weil", "--q", "2", "--genus", "3", "--coeffs", "1,2"]).exit_code == 3
    assert runner.invoke(cli, ["weil", "--q", "6", "--genus", "1", "--coeffs", "1"]).exit_code == 3


def test_enumerate_then_verify(runner, tmp_path):
    out = tmp_path / "g2.jsonl"
    result = runner.invoke(cli, ["enumerate", "--genus", "2", "--n", "1", "--with-counts", "4",
                                 "--jobs", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert rows and all(r["genus"] == 2 and len(r["counts"]) == 4 for r in rows)

    report = tmp_path / "report.json"
    result = runner.invoke(cli, ["verify", "--in", str(out), "--max-ext", "4", "--report", str(report)])
    assert result.exit_code == 0, result.output
    assert "All invariants hold" in result.output
    assert json.loads(report.read_text())["summary"]["invalid_records"] == 0


def test_verify_fails_on_tampering(runner, tmp_path):
    out = tmp_path / "g2.jsonl"
    runner.invoke(cli, ["enumerate", "--genus", "2", "--n", "1", "--with-counts", "2",
                        "--jobs", "1", "--out", str(out)])
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    rows[0]["weil"][0] += 2
    out.write_text("".join(json.dumps(r) + "\n" for r in rows))
    result = runner.invoke(cli, ["verify", "--in", str(out)])
    assert result.exit_code == 1
    assert "Verification failed" in result.output


def test_verify_missing_file(runner, tmp_path):
    result = runner.invoke(cli, ["verify", "--in", str(tmp_path / "nope.jsonl")])
    assert result.exit_code == 4


def test_output_independent_of_jobs(runner, tmp_path):
    paths = []
    for jobs in ("1", "2"):
        out = tmp_path / f"jobs{jobs}.csv"
        result = runner.invoke(cli, ["enumerate", "--genus", "3", "--n", "1", "--jobs", jobs,
                                     "--format", "csv", "--out", str(out)])
        assert result.exit_code == 0, result.output
        paths.append(out)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_config_file_supplies_defaults(runner, tmp_path):
    cfg = tmp_path / "run.yaml"
    cfg.write_text(yaml.safe_dump({"genus": 2, "n": 1, "jobs": 1, "with_counts": 2}))
    out = tmp_path / "out.jsonl"
    result = runner.invoke(cli, ["--config", str(cfg), "enumerate", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert all(r["genus"] == 2 and len(r["counts"]) == 2 for r in rows)

    result = runner.invoke(cli, ["--config", str(cfg), "enumerate", "--genus", "3",
                                 "--out", str(out)])
    assert json.loads(out.read_text().splitlines()[0])["genus"] == 3, "flags beat the file"


def test_bad_config(runner, tmp_path):
    cfg = tmp_path / "bad.yaml"
    cfg.write_text("genus: [unclosed\n")
    assert runner.invoke(cli, ["--config", str(cfg), "obstructions", "--genus", "3"]).exit_code == 3
    cfg.write_text("genus: 0\n")
    assert runner.invoke(cli, ["--config", str(cfg), "obstructions", "--genus", "3"]).exit_code == 3


def test_config_template_round_trip(runner, tmp_path):
    path = tmp_path / "template.yaml"
    result = runner.invoke(cli, ["config-template", "-o", str(path)])
    assert result.exit_code == 0
    data = yaml.safe_load(path.read_text())
    assert data["genus"] == 3 and data["format"] == "jsonl"
    result = runner.invoke(cli, ["--config", str(path), "obstructions", "--genus", "3"])
    assert result.exit_code == 0, result.output
    assert _patterns(result) == ["011", "101"]


def test_stats_commands(runner):
    result = runner.invoke(cli, ["stats", "proportions", "--max-genus", "3"])
    assert result.exit_code == 0
    assert _lines(result)[0] == "genus,obstructed,patterns,proportion"
    assert len(_lines(result)) == 4

    result = runner.invoke(cli, ["stats", "w3", "--n", "2", "--tau"])
    assert result.exit_code == 0, result.output
    assert "tau_ordinary" in result.output
    assert "011" in result.output


def test_benchmark(runner, tmp_path):
    out = tmp_path / "bench.json"
    result = runner.invoke(cli, ["benchmark", "--genus", "2", "--degrees", "1,2",
                                 "--iterations", "1", "-o", str(out)])
    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text())
    assert "skipped" in data["degrees"]["2"], "gcd(3, 3) != 1"
    assert data["degrees"]["1"]["avg_classes"] > 0


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "1.0.0" in result.output
