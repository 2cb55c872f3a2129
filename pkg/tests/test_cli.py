import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from cyclestats.cli import main
from cyclestats.permstats import W_r_partition_sum
from cyclestats.records import SCAN_CSV_HEADER, ResultRecord, cache_key


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


@pytest.mark.parametrize("argv, expected", [
    (["stats", "--which", "E", "-n", "4", "-r", "2"], "97/288"),
    (["stats", "--which", "W", "-n", "0", "-r", "3"], "1"),
    (["stats", "--which", "W", "-n", "3", "-r", "2"], "7/18"),
])
def test_stats_examples(capsys, argv, expected):
    assert run_json(capsys, *argv)["payload"]["value"] == expected


def test_stats_provenance(capsys):
    rec = run_json(capsys, "stats", "--which", "E", "-n", "4")
    assert rec["provenance"] == "exact"
    rec = run_json(capsys, "stats", "--which", "E", "-n", "1000", "--float")
    assert rec["provenance"] == "float"


def test_constants_examples(capsys):
    p = run_json(capsys, "constants", "-r", "2")["payload"]
    assert 4.2629 <= float(p["A_r"]) <= 4.2639
    assert float(p["A_r_lower"]) <= float(p["A_r"]) <= float(p["A_r_upper"])
    p = run_json(capsys, "constants", "-r", "4")["payload"]
    assert float(p["A_r"]) == pytest.approx(2.23647, abs=1e-5)
    p = run_json(capsys, "constants", "-r", "2", "--cr-only")["payload"]
    assert float(p["c_r"]) == pytest.approx(0.2820948, abs=1e-7)


def test_series_both_methods(capsys):
    a = run_json(capsys, "series", "-r", "2", "-N", "6")["payload"]["rows"]
    b = run_json(capsys, "series", "-r", "2", "-N", "6", "--method", "exppolylog")["payload"]["rows"]
    assert a == b
    assert a[4]["W"] == "73/288"


def test_scan_csv_header(capsys):
    assert main(["scan", "--q", "3", "-n", "4", "--alpha", "omega", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == SCAN_CSV_HEADER
    row = dict(zip(rows[0], rows[1]))
    assert Fraction(int(row["model_num"]), int(row["model_den"])) == Fraction(97, 288)
    assert Fraction(int(row["prob_num"]), int(row["prob_den"])) == Fraction(int(row["S"]), 81)


def test_scan_custom_shifts(capsys):
    p = run_json(capsys, "scan", "--q", "5", "-n", "3", "--alpha", "phi", "--shifts", "0;0,1;2")
    assert p["payload"]["rows"][0]["r"] == 3
    assert p["payload"]["shifts"] == ["0", "0,1", "2"]


def test_sweep_rows_in_prime_order(capsys):
    p = run_json(capsys, "sweep", "--primes", "3,5,7", "-n", "3", "--alpha", "omega", "--threads", "1")
    assert [row["q"] for row in p["payload"]["rows"]] == [3, 5, 7]


def test_sweep_threads_deterministic(capsys):
    one = run_json(capsys, "sweep", "--primes", "3,5", "-n", "3", "--alpha", "phi", "--threads", "1")
    two = run_json(capsys, "sweep", "--primes", "3,5", "-n", "3", "--alpha", "phi", "--threads", "2")
    assert one["payload"] == two["payload"]


def test_census_probe_certify_trend_factor(capsys):
    assert run_json(capsys, "census", "--q", "5", "-n", "3")["payload"]["total"] == 125
    p = run_json(capsys, "probe", "-n", "4", "--q", "5")["payload"]
    assert p["above_threshold"] and p["collisions"] == 0
    assert run_json(capsys, "certify", "-n", "5")["payload"]["q_threshold"] == 7
    rows = run_json(capsys, "trend", "--target", "E", "--n-list", "64,128")["payload"]["rows"]
    assert [row["n"] for row in rows] == [64, 128]
    rows = run_json(capsys, "factor", "--q", "2", "--poly", "1,0,1")["payload"]["rows"]
    assert rows == [{"factor": "1,1", "exponent": 2}]


def test_json_roundtrip(capsys):
    text = json.dumps(run_json(capsys, "stats", "--which", "W", "-n", "9", "-r", "3"))
    rec = ResultRecord.from_json(text)
    assert ResultRecord.from_json(rec.to_json()) == rec
    assert Fraction(rec.payload["value"]) == W_r_partition_sum(9, 3)


def test_cache_coherence(capsys, tmp_path):
    argv = ["stats", "--which", "W", "-n", "6", "--cache", "--cache-dir", str(tmp_path)]
    first = run_json(capsys, *argv)
    second = run_json(capsys, *argv)
    assert not first["cached"] and second["cached"]
    assert first["payload"] == second["payload"]
    assert cache_key("stats", first["config"]) != cache_key("stats", {**first["config"], "n": 7})


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CYCLESTATS_CACHE_DIR", str(tmp_path))
    run_json(capsys, "stats", "--which", "E", "-n", "5", "--cache")
    assert list(tmp_path.rglob("*.json"))


def test_output_file(capsys, tmp_path):
    out = tmp_path / "rec.json"
    assert main(["stats", "--which", "E", "-n", "3", "--output", str(out)]) == 0
    assert json.loads(out.read_text())["payload"]["value"] == "7/18"


@pytest.mark.parametrize("argv, code", [
    (["stats", "--which", "E", "-n", "0"], 2),
    (["scan", "--q", "4", "-n", "3", "--alpha", "omega"], 2),
    (["scan", "--q", "3", "-n", "3", "--alpha", "phi", "--shifts", "0;0"], 2),
    (["scan", "--q", "101", "-n", "5", "--alpha", "omega"], 3),
    (["sweep", "--primes", "3,101", "-n", "5", "--alpha", "omega"], 3),
    (["probe", "-n", "1", "--q", "3"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err.startswith("cyclestats:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stats", "--which", "X", "-n", "3"])
    assert exc.value.code == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "cyclestats.cli", "stats", "--which", "E", "-n", "2"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["payload"]["value"] == "1/2"
