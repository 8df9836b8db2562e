import csv
import json
import subprocess
import sys

import pytest

import oracles
from skinlab.cli import SWEEP_COLUMNS, main


def read_csv(path):
    lines = [ln for ln in path.read_text().splitlines() if not ln.startswith("#")]
    rows = list(csv.reader(lines))
    return rows[0], rows[1:]


def test_verify_passes(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.count("proved") == 9
    assert "symmetry" in out and "FAILED" not in out


def test_verify_only_and_json(tmp_path, capsys):
    target = tmp_path / "cert.json"
    assert main(["verify", "--only", "A5", "--json", str(target)]) == 0
    doc = json.loads(target.read_text())
    assert [d["id"] for d in doc] == ["A5"]
    assert doc[0]["verdict"] == "proved"


def test_verify_injected_fault_names_check(capsys):
    assert main(["verify", "--only", "A3", "--inject-fault", "A3"]) == 1
    err = capsys.readouterr().err
    assert "A3" in err


def test_sweep_table(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--t-min", "0.4", "--t-max", "1.0", "--steps", "61", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert tuple(header) == SWEEP_COLUMNS
    assert len(rows) == 61
    last = dict(zip(header, rows[-1]))
    assert float(last["t"]) == 1.0 and float(last["theta"]) == pytest.approx(0.0, abs=1e-12)
    half = next(dict(zip(header, r)) for r in rows if abs(float(r[0]) - 0.5) < 1e-12)
    assert float(half["alpha"]) == pytest.approx(oracles.FROZEN["alpha_half"], rel=1e-12)
    assert half["mod_h"] == ""
    text = out.read_text()
    assert "# units:" in text and "# modulus convention:" in text


def test_sweep_with_modulus(tmp_path):
    out = tmp_path / "s.csv"
    args = ["sweep", "--t-min", "0.5", "--t-max", "1.0", "--steps", "2", "--modulus", "--grid", "64", "--refine", "2"]
    assert main(args + ["--out", str(out)]) == 0
    header, rows = read_csv(out)
    first = dict(zip(header, rows[0]))
    assert float(first["mod_h"]) > 2.0
    assert first["grid_levels"] == "16;32;64"


def test_profile_samples(tmp_path):
    out = tmp_path / "p.csv"
    assert main(["profile", "--t", "1", "--samples", "3", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["x", "F_upper", "F_lower"]
    assert len(rows) == 3
    assert float(rows[0][1]) == pytest.approx(oracles.FROZEN["F_0_1"], rel=1e-12)
    # symmetric about x = 1/2
    assert float(rows[1][1]) == pytest.approx(-float(rows[1][2]), abs=1e-12)


def test_profile_half_dominates_one(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["profile", "--t", "0.5", "--samples", "41", "--out", str(a)])
    main(["profile", "--t", "1", "--samples", "41", "--out", str(b)])
    _, ra = read_csv(a)
    _, rb = read_csv(b)
    for x, y in zip(ra, rb):
        assert float(x[1]) >= float(y[1]) - 1e-12
        assert float(x[2]) <= float(y[2]) + 1e-12


@pytest.mark.parametrize("t", ["0", "0.3", "1.5", "nan"])
def test_out_of_range_t(tmp_path, capsys, t):
    out = tmp_path / "p.csv"
    assert main(["profile", "--t", t, "--samples", "3", "--out", str(out)]) == 2
    assert not out.exists()
    assert "outside" in capsys.readouterr().err


def test_limitset_rows_and_symmetry(tmp_path, capsys):
    counts = []
    for depth in (1, 2, 3):
        out = tmp_path / f"l{depth}.csv"
        assert main(["limitset", "--t", "0.7", "--depth", str(depth), "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["re", "im"]
        counts.append(len(rows))
    assert counts[0] <= 10
    assert counts[0] < counts[1] < counts[2]
    out = tmp_path / "l.csv"
    assert main(["limitset", "--t", "0.5", "--depth", "4", "--check-symmetry", "--out", str(out)]) == 0
    assert "ok" in capsys.readouterr().out


def test_modulus_json(capsys):
    assert main(["modulus", "--t", "1", "--grid", "64", "--refine", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["grid_levels"] == [16, 32, 64]
    assert abs(doc["mod_h"] * doc["mod_w"] - 1) < 0.01


def test_outputs_deterministic_without_timestamp(tmp_path):
    texts = []
    for i in range(2):
        out = tmp_path / f"s{i}.csv"
        main(["sweep", "--t-min", "0.4", "--t-max", "1", "--steps", "7", "--no-timestamp", "--out", str(out)])
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]
    assert not texts[0].startswith(b"# generated")


def test_timestamp_header(tmp_path):
    out = tmp_path / "p.csv"
    main(["profile", "--t", "1", "--samples", "2", "--out", str(out)])
    assert out.read_text().startswith("# generated ")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["sweep", "--t-min", "0.5"],
        ["sweep", "--t-min", "0.9", "--t-max", "0.5", "--steps", "3", "--out", "x.csv"],
        ["limitset", "--t", "0.5", "--depth", "17", "--out", "x.csv"],
        ["verify", "--only", "A6"],
        ["modulus", "--t", "0.5", "--grid", "16", "--refine", "1"],
    ],
)
def test_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skinlab", "verify", "--only", "A1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "proved" in proc.stdout


def test_profile_endpoint_is_alpha(tmp_path):
    out = tmp_path / "p.csv"
    main(["profile", "--t", "1", "--samples", "3", "--out", str(out)])
    _, rows = read_csv(out)
    assert [float(r[0]) for r in rows] == [0.0, 0.5, 1.0]
    assert float(rows[-1][1]) == pytest.approx(oracles.FROZEN["alpha_1"], rel=1e-13)


def test_limitset_symmetric_at_one(tmp_path, capsys):
    out = tmp_path / "l.csv"
    assert main(["limitset", "--t", "1", "--depth", "5", "--check-symmetry", "--out", str(out)]) == 0
    assert "ok" in capsys.readouterr().out
    assert "points at infinity omitted" in out.read_text()
