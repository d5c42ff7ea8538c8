"""End-to-end command-line behavior, file outputs and manifests."""

import json
import math

import pytest

from fr3mimo.cli import main

_SISO_CHANNELS = """\
#channels v1 rx=1 tx=1
user=0 f_ghz=7
0.6+0.8i
"""

_THREE_USER_CHANNELS = """\
#channels v1 rx=1 tx=1
user=0 f_ghz=7
1+0i
user=1 f_ghz=7
0+2i
user=2 f_ghz=7
3+0i
"""


def _run(*argv):
    return main([str(a) for a in argv])


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        _run("--version")
    assert exc.value.code == 0
    assert "fr3mimo" in capsys.readouterr().out


def test_gen_channels_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert _run("gen-channels", "--config", "indoor", "--users", 2, "--seed", 3, "--out", a) == 0
    assert _run("gen-channels", "--config", "indoor", "--users", 2, "--seed", 3, "--out", b) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_channels_record_count(tmp_path):
    out = tmp_path / "ch.txt"
    assert _run("gen-channels", "--config", "outdoor", "--users", 4, "--seed", 1, "--out", out) == 0
    headers = [ln for ln in out.read_text().splitlines() if ln.startswith("user=")]
    assert len(headers) == 4 * 5  # users x frequencies


def test_gen_channels_json_config(tmp_path):
    cfg = {
        "kind": "custom",
        "num_users": 2,
        "rx_antennas": 2,
        "tx_antennas": 2,
        "frequencies_ghz": [7.0, 10.0],
        "cluster_count": 3,
        "rician_k_db": 0.0,
        "distance_range_m": [5.0, 10.0],
        "angular_spread_deg": 5.0,
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out = tmp_path / "ch.txt"
    assert _run("gen-channels", "--config", cfg_path, "--seed", 0, "--out", out) == 0
    assert out.read_text().startswith("#channels v1 rx=2 tx=2")


def test_gen_channels_invalid_config_names_field(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"kind": "custom", "num_users": 0}))
    code = _run("gen-channels", "--config", cfg_path, "--seed", 0, "--out", tmp_path / "x")
    assert code != 0
    assert "error:" in capsys.readouterr().err


def test_gen_channels_unknown_config_field(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"kind": "custom", "flux_capacitance": 1}))
    assert _run("gen-channels", "--config", cfg_path, "--seed", 0, "--out", tmp_path / "x") != 0
    assert "flux_capacitance" in capsys.readouterr().err


def test_build_table_siso_closed_form(tmp_path):
    ch = tmp_path / "ch.txt"
    ch.write_text(_SISO_CHANNELS)
    out = tmp_path / "t.csv"
    code = _run(
        "build-table", "--channels", ch, "--snr-db", 0, "--ladder", "linear:1", "--out", out
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "cost,7"
    assert float(lines[2].split(",")[1]) == pytest.approx(math.log2(2.0), rel=1e-12)


def test_build_table_rerun_is_identical(tmp_path):
    ch = tmp_path / "ch.txt"
    ch.write_text(_THREE_USER_CHANNELS)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        code = _run(
            "build-table", "--channels", ch, "--snr-db", 0, "--ladder", "linear:1", "--out", out
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_build_table_cells_average_users(tmp_path):
    ch = tmp_path / "ch.txt"
    ch.write_text(_THREE_USER_CHANNELS)
    out = tmp_path / "t.csv"
    assert _run("build-table", "--channels", ch, "--snr-db", 0, "--ladder", "linear:1", "--out", out) == 0
    cell = float(out.read_text().strip().splitlines()[2].split(",")[1])
    expected = (math.log2(1 + 1) + math.log2(1 + 4) + math.log2(1 + 9)) / 3
    assert cell == pytest.approx(expected, rel=1e-12)


def test_build_table_ladder_flag_validation(tmp_path, capsys):
    ch = tmp_path / "ch.txt"
    ch.write_text(_SISO_CHANNELS)
    assert _run("build-table", "--channels", ch, "--ladder", "cubic:3", "--out", tmp_path / "t") != 0
    assert "--ladder" in capsys.readouterr().err


def test_optimize_builtin_headline_values(tmp_path):
    out = tmp_path / "alloc.json"
    assert _run("optimize", "--builtin", "indoor", "--budget", 9, "--out", out) == 0
    doc = json.loads(out.read_text())
    assert doc["sum_se"] == pytest.approx(44.401, abs=0.001)
    assert doc["choice"] == {"7": "4x4", "10": "2x2", "14": "1x1", "20": "1x1", "24": "1x1"}
    assert doc["antennas_used"] == 9

    assert _run("optimize", "--builtin", "outdoor", "--budget", 9, "--out", out) == 0
    assert json.loads(out.read_text())["sum_se"] == pytest.approx(41.628, abs=0.001)


def test_optimize_with_only_mask(tmp_path):
    out = tmp_path / "alloc.json"
    code = _run(
        "optimize", "--builtin", "indoor", "--budget", 9, "--only", "7,24", "--out", out
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["sum_se"] == pytest.approx(33.127, abs=0.001)
    assert doc["choice"]["7"] == "5x5" and doc["choice"]["24"] == "4x4"
    assert doc["mask"]["10"] is False


def test_optimize_with_exclude_mask(tmp_path):
    out = tmp_path / "alloc.json"
    code = _run(
        "optimize", "--builtin", "indoor", "--budget", 9,
        "--exclude", "10,14,20", "--out", out,
    )
    assert code == 0
    assert json.loads(out.read_text())["sum_se"] == pytest.approx(33.127, abs=0.001)


def test_optimize_unknown_frequency_errors(tmp_path, capsys):
    code = _run(
        "optimize", "--builtin", "indoor", "--budget", 9, "--only", "12", "--out", tmp_path / "x"
    )
    assert code != 0
    assert "12 GHz not in table" in capsys.readouterr().err


def test_optimize_from_csv_table(tmp_path):
    table = tmp_path / "t.csv"
    table.write_text("cost,7,10\n1,5.0,4.0\n2,6.0,9.5\n")
    out = tmp_path / "alloc.json"
    assert _run("optimize", "--table", table, "--budget", 2, "--out", out) == 0
    doc = json.loads(out.read_text())
    assert doc["sum_se"] == 9.5
    assert doc["choice"] == {"7": "0x0", "10": "2x2"}


def test_optimize_manifest_written(tmp_path):
    out = tmp_path / "alloc.json"
    assert _run("optimize", "--builtin", "indoor", "--budget", 9, "--out", out) == 0
    manifest = json.loads((tmp_path / "alloc.json.manifest.json").read_text())
    assert manifest["command"] == "optimize"
    assert manifest["outputs"] == [str(out)]
    assert manifest["seed"] is None
    assert len(manifest["config_digest"]) == 64


def test_manifest_digest_tracks_inputs(tmp_path):
    out = tmp_path / "a.json"
    _run("optimize", "--builtin", "indoor", "--budget", 9, "--out", out)
    d9 = json.loads((tmp_path / "a.json.manifest.json").read_text())["config_digest"]
    _run("optimize", "--builtin", "indoor", "--budget", 9, "--out", out)
    assert json.loads((tmp_path / "a.json.manifest.json").read_text())["config_digest"] == d9
    _run("optimize", "--builtin", "indoor", "--budget", 8, "--out", out)
    assert json.loads((tmp_path / "a.json.manifest.json").read_text())["config_digest"] != d9


def test_sweep_output(tmp_path):
    out = tmp_path / "sweep.csv"
    assert _run("sweep", "--builtin", "indoor", "--budgets", "0:45", "--out", out) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "budget,7_se,10_se,14_se,20_se,24_se,sum_se"
    assert len(lines) == 47
    sums = [float(ln.split(",")[-1]) for ln in lines[1:]]
    assert sums == sorted(sums)
    # per-subband contributions add up to the reported sum
    for ln in lines[1:]:
        cells = [float(x) for x in ln.split(",")[1:]]
        assert sum(cells[:-1]) == pytest.approx(cells[-1], rel=1e-12)


def test_sweep_budget_flag_validation(tmp_path, capsys):
    assert _run("sweep", "--builtin", "indoor", "--budgets", "9:1", "--out", tmp_path / "x") != 0
    assert "--budgets" in capsys.readouterr().err


def test_sweep_with_step(tmp_path):
    out = tmp_path / "sweep.csv"
    assert _run("sweep", "--builtin", "outdoor", "--budgets", "0:9:3", "--out", out) == 0
    budgets = [ln.split(",")[0] for ln in out.read_text().strip().splitlines()[1:]]
    assert budgets == ["0", "3", "6", "9"]


def test_compare_outputs_and_truncation_note(tmp_path):
    metrics_out, radar_out = tmp_path / "m.csv", tmp_path / "r.csv"
    code = _run(
        "compare", "--builtin", "indoor", "--only", "7,24",
        "--metrics-out", metrics_out, "--radar-out", radar_out,
    )
    assert code == 0
    m_lines = metrics_out.read_text().strip().splitlines()
    assert m_lines[0] == "architecture,bandwidth,se,adc_dac,subbands,frontends"
    assert len(m_lines) == 5
    r_lines = radar_out.read_text().strip().splitlines()
    assert r_lines[-1] == "all-antennas,5,5,5,5,5"
    manifest = json.loads((tmp_path / "m.csv.manifest.json").read_text())
    assert manifest["outputs"] == [str(metrics_out), str(radar_out)]
    assert any("truncated ladder" in n for n in manifest["notes"])


def test_missing_input_file_fails_cleanly(tmp_path, capsys):
    code = _run("build-table", "--channels", tmp_path / "nope.txt", "--out", tmp_path / "t.csv")
    assert code != 0
    assert "error:" in capsys.readouterr().err
