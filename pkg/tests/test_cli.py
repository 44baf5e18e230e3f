"""CLI surface: exit statuses, file emission, config handling, sweeps."""

from __future__ import annotations

import json

import pytest

from zenolab.cli import ConfigError, load_config, main


def _run(argv):
    return main(argv)


# ----------------------------------------------------------------------
# run
# ----------------------------------------------------------------------

def test_run_counterexample_writes_everything(tmp_path, capsys):
    code = _run(["run", "counterexample", "--out", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "(I) HOLDS" in out
    assert "(II) FALSIFIED" in out
    scenario_dir = tmp_path / "counterexample"
    assert (scenario_dir / "summary.txt").is_file()
    assert (scenario_dir / "bundle.json").is_file()
    for table in ("residuals_I", "residuals_II", "residuals_IA"):
        assert (scenario_dir / f"{table}.csv").is_file()
    summary = (scenario_dir / "summary.txt").read_text(encoding="utf-8")
    assert "verdict: PASS" in summary


def test_run_hm_invariance_with_n_override(tmp_path, capsys):
    code = _run(["run", "hm-invariance", "--N", "5", "--out", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "spectral_invariance" in out
    payload = json.loads((tmp_path / "hm-invariance" / "bundle.json").read_bytes())
    assert payload["provenance"]["parameters"]["n_measurements"] == 5
    assert payload["metrics"]["delta_spectral"] <= 1e-8


def test_run_margin_violation_exits_2(tmp_path, capsys):
    code = _run(["run", "counterexample", "--x-max", "5", "--out", str(tmp_path)])
    assert code == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "margin" in err


def test_run_rejects_unknown_scenario(tmp_path):
    with pytest.raises(SystemExit) as excinfo:
        _run(["run", "nope", "--out", str(tmp_path)])
    assert excinfo.value.code == 2


def test_survival_csv_header_and_t0_row(tmp_path):
    _run(["run", "hm-invariance", "--out", str(tmp_path)])
    lines = (tmp_path / "hm-invariance" / "survival_spectral.csv").read_text(
        encoding="utf-8").splitlines()
    assert lines[0] == "# t,s_free,s_measured,N"
    t, s_free, s_measured, n = lines[1].split(",")
    assert float(t) == 0.0
    assert float(s_free) == 1.0
    assert float(s_measured) == 1.0
    assert int(n) == 5


def test_series_csv_gaussian_error_column(tmp_path):
    _run(["run", "series-validity", "--out", str(tmp_path)])
    lines = (tmp_path / "series-validity" / "series_gaussian.csv").read_text(
        encoding="utf-8").splitlines()
    assert lines[0] == "# n_terms,error,resolution"
    by_n = {}
    for line in lines[1:]:
        n, err, _res = line.split(",")
        by_n[int(n)] = float(err)
    assert by_n[30] < 1e-10
    assert by_n[40] < 1e-10


def test_residual_csv_forward_sweep(tmp_path):
    _run(["run", "counterexample", "--out", str(tmp_path)])
    lines = (tmp_path / "counterexample" / "residuals_I.csv").read_text(
        encoding="utf-8").splitlines()
    assert lines[0] == "# t,residual,verdict"
    assert len(lines) > 1
    for line in lines[1:]:
        _t, residual, verdict = line.split(",")
        assert float(residual) <= 1e-8
        assert verdict == "HOLDS"


def test_format_csv_skips_bundle(tmp_path):
    _run(["run", "rabi-control", "--out", str(tmp_path), "--format", "csv"])
    scenario_dir = tmp_path / "rabi-control"
    assert (scenario_dir / "summary.txt").is_file()
    assert (scenario_dir / "survival_zeno.csv").is_file()
    assert not (scenario_dir / "bundle.json").exists()


def test_zenolab_out_env_is_default(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ZENOLAB_OUT", str(tmp_path / "from-env"))
    code = _run(["run", "rabi-control"])
    assert code == 0
    capsys.readouterr()
    assert (tmp_path / "from-env" / "rabi-control" / "bundle.json").is_file()


# ----------------------------------------------------------------------
# determinism (golden-file mode)
# ----------------------------------------------------------------------

def test_bundle_bytes_identical_across_runs(tmp_path):
    _run(["run", "counterexample", "--out", str(tmp_path / "a")])
    _run(["run", "counterexample", "--out", str(tmp_path / "b")])
    first = (tmp_path / "a" / "counterexample" / "bundle.json").read_bytes()
    second = (tmp_path / "b" / "counterexample" / "bundle.json").read_bytes()
    assert first == second


# ----------------------------------------------------------------------
# config files
# ----------------------------------------------------------------------

def test_config_file_parsing(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# comment line\n"
        "sigma = 2.0\n"
        "N = 7        # trailing comment\n"
        "\n"
        "grid-points = 1024\n",
        encoding="utf-8",
    )
    values = load_config(str(cfg))
    assert values == {"sigma": 2.0, "N": 7, "grid-points": 1024}


def test_config_unknown_key(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("wibble = 3\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="unknown key"):
        load_config(str(cfg))


def test_config_type_error(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("grid-points = soon\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="expects int"):
        load_config(str(cfg))


def test_flag_overrides_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("sigma = 2.0\n", encoding="utf-8")
    code = _run(["run", "hm-invariance", "--config", str(cfg),
                 "--sigma", "1.0", "--out", str(tmp_path)])
    assert code == 0
    payload = json.loads((tmp_path / "hm-invariance" / "bundle.json").read_bytes())
    assert payload["provenance"]["parameters"]["sigma"] == 1.0


def test_bad_config_exits_2(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("sigma: 2.0\n", encoding="utf-8")
    code = _run(["run", "hm-invariance", "--config", str(cfg), "--out", str(tmp_path)])
    assert code == 2
    assert "error:" in capsys.readouterr().err


# ----------------------------------------------------------------------
# list and sweep
# ----------------------------------------------------------------------

def test_list_names_all_scenarios(capsys):
    assert _run(["list"]) == 0
    out = capsys.readouterr().out
    for name in ("counterexample", "hm-invariance", "rabi-control", "series-validity"):
        assert name in out


def test_sweep_over_sigma(tmp_path, capsys):
    code = _run(["sweep", "hm-invariance", "--param", "sigma",
                 "--values", "0.8,1.2", "--out", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "sigma=0.8: PASS" in out
    assert "sigma=1.2: PASS" in out
    for value in ("0.8", "1.2"):
        assert (tmp_path / "hm-invariance" / f"sigma={value}" / "bundle.json").is_file()


def test_sweep_parallel_jobs(tmp_path, capsys):
    code = _run(["sweep", "rabi-control", "--param", "N",
                 "--values", "3,5", "--jobs", "2", "--out", str(tmp_path)])
    assert code == 0
    capsys.readouterr()
    assert (tmp_path / "rabi-control" / "N=3" / "summary.txt").is_file()
    assert (tmp_path / "rabi-control" / "N=5" / "summary.txt").is_file()


def test_sweep_rejects_unsweepable_param(tmp_path, capsys):
    code = _run(["sweep", "rabi-control", "--param", "out",
                 "--values", "a,b", "--out", str(tmp_path)])
    assert code == 2
    assert "cannot sweep" in capsys.readouterr().err
