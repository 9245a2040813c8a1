"""
Tests for the command-line front end.
"""

import json
from pathlib import Path

import pandas as pd
import pytest

from mivt.cli import EXIT_MODEL, EXIT_OK, EXIT_USAGE, main

REFERENCE_MODEL = {
    "trawls": [{"family": "exponential", "lambda": 2.157}, {"family": "exponential", "lambda": 1.919}],
    "seed": {"family": "nb-common", "kappa": 0.812, "alpha": [95.161, 73.055]},
}


@pytest.fixture
def model_file(tmp_path: Path) -> Path:
    """
    Fixture to provide the reference model as a JSON file.
    """
    path = tmp_path / "model.json"
    path.write_text(json.dumps(REFERENCE_MODEL))
    return path


@pytest.fixture
def counts_file(tmp_path: Path, model_file: Path) -> Path:
    """
    Fixture to provide a simulated counts CSV written by the simulate command.
    """
    path = tmp_path / "counts.csv"
    code = main(["simulate", "--model", str(model_file), "--delta", "1", "--horizon", "3960",
                 "--labels", "BAC,C", "--seed", "42", "--out", str(path)])
    assert code == EXIT_OK
    return path


@pytest.fixture
def fit_file(tmp_path: Path, counts_file: Path) -> Path:
    """
    Fixture to provide the FitReport JSON written by the fit command.
    """
    path = tmp_path / "fit.json"
    assert main(["fit", "--counts", str(counts_file), "--trawl", "exp,exp", "--out", str(path)]) == EXIT_OK
    return path


def test_simulate_writes_grid(counts_file: Path):
    """
    Test that the simulated CSV has a t column, the labels and 3960 rows.
    """
    frame = pd.read_csv(counts_file)
    assert list(frame.columns) == ["t", "BAC", "C"]
    assert len(frame) == 3960


def test_simulate_is_byte_reproducible(tmp_path: Path, model_file: Path, counts_file: Path):
    """
    Test that simulate with the same seed writes an identical file.
    """
    again = tmp_path / "again.csv"
    main(["simulate", "--model", str(model_file), "--delta", "1", "--horizon", "3960",
          "--labels", "BAC,C", "--seed", "42", "--out", str(again)])
    assert again.read_bytes() == counts_file.read_bytes()


def test_fit_writes_report(fit_file: Path):
    """
    Test that fit writes a FitReport with every section and the series labels.
    """
    report = json.loads(fit_file.read_text())
    assert {"trawl", "marginal", "dependence", "ci", "diagnostics", "model", "metadata"} <= set(report)
    assert report["model"]["trawls"][0]["family"] == "exponential"
    assert report["metadata"]["labels"] == ["BAC", "C"]


def test_acf_with_fitted_column(tmp_path: Path, counts_file: Path, fit_file: Path):
    """
    Test that acf with a fit file adds the fitted autocorrelation column.
    """
    out = tmp_path / "acf.csv"
    code = main(["acf", "--counts", str(counts_file), "--component", "C", "--lags", "12",
                 "--fit", str(fit_file), "--out", str(out)])
    table = pd.read_csv(out)
    assert code == EXIT_OK
    assert list(table.columns) == ["lag", "r", "r_fitted"]
    assert table["lag"].tolist() == list(range(1, 13))


def test_bootstrap_command(tmp_path: Path, fit_file: Path):
    """
    Test that bootstrap adds an interval for every fitted parameter.
    """
    out = tmp_path / "boot.json"
    code = main(["bootstrap", "--fit", str(fit_file), "--reps", "50", "--seed", "7", "--out", str(out)])
    assert code == EXIT_OK
    report = json.loads(out.read_text())
    assert set(report["ci"]) == {"lambda_1", "lambda_2", "kappa", "alpha_1", "alpha_2"}
    assert report["metadata"]["bootstrap_reps"] == 50


def test_bootstrap_refuses_few_replicates(tmp_path: Path, fit_file: Path):
    """
    Test that fewer than 50 bootstrap replicates exit with 2.
    """
    code = main(["bootstrap", "--fit", str(fit_file), "--reps", "10", "--seed", "7",
                 "--out", str(tmp_path / "boot.json")])
    assert code == EXIT_MODEL


def test_mc_study_command(tmp_path: Path, model_file: Path):
    """
    Test that mc-study writes one estimate row per replicate and a bias summary.
    """
    out, summary = tmp_path / "est.csv", tmp_path / "summary.csv"
    code = main(["mc-study", "--model", str(model_file), "--reps", "2", "--n-obs", "2000", "--seed", "3",
                 "--out", str(out), "--summary-out", str(summary)])
    assert code == EXIT_OK
    assert len(pd.read_csv(out)) == 2
    assert "relative_bias" in pd.read_csv(summary).columns


def test_bin_command(tmp_path: Path):
    """
    Test binning of two event files into a labelled counts CSV.
    """
    subs, dels = tmp_path / "subs.csv", tmp_path / "dels.csv"
    subs.write_text("timestamp\n0.1\n4.9\n5.2\n")
    dels.write_text("timestamp\n7.5\n")
    out = tmp_path / "binned.csv"
    code = main(["bin", "--events", f"{subs},{dels}", "--delta", "5", "--start", "0", "--end", "10",
                 "--out", str(out)])
    frame = pd.read_csv(out)
    assert code == EXIT_OK
    assert list(frame.columns) == ["t", "subs", "dels"]
    assert frame["subs"].tolist() == [2, 1]
    assert frame["dels"].tolist() == [0, 1]


def test_summarize_command(tmp_path: Path, counts_file: Path):
    """
    Test that summarize writes the moment summary of every component.
    """
    out = tmp_path / "summary.json"
    assert main(["summarize", "--counts", str(counts_file), "--out", str(out)]) == EXIT_OK
    summary = json.loads(out.read_text())
    assert summary["length"] == 3960
    assert summary["components"][0]["label"] == "BAC"


def test_gof_command(tmp_path: Path, counts_file: Path, fit_file: Path, capsys: pytest.CaptureFixture):
    """
    Test that gof prints the statistic and writes cells that cover every observation.
    """
    out = tmp_path / "gof.csv"
    code = main(["gof", "--counts", str(counts_file), "--fit", str(fit_file), "--out", str(out),
                 "--quantiles-out", str(tmp_path / "q.csv")])
    assert code == EXIT_OK
    assert json.loads(capsys.readouterr().out)["label"] == "BAC"
    assert pd.read_csv(out)["observed"].sum() == 3960


def test_schema_command(capsys: pytest.CaptureFixture):
    """
    Test that schema prints the JSON schema of the model.
    """
    assert main(["schema", "--name", "model"]) == EXIT_OK
    schema = json.loads(capsys.readouterr().out)
    assert "trawls" in schema["properties"]


def test_missing_seed_is_a_usage_error(tmp_path: Path, model_file: Path):
    """
    Test that simulate without --seed exits with 1.
    """
    with pytest.raises(SystemExit) as excinfo:
        main(["simulate", "--model", str(model_file), "--delta", "1", "--horizon", "10",
              "--out", str(tmp_path / "x.csv")])
    assert excinfo.value.code == EXIT_USAGE


def test_unknown_flag_is_a_usage_error():
    """
    Test that an unknown flag exits with 1.
    """
    with pytest.raises(SystemExit) as excinfo:
        main(["fit", "--frobnicate"])
    assert excinfo.value.code == EXIT_USAGE


def test_unknown_trawl_family_is_a_usage_error(tmp_path: Path, counts_file: Path):
    """
    Test that an unknown trawl family exits with 1.
    """
    with pytest.raises(SystemExit) as excinfo:
        main(["fit", "--counts", str(counts_file), "--trawl", "exp,triangle", "--out", str(tmp_path / "f.json")])
    assert excinfo.value.code == EXIT_USAGE


def test_inconsistent_model_is_a_model_error(tmp_path: Path):
    """
    Test that a model whose seed dimension differs from its trawl count exits with 2.
    """
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({**REFERENCE_MODEL, "trawls": REFERENCE_MODEL["trawls"][:1]}))
    code = main(["simulate", "--model", str(path), "--delta", "1", "--horizon", "10", "--seed", "1",
                 "--out", str(tmp_path / "x.csv")])
    assert code == EXIT_MODEL


def test_missing_input_file_is_a_model_error(tmp_path: Path):
    """
    Test that a missing counts file exits with 2.
    """
    code = main(["summarize", "--counts", str(tmp_path / "absent.csv")])
    assert code == EXIT_MODEL


def test_fit_dimension_mismatch_is_a_model_error(tmp_path: Path, counts_file: Path):
    """
    Test that a template with fewer trawls than components exits with 2.
    """
    code = main(["fit", "--counts", str(counts_file), "--trawl", "exp", "--out", str(tmp_path / "f.json")])
    assert code == EXIT_MODEL
