"""
Tests for the parametric bootstrap.
"""

import pytest

import mivt.inference.replicates as replicates
from mivt.exceptions import BootstrapUnstableError, DomainError
from mivt.inference import bootstrap, fit, percentile_intervals, run_replicates, template_of
from mivt.models import BootstrapOptions, FitOptions, FitReport, MivtModel, ModelTemplate, SimConfig
from mivt.simulation import simulate_mivt


@pytest.fixture(scope="module")
def short_fit(reference_model: MivtModel) -> FitReport:
    """Fixture to provide a fit of a short reference path with a small lag budget."""
    series = simulate_mivt(reference_model, SimConfig(delta=1.0, horizon=400, seed=21))
    return fit(series, ModelTemplate(trawls=["exponential", "exponential"]), FitOptions(lags=10))


def test_too_few_replicates_are_rejected(short_fit: FitReport):
    with pytest.raises(DomainError):
        bootstrap(short_fit, seed=1, options=BootstrapOptions(reps=10))


def test_bootstrap_attaches_intervals(short_fit: FitReport):
    """
    Test that every parameter gets an ordered interval and the replicate tally is recorded.
    """
    report = bootstrap(short_fit, seed=3, options=BootstrapOptions(reps=50, level=0.9, max_failure_fraction=0.5))
    assert set(report.ci) == set(short_fit.parameters())
    for name, interval in report.ci.items():
        assert interval.lower <= interval.upper
        assert interval.level == 0.9
        assert interval.estimate == short_fit.parameters()[name]
    assert report.metadata.bootstrap_reps == 50
    assert report.metadata.bootstrap_failures <= 25
    assert report.parameters() == short_fit.parameters()


def test_bootstrap_is_reproducible(short_fit: FitReport):
    options = BootstrapOptions(reps=50, max_failure_fraction=0.5)
    first = bootstrap(short_fit, seed=8, options=options)
    second = bootstrap(short_fit, seed=8, options=options)
    assert first.ci == second.ci


def test_replicates_do_not_depend_on_worker_count(reference_model: MivtModel):
    """
    Test that results are identical with one and with two joblib workers.
    """
    args = (reference_model, template_of(reference_model), 300, 1.0, 17, 4, FitOptions(lags=10))
    serial = run_replicates(*args, n_jobs=1, max_failure_fraction=0.9)
    parallel = run_replicates(*args, n_jobs=2, max_failure_fraction=0.9)
    assert serial == parallel


def test_unstable_bootstrap_is_reported(short_fit: FitReport, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(replicates, "run_replicate", lambda *args: None)
    with pytest.raises(BootstrapUnstableError) as excinfo:
        bootstrap(short_fit, seed=1, options=BootstrapOptions(reps=50))
    assert excinfo.value.failures == 50


def test_percentile_intervals_flag_outside_estimates():
    estimates = [{"kappa": 1.0 + 0.01 * r} for r in range(100)]
    intervals = percentile_intervals(estimates + [None], {"kappa": 5.0}, level=0.95)
    assert intervals["kappa"].lower == pytest.approx(1.0 + 0.01 * 99 * 0.025)
    assert not intervals["kappa"].contains_estimate


@pytest.mark.slow
def test_reference_bootstrap_interval(reference_model: MivtModel):
    """
    Test coverage and width of the lambda_1 interval at the observed length.
    """
    series = simulate_mivt(reference_model, SimConfig(delta=1.0, horizon=3960, seed=3960))
    report = fit(series, template_of(reference_model))
    report = bootstrap(report, seed=5000, options=BootstrapOptions(reps=500, n_jobs=-1))
    interval = report.ci["lambda_1"]
    assert interval.lower <= 2.157 <= interval.upper
    assert interval.upper - interval.lower == pytest.approx(2.673 - 1.771, rel=0.5)
