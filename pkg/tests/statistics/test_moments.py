"""
Tests for the empirical moment estimators.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from mivt.exceptions import DegenerateVarianceError, DomainError
from mivt.models import CountSeries, MivtModel, SimConfig
from mivt.simulation import simulate_mivt
from mivt.statistics import sample_acf, sample_autocovariance, sample_ccov, sample_cumulants, summarize


@pytest.fixture
def alternating() -> CountSeries:
    """Fixture to provide the series 1, 2, 1, 2, ... of even length."""
    return CountSeries(delta=1.0, counts=[[1, 2] * 50])


@pytest.fixture
def random_pair() -> CountSeries:
    """Fixture to provide two correlated Poisson components."""
    rng = np.random.default_rng(31)
    common = rng.poisson(3.0, 500)
    return CountSeries(delta=1.0, counts=[common + rng.poisson(1.0, 500), common + rng.poisson(2.0, 500)])


@pytest.fixture(scope="module")
def reference_path(reference_model: MivtModel) -> CountSeries:
    """Fixture to provide a long path simulated from the reference model."""
    return simulate_mivt(reference_model, SimConfig(delta=1.0, horizon=20000, seed=3960), labels=["BAC", "C"])


def test_alternating_series_acf(alternating: CountSeries):
    """
    Test that lag one of an alternating series gives -(K - 1) / K exactly.
    """
    acf = sample_acf(alternating, 0, 3)
    assert acf[0] == pytest.approx(-99.0 / 100.0)
    assert acf[1] == pytest.approx(98.0 / 100.0)


def test_acf_is_bounded(random_pair: CountSeries):
    acf = sample_acf(random_pair, 1, 30)
    assert acf.shape == (30,)
    assert np.all(np.abs(acf) <= 1.0)


def test_constant_component_is_degenerate():
    series = CountSeries(delta=1.0, counts=[[4] * 20])
    with pytest.raises(DegenerateVarianceError):
        sample_acf(series, 0, 5)


def test_short_series_is_rejected(alternating: CountSeries):
    with pytest.raises(DomainError):
        sample_acf(alternating, 0, 98)


def test_autocovariance_lag_zero_is_variance(random_pair: CountSeries):
    y = random_pair.counts[0]
    assert sample_autocovariance(random_pair, 0, 2)[0] == pytest.approx(y.var())


def test_cross_covariance_symmetry(random_pair: CountSeries):
    """c_ij(h) = c_ji(-h)."""
    for h in [0, 1, 4]:
        assert sample_ccov(random_pair, 0, 1, h) == pytest.approx(sample_ccov(random_pair, 1, 0, -h), rel=1e-12)


def test_cross_covariance_by_label(random_pair: CountSeries):
    assert sample_ccov(random_pair, "Y1", "Y2", 0) == pytest.approx(sample_ccov(random_pair, 0, 1, 0))
    assert sample_ccov(random_pair, 0, 1, 0) == pytest.approx(3.0, rel=0.25)


def test_self_cross_covariance_is_variance(random_pair: CountSeries):
    assert sample_ccov(random_pair, 1, 1, 0) == pytest.approx(random_pair.counts[1].var())


def test_cumulants_of_constant_series():
    series = CountSeries(delta=1.0, counts=[[7] * 12])
    assert sample_cumulants(series, 0).tolist() == [7.0, 0.0, 0.0, 0.0]


def test_poisson_cumulants_are_equal():
    """
    Test that all four cumulants of a Poisson(5) sample are close to 5.
    """
    series = CountSeries(delta=1.0, counts=[np.random.default_rng(8).poisson(5.0, 1_000_000)])
    kappa = sample_cumulants(series, 0)
    assert kappa[0] == pytest.approx(5.0, abs=0.02)
    assert kappa[1] == pytest.approx(5.0, abs=0.1)
    assert kappa[2] == pytest.approx(5.0, abs=0.3)
    assert kappa[3] == pytest.approx(5.0, abs=1.5)


def test_cumulant_order_is_checked(random_pair: CountSeries):
    with pytest.raises(DomainError):
        sample_cumulants(random_pair, 0, order=5)
    assert sample_cumulants(random_pair, 0, order=2).shape == (2,)


def test_summary_handles_zero_component():
    """An all-zero component has no overdispersion and no correlation."""
    summary = summarize(CountSeries(delta=1.0, counts=[[0, 0, 0, 0], [1, 3, 2, 5]]))
    zero, other = summary.components
    assert zero.mean == 0.0 and zero.variance == 0.0 and zero.overdispersion is None
    assert other.overdispersion == pytest.approx(other.variance / other.mean)
    assert summary.correlation[0][1] is None
    assert summary.correlation[1][1] == pytest.approx(1.0)


def test_summary_quartiles_are_ordered(random_pair: CountSeries):
    for component in summarize(random_pair).components:
        assert component.min <= component.q1 <= component.median <= component.q3 <= component.max


def test_empty_series_is_rejected():
    with pytest.raises(ValidationError):
        CountSeries(delta=1.0, counts=[[]])


def test_reference_path_summary(reference_path: CountSeries):
    """
    Test the descriptive table of a path simulated at the reference parameters.
    """
    summary = summarize(reference_path)
    bac = summary.components[0]
    assert bac.label == "BAC"
    assert bac.mean == pytest.approx(34.06, rel=0.1)
    assert bac.overdispersion > 10.0
    assert summary.correlation[0][1] > 0.3
