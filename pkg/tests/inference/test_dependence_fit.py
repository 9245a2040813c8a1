"""
Tests for the dependence stage.
"""

import logging

import numpy as np
import pytest

from mivt.exceptions import FitFailureError
from mivt.inference import estimate_dependence, fit_dependence, fit_marginal
from mivt.models import MivtModel, SimConfig
from mivt.models.fit_report import MarginalFit
from mivt.seeds import NBIndependentSeed
from mivt.simulation import simulate_mivt
from mivt.trawls import ExponentialTrawl
from mivt.trawls.autocorrelator import exponential_pair_overlap


@pytest.fixture
def reference_marginal() -> MarginalFit:
    """Fixture to provide exact marginal estimates of the reference model."""
    leb = [1.0 / 2.157, 1.0 / 1.919]
    alpha = [95.161, 73.055]
    means = [l * 0.812 * a for l, a in zip(leb, alpha)]
    return fit_marginal(means, [m * (1.0 + a) for m, a in zip(means, alpha)], leb, "nb-common")


def test_kappa_recovered_from_noiseless_cross_covariance(reference_marginal: MarginalFit):
    """
    Test kappa = c_12(0) / (R_12(0) alpha_1 alpha_2) on exact inputs.
    """
    r12 = exponential_pair_overlap(2.157, 1.919, 0.0)
    cross = r12 * 0.812 * 95.161 * 73.055
    r0 = np.array([[1.0 / 2.157, r12], [r12, 1.0 / 1.919]])
    dependence = estimate_dependence(np.array([[0.0, cross], [cross, 0.0]]), r0, reference_marginal, "nb-common")
    assert dependence.kappa == pytest.approx(0.812, abs=1e-9)
    assert dependence.kappa_pairs[0][1] == pytest.approx(0.812 * 95.161 * 73.055)
    assert dependence.spread is None
    assert not dependence.floored


def test_negative_cross_covariance_is_floored(reference_marginal: MarginalFit, caplog: pytest.LogCaptureFixture):
    r0 = np.array([[0.5, 0.4], [0.4, 0.5]])
    with caplog.at_level(logging.WARNING):
        dependence = estimate_dependence(np.array([[0.0, -3.0], [-3.0, 0.0]]), r0, reference_marginal, "nb-common")
    assert dependence.floored
    assert dependence.kappa == 0.0
    assert "floored" in caplog.text


def test_non_positive_autocorrelator_fails(reference_marginal: MarginalFit):
    r0 = np.array([[0.5, 0.0], [0.0, 0.5]])
    with pytest.raises(FitFailureError):
        estimate_dependence(np.array([[0.0, 1.0], [1.0, 0.0]]), r0, reference_marginal, "nb-common")


def test_three_components_average_pairs():
    """
    Test that pair estimates are averaged and their spread reported.
    """
    marginal = MarginalFit(alpha=[1.0, 2.0, 4.0], kappa_implied=[1.0, 1.0, 1.0],
                           seed_mean=[1.0, 2.0, 4.0], seed_variance=[2.0, 6.0, 20.0])
    r0 = np.ones((3, 3))
    cross = np.array([[0.0, 2.0, 4.0], [2.0, 0.0, 16.0], [4.0, 16.0, 0.0]])
    dependence = estimate_dependence(cross, r0, marginal, "nb-common")
    assert dependence.pair_estimates == pytest.approx([1.0, 1.0, 2.0])
    assert dependence.kappa == pytest.approx(4.0 / 3.0)
    assert dependence.spread == pytest.approx(np.std([1.0, 1.0, 2.0]))


def test_poisson_family_reports_common_rate():
    marginal = MarginalFit(kappa_implied=[3.0, 4.0], seed_mean=[3.0, 4.0], seed_variance=[3.0, 4.0])
    r0 = np.array([[1.0, 0.5], [0.5, 1.0]])
    dependence = estimate_dependence(np.array([[0.0, 1.0], [1.0, 0.0]]), r0, marginal, "poisson-factor")
    assert dependence.theta_common == pytest.approx(2.0)
    assert dependence.kappa is None


def test_single_component_falls_back_to_implied_shape():
    marginal = MarginalFit(alpha=[2.0], kappa_implied=[1.7], seed_mean=[3.4], seed_variance=[10.2])
    dependence = estimate_dependence(np.zeros((1, 1)), np.array([[1.0]]), marginal, "nb-common")
    assert dependence.kappa == pytest.approx(1.7)


def test_independent_components_have_negligible_dependence():
    """
    Test that simulated independent components give a cross-cumulant near zero.
    """
    model = MivtModel(
        trawls=[ExponentialTrawl(lambda_=1.0), ExponentialTrawl(lambda_=1.0)],
        seed=NBIndependentSeed(kappa=[1.0, 1.0], beta=[2.0, 2.0]),
    )
    series = simulate_mivt(model, SimConfig(delta=1.0, horizon=20000, seed=10))
    marginal = MarginalFit(beta=[2.0, 2.0], kappa_implied=[1.0, 1.0],
                           seed_mean=[2.0, 2.0], seed_variance=[6.0, 6.0])
    dependence = fit_dependence(series, model.trawls, marginal, "nb-independent")
    assert abs(dependence.kappa_pairs[0][1]) < 0.05 * 6.0
    assert dependence.r0[0][0] == pytest.approx(1.0)
