"""
Tests for the MivtModel.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from mivt.models import MivtModel
from tests.conftest import REFERENCE_ALPHA, REFERENCE_KAPPA, REFERENCE_LAMBDA


def test_parses_from_json(reference_model: MivtModel):
    """
    Test that the JSON form with aliases parses to the same model.
    """
    parsed = MivtModel.model_validate_json(reference_model.model_dump_json())
    assert parsed == reference_model
    assert '"lambda"' in reference_model.model_dump_json()


def test_seed_dimension_must_match_trawls():
    with pytest.raises(ValidationError, match="dimension"):
        MivtModel.model_validate({
            "trawls": [{"family": "exponential", "lambda": 1.0}],
            "seed": {"family": "nb-common", "kappa": 1.0, "alpha": [1.0, 2.0]},
        })


def test_infinite_trawl_measure_is_rejected():
    with pytest.raises(ValidationError):
        MivtModel.model_validate({
            "trawls": [{"family": "sup-ig", "delta": 0.0, "gamma": 1.0}],
            "seed": {"family": "nb-independent", "kappa": [1.0], "beta": [1.0]},
        })


def test_stationary_mean(reference_model: MivtModel):
    """
    Test E[Y^(i)] = kappa alpha_i / lambda_i for exponential trawls.
    """
    expected = REFERENCE_KAPPA * np.asarray(REFERENCE_ALPHA) / np.asarray(REFERENCE_LAMBDA)
    np.testing.assert_allclose(reference_model.stationary_mean(), expected, rtol=1e-12)


def test_stationary_covariance_at_lag_zero(reference_model: MivtModel):
    """
    Test that the diagonal is the stationary variance and the cross term uses the overlap 1 / max(lambda).
    """
    cov = reference_model.stationary_covariance(0.0)
    np.testing.assert_allclose(np.diag(cov), reference_model.stationary_variance(), rtol=1e-8)
    expected_cross = REFERENCE_KAPPA * REFERENCE_ALPHA[0] * REFERENCE_ALPHA[1] / max(REFERENCE_LAMBDA)
    assert cov[0, 1] == pytest.approx(expected_cross, rel=1e-8)
    assert cov[1, 0] == pytest.approx(cov[0, 1], rel=1e-12)


def test_stationary_covariance_decays(reference_model: MivtModel):
    assert np.all(reference_model.stationary_covariance(2.0) < reference_model.stationary_covariance(0.0))


def test_parameters_are_flattened(reference_model: MivtModel):
    assert list(reference_model.parameters()) == ["lambda_1", "lambda_2", "kappa", "alpha_1", "alpha_2"]
    assert reference_model.parameters()["lambda_2"] == REFERENCE_LAMBDA[1]
