"""
Tests for the logarithmic, negative binomial and MLSD laws.
"""

import numpy as np
import pytest

from mivt.exceptions import DomainError
from mivt.seeds.distributions import (
    _logarithmic_table,
    _sequential_search,
    log_pmf_mlsd,
    modified_log_parameters,
    pmf_logarithmic,
    pmf_mlsd,
    pmf_modified_log,
    pmf_nb,
    sample_logarithmic,
    sample_mlsd,
)


@pytest.fixture
def rng() -> np.random.Generator:
    """Fixture to provide a seeded random generator."""
    return np.random.default_rng(20240611)


@pytest.fixture(scope="module")
def bivariate_draws() -> np.ndarray:
    """Fixture to provide one million MLSD((0.3, 0.3)) draws."""
    return sample_mlsd([0.3, 0.3], 1_000_000, np.random.default_rng(7))


def test_mlsd_pmf_reference_values():
    """
    Test the bivariate MLSD pmf at two reference points.
    """
    assert float(pmf_mlsd([0.3, 0.3], [1, 0])) == pytest.approx(0.32741, rel=1e-4)
    assert float(pmf_mlsd([0.3, 0.3], [1, 1])) == pytest.approx(0.098222, rel=1e-4)


def test_mlsd_pmf_sums_to_one():
    """The mass on c_1 + c_2 <= 300 misses one by less than 1e-10."""
    grid = np.stack(np.meshgrid(np.arange(301), np.arange(301), indexing="ij"), axis=-1).reshape(-1, 2)
    grid = grid[(grid.sum(axis=1) > 0) & (grid.sum(axis=1) <= 300)]
    assert np.exp(log_pmf_mlsd([0.3, 0.3], grid)).sum() == pytest.approx(1.0, abs=1e-10)


def test_mlsd_has_no_mass_at_zero():
    with pytest.raises(DomainError):
        pmf_mlsd([0.3, 0.3], [0, 0])


def test_mlsd_rejects_parameters_summing_to_one():
    with pytest.raises(DomainError):
        pmf_mlsd([0.5, 0.5], [1, 0])


def test_univariate_mlsd_is_logarithmic():
    x = np.arange(1, 20)
    assert np.allclose(pmf_mlsd([0.4], x[:, None]), pmf_logarithmic(0.4, x), rtol=1e-12)


def test_nb_pmf_reference_values():
    assert float(pmf_nb(1.0, 0.5, 0)) == pytest.approx(0.5)
    assert float(pmf_nb(2.0, 0.5, 1)) == pytest.approx(0.25)


def test_nb_pmf_normalises_for_fitted_shapes():
    """
    Test normalisation and mean for a shape below one and p close to one.
    """
    x = np.arange(0, 5001)
    pmf = pmf_nb(0.812, 0.99, x)
    assert pmf.sum() == pytest.approx(1.0, abs=1e-9)
    assert np.dot(x, pmf) == pytest.approx(0.812 * 0.99 / 0.01, rel=1e-8)


def test_modified_log_parameters():
    """p_tilde = p_1 / (1 - p_2) and delta = log(1 - p_2) / log(1 - p_1 - p_2)."""
    p_tilde, delta = modified_log_parameters([0.3, 0.3], 0)
    assert p_tilde == pytest.approx(0.3 / 0.7)
    assert delta == pytest.approx(0.38925, abs=1e-5)


def test_modified_log_pmf_normalises():
    p_tilde, delta = modified_log_parameters([0.3, 0.2, 0.1], 1)
    assert pmf_modified_log(p_tilde, delta, np.arange(0, 400)).sum() == pytest.approx(1.0, abs=1e-12)


def test_sample_logarithmic_mean_near_one():
    """
    Test the sampler's mean for p = 0.999 where draws range over thousands.
    """
    p = 0.999
    draws = sample_logarithmic(p, 200_000, np.random.default_rng(3))
    expected = p / ((1.0 - p) * -np.log1p(-p))
    assert draws.min() >= 1
    assert draws.mean() == pytest.approx(expected, rel=0.03)


def test_sequential_search_continues_the_table():
    """Inverting past a table entry matches the table itself."""
    table = _logarithmic_table(0.5)
    for u in [0.2, 0.9, 0.999]:
        expected = int(np.searchsorted(table, u, side="left")) + 1
        assert _sequential_search(0.5, u, 1, 0.0) == expected


def test_sample_logarithmic_rejects_bad_parameter(rng: np.random.Generator):
    with pytest.raises(DomainError):
        sample_logarithmic(1.0, 10, rng)


def test_mlsd_sampler_total_variation(bivariate_draws: np.ndarray):
    """
    Test that empirical frequencies on c_1 + c_2 <= 30 are within 0.005 in total variation.
    """
    mask = bivariate_draws.sum(axis=1) <= 30
    cells, counts = np.unique(bivariate_draws[mask], axis=0, return_counts=True)
    grid = np.stack(np.meshgrid(np.arange(31), np.arange(31), indexing="ij"), axis=-1).reshape(-1, 2)
    grid = grid[(grid.sum(axis=1) > 0) & (grid.sum(axis=1) <= 30)]
    expected = dict(zip(map(tuple, grid), pmf_mlsd([0.3, 0.3], grid)))
    observed = dict(zip(map(tuple, cells), counts / len(bivariate_draws)))
    distance = 0.5 * sum(abs(observed.get(cell, 0.0) - mass) for cell, mass in expected.items())
    assert distance < 0.005


def test_mlsd_sampler_zero_frequency(bivariate_draws: np.ndarray):
    """P(C_1 = 0) matches delta_1 = log(0.7) / log(0.4)."""
    assert np.mean(bivariate_draws[:, 0] == 0) == pytest.approx(0.38925, abs=0.002)


def test_mlsd_sampler_never_returns_zero_rows(bivariate_draws: np.ndarray):
    assert np.all(bivariate_draws.sum(axis=1) > 0)


def test_mlsd_sampler_trivariate_marginals():
    """
    Test each component of a trivariate draw against its modified logarithmic marginal.
    """
    p = [0.3, 0.2, 0.1]
    draws = sample_mlsd(p, 400_000, np.random.default_rng(11))
    for component in range(3):
        p_tilde, delta = modified_log_parameters(p, component)
        expected = pmf_modified_log(p_tilde, delta, np.arange(6))
        observed = np.bincount(draws[:, component], minlength=6)[:6] / len(draws)
        assert np.allclose(observed, expected, atol=0.004)


def test_mlsd_sampler_trivariate_joint_cells():
    p = [0.3, 0.2, 0.1]
    draws = sample_mlsd(p, 400_000, np.random.default_rng(12))
    for cell in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1), (2, 0, 1)]:
        observed = np.mean(np.all(draws == cell, axis=1))
        assert observed == pytest.approx(float(pmf_mlsd(p, cell)), abs=0.003)
