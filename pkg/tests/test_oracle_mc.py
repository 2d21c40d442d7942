"""Monte Carlo validators: sampling, Pearson estimates, Marcum oracle."""

import math

import numpy as np
import pytest

from qtms_radar.detection import marcum_q1
from qtms_radar.oracle_mc import (
    McReport,
    RngSeed,
    empirical_pearson,
    marcum_oracle,
    sample_gaussian,
)
from qtms_radar.quantum_gaussian import SqueezeParams, covariance_closed_form, pearson_rho

N_UNIT = 200_000  # unit-test sample size; acceptance uses 1e6


def test_rng_seed_validation():
    RngSeed(0)
    RngSeed((1 << 64) - 1)
    with pytest.raises(ValueError):
        RngSeed(-1)
    with pytest.raises(ValueError):
        RngSeed(1 << 64)
    with pytest.raises(ValueError):
        RngSeed(1.5)


def test_mc_report_z_score_consistency():
    # dyadic values so (estimate - target)/std_error is exact in binary
    McReport(estimate=1.5, std_error=0.25, n_samples=1000, target=1.0, z_score=2.0)
    with pytest.raises(ValueError):
        McReport(estimate=1.5, std_error=0.25, n_samples=1000, target=1.0, z_score=1.0)
    with pytest.raises(ValueError):
        McReport(estimate=1.5, std_error=0.25, n_samples=10, target=1.0, z_score=2.0)
    # degenerate estimator: exact hit scores zero, miss scores infinite
    r = McReport(estimate=1.0, std_error=0.0, n_samples=1000, target=1.0, z_score=0.0)
    assert r.z_score == 0.0
    r = McReport(estimate=1.0, std_error=0.0, n_samples=1000, target=0.5, z_score=math.inf)
    assert math.isinf(r.z_score)


def test_sample_gaussian_white_case():
    draws = sample_gaussian(np.eye(4), N_UNIT, RngSeed(11))
    assert draws.shape == (N_UNIT, 4)
    se = math.sqrt(2.0 / N_UNIT)  # variance-of-variance for a normal
    for k in range(4):
        assert abs(float(np.var(draws[:, k])) - 1.0) < 5 * se
    # unit covariance leaves components uncorrelated
    rep = empirical_pearson(draws, (0, 2), 0.0)
    assert abs(rep.z_score) < 5.0


def test_sample_gaussian_matches_target_covariance():
    cov = covariance_closed_form(SqueezeParams(r=0.5, phi=0.0))
    draws = sample_gaussian(cov, N_UNIT, 42)
    emp = np.cov(draws.T)
    assert np.max(np.abs(emp - cov.c)) < 0.05  # 5 sigma-ish at this n


def test_sample_gaussian_deterministic():
    a = sample_gaussian(np.eye(4), 2000, 7)
    b = sample_gaussian(np.eye(4), 2000, 7)
    assert np.array_equal(a, b)
    c = sample_gaussian(np.eye(4), 2000, 8)
    assert not np.array_equal(a, c)


def test_sample_gaussian_rejects_non_pd():
    bad = np.diag([1.0, 1.0, 1.0, -1.0])
    with pytest.raises(ValueError, match="positive definite"):
        sample_gaussian(bad, 2000, 1)
    with pytest.raises(ValueError):
        sample_gaussian(np.eye(3), 2000, 1)
    with pytest.raises(ValueError):
        sample_gaussian(np.eye(4), 0, 1)


@pytest.mark.parametrize("r", [0.1, 0.5, 1.0])
def test_empirical_pearson_hits_analytic_value(r):
    cov = covariance_closed_form(SqueezeParams(r=r, phi=0.0))
    draws = sample_gaussian(cov, N_UNIT, 1234)
    rep = empirical_pearson(draws, (0, 2), pearson_rho(r))
    assert abs(rep.z_score) < 5.0
    rep_p = empirical_pearson(draws, (1, 3), -pearson_rho(r))
    assert abs(rep_p.z_score) < 5.0


def test_empirical_pearson_duplicated_columns():
    draws = sample_gaussian(np.eye(4), 2000, 3)
    stacked = np.column_stack([draws[:, 0], draws[:, 0]])
    rep = empirical_pearson(stacked, (0, 1), 1.0)
    assert rep.estimate == pytest.approx(1.0, abs=1e-12)
    assert rep.std_error == pytest.approx(0.0, abs=1e-12)


def test_empirical_pearson_errors():
    draws = sample_gaussian(np.eye(4), 2000, 3)
    with pytest.raises(ValueError, match="zero-variance"):
        empirical_pearson(np.column_stack([draws[:, 0], np.zeros(2000)]), (0, 1), 0.0)
    with pytest.raises(ValueError, match="1000"):
        empirical_pearson(draws[:100], (0, 2), 0.0)


def test_marcum_oracle_exact_corner():
    rep = marcum_oracle(0.0, 0.0, 100_000, 5)
    assert rep.estimate == 1.0
    assert rep.target == 1.0
    assert rep.z_score == 0.0


def test_marcum_oracle_closed_form_point():
    rep = marcum_oracle(0.0, 2.0, N_UNIT, 17)
    assert rep.target == pytest.approx(math.exp(-2.0), rel=1e-12)
    assert abs(rep.z_score) < 5.0


def test_marcum_oracle_general_point():
    rep = marcum_oracle(1.0, 1.0, N_UNIT, 99)
    assert rep.target == pytest.approx(marcum_q1(1.0, 1.0), rel=1e-15)
    assert abs(rep.z_score) < 5.0
    assert rep.std_error == pytest.approx(
        math.sqrt(rep.estimate * (1 - rep.estimate) / N_UNIT), rel=1e-12
    )


def test_marcum_oracle_deterministic_and_guarded():
    a = marcum_oracle(1.0, 1.0, 100_000, 4)
    b = marcum_oracle(1.0, 1.0, 100_000, 4)
    assert a == b
    with pytest.raises(ValueError):
        marcum_oracle(1.0, 1.0, 50_000, 4)
    with pytest.raises(ValueError):
        marcum_oracle(-1.0, 1.0, 100_000, 4)
