import numpy as np
import pytest

from zetachain import (
    SimulationParams,
    StepTooLarge,
    SymmetricTridiagonal,
    TimeGrid,
    ValidationError,
    dirichlet_truncated,
    evolve_ode,
    evolve_spectral,
    synthesize,
    zeta_estimate,
)

GOLDEN_PARAMS = SimulationParams(5, 0.5, 2.0)


def truncated_series_reference(params, times):
    """Direct evaluation of the normalized truncated Dirichlet sum at s = sigma + it."""
    n = np.arange(params.n_levels) + params.a
    norm2 = 1.0 / np.sum(n**-params.sigma)
    return np.array(
        [norm2 * np.sum(n ** -(params.sigma + 1j * t)) for t in times]
    )


def test_time_grid_validation():
    with pytest.raises(ValidationError):
        TimeGrid(1.0, 1.0, 10)
    with pytest.raises(ValidationError):
        TimeGrid(0.0, 1.0, 1)
    with pytest.raises(ValidationError):
        TimeGrid(0.0, 1.0, 10, t_coh=-1.0)


def test_time_grid_coherence_cutoff():
    grid = TimeGrid(0.0, 10.0, 11, t_coh=4.5)
    full = TimeGrid(0.0, 10.0, 11)
    t = grid.times()
    np.testing.assert_allclose(t, [0, 1, 2, 3, 4], atol=0)
    # retained samples are identical to the uncut grid
    np.testing.assert_allclose(t, full.times()[:5], atol=0)


def test_spectral_starts_at_one():
    series = evolve_spectral(synthesize(GOLDEN_PARAMS), TimeGrid(0.0, 5.0, 101))
    assert abs(series.amplitudes[0] - 1.0) < 1e-12
    assert np.abs(series.amplitudes).max() <= 1.0 + 1e-12


def test_spectral_single_stationary_site():
    # a = 1, N = 1: eigenvalue ln(1) = 0, so a(t) = 1 for all t
    series = evolve_spectral(synthesize(SimulationParams(1, 1.0, 2.0)), TimeGrid(0.0, 20.0, 41))
    np.testing.assert_allclose(series.amplitudes, np.ones(41), atol=1e-15)


@pytest.mark.parametrize(
    "params",
    [GOLDEN_PARAMS, SimulationParams(50, 1.0, 1.5), SimulationParams(200, 1.0, 2.0)],
)
def test_spectral_equals_truncated_series(params):
    # central identity: the autocorrelation is the normalized truncated sum
    grid = TimeGrid(0.0, 50.0, 501)
    series = evolve_spectral(synthesize(params), grid)
    ref = truncated_series_reference(params, series.times)
    assert np.abs(series.amplitudes - ref).max() < 1e-10


def test_spectral_time_reversal_symmetry():
    tri = synthesize(GOLDEN_PARAMS)
    fwd = evolve_spectral(tri, TimeGrid(0.0, 10.0, 101))
    bwd = evolve_spectral(tri, TimeGrid(-10.0, 0.0, 101))
    np.testing.assert_allclose(
        bwd.amplitudes[::-1], np.conj(fwd.amplitudes), atol=1e-13
    )


def test_ode_single_site_pure_phase():
    tri = SymmetricTridiagonal(np.array([0.8]), np.empty(0))
    grid = TimeGrid(0.0, 5.0, 26)
    traj, series = evolve_ode(tri, grid, 1e-3)
    np.testing.assert_allclose(
        series.amplitudes, np.exp(-1j * 0.8 * series.times), atol=1e-10
    )
    drift = np.abs(np.linalg.norm(traj.states, axis=1) - 1.0).max()
    assert drift < 1e-12


def test_ode_matches_spectral():
    tri = synthesize(GOLDEN_PARAMS)
    grid = TimeGrid(0.0, 50.0, 501)
    spec = evolve_spectral(tri, grid)
    traj, ode = evolve_ode(tri, grid, 1e-3)
    assert np.abs(ode.amplitudes - spec.amplitudes).max() < 1e-6
    assert np.abs(np.linalg.norm(traj.states, axis=1) - 1.0).max() < 1e-6


def test_ode_fourth_order_convergence():
    # in the truncation-dominated step regime halving gains ~16x
    tri = synthesize(GOLDEN_PARAMS)
    grid = TimeGrid(0.0, 25.0, 126)
    spec = evolve_spectral(tri, grid)
    _, coarse = evolve_ode(tri, grid, 0.025)
    _, fine = evolve_ode(tri, grid, 0.0125)
    dev_coarse = np.abs(coarse.amplitudes - spec.amplitudes).max()
    dev_fine = np.abs(fine.amplitudes - spec.amplitudes).max()
    assert 12.0 < dev_coarse / dev_fine < 20.0


def test_ode_step_too_large():
    tri = synthesize(SimulationParams(20, 0.5, 1.5))
    with pytest.raises(StepTooLarge):
        evolve_ode(tri, TimeGrid(0.0, 30.0, 31), 1.0)


def test_ode_rejects_bad_step():
    with pytest.raises(ValidationError):
        evolve_ode(synthesize(GOLDEN_PARAMS), TimeGrid(0.0, 1.0, 3), 0.0)


def test_zeta_estimate_normalized_at_zero():
    series = evolve_spectral(synthesize(GOLDEN_PARAMS), TimeGrid(0.0, 1.0, 3))
    pairs = zeta_estimate(series, GOLDEN_PARAMS, normalized=True)
    s0, v0 = pairs[0]
    assert s0 == 2.0 + 0.0j
    assert abs(v0 - 1.0) < 1e-12


def test_zeta_estimate_unnormalized_at_zero():
    p = SimulationParams(5, 1.0, 2.0)
    series = evolve_spectral(synthesize(p), TimeGrid(0.0, 1.0, 3))
    pairs = zeta_estimate(series, p, normalized=False)
    # finite sum 1 + 1/4 + 1/9 + 1/16 + 1/25 = 5269/3600
    assert abs(pairs[0][1] - 5269.0 / 3600.0) < 1e-12


def test_zeta_estimate_against_truncated_oracle():
    p = SimulationParams(5, 1.0, 2.0)
    series = evolve_spectral(synthesize(p), TimeGrid(0.0, 20.0, 201))
    pairs = zeta_estimate(series, p, normalized=False)
    for (s, value), t in zip(pairs, series.times):
        assert abs(value - dirichlet_truncated(s, 1.0, 5)) < 1e-10
        assert s == p.sigma + 1j * t


def test_zeta_estimate_omega_scales_axis():
    p = SimulationParams(5, 1.0, 2.0, omega=2.5)
    series = evolve_spectral(synthesize(p), TimeGrid(0.0, 4.0, 5))
    pairs = zeta_estimate(series, p)
    s_last = pairs[-1][0]
    assert s_last == 2.0 + 1j * 2.5 * 4.0
