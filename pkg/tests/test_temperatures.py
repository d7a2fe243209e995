"""Effective, spectral and contact temperatures of the post-swap state."""

import math
import random

import pytest
from hypothesis import given, settings

from tls_heat_engine import (
    BathPair,
    ConvergenceError,
    DomainError,
    EngineSetup,
    JointState,
    contact_temperature,
    effective_temperature,
    effective_temperature_equal_gap_limit,
    effective_temperature_small_x_limit,
    effective_temperature_via_differentials,
    final_state,
    final_subsystem_temperatures,
    max_work_effective_temperature,
    occupation,
    spectral_temperature_closed,
    spectral_temperature_general,
    temperature_report,
    tls_heat_capacity,
    x_auxiliary,
)
from tls_heat_engine.temperatures import _contact_root, canonical_energy

from conftest import random_extracting_setup, random_setup
from strategies import extracting_setups, setups

# frozen against a 50-digit mpmath evaluation at a1=2, a2=1, T1=9, T2=1
T_EFF_2_1 = 2.1460025469636199005
T_SPECTRAL_2_1 = 2.4938598978033674252
T_CONTACT_2_1 = 2.2944811128684218612
X_AUX_2_1 = 0.47443195638542931775


@pytest.fixture
def generic_setup(figure_baths):
    """T1' = 2 and T2' = 4.5 here, so the three temperatures all differ."""
    return EngineSetup(2.0, 1.0, figure_baths)


@pytest.fixture
def coincidence_setup(figure_baths):
    """nu = sqrt(theta): both post-swap subsystems sit at 3."""
    return EngineSetup(3.0, 1.0, figure_baths)


def test_effective_temperature_at_coincidence(coincidence_setup):
    assert effective_temperature(coincidence_setup) == pytest.approx(3.0, abs=1e-12)


def test_effective_temperature_carnot_limit(figure_baths):
    # nu -> theta forces equal gap/temperature ratios, so the capacity
    # weights balance and T -> T1 (1+theta)/2 = 5 regardless of a1
    theta = figure_baths.theta
    for a1 in (0.5, 3.0, 12.0):
        setup = EngineSetup(a1, a1 * theta * (1.0 + 1e-8), figure_baths)
        assert effective_temperature(setup) == pytest.approx(5.0, rel=1e-6)


def test_effective_temperature_frozen_value(generic_setup):
    assert effective_temperature(generic_setup) == pytest.approx(T_EFF_2_1, rel=1e-13)


@given(setup=setups())
@settings(max_examples=300)
def test_effective_temperature_is_convex_combination(setup):
    t1p, t2p = final_subsystem_temperatures(setup)
    t_eff = effective_temperature(setup)
    assert min(t1p, t2p) <= t_eff <= max(t1p, t2p)


def test_via_differentials_matches_closed_form(generic_setup):
    closed = effective_temperature(generic_setup)
    fd = effective_temperature_via_differentials(generic_setup, step=1e-5)
    assert fd == pytest.approx(closed, rel=1e-6)


def test_via_differentials_random_setups():
    rng = random.Random(23)
    for _ in range(200):
        setup = random_extracting_setup(rng)
        closed = effective_temperature(setup)
        fd = effective_temperature_via_differentials(setup, step=1e-5)
        assert fd == pytest.approx(closed, rel=1e-6)


def test_via_differentials_truncation_shrinks_with_step(generic_setup):
    closed = effective_temperature(generic_setup)
    coarse = abs(effective_temperature_via_differentials(generic_setup, step=1e-3) - closed)
    fine = abs(effective_temperature_via_differentials(generic_setup, step=5e-4) - closed)
    # central differences: halving the step cuts the residual about fourfold
    assert fine < 0.5 * coarse


def test_via_differentials_step_validation(generic_setup):
    with pytest.raises(DomainError):
        effective_temperature_via_differentials(generic_setup, step=0.0)
    with pytest.raises(DomainError):
        effective_temperature_via_differentials(generic_setup, step=1e-2)


def test_small_x_limit_values():
    theta = 1.0 / 9.0
    assert effective_temperature_small_x_limit(1.0, theta) == pytest.approx((1 + theta) / 2, rel=1e-14)
    assert effective_temperature_small_x_limit(1.0, theta) == pytest.approx(5.0 / 9.0, rel=1e-14)
    assert effective_temperature_small_x_limit(theta**2, theta) == pytest.approx(
        (theta + theta**2) / (1 + theta**2), rel=1e-14
    )
    with pytest.raises(DomainError):
        effective_temperature_small_x_limit(0.0, 0.5)
    with pytest.raises(DomainError):
        effective_temperature_small_x_limit(1.0, 1.5)


def test_small_x_asymptotics():
    # tiny gap/temperature ratios on both sides: the full formula approaches
    # the closed small-x ratio with the setup's actual capacity ratio
    rng = random.Random(31)
    for _ in range(50):
        t2 = 10.0 ** rng.uniform(-1.0, 1.0)
        t1 = t2 * rng.uniform(1.5, 10.0)
        baths = BathPair(t1, t2)
        a1 = 1e-3 * t1 * rng.uniform(0.1, 1.0)
        nu = rng.uniform(max(2e-4, baths.theta * 1e-2), 0.95)
        a2 = nu * a1
        if a2 / t2 > 1e-3:
            continue
        setup = EngineSetup(a1, a2, baths)
        xi = tls_heat_capacity(a1, t1) / tls_heat_capacity(a2, t2)
        predicted = effective_temperature_small_x_limit(xi, baths.theta)
        assert abs(effective_temperature(setup) / t1 - predicted) < 1e-4


def test_equal_gap_limit_values():
    theta = 1.0 / 9.0
    assert effective_temperature_equal_gap_limit(1e-12, theta) == pytest.approx(theta, rel=1e-9)
    assert effective_temperature_equal_gap_limit(1e12, theta) == pytest.approx(1.0, rel=1e-9)
    assert effective_temperature_equal_gap_limit(1.0 / 81.0, theta) == pytest.approx(10.0 / 82.0, rel=1e-14)
    with pytest.raises(DomainError):
        effective_temperature_equal_gap_limit(-1.0, 0.5)


def test_equal_gap_asymptotics(figure_baths):
    # nu within 1e-4 of 1: the weighted average collapses to (theta+xi)/(1+xi)
    for a1 in (0.5, 2.0, 8.0):
        setup = EngineSetup(a1, a1 * (1.0 - 1e-4), figure_baths)
        xi = tls_heat_capacity(setup.a1, setup.t1) / tls_heat_capacity(setup.a2, setup.t2)
        predicted = effective_temperature_equal_gap_limit(xi, figure_baths.theta)
        assert abs(effective_temperature(setup) / setup.t1 - predicted) < 1e-3


def test_spectral_reduces_to_canonical_for_single_tls():
    for gap, temperature in ((1.0, 1.0), (2.5, 0.7), (0.3, 4.0)):
        p = occupation(gap, temperature)
        state = JointState(energies=(0.0, gap), probabilities=(1.0 - p, p))
        assert spectral_temperature_general(state) == pytest.approx(temperature, rel=1e-12)


def test_spectral_at_coincidence(coincidence_setup):
    assert spectral_temperature_general(final_state(coincidence_setup)) == pytest.approx(3.0, abs=1e-10)
    assert spectral_temperature_closed(coincidence_setup) == pytest.approx(3.0, abs=1e-10)


def test_spectral_frozen_values(generic_setup):
    assert spectral_temperature_closed(generic_setup) == pytest.approx(T_SPECTRAL_2_1, rel=1e-13)
    assert x_auxiliary(generic_setup) == pytest.approx(X_AUX_2_1, rel=1e-14)


def test_spectral_general_matches_closed_form():
    rng = random.Random(37)
    for _ in range(1000):
        setup = random_extracting_setup(rng)
        general = spectral_temperature_general(final_state(setup))
        closed = spectral_temperature_closed(setup)
        assert general == pytest.approx(closed, rel=1e-10)


def test_spectral_carnot_limit(figure_baths):
    # nu -> theta: Ts -> (1+x) T2'
    theta = figure_baths.theta
    setup = EngineSetup(3.0, 3.0 * theta * (1.0 + 1e-6), figure_baths)
    _, t2p = final_subsystem_temperatures(setup)
    x = x_auxiliary(setup)
    assert spectral_temperature_closed(setup) == pytest.approx((1.0 + x) * t2p, rel=1e-5)


def test_spectral_vanishing_gap_ratio_limit(figure_baths):
    # nu -> 0 sends the spectral temperature to zero
    setup = EngineSetup(3.0, 3.0e-6, figure_baths)
    assert spectral_temperature_closed(setup) < 1e-4
    assert spectral_temperature_general(final_state(setup)) < 1e-4


def test_contact_temperature_at_coincidence(coincidence_setup):
    assert contact_temperature(coincidence_setup) == pytest.approx(3.0, abs=1e-9)


def test_contact_temperature_frozen_value(generic_setup):
    assert contact_temperature(generic_setup) == pytest.approx(T_CONTACT_2_1, rel=1e-9)


def test_contact_residuals_on_random_setups():
    rng = random.Random(41)
    for _ in range(300):
        setup = random_setup(rng)
        t_c = contact_temperature(setup)
        target = setup.a1 * setup.s2 + setup.a2 * setup.r2
        residual = abs(canonical_energy(setup.a1, setup.a2, t_c) - target)
        assert residual < 1e-12 * setup.a1


@given(setup=setups())
@settings(max_examples=100, deadline=None)
def test_contact_temperature_between_subsystem_temperatures(setup):
    t1p, t2p = final_subsystem_temperatures(setup)
    t_c = contact_temperature(setup)
    assert min(t1p, t2p) * (1.0 - 1e-9) <= t_c <= max(t1p, t2p) * (1.0 + 1e-9)


def test_contact_guard_rejects_unreachable_target():
    with pytest.raises(DomainError, match="no finite contact temperature"):
        _contact_root(1.0, 0.5, 0.75, 1e-12)
    with pytest.raises(DomainError):
        _contact_root(1.0, 0.5, 0.80, 1e-12)


def test_contact_abs_tol_validation(generic_setup):
    with pytest.raises(DomainError):
        contact_temperature(generic_setup, abs_tol=0.0)


def test_canonical_energy_monotone_in_temperature(generic_setup):
    values = [canonical_energy(2.0, 1.0, t) for t in (0.5, 1.0, 2.0, 4.0, 8.0, 16.0)]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_harmonic_mean_values():
    assert max_work_effective_temperature(3.0, 3.0) == 3.0
    assert max_work_effective_temperature(2.0, 4.5) == pytest.approx(2.7692307692307692308, rel=1e-14)
    with pytest.raises(DomainError):
        max_work_effective_temperature(0.0, 1.0)


@given(setup=setups())
@settings(max_examples=200)
def test_harmonic_mean_below_arithmetic(setup):
    t1p, t2p = final_subsystem_temperatures(setup)
    harmonic = max_work_effective_temperature(t1p, t2p)
    arithmetic = 0.5 * (t1p + t2p)
    assert harmonic <= arithmetic * (1.0 + 1e-15)


def test_temperature_report_bundle(generic_setup):
    report = temperature_report(generic_setup)
    assert report.t_effective == pytest.approx(T_EFF_2_1, rel=1e-13)
    assert report.t_spectral == pytest.approx(T_SPECTRAL_2_1, rel=1e-10)
    assert report.t_contact == pytest.approx(T_CONTACT_2_1, rel=1e-9)
    assert 0.0 < report.x_aux < 1.0
    assert report.nu == generic_setup.nu


def test_all_three_agree_at_coincidence(coincidence_setup):
    report = temperature_report(coincidence_setup)
    for value in (report.t_effective, report.t_spectral, report.t_contact):
        assert value == pytest.approx(3.0, abs=1e-9)
