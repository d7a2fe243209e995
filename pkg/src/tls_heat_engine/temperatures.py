"""Nonequilibrium temperature definitions for the post-swap bipartite state.

After work extraction the two subsystems are thermal at different
temperatures T1', T2', so the composite state has no canonical temperature.
Three one-number summaries are computed here:

* effective temperature: the heat-over-entropy variation along the direction
  that rescales both gaps together (da2 = nu da1), which closes to the
  capacity-weighted average

      T = (C2 T1' + C1 T2') / (C1 + C2),

  with C1, C2 the initial-state Schottky capacities;

* spectral temperature: built from adjacent-level probability ratios of the
  full four-level spectrum, with both the generic level-list form and the
  closed form in terms of (nu, theta, x), x = r1 + s1 - 2 r1 s1;

* contact temperature: the temperature of a hypothetical bath exchanging zero
  net heat with the state, i.e. the root of the canonical energy balance

      a1 p(a1, Tc) + a2 p(a2, Tc) = a1 s2 + a2 r2,

  unique because the left side is strictly increasing in Tc.
"""

import math
import warnings
from dataclasses import dataclass

from .engine import EngineSetup, JointState, final_state, final_subsystem_temperatures
from .errors import ConvergenceError, DomainError
from .numerics import bisect_root, expand_bracket_upward
from .thermo import SaturationWarning, occupation, tls_entropy, tls_heat_capacity

CONTACT_MONOTONICITY_GRID = 9


@dataclass(frozen=True)
class TemperatureReport:
    """All three nonequilibrium temperatures for one setup."""

    t_effective: float
    t_spectral: float
    t_contact: float
    x_aux: float
    nu: float
    setup: EngineSetup


def effective_temperature(setup: EngineSetup) -> float:
    """Capacity-weighted average (C2 T1' + C1 T2') / (C1 + C2)."""
    c1 = tls_heat_capacity(setup.a1, setup.t1)
    c2 = tls_heat_capacity(setup.a2, setup.t2)
    t1_prime, t2_prime = final_subsystem_temperatures(setup)
    return (c2 * t1_prime + c1 * t2_prime) / (c1 + c2)


def effective_temperature_via_differentials(setup: EngineSetup, step: float = 1e-5) -> float:
    """Heat-over-entropy ratio along da2 = nu da1 by central differences.

    Independent of :func:`effective_temperature`: only occupations and
    entropies are differenced, no heat-capacity formula enters.  Agreement is
    O(step^2).
    """
    if not 0.0 < step <= 1e-3:
        raise DomainError(f"relative step must lie in (0, 1e-3], got {step!r}")
    a1, a2, t1, t2 = setup.a1, setup.a2, setup.t1, setup.t2
    h1 = step * a1
    h2 = setup.nu * h1  # the constrained direction scales both gaps alike

    s2_plus = occupation(a2 + h2, t2)
    s2_minus = occupation(a2 - h2, t2)
    r2_plus = occupation(a1 + h1, t1)
    r2_minus = occupation(a1 - h1, t1)

    d_heat = a1 * 0.5 * (s2_plus - s2_minus) + a2 * 0.5 * (r2_plus - r2_minus)
    d_entropy = 0.5 * (tls_entropy(r2_plus) - tls_entropy(r2_minus)) + 0.5 * (
        tls_entropy(s2_plus) - tls_entropy(s2_minus)
    )
    return d_heat / d_entropy


def effective_temperature_small_x_limit(xi: float, theta: float) -> float:
    """T/T1 in the small gap/temperature regime: sqrt(xi) (1+theta) / (1+xi)."""
    if not xi > 0.0:
        raise DomainError(f"xi must be positive, got {xi!r}")
    if not 0.0 < theta < 1.0:
        raise DomainError(f"theta must lie in (0, 1), got {theta!r}")
    return math.sqrt(xi) * (1.0 + theta) / (1.0 + xi)


def effective_temperature_equal_gap_limit(xi: float, theta: float) -> float:
    """T/T1 in the a2 -> a1 limit: (theta + xi) / (1 + xi)."""
    if not xi > 0.0:
        raise DomainError(f"xi must be positive, got {xi!r}")
    if not 0.0 < theta < 1.0:
        raise DomainError(f"theta must lie in (0, 1), got {theta!r}")
    return (theta + xi) / (1.0 + xi)


def spectral_temperature_general(state: JointState) -> float:
    """Spectral temperature of any non-degenerate diagonal state.

    The inverse temperature averages adjacent-level log-probability slopes
    (ln P_i - ln P_{i-1}) / (E_i - E_{i-1}) with weights (P_i + P_{i-1})/2,
    normalised by -(1 - (P_0 + P_M)/2).  For a single thermal TLS this
    reduces to the canonical temperature.
    """
    probs = state.probabilities
    energies = state.energies
    acc = 0.0
    for i in range(1, len(probs)):
        weight = 0.5 * (probs[i] + probs[i - 1])
        slope = (math.log(probs[i]) - math.log(probs[i - 1])) / (
            energies[i] - energies[i - 1]
        )
        acc += weight * slope
    norm = 1.0 - 0.5 * (probs[0] + probs[-1])
    inverse = -acc / norm
    if inverse == 0.0:
        return math.inf
    return 1.0 / inverse


def spectral_temperature_closed(setup: EngineSetup) -> float:
    """Closed form of the post-swap spectral temperature.

    1/Ts = (1/T1') (nu-theta)/(nu-nu^2) x/(1+x) + (1/T2') 1/(1+x) with
    x = r1 + s1 - 2 r1 s1.  Cross-check for
    :func:`spectral_temperature_general` applied to the post-swap state.
    """
    nu = setup.nu
    theta = setup.baths.theta
    t1_prime, t2_prime = final_subsystem_temperatures(setup)
    x = x_auxiliary(setup)
    inverse = (1.0 / t1_prime) * ((nu - theta) / (nu - nu * nu)) * (x / (1.0 + x)) + (
        1.0 / t2_prime
    ) * (1.0 / (1.0 + x))
    if inverse == 0.0:
        return math.inf
    return 1.0 / inverse


def x_auxiliary(setup: EngineSetup) -> float:
    """x = r1 + s1 - 2 r1 s1, the total weight on the two middle levels."""
    r1, s1 = setup.r1, setup.s1
    return r1 + s1 - 2.0 * r1 * s1


def canonical_energy(a1: float, a2: float, temperature: float) -> float:
    """Mean energy of two independent TLS both thermal at one temperature."""
    return a1 * occupation(a1, temperature) + a2 * occupation(a2, temperature)


def contact_temperature(setup: EngineSetup, abs_tol: float = 1e-12) -> float:
    """Bath temperature exchanging zero net heat with the post-swap state.

    Solves a1 p(a1,Tc) + a2 p(a2,Tc) = a1 s2 + a2 r2 by bracketed bisection;
    ``abs_tol`` bounds the allowed energy-balance residual in units of a1.
    """
    if not abs_tol > 0.0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol!r}")
    a1, a2 = setup.a1, setup.a2
    target = a1 * setup.s2 + a2 * setup.r2
    t1_prime, t2_prime = final_subsystem_temperatures(setup)
    return _contact_root(
        a1,
        a2,
        target,
        abs_tol,
        t_lo=1e-6 * min(t1_prime, t2_prime),
        t_hi=10.0 * max(t1_prime, t2_prime),
    )


def _contact_root(
    a1: float,
    a2: float,
    target: float,
    abs_tol: float,
    t_lo: float = None,
    t_hi: float = None,
) -> float:
    # The canonical energy grows from 0 to (a1+a2)/2 as Tc sweeps (0, inf),
    # so targets at or above the ceiling have no finite solution.
    if target >= 0.5 * (a1 + a2):
        raise DomainError(
            f"target energy {target!r} is not below (a1+a2)/2 = {0.5 * (a1 + a2)!r}; "
            "no finite contact temperature exists"
        )
    t_lo = 1e-6 * min(a1, a2) if t_lo is None else t_lo
    t_hi = 10.0 * max(a1, a2) if t_hi is None else t_hi
    with warnings.catch_warnings():
        # Deep in the bracket's low end occupations saturate by design; the
        # clamped values keep the correct sign of the energy balance.
        warnings.simplefilter("ignore", SaturationWarning)

        def balance(t):
            return canonical_energy(a1, a2, t) - target

        t_hi, f_lo, f_hi = expand_bracket_upward(balance, t_lo, t_hi, max_steps=60)
        _check_energy_monotone(a1, a2, t_lo, t_hi)
        result = bisect_root(
            balance,
            t_lo,
            t_hi,
            value_tol=abs_tol * a1,
            rel_width_tol=1e-14,
            max_iter=200,
            f_lo=f_lo,
            f_hi=f_hi,
        )
    if abs(result.residual) > abs_tol * a1:
        raise ConvergenceError(
            f"contact-temperature bisection stalled: residual={result.residual!r}, "
            f"bracket={result.bracket!r} after {result.iterations} iterations"
        )
    return result.root


def _check_energy_monotone(a1: float, a2: float, t_lo: float, t_hi: float):
    """Grid pre-check that the canonical energy is non-decreasing on the bracket."""
    n = CONTACT_MONOTONICITY_GRID
    ratio = (t_hi / t_lo) ** (1.0 / (n - 1))
    values = [canonical_energy(a1, a2, t_lo * ratio**k) for k in range(n)]
    for lower, upper in zip(values, values[1:]):
        if upper < lower:
            raise ConvergenceError(
                "canonical energy is not monotone on the bisection bracket "
                f"[{t_lo!r}, {t_hi!r}]; uniqueness guard failed"
            )
    if not values[-1] > values[0]:
        raise ConvergenceError(
            f"canonical energy is flat across [{t_lo!r}, {t_hi!r}]; "
            "bracket cannot isolate a root"
        )


def max_work_effective_temperature(t1_prime: float, t2_prime: float) -> float:
    """Harmonic mean 2 T1' T2' / (T1' + T2'), the effective temperature at
    the global work maximum."""
    if not t1_prime > 0.0 or not t2_prime > 0.0:
        raise DomainError(
            f"temperatures must be positive, got {t1_prime!r}, {t2_prime!r}"
        )
    return 2.0 * t1_prime * t2_prime / (t1_prime + t2_prime)


def temperature_report(setup: EngineSetup, contact_abs_tol: float = 1e-12) -> TemperatureReport:
    """Evaluate all three temperature definitions on one setup."""
    return TemperatureReport(
        t_effective=effective_temperature(setup),
        t_spectral=spectral_temperature_general(final_state(setup)),
        t_contact=contact_temperature(setup, contact_abs_tol),
        x_aux=x_auxiliary(setup),
        nu=setup.nu,
        setup=setup,
    )
