"""Maximum-work searches over the engine's gap parameters.

At fixed efficiency eta = 1 - nu the extracted work

    -W(a1) = a1 (1 - nu) (r2(a1) - s2(nu a1))

vanishes as a1 -> 0 and a1 -> infinity and is positive in between whenever
nu > theta, so an interior maximum exists.  The search is a log-spaced
bracketing scan followed by golden-section refinement; the last digits come
from bisecting the analytic derivative, since value comparisons lose meaning
once the bracket shrinks below the sqrt(eps) scale.

The global (2-D) maximum nests a search over nu around the 1-D solver.  At
the optimum dr2/da1 = ds2/da2 holds, which forces nu* = sqrt(theta/xi*) with
xi* the initial-capacity ratio, and makes the effective temperature the
harmonic mean of the post-swap subsystem temperatures.
"""

import warnings
from dataclasses import dataclass

from .engine import EngineSetup
from .errors import ConvergenceError, DomainError
from .numerics import bisect_root, central_difference, golden_section_max
from .temperatures import effective_temperature
from .thermo import (
    BathPair,
    SaturationWarning,
    occupation,
    occupation_gap_derivative,
    tls_heat_capacity,
)

SCAN_POINTS = 256
SCAN_DECADES = (-3.0, 3.0)  # a1 spans T1 * 10^[-3, 3]
PLATEAU_TOL = 1e-14
_CBRT_EPS = 6.055454452393343e-06  # optimal central-difference step scale


@dataclass(frozen=True)
class MaxWorkAtEfficiency:
    """Fixed-efficiency optimum: gap, work (negative when extracted), setup."""

    nu: float
    a1_star: float
    work_star: float
    setup_star: EngineSetup
    converged: bool
    iterations: int


@dataclass(frozen=True)
class GlobalMaxWork:
    """Unconstrained optimum over both gaps, with its structural invariants."""

    a1_star: float
    a2_star: float
    nu_star: float
    xi_star: float
    work_star: float
    t_star: float
    stationarity_residual: float


def extracted_work(a1: float, nu: float, baths: BathPair) -> float:
    """Extracted work a1 (1-nu) (r2 - s2); positive in the engine regime."""
    return a1 * (1.0 - nu) * (
        occupation(a1, baths.t_hot) - occupation(nu * a1, baths.t_cold)
    )


def extracted_work_derivative(a1: float, nu: float, baths: BathPair) -> float:
    """Analytic d(extracted work)/da1 at fixed nu."""
    r2 = occupation(a1, baths.t_hot)
    s2 = occupation(nu * a1, baths.t_cold)
    dr2 = occupation_gap_derivative(a1, baths.t_hot)
    ds2 = occupation_gap_derivative(nu * a1, baths.t_cold)
    return (1.0 - nu) * ((r2 - s2) + a1 * (dr2 - nu * ds2))


def stationarity_residual(setup: EngineSetup) -> float:
    """Normalised gap between the two occupation slopes, |dr2/da1 - ds2/da2|.

    Zero exactly at the global work maximum; invariant under rescaling all
    energies and temperatures together.
    """
    dr2 = occupation_gap_derivative(setup.a1, setup.t1)
    ds2 = occupation_gap_derivative(setup.a2, setup.t2)
    return abs(dr2 - ds2) / max(abs(dr2), abs(ds2))


def maximize_work_at_efficiency(
    baths: BathPair, nu: float, rel_tol: float = 1e-10
) -> MaxWorkAtEfficiency:
    """Maximise the extracted work over a1 > 0 at fixed gap ratio nu.

    Scan SCAN_POINTS log-spaced gaps for a bracket, refine it by golden
    section, then bisect the analytic derivative for the remaining digits.
    ``converged`` reports whether a central-difference derivative probe at
    the result is below rel_tol * |work| / a1; below rel_tol ~ 1e-11 that
    probe saturates at its own noise floor and may stay False.
    """
    theta = baths.theta
    if not theta < nu < 1.0:
        if nu >= 1.0 or nu <= 0.0:
            raise DomainError(f"nu must lie in (0, 1), got {nu!r}")
        raise DomainError(
            f"no positive-work region: nu={nu!r} does not exceed theta={theta!r}"
        )
    if not 1e-14 <= rel_tol <= 1e-6:
        raise DomainError(f"rel_tol must lie in [1e-14, 1e-6], got {rel_tol!r}")

    def objective(a1):
        return extracted_work(a1, nu, baths)

    def slope(a1):
        return extracted_work_derivative(a1, nu, baths)

    # bracketing scan, log-spaced; its deep tails saturate the occupations
    # on purpose, so the clamp warning is muted here
    lo_exp, hi_exp = SCAN_DECADES
    t1 = baths.t_hot
    grid = [
        t1 * 10.0 ** (lo_exp + (hi_exp - lo_exp) * k / (SCAN_POINTS - 1))
        for k in range(SCAN_POINTS)
    ]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SaturationWarning)
        values = [objective(a) for a in grid]
    best = max(values)
    if not best > 0.0:
        raise ConvergenceError(
            f"scan found no positive extracted work for nu={nu!r} (max {best!r})"
        )
    # ties within PLATEAU_TOL resolve to the smallest gap, deterministically
    idx = min(k for k, v in enumerate(values) if best - v <= PLATEAU_TOL * best)
    if idx == 0 or idx == SCAN_POINTS - 1:
        raise ConvergenceError(
            f"work maximum fell on the scan boundary (a1={grid[idx]!r}); "
            "bracket assumption violated"
        )
    bracket_lo, bracket_hi = grid[idx - 1], grid[idx + 1]

    refined = golden_section_max(
        objective, bracket_lo, bracket_hi, rel_width_tol=1e-7, max_iter=200
    )
    iterations = refined.iterations

    # derivative polish: bisect d(extracted)/da1 near the golden-section point
    a1_star = refined.x
    half = 1e-5 * a1_star
    lo = max(bracket_lo, a1_star - half)
    hi = min(bracket_hi, a1_star + half)
    g_lo, g_hi = slope(lo), slope(hi)
    while g_lo * g_hi > 0.0 and (lo > bracket_lo or hi < bracket_hi):
        half *= 8.0
        lo = max(bracket_lo, a1_star - half)
        hi = min(bracket_hi, a1_star + half)
        g_lo, g_hi = slope(lo), slope(hi)
    if g_lo * g_hi <= 0.0:
        root = bisect_root(
            slope,
            lo,
            hi,
            rel_width_tol=4e-16,
            max_iter=200,
            f_lo=g_lo,
            f_hi=g_hi,
        )
        a1_star = root.root
        iterations += root.iterations

    work_extracted_star = objective(a1_star)
    work_star = -work_extracted_star
    probe = abs(
        central_difference(objective, a1_star, _CBRT_EPS * a1_star)
    )
    converged = probe < rel_tol * abs(work_star) / a1_star
    setup_star = EngineSetup(a1_star, nu * a1_star, baths)
    return MaxWorkAtEfficiency(
        nu=nu,
        a1_star=a1_star,
        work_star=work_star,
        setup_star=setup_star,
        converged=converged,
        iterations=iterations,
    )


def maximize_work_global(baths: BathPair, rel_tol: float = 1e-10) -> GlobalMaxWork:
    """Maximise extracted work over both gaps.

    Outer golden-section over nu in (theta, 1) around the fixed-efficiency
    solver, then a bisection on the outer stationarity condition
    d(work)/da2 = 0 (the envelope of the inner problem) to pin nu to machine
    precision.
    """
    theta = baths.theta
    eps = 1e-9
    nu_lo, nu_hi = theta + eps, 1.0 - eps

    def inner(nu):
        return maximize_work_at_efficiency(baths, nu, rel_tol)

    def envelope_slope(nu):
        # dW/da2 at the inner optimum; d(extracted)/dnu = -a1* dW/da2, so
        # this changes sign exactly at the global stationary point
        best = inner(nu)
        a1, a2 = best.a1_star, best.nu * best.a1_star
        s2 = occupation(a2, baths.t_cold)
        r2 = occupation(a1, baths.t_hot)
        ds2 = occupation_gap_derivative(a2, baths.t_cold)
        return -(s2 - r2) + (a1 - a2) * ds2

    outer = golden_section_max(
        lambda nu: -inner(nu).work_star, nu_lo, nu_hi, rel_width_tol=1e-6, max_iter=200
    )
    lo, hi = outer.bracket
    g_lo, g_hi = envelope_slope(lo), envelope_slope(hi)
    width = hi - lo
    while g_lo * g_hi > 0.0 and width < 0.5 * (nu_hi - nu_lo):
        width *= 4.0
        lo = max(nu_lo, outer.x - width)
        hi = min(nu_hi, outer.x + width)
        g_lo, g_hi = envelope_slope(lo), envelope_slope(hi)
    if g_lo * g_hi > 0.0:
        raise ConvergenceError(
            f"global search found no stationarity sign change around nu={outer.x!r} "
            f"(bracket [{lo!r}, {hi!r}])"
        )
    nu_root = bisect_root(
        envelope_slope, lo, hi, rel_width_tol=1e-15, max_iter=200, f_lo=g_lo, f_hi=g_hi
    )
    nu_star = nu_root.root
    best = inner(nu_star)
    a1_star = best.a1_star
    a2_star = nu_star * a1_star
    setup_star = best.setup_star
    xi_star = tls_heat_capacity(a1_star, baths.t_hot) / tls_heat_capacity(
        a2_star, baths.t_cold
    )
    return GlobalMaxWork(
        a1_star=a1_star,
        a2_star=a2_star,
        nu_star=nu_star,
        xi_star=xi_star,
        work_star=best.work_star,
        t_star=effective_temperature(setup_star),
        stationarity_residual=stationarity_residual(setup_star),
    )


def locate_temperature_minimum(baths: BathPair, grid_points: int = 400) -> tuple:
    """Locate the minimum of the max-work effective temperature over efficiency.

    Evaluates T(eta) on a uniform grid spanning almost the full (0, 1-theta)
    efficiency window, then refines around the grid minimum by golden section.
    Returns (eta_min, t_min).
    """
    if grid_points < 100:
        raise DomainError(f"grid_points must be at least 100, got {grid_points!r}")
    theta = baths.theta
    margin = 1e-4 * (1.0 - theta)
    eta_lo, eta_hi = margin, 1.0 - theta - margin

    def temperature_at(eta):
        best = maximize_work_at_efficiency(baths, 1.0 - eta)
        return effective_temperature(best.setup_star)

    etas = [
        eta_lo * (1.0 - k / (grid_points - 1)) + eta_hi * (k / (grid_points - 1))
        for k in range(grid_points)
    ]
    temps = [temperature_at(eta) for eta in etas]
    idx = min(range(grid_points), key=lambda k: (temps[k], k))
    lo = etas[max(idx - 1, 0)]
    hi = etas[min(idx + 1, grid_points - 1)]
    refined = golden_section_max(
        lambda eta: -temperature_at(eta), lo, hi, rel_width_tol=1e-10, max_iter=200
    )
    return refined.x, -refined.value
