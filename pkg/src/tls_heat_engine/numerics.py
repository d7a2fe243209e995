"""Scalar bracketing utilities: bisection and golden-section maximisation.

Everything here is deterministic: no randomised restarts, no adaptive
shuffling, so identical inputs give bit-identical outputs.
"""

from dataclasses import dataclass

from .errors import ConvergenceError

GOLDEN_RATIO_CONJUGATE = 0.6180339887498949  # (sqrt(5) - 1) / 2


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    bracket: tuple


@dataclass(frozen=True)
class MaxResult:
    x: float
    value: float
    iterations: int
    bracket: tuple


def expand_bracket_upward(f, lo: float, hi: float, factor: float = 2.0, max_steps: int = 60):
    """Grow ``hi`` geometrically until f changes sign across [lo, hi].

    Returns (hi, f(lo), f(hi)).  Raises ConvergenceError when no sign change
    appears within ``max_steps`` doublings.
    """
    f_lo = f(lo)
    f_hi = f(hi)
    steps = 0
    while f_lo * f_hi > 0.0:
        if steps >= max_steps:
            raise ConvergenceError(
                f"no sign change after {max_steps} expansions: "
                f"f({lo!r})={f_lo!r}, f({hi!r})={f_hi!r}"
            )
        hi *= factor
        f_hi = f(hi)
        steps += 1
    return hi, f_lo, f_hi


def bisect_root(
    f,
    lo: float,
    hi: float,
    *,
    value_tol: float = 0.0,
    rel_width_tol: float = 1e-14,
    max_iter: int = 200,
    f_lo: float = None,
    f_hi: float = None,
) -> RootResult:
    """Bisection on a sign-changing bracket.

    Stops when |f(mid)| <= value_tol, the bracket narrows below
    rel_width_tol * max(|lo|, |hi|), or max_iter is reached; the caller
    decides whether the returned residual is acceptable.
    """
    f_lo = f(lo) if f_lo is None else f_lo
    f_hi = f(hi) if f_hi is None else f_hi
    if f_lo == 0.0:
        return RootResult(lo, 0.0, 0, (lo, hi))
    if f_hi == 0.0:
        return RootResult(hi, 0.0, 0, (lo, hi))
    if f_lo * f_hi > 0.0:
        raise ConvergenceError(
            f"bracket [{lo!r}, {hi!r}] has no sign change: f_lo={f_lo!r}, f_hi={f_hi!r}"
        )
    iterations = 0
    mid = 0.5 * (lo + hi)
    f_mid = f(mid)
    while True:
        iterations += 1
        if abs(f_mid) <= value_tol:
            break
        if (f_mid > 0.0) == (f_hi > 0.0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
        if (hi - lo) <= rel_width_tol * max(abs(lo), abs(hi)):
            break
        if iterations >= max_iter:
            break
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
    return RootResult(mid, f_mid, iterations, (lo, hi))


def golden_section_max(
    f,
    lo: float,
    hi: float,
    *,
    rel_width_tol: float = 1e-7,
    max_iter: int = 200,
) -> MaxResult:
    """Golden-section search for an interior maximum of a unimodal function.

    The default width tolerance stays above the sqrt(eps) scale where
    floating-point comparisons of near-equal values turn into noise; use a
    derivative-based polish for the remaining digits.
    """
    inv = GOLDEN_RATIO_CONJUGATE
    x1 = hi - inv * (hi - lo)
    x2 = lo + inv * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    iterations = 0
    while (hi - lo) > rel_width_tol * max(abs(lo), abs(hi)) and iterations < max_iter:
        if f1 < f2:
            lo = x1
            x1, f1 = x2, f2
            x2 = lo + inv * (hi - lo)
            f2 = f(x2)
        else:
            hi = x2
            x2, f2 = x1, f1
            x1 = hi - inv * (hi - lo)
            f1 = f(x1)
        iterations += 1
    if f1 >= f2:
        return MaxResult(x1, f1, iterations, (lo, hi))
    return MaxResult(x2, f2, iterations, (lo, hi))


def central_difference(f, x: float, h: float) -> float:
    """Second-order central difference estimate of f'(x)."""
    return (f(x + h) - f(x - h)) / (2.0 * h)
