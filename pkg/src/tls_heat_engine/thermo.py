"""Single two-level-system (TLS) thermodynamics and the classical two-body baseline.

A TLS with energy gap ``a`` thermalised at temperature ``T`` (units with
k_B = 1, so energies and temperatures share one scale) occupies its excited
level with probability

    p = 1 / (1 + exp(a/T)),        0 < p < 1/2,

carries the binary Shannon entropy S(p) in nats, and has the Schottky heat
capacity

    C = x^2 exp(x) / (1 + exp(x))^2,    x = a/T,

which vanishes in both the frozen (x -> inf) and saturated (x -> 0) limits
and behaves like x^2/4 for small x.

The classical baseline describes two macroscopic bodies with
temperature-independent heat capacities C1, C2 coupled to a reversible work
source: the isentropic final temperature is the capacity-weighted geometric
mean of the initial temperatures, and the cycle efficiency depends only on
xi = C1/C2 and theta = T2/T1.
"""

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, OutOfModelError

# Above this gap/temperature ratio exp(-x) underflows to zero; occupation()
# clamps to the smallest positive float instead so downstream logarithms and
# divisions stay finite.
SATURATION_GAP_RATIO = 745.0

_TINY = 5e-324  # smallest positive (subnormal) double


class SaturationWarning(RuntimeWarning):
    """Occupation was clamped to the smallest positive float."""


def occupation(gap: float, temperature: float) -> float:
    """Excited-state occupation 1/(1 + exp(gap/temperature)).

    ``temperature=math.inf`` is accepted as the maximal-mixing limit and
    returns exactly 1/2.  Saturated ratios (gap/temperature beyond
    ``SATURATION_GAP_RATIO``) clamp to 5e-324 and emit a SaturationWarning.
    """
    if not gap > 0.0:
        raise DomainError(f"gap must be positive, got {gap!r}")
    if temperature == math.inf:
        return 0.5
    if not temperature > 0.0:
        raise DomainError(f"temperature must be positive, got {temperature!r}")
    x = gap / temperature
    if x > SATURATION_GAP_RATIO:
        # constant message so the default warning filter collapses repeats
        warnings.warn(
            "occupation saturated (gap/temperature > 745); clamped to 5e-324",
            SaturationWarning,
            stacklevel=2,
        )
        return _TINY
    e = math.exp(-x)  # in (0, 1] for x > 0, so no overflow anywhere
    return e / (1.0 + e)


def occupation_gap_derivative(gap: float, temperature: float) -> float:
    """Analytic d p / d gap = -p(1-p)/T of the occupation at fixed temperature."""
    p = occupation(gap, temperature)
    return -p * (1.0 - p) / temperature


def tls_entropy(p_excited: float) -> float:
    """Binary Shannon entropy -(p ln p + (1-p) ln(1-p)) in nats."""
    if not 0.0 < p_excited < 1.0:
        raise DomainError(f"p_excited must lie in (0, 1), got {p_excited!r}")
    return -(p_excited * math.log(p_excited) + (1.0 - p_excited) * math.log1p(-p_excited))


def tls_heat_capacity(gap: float, temperature: float) -> float:
    """Schottky heat capacity (a/T)^2 exp(a/T) / (1 + exp(a/T))^2."""
    if not gap > 0.0:
        raise DomainError(f"gap must be positive, got {gap!r}")
    if not temperature > 0.0:
        raise DomainError(f"temperature must be positive, got {temperature!r}")
    x = gap / temperature
    e = math.exp(-x) if x < SATURATION_GAP_RATIO else 0.0
    if e == 0.0:
        # exp(x)/(1+exp(x))^2 underflows; keep the result strictly positive
        return _TINY
    return x * x * e / ((1.0 + e) * (1.0 + e))


def tls_temperature_from_occupation(gap: float, p_excited: float) -> float:
    """Temperature of the thermal TLS with the given gap and excited occupation.

    Inverse of :func:`occupation`: returns gap / ln((1-p)/p).  Occupations at
    or above 1/2 would need infinite or negative temperature and are refused.
    """
    if not gap > 0.0:
        raise DomainError(f"gap must be positive, got {gap!r}")
    if not 0.0 < p_excited < 1.0:
        raise DomainError(f"p_excited must lie in (0, 1), got {p_excited!r}")
    if p_excited >= 0.5:
        raise OutOfModelError(
            f"p_excited={p_excited!r} >= 1/2 implies population inversion "
            "(negative temperature), which this model never produces"
        )
    # log1p(-p) - log(p) == ln((1-p)/p) without forming the possibly
    # overflowing quotient for subnormal p
    return gap / (math.log1p(-p_excited) - math.log(p_excited))


@dataclass(frozen=True)
class TlsThermal:
    """Snapshot of one thermal TLS: gap, temperature and derived quantities."""

    gap: float
    temperature: float
    p_excited: float
    entropy: float
    heat_capacity: float

    @classmethod
    def at(cls, gap: float, temperature: float) -> "TlsThermal":
        p = occupation(gap, temperature)
        return cls(
            gap=gap,
            temperature=temperature,
            p_excited=p,
            entropy=tls_entropy(p),
            heat_capacity=tls_heat_capacity(gap, temperature),
        )


@dataclass(frozen=True)
class BathPair:
    """The two reservoir temperatures, hot first."""

    t_hot: float
    t_cold: float

    def __post_init__(self):
        if not self.t_cold > 0.0:
            raise DomainError(f"T2 must be positive, got {self.t_cold!r}")
        if not self.t_hot > self.t_cold:
            raise DomainError(
                f"T1 must exceed T2, got T1={self.t_hot!r}, T2={self.t_cold!r}"
            )

    @property
    def theta(self) -> float:
        """Cold-to-hot temperature ratio T2/T1, strictly in (0, 1)."""
        return self.t_cold / self.t_hot


# --- classical macroscopic baseline -----------------------------------------


def classical_final_temperature(xi: float, baths: BathPair) -> float:
    """Isentropic common final temperature T1^(xi/(1+xi)) * T2^(1/(1+xi))."""
    if not xi > 0.0:
        raise DomainError(f"capacity ratio xi must be positive, got {xi!r}")
    w = xi / (1.0 + xi)
    return baths.t_hot**w * baths.t_cold ** (1.0 - w)


def classical_work(c1: float, c2: float, baths: BathPair) -> float:
    """Work C1 T1 + C2 T2 - (C1+C2) T_f released while reaching T_f."""
    if not c1 > 0.0 or not c2 > 0.0:
        raise DomainError(f"capacities must be positive, got c1={c1!r}, c2={c2!r}")
    t_f = classical_final_temperature(c1 / c2, baths)
    return c1 * baths.t_hot + c2 * baths.t_cold - (c1 + c2) * t_f


def classical_efficiency(xi: float, theta: float) -> float:
    """Cycle efficiency 1 + (theta - theta^(1/(1+xi))) / (xi (1 - theta^(1/(1+xi))))."""
    if not xi > 0.0:
        raise DomainError(f"capacity ratio xi must be positive, got {xi!r}")
    if not 0.0 < theta < 1.0:
        raise DomainError(f"theta must lie in (0, 1), got {theta!r}")
    t = theta ** (1.0 / (1.0 + xi))
    return 1.0 + (theta - t) / (xi * (1.0 - t))


@dataclass(frozen=True)
class ClassicalBaseline:
    """Classical two-body result for capacity ratio xi, work given per unit C2."""

    xi: float
    t_final: float
    work: float
    efficiency: float


def classical_baseline(xi: float, baths: BathPair) -> ClassicalBaseline:
    t_f = classical_final_temperature(xi, baths)
    # classical_work with C1 = xi, C2 = 1, i.e. work per unit cold capacity
    work = xi * baths.t_hot + baths.t_cold - (xi + 1.0) * t_f
    return ClassicalBaseline(
        xi=xi,
        t_final=t_f,
        work=work,
        efficiency=classical_efficiency(xi, baths.theta),
    )
