"""Bipartite engine built from two thermal TLS and a swap work-extraction step.

Two non-interacting TLS with gaps a1 > a2 start thermal at bath temperatures
T1 > T2.  The composite spectrum is {0, a2, a1, a1+a2} and the initial level
probabilities are the products of the marginal occupations.  A unitary that
preserves the probability multiset can at best re-pair probabilities with
levels; the energy-minimising re-pairing swaps the two subsystems' occupation
distributions, performing work

    W = U' - U = (a1 - a2)(s2 - r2),

with r2, s2 the hot/cold excited occupations.  W < 0 (net extraction) exactly
when T1/T2 > a1/a2.  After the swap each subsystem is again thermal, with

    T1' = T2 a1/a2,    T2' = T1 a2/a1,

and the subsystem entropies and heat capacities are exchanged.
"""

import math
from dataclasses import dataclass

from .errors import DegenerateSpectrumError, DomainError
from .thermo import (
    BathPair,
    occupation,
    tls_entropy,
    tls_heat_capacity,
    tls_temperature_from_occupation,
)


@dataclass(frozen=True)
class EngineSetup:
    """Gaps (a1 > a2) plus baths (T1 > T2); occupations and ratios derive."""

    a1: float
    a2: float
    baths: BathPair

    def __post_init__(self):
        if not self.a2 > 0.0:
            raise DomainError(f"a2 must be positive, got {self.a2!r}")
        if not self.a1 > self.a2:
            raise DomainError(
                f"a1 must exceed a2, got a1={self.a1!r}, a2={self.a2!r}"
            )
        if not math.isfinite(self.a1):
            raise DomainError(f"a1 must be finite, got {self.a1!r}")

    @property
    def t1(self) -> float:
        return self.baths.t_hot

    @property
    def t2(self) -> float:
        return self.baths.t_cold

    @property
    def nu(self) -> float:
        """Gap ratio a2/a1, strictly in (0, 1)."""
        return self.a2 / self.a1

    @property
    def eta(self) -> float:
        """Engine efficiency 1 - a2/a1, independent of the bath temperatures."""
        return 1.0 - self.a2 / self.a1

    @property
    def r2(self) -> float:
        """Excited occupation of the hot subsystem, occupation(a1, T1)."""
        return occupation(self.a1, self.baths.t_hot)

    @property
    def s2(self) -> float:
        """Excited occupation of the cold subsystem, occupation(a2, T2)."""
        return occupation(self.a2, self.baths.t_cold)

    @property
    def r1(self) -> float:
        return 1.0 - self.r2

    @property
    def s1(self) -> float:
        return 1.0 - self.s2


@dataclass(frozen=True)
class JointState:
    """Energy levels with aligned occupation probabilities (a diagonal state)."""

    energies: tuple
    probabilities: tuple

    def __post_init__(self):
        object.__setattr__(self, "energies", tuple(self.energies))
        object.__setattr__(self, "probabilities", tuple(self.probabilities))
        if len(self.energies) != len(self.probabilities):
            raise DomainError(
                f"{len(self.energies)} energies vs "
                f"{len(self.probabilities)} probabilities"
            )
        if len(self.energies) < 2:
            raise DomainError("a state needs at least two levels")
        for lower, upper in zip(self.energies, self.energies[1:]):
            if upper == lower:
                raise DegenerateSpectrumError(
                    f"degenerate adjacent levels at energy {lower!r}"
                )
            if upper < lower:
                raise DomainError("energies must be strictly increasing")
        for p in self.probabilities:
            if not 0.0 < p < 1.0:
                raise DomainError(f"probability {p!r} outside (0, 1)")
        total = math.fsum(self.probabilities)
        if abs(total - 1.0) > 1e-14:
            raise DomainError(f"probabilities sum to {total!r}, not 1")

    @property
    def mean_energy(self) -> float:
        return math.fsum(p * e for p, e in zip(self.probabilities, self.energies))

    @property
    def total_entropy(self) -> float:
        return -math.fsum(p * math.log(p) for p in self.probabilities)


@dataclass(frozen=True)
class SwapOutcome:
    """Energy, work and post-swap subsystem bookkeeping for one setup.

    ``work`` follows the convention that extraction is negative; callers
    wanting a non-negative number should report max(0, -work).
    """

    work: float
    u_initial: float
    u_final: float
    du1: float
    du2: float
    t1_prime: float
    t2_prime: float
    s1_prime: float
    s2_prime: float
    c1_prime: float
    c2_prime: float
    extracting: bool


def initial_state(setup: EngineSetup) -> JointState:
    """Joint thermal product state before the swap."""
    r1, r2, s1, s2 = setup.r1, setup.r2, setup.s1, setup.s2
    return JointState(
        energies=(0.0, setup.a2, setup.a1, setup.a1 + setup.a2),
        probabilities=(r1 * s1, r1 * s2, r2 * s1, r2 * s2),
    )


def final_state(setup: EngineSetup) -> JointState:
    """Joint state after the swap: the two middle probabilities trade places."""
    r1, r2, s1, s2 = setup.r1, setup.r2, setup.s1, setup.s2
    return JointState(
        energies=(0.0, setup.a2, setup.a1, setup.a1 + setup.a2),
        probabilities=(r1 * s1, r2 * s1, r1 * s2, r2 * s2),
    )


def is_work_extracting(setup: EngineSetup) -> bool:
    """True when the swap extracts net work, i.e. T1/T2 > a1/a2 (s2 < r2)."""
    return setup.s2 < setup.r2


def efficiency(setup: EngineSetup) -> float:
    """Work delivered per unit of heat drawn from the hot side, 1 - a2/a1."""
    return setup.eta


def final_subsystem_temperatures(setup: EngineSetup) -> tuple:
    """Post-swap subsystem temperatures (T2*a1/a2, T1*a2/a1)."""
    return (
        setup.t2 * setup.a1 / setup.a2,
        setup.t1 * setup.a2 / setup.a1,
    )


def final_heat_capacities(setup: EngineSetup) -> tuple:
    """Post-swap heat capacities: the initial ones, exchanged.

    The exchange is exact because the swap preserves each subsystem's
    gap/temperature ratio: a1/T1' = a2/T2 and a2/T2' = a1/T1.
    """
    c1 = tls_heat_capacity(setup.a1, setup.t1)
    c2 = tls_heat_capacity(setup.a2, setup.t2)
    return (c2, c1)


def energy_flows(setup: EngineSetup) -> tuple:
    """Subsystem energy changes (dU1, dU2) = (a1 (s2-r2), a2 (r2-s2))."""
    diff = setup.s2 - setup.r2
    return (setup.a1 * diff, -setup.a2 * diff)


def swap(setup: EngineSetup) -> SwapOutcome:
    """Apply the swap and collect work, energies and post-swap bookkeeping."""
    a1, a2 = setup.a1, setup.a2
    r2, s2 = setup.r2, setup.s2
    u_initial = a1 * r2 + a2 * s2
    u_final = a1 * s2 + a2 * r2
    work = (a1 - a2) * (s2 - r2)  # factored form, stable when s2 ~ r2
    t1_prime, t2_prime = final_subsystem_temperatures(setup)
    s_hot = tls_entropy(r2)
    s_cold = tls_entropy(s2)
    c1_prime, c2_prime = final_heat_capacities(setup)
    return SwapOutcome(
        work=work,
        u_initial=u_initial,
        u_final=u_final,
        du1=a1 * (s2 - r2),
        du2=a2 * (r2 - s2),
        t1_prime=t1_prime,
        t2_prime=t2_prime,
        s1_prime=s_cold,
        s2_prime=s_hot,
        c1_prime=c1_prime,
        c2_prime=c2_prime,
        extracting=work < 0.0,
    )


def verify_temperature_as_heat_entropy_ratio(setup: EngineSetup, step: float = 1e-5) -> tuple:
    """Check both post-swap temperatures against finite-difference heat/entropy ratios.

    Perturbing a2 alone changes subsystem 1's post-swap occupation (s2) but not
    its levels, so its mean-energy change is pure heat, a1 * ds2; its entropy
    change is that of the cold marginal.  The ratio must reproduce T1' = T2 a1/a2.
    Perturbing a1 alone gives the symmetric check on T2'.  Returns the pair of
    relative residuals; both are O(step^2).
    """
    if not 0.0 < step <= 1e-2:
        raise DomainError(f"relative step must lie in (0, 1e-2], got {step!r}")
    a1, a2, t1, t2 = setup.a1, setup.a2, setup.t1, setup.t2

    h2 = step * a2
    ds2 = 0.5 * (occupation(a2 + h2, t2) - occupation(a2 - h2, t2))
    d_entropy_cold = 0.5 * (
        tls_entropy(occupation(a2 + h2, t2)) - tls_entropy(occupation(a2 - h2, t2))
    )
    ratio_1 = a1 * ds2 / d_entropy_cold
    t1_prime = t2 * a1 / a2

    h1 = step * a1
    dr2 = 0.5 * (occupation(a1 + h1, t1) - occupation(a1 - h1, t1))
    d_entropy_hot = 0.5 * (
        tls_entropy(occupation(a1 + h1, t1)) - tls_entropy(occupation(a1 - h1, t1))
    )
    ratio_2 = a2 * dr2 / d_entropy_hot
    t2_prime = t1 * a2 / a1

    return (
        abs(ratio_1 - t1_prime) / t1_prime,
        abs(ratio_2 - t2_prime) / t2_prime,
    )


def final_subsystem_temperatures_from_occupations(setup: EngineSetup) -> tuple:
    """The same temperatures recovered by inverting the swapped occupations."""
    return (
        tls_temperature_from_occupation(setup.a1, setup.s2),
        tls_temperature_from_occupation(setup.a2, setup.r2),
    )
