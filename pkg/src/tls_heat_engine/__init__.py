"""Two-TLS swap heat engine: work extraction, post-swap thermodynamics, and
nonequilibrium temperature definitions, plus the optimizers and sweep drivers
used to map them out over efficiency."""

from .engine import (
    EngineSetup,
    JointState,
    SwapOutcome,
    efficiency,
    energy_flows,
    final_heat_capacities,
    final_state,
    final_subsystem_temperatures,
    initial_state,
    is_work_extracting,
    swap,
    verify_temperature_as_heat_entropy_ratio,
)
from .errors import (
    ConvergenceError,
    DegenerateSpectrumError,
    DomainError,
    OutOfModelError,
)
from .optimize import (
    GlobalMaxWork,
    MaxWorkAtEfficiency,
    extracted_work,
    locate_temperature_minimum,
    maximize_work_at_efficiency,
    maximize_work_global,
    stationarity_residual,
)
from .sweep import (
    SweepConfig,
    SweepRow,
    compute_sweep_row,
    default_sweep_config,
    run_classical,
    run_optimize,
    run_point,
    run_sweep,
)
from .temperatures import (
    TemperatureReport,
    contact_temperature,
    effective_temperature,
    effective_temperature_equal_gap_limit,
    effective_temperature_small_x_limit,
    effective_temperature_via_differentials,
    max_work_effective_temperature,
    spectral_temperature_closed,
    spectral_temperature_general,
    temperature_report,
    x_auxiliary,
)
from .thermo import (
    BathPair,
    ClassicalBaseline,
    SaturationWarning,
    TlsThermal,
    classical_baseline,
    classical_efficiency,
    classical_final_temperature,
    classical_work,
    occupation,
    occupation_gap_derivative,
    tls_entropy,
    tls_heat_capacity,
    tls_temperature_from_occupation,
)

__all__ = [
    "BathPair",
    "ClassicalBaseline",
    "ConvergenceError",
    "DegenerateSpectrumError",
    "DomainError",
    "EngineSetup",
    "GlobalMaxWork",
    "JointState",
    "MaxWorkAtEfficiency",
    "OutOfModelError",
    "SaturationWarning",
    "SwapOutcome",
    "SweepConfig",
    "SweepRow",
    "TemperatureReport",
    "TlsThermal",
    "classical_baseline",
    "classical_efficiency",
    "classical_final_temperature",
    "classical_work",
    "compute_sweep_row",
    "contact_temperature",
    "default_sweep_config",
    "effective_temperature",
    "effective_temperature_equal_gap_limit",
    "effective_temperature_small_x_limit",
    "effective_temperature_via_differentials",
    "efficiency",
    "energy_flows",
    "extracted_work",
    "final_heat_capacities",
    "final_state",
    "final_subsystem_temperatures",
    "initial_state",
    "is_work_extracting",
    "locate_temperature_minimum",
    "max_work_effective_temperature",
    "maximize_work_at_efficiency",
    "maximize_work_global",
    "occupation",
    "occupation_gap_derivative",
    "run_classical",
    "run_optimize",
    "run_point",
    "run_sweep",
    "spectral_temperature_closed",
    "spectral_temperature_general",
    "stationarity_residual",
    "swap",
    "temperature_report",
    "tls_entropy",
    "tls_heat_capacity",
    "tls_temperature_from_occupation",
    "verify_temperature_as_heat_entropy_ratio",
    "x_auxiliary",
]
