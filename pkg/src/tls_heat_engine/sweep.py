"""Batch drivers: point reports, efficiency sweeps, and file emission.

The sweep evaluates the maximum-work engine at each efficiency gridpoint and
records the optimal gaps, the extracted work, and all temperature summaries.
Files are written atomically (temp file + rename) so readers never observe a
half-written sweep.
"""

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .engine import EngineSetup, final_state, final_subsystem_temperatures, swap
from .errors import ConvergenceError, DomainError
from .optimize import GlobalMaxWork, maximize_work_at_efficiency, maximize_work_global
from .temperatures import (
    contact_temperature,
    effective_temperature,
    spectral_temperature_general,
    x_auxiliary,
)
from .thermo import BathPair, ClassicalBaseline, classical_baseline

CSV_HEADER = (
    "eta,nu,a1_star,a2_star,work_extracted,"
    "t1_prime,t2_prime,t_effective,t_spectral,t_contact"
)


@dataclass(frozen=True)
class SweepConfig:
    """Efficiency-sweep parameters; eta_hi must stay below the Carnot bound."""

    t1: float
    t2: float
    eta_lo: float
    eta_hi: float
    steps: int
    output_path: str
    format: str = "csv"

    def __post_init__(self):
        BathPair(self.t1, self.t2)  # reuses the T1 > T2 > 0 validation
        carnot = 1.0 - self.t2 / self.t1
        if not 0.0 < self.eta_lo < self.eta_hi:
            raise DomainError(
                f"need 0 < eta_lo < eta_hi, got {self.eta_lo!r}, {self.eta_hi!r}"
            )
        if not self.eta_hi < carnot:
            raise DomainError(
                f"eta_hi={self.eta_hi!r} must stay below the Carnot bound {carnot!r}"
            )
        if self.steps < 2:
            raise DomainError(f"steps must be at least 2, got {self.steps!r}")
        if self.format not in ("csv", "json"):
            raise DomainError(f"format must be 'csv' or 'json', got {self.format!r}")


@dataclass(frozen=True)
class SweepRow:
    eta: float
    nu: float
    a1_star: float
    a2_star: float
    work_extracted: float
    t1_prime: float
    t2_prime: float
    t_effective: float
    t_spectral: float
    t_contact: float


def default_sweep_config(
    t1: float = 9.0,
    t2: float = 1.0,
    steps: int = 400,
    output_path: str = "sweep.csv",
    format: str = "csv",
) -> SweepConfig:
    """The figure-reproduction default: eta from 0.01 to Carnot - 0.01."""
    theta = t2 / t1
    return SweepConfig(
        t1=t1,
        t2=t2,
        eta_lo=0.01,
        eta_hi=1.0 - theta - 0.01,
        steps=steps,
        output_path=output_path,
        format=format,
    )


def compute_sweep_row(t1: float, t2: float, eta: float) -> SweepRow:
    """Max-work engine data for a single efficiency gridpoint."""
    try:
        baths = BathPair(t1, t2)
        best = maximize_work_at_efficiency(baths, 1.0 - eta)
        setup = best.setup_star
        t1_prime, t2_prime = final_subsystem_temperatures(setup)
        return SweepRow(
            eta=eta,
            nu=best.nu,
            a1_star=best.a1_star,
            a2_star=setup.a2,
            work_extracted=max(0.0, -best.work_star),
            t1_prime=t1_prime,
            t2_prime=t2_prime,
            t_effective=effective_temperature(setup),
            t_spectral=spectral_temperature_general(final_state(setup)),
            t_contact=contact_temperature(setup),
        )
    except (DomainError, ConvergenceError) as exc:
        raise ConvergenceError(f"sweep gridpoint eta={eta!r} failed: {exc}") from exc


def _row_worker(args) -> SweepRow:
    return compute_sweep_row(*args)


def sweep_grid(config: SweepConfig) -> list:
    """Strictly increasing efficiency gridpoints including both endpoints."""
    n = config.steps
    return [
        config.eta_lo * (1.0 - k / (n - 1)) + config.eta_hi * (k / (n - 1))
        for k in range(n)
    ]


def run_sweep(config: SweepConfig, parallel: bool = False) -> list:
    """Evaluate every gridpoint, write the output file, return the rows.

    Parallel evaluation uses a process pool; rows come back in grid order, so
    the emitted file is byte-identical to a serial run.
    """
    jobs = [(config.t1, config.t2, eta) for eta in sweep_grid(config)]
    if parallel:
        with ProcessPoolExecutor() as pool:
            rows = list(pool.map(_row_worker, jobs, chunksize=16))
    else:
        rows = [_row_worker(job) for job in jobs]
    if config.format == "csv":
        text = rows_to_csv(rows)
    else:
        text = rows_to_json(config, rows)
    write_atomic(config.output_path, text)
    return rows


def _fmt(value: float) -> str:
    return format(value, ".12g")


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    row.eta,
                    row.nu,
                    row.a1_star,
                    row.a2_star,
                    row.work_extracted,
                    row.t1_prime,
                    row.t2_prime,
                    row.t_effective,
                    row.t_spectral,
                    row.t_contact,
                )
            )
        )
    return "\n".join(lines) + "\n"


def rows_to_json(config: SweepConfig, rows) -> str:
    payload = {
        "config": {
            "t1": config.t1,
            "t2": config.t2,
            "eta_lo": config.eta_lo,
            "eta_hi": config.eta_hi,
            "steps": config.steps,
            "output_path": config.output_path,
            "format": config.format,
        },
        "rows": [asdict(row) for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def write_atomic(path: str, text: str):
    """Write via a sibling temp file and rename, so the target is never partial."""
    target = os.path.abspath(path)
    directory = os.path.dirname(target)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".sweep-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp_path, target)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def run_point(t1: float, t2: float, a1: float, a2: float) -> dict:
    """Every engine and temperature quantity for one explicit setup."""
    setup = EngineSetup(a1, a2, BathPair(t1, t2))
    outcome = swap(setup)
    return {
        "t1": t1,
        "t2": t2,
        "a1": a1,
        "a2": a2,
        "nu": setup.nu,
        "eta": setup.eta,
        "r2": setup.r2,
        "s2": setup.s2,
        "u_initial": outcome.u_initial,
        "u_final": outcome.u_final,
        "work": outcome.work,
        "work_extracted": max(0.0, -outcome.work),
        "extracting": outcome.extracting,
        "du1": outcome.du1,
        "du2": outcome.du2,
        "t1_prime": outcome.t1_prime,
        "t2_prime": outcome.t2_prime,
        "s1_prime": outcome.s1_prime,
        "s2_prime": outcome.s2_prime,
        "c1_prime": outcome.c1_prime,
        "c2_prime": outcome.c2_prime,
        "t_effective": effective_temperature(setup),
        "t_spectral": spectral_temperature_general(final_state(setup)),
        "t_contact": contact_temperature(setup),
        "x_aux": x_auxiliary(setup),
    }


def run_optimize(t1: float, t2: float, rel_tol: float = 1e-10) -> GlobalMaxWork:
    return maximize_work_global(BathPair(t1, t2), rel_tol)


def run_classical(t1: float, t2: float, xi: float) -> ClassicalBaseline:
    return classical_baseline(xi, BathPair(t1, t2))
