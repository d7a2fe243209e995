#!/usr/bin/env python3
"""Regenerate the default max-work sweep (T1 = 9, T2 = 1, 400 gridpoints).

Writes data/sweep_default.csv next to the repository root; pass a path to
override.  The CSV feeds the figure renderer in figures/.
"""

import pathlib
import sys

from tls_heat_engine import default_sweep_config, run_sweep


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "data/sweep_default.csv"
    pathlib.Path(out).parent.mkdir(parents=True, exist_ok=True)
    config = default_sweep_config(output_path=out)
    rows = run_sweep(config)
    print(f"wrote {len(rows)} rows to {out}")
    print(f"eta window: [{config.eta_lo}, {config.eta_hi}]")


if __name__ == "__main__":
    main()
