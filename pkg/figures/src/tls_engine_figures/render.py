"""Render temperature-vs-efficiency figures from a sweep CSV.

Two layouts:

* ``fig1``: post-swap subsystem temperatures T1', T2' and the effective
  temperature T against efficiency; T always lies between the other two.
* ``fig2``: effective vs spectral vs contact temperature, with a zoomed inset
  around the efficiency where all three coincide (eta = 1 - sqrt(theta),
  about 0.6667 for the default T1 = 9, T2 = 1 sweep).

The renderer is a pure view of the CSV: it plots the columns as-is and never
recomputes any physics.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

REQUIRED_COLUMNS = (
    "eta",
    "nu",
    "a1_star",
    "a2_star",
    "work_extracted",
    "t1_prime",
    "t2_prime",
    "t_effective",
    "t_spectral",
    "t_contact",
)

DEFAULT_INSET_WINDOW = (0.6, 0.73)

FIG1_SERIES = (
    ("t1_prime", "subsystem 1 (T1')"),
    ("t2_prime", "subsystem 2 (T2')"),
    ("t_effective", "effective T"),
)
FIG2_SERIES = (
    ("t_effective", "effective T"),
    ("t_spectral", "spectral T_s"),
    ("t_contact", "contact T_c"),
)


class SchemaError(ValueError):
    """The CSV does not match the sweep schema."""


@dataclass(frozen=True)
class FigureSpec:
    input_csv: str
    output_image: str
    figure: str  # "fig1" or "fig2"
    inset_window: tuple = DEFAULT_INSET_WINDOW

    def __post_init__(self):
        if self.figure not in ("fig1", "fig2"):
            raise ValueError(f"figure must be 'fig1' or 'fig2', got {self.figure!r}")
        lo, hi = self.inset_window
        if not lo < hi:
            raise ValueError(f"empty inset window {self.inset_window!r}")


def load_rows(path: str) -> list:
    """Parse a sweep CSV into a list of float-valued dicts.

    Raises SchemaError naming the first missing column, or on an empty file.
    """
    with open(path, newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise SchemaError(f"{path}: empty file, no header row")
        for column in REQUIRED_COLUMNS:
            if column not in reader.fieldnames:
                raise SchemaError(f"{path}: missing column {column!r}")
        rows = [
            {column: float(record[column]) for column in REQUIRED_COLUMNS}
            for record in reader
        ]
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def build_figure(rows, spec: FigureSpec):
    """Assemble the matplotlib figure; the caller saves and closes it."""
    eta = [row["eta"] for row in rows]
    series = FIG1_SERIES if spec.figure == "fig1" else FIG2_SERIES

    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for column, label in series:
        ax.plot(eta, [row[column] for row in rows], label=label)
    ax.set_xlabel("efficiency")
    ax.set_ylabel("temperature")
    ax.legend()

    if spec.figure == "fig2":
        lo, hi = spec.inset_window
        if lo < eta[0] or hi > eta[-1]:
            raise SchemaError(
                f"inset window [{lo}, {hi}] exceeds the data range "
                f"[{eta[0]}, {eta[-1]}]"
            )
        window = [row for row in rows if lo <= row["eta"] <= hi]
        inset = ax.inset_axes([0.45, 0.45, 0.5, 0.5])
        for column, _ in series:
            inset.plot(
                [row["eta"] for row in window],
                [row[column] for row in window],
            )
        inset.set_xlim(lo, hi)
    return fig


def render(spec: FigureSpec) -> str:
    """Render the requested figure and write it to spec.output_image."""
    rows = load_rows(spec.input_csv)
    fig = build_figure(rows, spec)
    try:
        fig.savefig(spec.output_image)
    finally:
        plt.close(fig)
    return spec.output_image


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="tls-engine-render",
        description="Render sweep-CSV temperature figures",
    )
    parser.add_argument("--input", required=True, help="sweep CSV path")
    parser.add_argument("--figure", required=True, choices=("fig1", "fig2"))
    parser.add_argument("--output", required=True, help="image path (extension picks the format)")
    parser.add_argument("--inset-lo", type=float, default=DEFAULT_INSET_WINDOW[0])
    parser.add_argument("--inset-hi", type=float, default=DEFAULT_INSET_WINDOW[1])
    args = parser.parse_args(argv)
    spec = FigureSpec(
        input_csv=args.input,
        output_image=args.output,
        figure=args.figure,
        inset_window=(args.inset_lo, args.inset_hi),
    )
    try:
        render(spec)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
