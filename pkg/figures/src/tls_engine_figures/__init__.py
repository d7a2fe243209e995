"""Figure rendering for tls-heat-engine sweep CSV files."""

from .render import (
    DEFAULT_INSET_WINDOW,
    REQUIRED_COLUMNS,
    FigureSpec,
    SchemaError,
    build_figure,
    load_rows,
    render,
)

__all__ = [
    "DEFAULT_INSET_WINDOW",
    "REQUIRED_COLUMNS",
    "FigureSpec",
    "SchemaError",
    "build_figure",
    "load_rows",
    "render",
]
