"""Exception hierarchy shared by all engine modules."""


class DomainError(ValueError):
    """An argument lies outside the physical domain of an operation."""


class OutOfModelError(DomainError):
    """Inputs that would require population inversion (negative temperature)."""


class DegenerateSpectrumError(DomainError):
    """Adjacent energy levels coincide, so level-ratio formulas are undefined."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed; the message carries bracket diagnostics."""
