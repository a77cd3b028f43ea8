"""Exception types shared across the package."""

from __future__ import annotations


class MmmppError(Exception):
    """Base class for all package errors."""


class ValidationError(MmmppError):
    """A parameter, record, or spec violates one of its invariants.

    ``field`` names the offending quantity so callers can report it.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class LayoutError(MmmppError):
    """A working vector does not match the layout implied by the model spec."""


class CovariateError(MmmppError):
    """A covariate required by a formula is missing or malformed."""

    def __init__(self, message: str, covariate: str | None = None,
                 record_id: str | None = None):
        super().__init__(message)
        self.covariate = covariate
        self.record_id = record_id


class CoverageError(MmmppError):
    """A piecewise covariate's step function does not cover a needed interval."""


class ImpossibleObservationError(MmmppError):
    """The forward recursion hit an event with zero likelihood in every state.

    Signals a mark outside all state supports, or numerical underflow that
    survives scaling. ``tau`` is the 0-based event index, ``record_id`` the
    patient it occurred in (when known).
    """

    def __init__(self, message: str, tau: int | None = None,
                 record_id: str | None = None):
        super().__init__(message)
        self.tau = tau
        self.record_id = record_id


class ReducibleChainError(MmmppError):
    """The generator matrix is reducible; no unique stationary distribution."""

    def __init__(self, message: str, unreachable: tuple[int, ...] = ()):
        super().__init__(message)
        self.unreachable = unreachable


class FitError(MmmppError):
    """Every optimization start failed; per-start reasons are attached."""

    def __init__(self, message: str, failures: list[str] | None = None):
        super().__init__(message)
        self.failures = failures or []


class DataError(MmmppError):
    """An input file is malformed. Carries file/line/patient context."""

    def __init__(self, message: str, path: str | None = None,
                 line: int | None = None, patient_id: str | None = None):
        parts = [message]
        ctx = ", ".join(
            s for s in (
                f"file={path}" if path else "",
                f"line={line}" if line is not None else "",
                f"patient={patient_id}" if patient_id else "",
            ) if s
        )
        if ctx:
            parts.append(f"({ctx})")
        super().__init__(" ".join(parts))
        self.path = path
        self.line = line
        self.patient_id = patient_id
