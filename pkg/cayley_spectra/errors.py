"""Exception types raised by the spectra engine."""

from __future__ import annotations


class CayleySpectraError(Exception):
    """Base class for all errors raised by :mod:`cayley_spectra`."""


class PartitionFormatError(CayleySpectraError, ValueError):
    """Raised when partition or composition text cannot be parsed."""


class ShapeError(CayleySpectraError, ValueError):
    """Raised when an argument violates a combinatorial precondition."""


class CapExceededError(CayleySpectraError, ValueError):
    """Raised when an input is larger than a configured size cap."""

    def __init__(self, what: str, value: int, cap: int, setting: str) -> None:
        self.what = what
        self.value = value
        self.cap = cap
        self.setting = setting
        super().__init__(
            f"{what}={value} exceeds the configured cap of {cap} "
            f"(raise it with {setting}; cost grows factorially)"
        )


class DimensionMismatchError(CayleySpectraError, ValueError):
    """Raised when two spectra that must have equal size do not."""


class ConvergenceError(CayleySpectraError, RuntimeError):
    """Raised when an iterative eigensolver hits its sweep limit."""


class ConfigError(CayleySpectraError, ValueError):
    """Raised when an environment setting cannot be interpreted."""


__all__ = [
    "CapExceededError",
    "CayleySpectraError",
    "ConfigError",
    "ConvergenceError",
    "DimensionMismatchError",
    "PartitionFormatError",
    "ShapeError",
]
