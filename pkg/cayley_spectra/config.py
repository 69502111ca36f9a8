"""Runtime settings for the exact engine and the numerical oracle."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 8
DEFAULT_ORACLE_MAX_N = 6
HARD_ORACLE_MAX_N = 7
EIGENSOLVER_CHOICES = ("auto", "jacobi", "lapack")

_TRUE_VALUES = {"1", "true", "yes"}


@dataclass(frozen=True)
class EngineConfig:
    """Size caps, solver choice and tolerances.

    ``max_n`` bounds the exact formula path (exhaustive sweeps over all
    partitions of ``n``); ``oracle_max_n`` bounds the dense ``n! x n!`` Cayley
    Laplacian.  ``n = 7`` for the latter is only reachable through
    ``allow_n7``.
    """

    max_n: int = DEFAULT_MAX_N
    oracle_max_n: int = DEFAULT_ORACLE_MAX_N
    allow_n7: bool = False
    max_rep_dimension: int = 2000
    eigensolver: str = "auto"
    jacobi_max_order: int = 256
    jacobi_max_sweeps: int = 100
    jacobi_tolerance: float = 1e-12
    tolerance: float = 1e-8
    output_dir: str = "cayley_outputs"

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise ConfigError(f"max_n must be positive, got {self.max_n}")
        if self.oracle_max_n < 1:
            raise ConfigError(f"oracle_max_n must be positive, got {self.oracle_max_n}")
        if self.eigensolver not in EIGENSOLVER_CHOICES:
            raise ConfigError(
                f"eigensolver must be one of {', '.join(EIGENSOLVER_CHOICES)}, got {self.eigensolver!r}"
            )
        if self.tolerance <= 0 or self.jacobi_tolerance <= 0:
            raise ConfigError("tolerances must be positive")
        if self.max_n > DEFAULT_MAX_N:
            logger.warning(
                "max_n raised to %d (default %d): exhaustive sweeps grow with p(n) and LR enumeration cost",
                self.max_n,
                DEFAULT_MAX_N,
            )

    @property
    def effective_oracle_max_n(self) -> int:
        """The Cayley-matrix cap after applying the ``n = 7`` opt-in."""

        if self.allow_n7:
            return HARD_ORACLE_MAX_N
        return min(self.oracle_max_n, HARD_ORACLE_MAX_N - 1)

    def with_overrides(self, **changes: object) -> "EngineConfig":
        """Return a copy with the non-``None`` keyword arguments applied."""

        return replace(self, **{key: value for key, value in changes.items() if value is not None})

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "EngineConfig":
        env = os.environ if environ is None else environ
        defaults = cls()
        return cls(
            max_n=_int(env, "CAYLEY_MAX_N", defaults.max_n),
            oracle_max_n=_int(env, "CAYLEY_ORACLE_MAX_N", defaults.oracle_max_n),
            allow_n7=_bool(env, "CAYLEY_ALLOW_N7", defaults.allow_n7),
            max_rep_dimension=_int(env, "CAYLEY_MAX_REP_DIMENSION", defaults.max_rep_dimension),
            eigensolver=env.get("CAYLEY_EIGENSOLVER", defaults.eigensolver).strip().lower(),
            jacobi_max_order=_int(env, "CAYLEY_JACOBI_MAX_ORDER", defaults.jacobi_max_order),
            jacobi_max_sweeps=_int(env, "CAYLEY_JACOBI_MAX_SWEEPS", defaults.jacobi_max_sweeps),
            jacobi_tolerance=_float(env, "CAYLEY_JACOBI_TOLERANCE", defaults.jacobi_tolerance),
            tolerance=_float(env, "CAYLEY_TOLERANCE", defaults.tolerance),
            output_dir=env.get("CAYLEY_OUTPUT_DIR", defaults.output_dir),
        )


def _int(env: Mapping[str, str], key: str, default: int) -> int:
    raw = env.get(key)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from exc


def _float(env: Mapping[str, str], key: str, default: float) -> float:
    raw = env.get(key)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{key} must be a number, got {raw!r}") from exc


def _bool(env: Mapping[str, str], key: str, default: bool) -> bool:
    raw = env.get(key)
    if raw is None:
        return default
    return raw.strip().lower() in _TRUE_VALUES


__all__ = ["EngineConfig", "DEFAULT_MAX_N", "DEFAULT_ORACLE_MAX_N", "HARD_ORACLE_MAX_N"]
