"""Dense symmetric eigensolvers used by the numerical oracle."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .config import EngineConfig
from .errors import ConvergenceError, ShapeError

logger = logging.getLogger(__name__)


class Eigensolver(ABC):
    """Base interface for computing all eigenvalues of a real symmetric matrix."""

    @abstractmethod
    def eigenvalues(self, matrix: np.ndarray) -> np.ndarray:
        """Return every eigenvalue of ``matrix``, sorted nondecreasing."""


def _as_square(matrix: np.ndarray) -> np.ndarray:
    array = np.array(matrix, dtype=np.float64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {array.shape}")
    return array


def round_robin(order: int) -> Iterator[List[Tuple[int, int]]]:
    """Rounds of disjoint index pairs covering every pair once (circle method).

    Odd orders get a dummy index that sits out its round.
    """

    players = list(range(order + order % 2))
    size = len(players)
    for _ in range(size - 1):
        pairs = []
        for i in range(size // 2):
            p, q = players[i], players[size - 1 - i]
            if p < order and q < order:
                pairs.append((min(p, q), max(p, q)))
        yield pairs
        players = [players[0], players[-1]] + players[1:-1]


class JacobiEigensolver(Eigensolver):
    """Cyclic Jacobi rotations applied to a whole round of disjoint pairs at once."""

    def __init__(self, max_sweeps: int = 100, tolerance: float = 1e-12) -> None:
        if max_sweeps < 1:
            raise ValueError("max_sweeps must be positive")
        self.max_sweeps = max_sweeps
        self.tolerance = tolerance

    @staticmethod
    def _off_norm(a: np.ndarray) -> float:
        return float(np.linalg.norm(a - np.diag(np.diag(a))))

    @staticmethod
    def _rotate(a: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
        apq = a[p, q]
        active = apq != 0.0
        if not np.any(active):
            return
        p, q, apq = p[active], q[active], apq[active]
        theta = (a[q, q] - a[p, p]) / (2.0 * apq)
        sign = np.where(theta >= 0.0, 1.0, -1.0)
        t = sign / (np.abs(theta) + np.hypot(theta, 1.0))
        c = 1.0 / np.sqrt(1.0 + t * t)
        s = t * c

        col_p, col_q = a[:, p].copy(), a[:, q].copy()
        a[:, p] = c * col_p - s * col_q
        a[:, q] = s * col_p + c * col_q
        row_p, row_q = a[p, :].copy(), a[q, :].copy()
        a[p, :] = c[:, None] * row_p - s[:, None] * row_q
        a[q, :] = s[:, None] * row_p + c[:, None] * row_q
        a[p, q] = 0.0
        a[q, p] = 0.0

    def eigenvalues(self, matrix: np.ndarray) -> np.ndarray:
        a = _as_square(matrix)
        order = a.shape[0]
        scale = float(np.linalg.norm(a))
        if order < 2 or scale == 0.0:
            return np.sort(np.diag(a).copy())
        # Absolute floor so numerically zero blocks still terminate.
        threshold = self.tolerance * max(scale, 1.0)
        schedule = [
            (np.array([p for p, _ in pairs], dtype=np.intp), np.array([q for _, q in pairs], dtype=np.intp))
            for pairs in round_robin(order)
        ]
        for sweep in range(self.max_sweeps):
            off = self._off_norm(a)
            if off <= threshold:
                logger.debug("jacobi converged on order %d after %d sweeps (off=%.3e)", order, sweep, off)
                return np.sort(np.diag(a).copy())
            for p, q in schedule:
                self._rotate(a, p, q)
            a = 0.5 * (a + a.T)
        off = self._off_norm(a)
        if off <= threshold:
            return np.sort(np.diag(a).copy())
        raise ConvergenceError(
            f"Jacobi did not converge on order {order} after {self.max_sweeps} sweeps "
            f"(off-diagonal norm {off:.3e} > {threshold:.3e})"
        )


class LapackEigensolver(Eigensolver):
    """``numpy.linalg.eigvalsh``."""

    def eigenvalues(self, matrix: np.ndarray) -> np.ndarray:
        return np.sort(np.linalg.eigvalsh(_as_square(matrix)))


def get_eigensolver(order: int, config: Optional[EngineConfig] = None) -> Eigensolver:
    """Return the solver configured for a matrix of the given order.

    ``auto`` uses Jacobi up to ``jacobi_max_order`` and LAPACK beyond it.
    """

    settings = config if config is not None else EngineConfig.from_env()
    choice = settings.eigensolver
    if choice == "auto":
        choice = "jacobi" if order <= settings.jacobi_max_order else "lapack"
    logger.debug("eigensolver for order %d: %s", order, choice)
    if choice == "jacobi":
        return JacobiEigensolver(max_sweeps=settings.jacobi_max_sweeps, tolerance=settings.jacobi_tolerance)
    return LapackEigensolver()


__all__ = [
    "Eigensolver",
    "JacobiEigensolver",
    "LapackEigensolver",
    "get_eigensolver",
    "round_robin",
]
