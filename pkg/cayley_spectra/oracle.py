"""Brute-force matrices that check the exact formula path numerically.

Nothing here shares code with :mod:`cayley_spectra.spectra` beyond the input
types: graph and Cayley-graph Laplacians are built entry by entry, the
irreducible blocks come from Young's orthogonal form, and eigenvalues come
from a dense solver.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import EngineConfig
from .eigensolver import get_eigensolver
from .errors import CapExceededError, DimensionMismatchError, ShapeError
from .models import MultipartiteShape, ShapeLike, SpectrumMultiset, as_shape
from .partitions import (
    CompositionLike,
    Partition,
    as_partition,
    dimension,
    enumerate_partitions,
    format_partition,
)
from .spectra import block_spectrum, cayley_spectrum, graph_spectrum, spectral_gap_graph

logger = logging.getLogger(__name__)

GRAPH_MAX_N = 64

Tableau = Tuple[Tuple[int, ...], ...]


def _config(config: Optional[EngineConfig]) -> EngineConfig:
    return config if config is not None else EngineConfig.from_env()


@dataclass(frozen=True, eq=False)
class DenseSymmetricMatrix:
    """A real matrix that is symmetric entry for entry, not just approximately."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.entries, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
            raise ShapeError(f"expected a nonempty square matrix, got shape {array.shape}")
        if not np.array_equal(array, array.T):
            raise ShapeError("matrix is not exactly symmetric; build it with from_array to symmetrise")
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "DenseSymmetricMatrix":
        """Symmetrise ``array`` as ``(A + A^T) / 2``."""

        values = np.asarray(array, dtype=np.float64)
        return cls(0.5 * (values + values.T))

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    def trace(self) -> float:
        return float(np.trace(self.entries))

    def max_off_diagonal(self) -> float:
        off = self.entries - np.diag(np.diag(self.entries))
        return float(np.max(np.abs(off))) if self.order > 1 else 0.0

    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)

    def tolist(self) -> List[List[float]]:
        return self.entries.tolist()


def symmetric_eigenvalues(matrix: DenseSymmetricMatrix, config: Optional[EngineConfig] = None) -> List[float]:
    """All eigenvalues of ``matrix`` in nondecreasing order."""

    solver = get_eigensolver(matrix.order, _config(config))
    return [float(value) for value in solver.eigenvalues(matrix.entries)]


@dataclass(frozen=True)
class PermutationIndex:
    """Lexicographic (factorial number system) ranking of the permutations of ``1..n``.

    Permutations are one-line tuples ``(pi(1), ..., pi(n))``; rank 0 is the
    identity and rank ``n! - 1`` is the reversal.
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ShapeError(f"n must be positive, got {self.n}")

    @property
    def size(self) -> int:
        return math.factorial(self.n)

    def identity(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def _check(self, perm: Sequence[int]) -> Tuple[int, ...]:
        values = tuple(int(v) for v in perm)
        if sorted(values) != list(range(1, self.n + 1)):
            raise ShapeError(f"{values} is not a permutation of 1..{self.n}")
        return values

    def rank(self, perm: Sequence[int]) -> int:
        values = self._check(perm)
        result = 0
        for i, value in enumerate(values):
            smaller = sum(1 for later in values[i + 1:] if later < value)
            result += smaller * math.factorial(self.n - 1 - i)
        return result

    def unrank(self, k: int) -> Tuple[int, ...]:
        if not 0 <= k < self.size:
            raise ShapeError(f"rank {k} outside 0..{self.size - 1}")
        pool = list(range(1, self.n + 1))
        result = []
        for i in range(self.n - 1, -1, -1):
            digit, k = divmod(k, math.factorial(i))
            result.append(pool.pop(digit))
        return tuple(result)

    def permutations(self) -> List[Tuple[int, ...]]:
        """All permutations in rank order."""

        return list(itertools.permutations(range(1, self.n + 1)))

    def compose(self, left: Sequence[int], right: Sequence[int]) -> Tuple[int, ...]:
        """``left o right``: apply ``right`` first."""

        a, b = self._check(left), self._check(right)
        return tuple(a[b[i] - 1] for i in range(self.n))

    def inverse(self, perm: Sequence[int]) -> Tuple[int, ...]:
        values = self._check(perm)
        result = [0] * self.n
        for i, value in enumerate(values, start=1):
            result[value - 1] = i
        return tuple(result)

    def apply_transposition(self, perm: Sequence[int], a: int, b: int) -> Tuple[int, ...]:
        """``perm o (a b)``, i.e. swap positions ``a`` and ``b`` of the one-line form."""

        if not (1 <= a <= self.n and 1 <= b <= self.n) or a == b:
            raise ShapeError(f"({a} {b}) is not a transposition of 1..{self.n}")
        values = list(self._check(perm))
        values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
        return tuple(values)


def graph_laplacian(eta: ShapeLike) -> DenseSymmetricMatrix:
    """``D - A`` for ``K_eta``; vertices in consecutive blocks."""

    shape = as_shape(eta)
    if shape.n > GRAPH_MAX_N:
        raise CapExceededError("n", shape.n, GRAPH_MAX_N, "a smaller eta")
    laplacian = np.zeros((shape.n, shape.n))
    for i, j in shape.edges():
        laplacian[i - 1, j - 1] = laplacian[j - 1, i - 1] = -1.0
        laplacian[i - 1, i - 1] += 1.0
        laplacian[j - 1, j - 1] += 1.0
    return DenseSymmetricMatrix(laplacian)


def cayley_laplacian(eta: ShapeLike, config: Optional[EngineConfig] = None) -> DenseSymmetricMatrix:
    """Laplacian of ``Cay(S_n, E(K_eta))`` indexed by :class:`PermutationIndex` ranks."""

    shape = as_shape(eta)
    settings = _config(config)
    cap = settings.effective_oracle_max_n
    if shape.n > cap:
        raise CapExceededError("n", shape.n, cap, "CAYLEY_ORACLE_MAX_N/CAYLEY_ALLOW_N7 or --allow-n7")
    index = PermutationIndex(shape.n)
    edges = shape.edges()
    laplacian = np.zeros((index.size, index.size))
    for row, perm in enumerate(index.permutations()):
        laplacian[row, row] = len(edges)
        for a, b in edges:
            laplacian[row, index.rank(index.apply_transposition(perm, a, b))] = -1.0
    logger.debug("built Cayley Laplacian of %s: order %d, %d edges", shape, index.size, len(edges))
    return DenseSymmetricMatrix(laplacian)


@lru_cache(maxsize=None)
def _count_standard(parts: Tuple[int, ...]) -> int:
    if sum(parts) <= 1:
        return 1
    total = 0
    for i, row in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if row > below:
            reduced = parts[:i] + (row - 1,) + parts[i + 1:]
            total += _count_standard(tuple(v for v in reduced if v))
    return total


def count_standard_tableaux(p: CompositionLike) -> int:
    """Number of standard Young tableaux of shape ``p``, by removing the largest entry from a corner."""

    return _count_standard(as_partition(p).parts)


@lru_cache(maxsize=None)
def _standard_tableaux(parts: Tuple[int, ...]) -> Tuple[Tableau, ...]:
    n = sum(parts)
    found: List[Tableau] = []
    rows: List[List[int]] = [[] for _ in parts]

    def place(value: int) -> None:
        if value > n:
            found.append(tuple(tuple(row) for row in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < parts[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(value)
                place(value + 1)
                row.pop()

    place(1)
    return tuple(found)


def standard_tableaux(p: CompositionLike) -> List[Tableau]:
    """Standard tableaux of shape ``p``; entry ``k`` goes to the lowest-index row first."""

    return list(_standard_tableaux(as_partition(p).parts))


def mn_transposition_character(p: CompositionLike) -> int:
    """``chi^p`` on a transposition by removing one domino rim hook (Murnaghan-Nakayama)."""

    parts = list(as_partition(p).parts)
    if sum(parts) < 2:
        raise ShapeError("S_n has no transpositions for n < 2")
    padded = parts + [0, 0]
    total = 0
    for i in range(len(parts)):
        if padded[i] - 2 >= padded[i + 1]:
            rest = padded[:i] + [padded[i] - 2] + padded[i + 1:]
            total += dimension([v for v in rest if v])
        if padded[i] == padded[i + 1] and padded[i + 1] - 1 >= padded[i + 2]:
            rest = padded[:i] + [padded[i] - 1, padded[i + 1] - 1] + padded[i + 2:]
            total -= dimension([v for v in rest if v])
    return total


def _locate(tableau: Tableau, value: int) -> Tuple[int, int]:
    for r, row in enumerate(tableau):
        if value in row:
            return r, row.index(value)
    raise KeyError(value)  # pragma: no cover


@lru_cache(maxsize=None)
def _adjacent_generator(parts: Tuple[int, ...], i: int) -> np.ndarray:
    basis = _standard_tableaux(parts)
    position: Dict[Tableau, int] = {t: k for k, t in enumerate(basis)}
    matrix = np.zeros((len(basis), len(basis)))
    for k, tableau in enumerate(basis):
        r1, c1 = _locate(tableau, i)
        r2, c2 = _locate(tableau, i + 1)
        if r1 == r2:
            matrix[k, k] = 1.0
        elif c1 == c2:
            matrix[k, k] = -1.0
        else:
            axial = (c2 - r2) - (c1 - r1)
            matrix[k, k] = 1.0 / axial
            swapped = tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row) for row in tableau
            )
            matrix[k, position[swapped]] = math.sqrt(1.0 - 1.0 / axial ** 2)
    matrix.setflags(write=False)
    return matrix


def yor_matrix(alpha: CompositionLike, a: int, b: int) -> DenseSymmetricMatrix:
    """Young's orthogonal form of the transposition ``(a b)``.

    ``(a b) = s_a ... s_{b-2} s_{b-1} s_{b-2} ... s_a`` with ``s_i = (i i+1)``.
    """

    parts = as_partition(alpha).parts
    n = sum(parts)
    if not 1 <= a < b <= n:
        raise ShapeError(f"need 1 <= a < b <= {n}, got a={a}, b={b}")
    word = list(range(a, b)) + list(range(b - 2, a - 1, -1))
    product = np.eye(len(_standard_tableaux(parts)))
    for i in word:
        product = product @ _adjacent_generator(parts, i)
    return DenseSymmetricMatrix.from_array(product)


def rep_block_matrix(
    alpha: CompositionLike, eta: ShapeLike, config: Optional[EngineConfig] = None
) -> DenseSymmetricMatrix:
    """``T^alpha[W(K_eta)]``: the sum of :func:`yor_matrix` over the edges of ``K_eta``."""

    a, shape = as_partition(alpha), as_shape(eta)
    if a.n != shape.n:
        raise ShapeError(f"|alpha| = {a.n} differs from |eta| = {shape.n}")
    settings = _config(config)
    f = dimension(a)
    if f > settings.max_rep_dimension:
        raise CapExceededError("f_alpha", f, settings.max_rep_dimension, "CAYLEY_MAX_REP_DIMENSION")
    total = np.zeros((f, f))
    for i, j in shape.edges():
        total = total + yor_matrix(a, i, j).entries
    return DenseSymmetricMatrix(total)


@dataclass(frozen=True)
class SpectrumComparison:
    """Positional comparison of an exact multiset against sorted numeric eigenvalues."""

    ok: bool
    worst_deviation: float
    worst_index: int
    size: int
    tolerance: float

    def to_payload(self) -> Dict[str, object]:
        return {
            "ok": self.ok,
            "worst_deviation": self.worst_deviation,
            "worst_index": self.worst_index,
            "size": self.size,
            "tolerance": self.tolerance,
        }


def compare_spectra(exact: SpectrumMultiset, numeric: Sequence[float], tol: float) -> SpectrumComparison:
    expected = exact.eigenvalues()
    if len(expected) != len(numeric):
        raise DimensionMismatchError(
            f"exact spectrum has {len(expected)} eigenvalues, numeric has {len(numeric)}"
        )
    if not expected:
        return SpectrumComparison(ok=True, worst_deviation=0.0, worst_index=-1, size=0, tolerance=tol)
    deviations = np.abs(np.asarray(expected, dtype=np.float64) - np.sort(np.asarray(numeric, dtype=np.float64)))
    worst = int(np.argmax(deviations))
    return SpectrumComparison(
        ok=bool(deviations[worst] <= tol),
        worst_deviation=float(deviations[worst]),
        worst_index=worst,
        size=len(expected),
        tolerance=tol,
    )


@dataclass(frozen=True)
class BlockCheck:
    alpha: Partition
    comparison: SpectrumComparison

    def to_payload(self) -> Dict[str, object]:
        return {"alpha": list(self.alpha.parts), **self.comparison.to_payload()}


@dataclass(frozen=True)
class OracleReport:
    """Every numerical cross-check run for one shape."""

    shape: MultipartiteShape
    blocks: Tuple[BlockCheck, ...]
    graph: SpectrumComparison
    gap_graph_numeric: Optional[float] = None
    gap_graph_exact: Optional[int] = None
    cayley: Optional[SpectrumComparison] = None
    skipped: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def gap_ok(self) -> bool:
        if self.gap_graph_exact is None or self.gap_graph_numeric is None:
            return True
        return abs(self.gap_graph_numeric - self.gap_graph_exact) <= self.graph.tolerance

    @property
    def passed(self) -> bool:
        checks = [block.comparison.ok for block in self.blocks] + [self.graph.ok, self.gap_ok]
        if self.cayley is not None:
            checks.append(self.cayley.ok)
        return all(checks)

    def to_payload(self) -> Dict[str, object]:
        return {
            "eta": list(self.shape.eta.parts),
            "n": self.shape.n,
            "passed": self.passed,
            "blocks": [block.to_payload() for block in self.blocks],
            "graph": self.graph.to_payload(),
            "gap_graph_exact": None if self.gap_graph_exact is None else str(self.gap_graph_exact),
            "gap_graph_numeric": self.gap_graph_numeric,
            "cayley": None if self.cayley is None else self.cayley.to_payload(),
            "skipped": list(self.skipped),
        }


def oracle_check(
    eta: ShapeLike,
    alphas: Optional[Sequence[CompositionLike]] = None,
    config: Optional[EngineConfig] = None,
) -> OracleReport:
    """Compare the exact path with the brute-force matrices for one shape.

    Blocks whose ``f_alpha`` exceeds the rep-dimension cap and a Cayley matrix
    beyond the oracle cap are listed in ``skipped`` instead of being run.
    """

    shape = as_shape(eta)
    settings = _config(config)
    tol = settings.tolerance
    wanted = [as_partition(alpha) for alpha in alphas] if alphas is not None else enumerate_partitions(shape.n)
    skipped: List[str] = []

    blocks: List[BlockCheck] = []
    for alpha in wanted:
        if dimension(alpha) > settings.max_rep_dimension:
            skipped.append(f"block {format_partition(alpha)}")
            continue
        numeric = symmetric_eigenvalues(rep_block_matrix(alpha, shape, settings), settings)
        comparison = compare_spectra(block_spectrum(alpha, shape), numeric, tol)
        if not comparison.ok:
            logger.warning(
                "block %s on %s deviates by %.3e", format_partition(alpha), shape, comparison.worst_deviation
            )
        blocks.append(BlockCheck(alpha=alpha, comparison=comparison))

    graph_numeric = symmetric_eigenvalues(graph_laplacian(shape), settings)
    graph = compare_spectra(graph_spectrum(shape), graph_numeric, tol)
    gap_exact = gap_numeric = None
    if shape.p >= 2:
        gap_exact = spectral_gap_graph(shape)
        gap_numeric = graph_numeric[1]

    cayley = None
    if shape.n <= settings.effective_oracle_max_n:
        numeric = symmetric_eigenvalues(cayley_laplacian(shape, settings), settings)
        cayley = compare_spectra(cayley_spectrum(shape, settings), numeric, tol)
    else:
        skipped.append(f"cayley n={shape.n}")

    report = OracleReport(
        shape=shape,
        blocks=tuple(blocks),
        graph=graph,
        gap_graph_numeric=gap_numeric,
        gap_graph_exact=gap_exact,
        cayley=cayley,
        skipped=tuple(skipped),
    )
    logger.info("oracle check of %s: passed=%s skipped=%s", shape, report.passed, list(skipped))
    return report


__all__ = [
    "BlockCheck",
    "DenseSymmetricMatrix",
    "OracleReport",
    "PermutationIndex",
    "SpectrumComparison",
    "cayley_laplacian",
    "compare_spectra",
    "count_standard_tableaux",
    "graph_laplacian",
    "mn_transposition_character",
    "oracle_check",
    "rep_block_matrix",
    "standard_tableaux",
    "symmetric_eigenvalues",
    "yor_matrix",
]
