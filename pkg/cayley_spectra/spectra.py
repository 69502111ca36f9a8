"""Exact spectra of ``T^alpha[W(K_eta)]`` and the spectral gaps of ``K_eta``.

``W(G)`` is the sum of the edge transpositions of ``G`` in the group algebra
of ``S_n``.  Restricting ``[alpha]`` to the Young subgroup ``S_eta`` splits it
into admissible tuples ``(beta^1..beta^p)``, and each contributes the
eigenvalue ``q_alpha - sum q_{beta^i}`` with multiplicity
``c^alpha_{beta^1..beta^p} * prod f_{beta^i}``.  Every quantity here is an exact
integer.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .config import EngineConfig
from .errors import CapExceededError, ShapeError
from .lr import AdmissibleTuple, enumerate_admissible, iter_admissible_star
from .models import (
    ROUTE_COMPLETE_GRAPH,
    ROUTE_RELAXED_BOUND,
    AldousReport,
    BlockReport,
    MultipartiteShape,
    ShapeLike,
    SpectrumMultiset,
    as_shape,
)
from .partitions import (
    CompositionLike,
    Partition,
    as_partition,
    as_parts,
    dimension,
    enumerate_partitions,
    enumerate_weak_compositions,
    format_partition,
    q_value,
)

logger = logging.getLogger(__name__)


def _config(config: Optional[EngineConfig]) -> EngineConfig:
    return config if config is not None else EngineConfig.from_env()


def _check_cap(n: int, config: EngineConfig) -> None:
    if n > config.max_n:
        raise CapExceededError("n", n, config.max_n, "CAYLEY_MAX_N or --max-n")


def _check_sizes(alpha: Partition, shape: MultipartiteShape) -> None:
    if alpha.n != shape.n:
        raise ShapeError(f"|alpha| = {alpha.n} differs from |eta| = {shape.n}")


def _require_edges(shape: MultipartiteShape) -> None:
    if shape.p < 2:
        raise ShapeError(f"{shape} has a single block and no edges; its spectral gap is undefined")


def standard_representation(n: int) -> Partition:
    """The partition ``(n-1, 1)`` of the nontrivial part of the defining representation."""

    if n < 2:
        raise ShapeError(f"(n-1,1) needs n >= 2, got n = {n}")
    return Partition((n - 1, 1))


def complete_graph_block(alpha: CompositionLike) -> SpectrumMultiset:
    """``T^alpha[W(K_n)]`` is the scalar ``q_alpha`` on a space of dimension ``f_alpha``."""

    a = as_partition(alpha)
    return SpectrumMultiset(((q_value(a), dimension(a)),))


def b_value(alpha: CompositionLike, tup: AdmissibleTuple) -> int:
    """``b = q_alpha - sum_i q(part_i)``."""

    a = as_partition(alpha)
    if sum(tup.sizes()) != a.n:
        raise ShapeError(f"tuple {tup} does not partition |alpha| = {a.n}")
    return q_value(a) - tup.q_sum()


def inner_product_form(tup: AdmissibleTuple) -> int:
    """``sum_{i<j} gamma^i . gamma^j``; equals :func:`b_value` on ``Adm*`` tuples."""

    parts = [as_parts(part) for part in tup.parts]
    total = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            total += sum(x * y for x, y in zip(parts[i], parts[j]))
    return total


def block_spectrum(alpha: CompositionLike, eta: ShapeLike) -> SpectrumMultiset:
    a, shape = as_partition(alpha), as_shape(eta)
    _check_sizes(a, shape)
    counts: Dict[int, int] = {}
    for tup in enumerate_admissible(a, shape.eta):
        value = b_value(a, tup)
        counts[value] = counts.get(value, 0) + tup.multiplicity()
    return SpectrumMultiset.from_counts(counts)


def lambda_max(alpha: CompositionLike, eta: ShapeLike) -> int:
    """Largest eigenvalue of ``T^alpha[W(K_eta)]``: the maximum of ``b`` over ``Adm``."""

    a, shape = as_partition(alpha), as_shape(eta)
    _check_sizes(a, shape)
    return max(b_value(a, tup) for tup in enumerate_admissible(a, shape.eta))


@lru_cache(maxsize=None)
def _min_square_sum(remaining: Tuple[int, ...], sizes: Tuple[int, ...]) -> int:
    # Rows may be permuted jointly in every gamma^i, so `remaining` is kept sorted.
    if len(sizes) == 1:
        return sum(value * value for value in remaining)
    best = None
    for gamma in enumerate_weak_compositions(sizes[0], len(remaining), remaining):
        rest = tuple(sorted((r - g for r, g in zip(remaining, gamma) if r - g), reverse=True))
        cost = sum(g * g for g in gamma) + _min_square_sum(rest, sizes[1:])
        if best is None or cost < best:
            best = cost
    if best is None:  # pragma: no cover - sizes always add up to sum(remaining)
        raise ShapeError(f"no split of {remaining} into blocks {sizes}")
    return best


def b_bar(alpha: CompositionLike, eta: ShapeLike) -> int:
    """Maximum of ``sum_{i<j} gamma^i . gamma^j`` over ``Adm*(alpha, eta)``.

    Since ``sum_i gamma^i = alpha`` the objective equals
    ``(|alpha|^2 - sum_i |gamma^i|^2) / 2`` (squared Euclidean norms), so the
    search minimises the sum of squares over the remaining row budget.
    """

    a, shape = as_partition(alpha), as_shape(eta)
    _check_sizes(a, shape)
    squares = sum(value * value for value in a.parts)
    return (squares - _min_square_sum(a.parts, shape.eta.parts)) // 2


def b_bar_enumerated(alpha: CompositionLike, eta: ShapeLike) -> int:
    """:func:`b_bar` by brute force over every ``Adm*`` tuple."""

    a, shape = as_partition(alpha), as_shape(eta)
    _check_sizes(a, shape)
    return max(inner_product_form(tup) for tup in iter_admissible_star(a, shape.eta))


def restriction_n_minus_1(eta: ShapeLike) -> List[AdmissibleTuple]:
    """Closed-form restriction of ``[n-1,1]`` to ``S_eta``.

    The all-rows tuple appears ``p - 1`` times; for every block with
    ``eta_i >= 2`` the tuple with ``(eta_i - 1, 1)`` in slot ``i`` appears once.
    """

    shape = as_shape(eta)
    if shape.n < 2:
        raise ShapeError(f"(n-1,1) needs n >= 2, got n = {shape.n}")
    rows = tuple(Partition((size,)) for size in shape.eta.parts)
    found: List[AdmissibleTuple] = []
    if shape.p > 1:
        found.append(AdmissibleTuple(parts=rows, coefficient=shape.p - 1))
    for i, size in enumerate(shape.eta.parts):
        if size >= 2:
            psi = rows[:i] + (Partition((size - 1, 1)),) + rows[i + 1:]
            found.append(AdmissibleTuple(parts=psi, coefficient=1))
    return sorted(found, key=lambda tup: tuple(part.parts for part in tup.parts), reverse=True)


def graph_spectrum(eta: ShapeLike) -> SpectrumMultiset:
    """Laplacian spectrum of ``K_eta`` read off the defining representation."""

    shape = as_shape(eta)
    zero = SpectrumMultiset(((0, 1),))
    if shape.n < 2:
        return zero
    block = block_spectrum(standard_representation(shape.n), shape)
    return zero.union(block.reflected(shape.edge_count))


def spectral_gap_graph(eta: ShapeLike) -> int:
    """``lambda_2`` of ``K_eta``: ``|E| - lambda_max((n-1,1))``."""

    shape = as_shape(eta)
    _require_edges(shape)
    return shape.edge_count - lambda_max(standard_representation(shape.n), shape)


def _nontrivial(n: int) -> List[Partition]:
    return enumerate_partitions(n)[1:]


def spectral_gap_cayley(eta: ShapeLike, config: Optional[EngineConfig] = None) -> int:
    """``lambda_2`` of ``Cay(S_n, E(K_eta))``: ``|E|`` minus the largest nontrivial ``lambda_max``."""

    shape = as_shape(eta)
    _require_edges(shape)
    _check_cap(shape.n, _config(config))
    return shape.edge_count - max(lambda_max(alpha, shape) for alpha in _nontrivial(shape.n))


def cayley_spectrum(eta: ShapeLike, config: Optional[EngineConfig] = None) -> SpectrumMultiset:
    """Laplacian spectrum of the Cayley graph: ``f_alpha`` copies of each reflected block."""

    shape = as_shape(eta)
    _check_cap(shape.n, _config(config))
    spectrum = SpectrumMultiset()
    for alpha in enumerate_partitions(shape.n):
        block = block_spectrum(alpha, shape).scaled(dimension(alpha))
        spectrum = spectrum.union(block.reflected(shape.edge_count))
    return spectrum


@dataclass(frozen=True)
class BoundChain:
    """The inequalities ``B(alpha) <= B_bar(alpha) <= B_bar(n-1,1) = B(n-1,1)``."""

    alpha: Partition
    b: int
    b_bar: int
    b_bar_standard: int
    b_standard: int

    @property
    def holds(self) -> bool:
        return self.b <= self.b_bar <= self.b_bar_standard == self.b_standard


def relaxed_chain(alpha: CompositionLike, eta: ShapeLike) -> BoundChain:
    """Evaluate the relaxed bound chain; only meaningful when ``eta != (1^n)``.

    For ``K_n`` the relaxed bound at ``(n-1,1)`` overshoots ``B`` by one and the
    chain does not close, so a :class:`ShapeError` is raised there.
    """

    a, shape = as_partition(alpha), as_shape(eta)
    _check_sizes(a, shape)
    if shape.is_complete_graph:
        raise ShapeError(f"{shape} is a complete graph; compare q values directly instead")
    standard = standard_representation(shape.n)
    return BoundChain(
        alpha=a,
        b=lambda_max(a, shape),
        b_bar=b_bar(a, shape),
        b_bar_standard=b_bar(standard, shape),
        b_standard=lambda_max(standard, shape),
    )


def verify_aldous(eta: ShapeLike, config: Optional[EngineConfig] = None) -> AldousReport:
    """Check ``lambda_max(alpha) <= lambda_max((n-1,1))`` for every nontrivial ``alpha``.

    ``K_n`` goes through ``q_alpha <= q_(n-1,1)`` directly because ``B_bar``
    overshoots there; every other shape goes through the relaxed bound.
    """

    shape = as_shape(eta)
    _require_edges(shape)
    _check_cap(shape.n, _config(config))
    standard = standard_representation(shape.n)
    top = lambda_max(standard, shape)
    complete = shape.is_complete_graph

    blocks: List[BlockReport] = []
    chain_verified = True
    for alpha in _nontrivial(shape.n):
        spectrum = block_spectrum(alpha, shape)
        if complete:
            relaxed = None
            holds = spectrum.max == q_value(alpha) <= q_value(standard)
        else:
            chain = relaxed_chain(alpha, shape)
            relaxed, holds = chain.b_bar, chain.holds
        if not holds:
            logger.warning("bound chain fails for alpha=%s on %s", format_partition(alpha), shape)
            chain_verified = False
        blocks.append(BlockReport(alpha=alpha, lambda_max=spectrum.max, spectrum=spectrum, b_bar=relaxed))

    cayley_top = max(block.lambda_max for block in blocks)
    argmax = tuple(block.alpha for block in blocks if block.lambda_max == cayley_top)
    gap_graph = spectral_gap_graph(shape)
    gap_cayley = shape.edge_count - cayley_top
    verdict = all(block.lambda_max <= top for block in blocks)
    multiplicity_cayley = sum(
        dimension(block.alpha) * block.spectrum.multiplicity(cayley_top)
        for block in blocks
        if block.alpha in argmax
    )
    report = AldousReport(
        shape=shape,
        gap_graph=gap_graph,
        gap_cayley=gap_cayley,
        per_alpha=tuple(blocks),
        verdict=verdict,
        argmax=argmax,
        route=ROUTE_COMPLETE_GRAPH if complete else ROUTE_RELAXED_BOUND,
        chain_verified=chain_verified,
        gap_multiplicity_graph=block_spectrum(standard, shape).multiplicity(top),
        gap_multiplicity_cayley=multiplicity_cayley,
        strict=argmax == (standard,),
    )
    logger.info(
        "%s: gap graph=%d cayley=%d verdict=%s argmax=%s",
        shape,
        gap_graph,
        gap_cayley,
        verdict,
        ", ".join(format_partition(alpha) for alpha in argmax),
    )
    return report


def admissible_table(alpha: CompositionLike, eta: ShapeLike) -> List[Tuple[AdmissibleTuple, int]]:
    """Rows ``(tuple, eigenvalue)`` of ``Adm(alpha, eta)`` in enumeration order."""

    a, shape = as_partition(alpha), as_shape(eta)
    _check_sizes(a, shape)
    return [(tup, b_value(a, tup)) for tup in enumerate_admissible(a, shape.eta)]


__all__ = [
    "BoundChain",
    "admissible_table",
    "b_bar",
    "b_bar_enumerated",
    "b_value",
    "block_spectrum",
    "cayley_spectrum",
    "complete_graph_block",
    "graph_spectrum",
    "inner_product_form",
    "lambda_max",
    "relaxed_chain",
    "restriction_n_minus_1",
    "spectral_gap_cayley",
    "spectral_gap_graph",
    "standard_representation",
    "verify_aldous",
]
