"""Littlewood-Richardson tableaux, coefficients and admissible tuples.

An LR tableau of shape ``alpha/beta`` is a semistandard filling whose reading
word (rows read right to left, top row first) is a lattice word.  The number
of LR tableaux with content ``gamma`` is ``c^alpha_{beta,gamma}``, the
multiplicity of ``[beta] x [gamma]`` in ``[alpha]`` restricted to a Young
subgroup ``S_j x S_k``.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import ShapeError
from .partitions import (
    CompositionLike,
    Partition,
    WeakComposition,
    as_partition,
    as_parts,
    componentwise_leq,
    dimension,
    enumerate_partitions,
    enumerate_weak_compositions,
    format_partition,
    q_value,
    sort_to_partition,
    subtract,
)

logger = logging.getLogger(__name__)

ReadingWord = Tuple[int, ...]


@dataclass(frozen=True)
class SkewShape:
    """The boxes of ``outer`` that are not boxes of ``inner``."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not componentwise_leq(self.inner, self.outer):
            raise ShapeError(
                f"{format_partition(self.inner)} is not contained in {format_partition(self.outer)}"
            )
        if self.box_count < 1:
            raise ShapeError(f"skew shape {self} has no boxes")

    @property
    def box_count(self) -> int:
        return self.outer.n - self.inner.n

    @property
    def inner_rows(self) -> Tuple[int, ...]:
        """Inner row lengths padded with zeros to the length of ``outer``."""

        return tuple(self.inner.part(i) for i in range(1, len(self.outer) + 1))

    @property
    def row_lengths(self) -> Tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.outer.parts, self.inner_rows))

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


@dataclass(frozen=True)
class SkewTableau:
    """A semistandard filling of a skew shape; ``rows`` are read left to right."""

    shape: SkewShape
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = self.shape.row_lengths
        if tuple(len(row) for row in rows) != lengths:
            raise ShapeError(f"row lengths {[len(r) for r in rows]} do not fit {self.shape}")
        if any(v < 1 for row in rows for v in row):
            raise ShapeError("tableau entries must be positive integers")
        for row in rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise ShapeError(f"row {row} is not nondecreasing")
        inner = self.shape.inner_rows
        for r in range(1, len(rows)):
            for col, value in enumerate(rows[r], start=inner[r]):
                if col >= inner[r - 1]:
                    above = rows[r - 1][col - inner[r - 1]]
                    if value <= above:
                        raise ShapeError(f"column {col + 1} is not strictly increasing at row {r + 1}")

    @property
    def content(self) -> WeakComposition:
        return content(reading_word(self))

    def render(self) -> str:
        return render_tableau(self)


@dataclass(frozen=True)
class AdmissibleTuple:
    """A p-tuple of partitions (``Adm``) or weak compositions (``Adm*``).

    ``coefficient`` is the multi-LR coefficient for ``Adm`` members and 1 for
    ``Adm*`` members.
    """

    parts: Tuple[WeakComposition, ...]
    coefficient: int = 1

    def __len__(self) -> int:
        return len(self.parts)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(part.n for part in self.parts)

    def q_sum(self) -> int:
        return sum(q_value(part) for part in self.parts)

    def dimension_product(self) -> int:
        product = 1
        for part in self.parts:
            product *= dimension(as_partition(part))
        return product

    def multiplicity(self) -> int:
        """Dimension contributed to the restriction: coefficient times the product of degrees."""

        return self.coefficient * self.dimension_product()

    def __str__(self) -> str:
        return " ".join(format_partition(part) for part in self.parts)


def is_lattice_word(w: Sequence[int]) -> bool:
    counts: Counter = Counter()
    for value in w:
        if value < 1:
            return False
        counts[value] += 1
        if value > 1 and counts[value] > counts[value - 1]:
            return False
    return True


def content(w: Sequence[int]) -> WeakComposition:
    """``content_i`` is the number of occurrences of ``i`` in ``w``."""

    if not w:
        return WeakComposition(())
    counts = Counter(w)
    return WeakComposition(tuple(counts.get(i, 0) for i in range(1, max(w) + 1)))


def reading_word(t: SkewTableau) -> ReadingWord:
    """Flip each row and concatenate the rows from top to bottom."""

    return tuple(value for row in t.rows for value in reversed(row))


def render_tableau(t: SkewTableau) -> str:
    """Row display with ``:`` for each erased inner box, e.g. ``::112``."""

    wide = any(value > 9 for row in t.rows for value in row)
    lines = []
    for inner, row in zip(t.shape.inner_rows, t.rows):
        if wide:
            lines.append(" ".join([":"] * inner + [str(v) for v in row]))
        else:
            lines.append(":" * inner + "".join(str(v) for v in row))
    return "\n".join(lines)


def _lr_rows(outer: Tuple[int, ...], inner: Tuple[int, ...], target: Optional[Tuple[int, ...]]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    # Cells in reading order; every prefix of the search is a lattice word.
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner[r] - 1, -1)]
    grid = [[0] * length for length in outer]
    counts = [0] * (len(cells) + 2)

    def search(index: int, largest: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if index == len(cells):
            yield tuple(tuple(grid[r][inner[r]:outer[r]]) for r in range(len(outer)))
            return
        r, c = cells[index]
        upper = largest + 1
        if c + 1 < outer[r]:
            upper = min(upper, grid[r][c + 1])
        lower = grid[r - 1][c] + 1 if r > 0 and c >= inner[r - 1] else 1
        for value in range(lower, upper + 1):
            if value > 1 and counts[value] >= counts[value - 1]:
                continue
            if target is not None and (value > len(target) or counts[value] >= target[value - 1]):
                continue
            grid[r][c] = value
            counts[value] += 1
            yield from search(index + 1, max(largest, value))
            counts[value] -= 1
        grid[r][c] = 0

    yield from search(0, 0)


def enumerate_lr_tableaux(shape: SkewShape, content_filter: Optional[CompositionLike] = None) -> List[SkewTableau]:
    """All LR tableaux of ``shape``, lexicographic by reading word."""

    target = None
    if content_filter is not None:
        target = as_parts(content_filter)
        if sum(target) != shape.box_count:
            return []
    return [
        SkewTableau(shape=shape, rows=rows)
        for rows in _lr_rows(shape.outer.parts, shape.inner_rows, target)
    ]


@lru_cache(maxsize=None)
def _skew_items(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    if outer == inner:
        return (((), 1),)
    logger.debug("enumerating LR tableaux of %s/%s", outer, inner)
    shape = SkewShape(Partition(outer), Partition(inner))
    counts: Counter = Counter()
    for rows in _lr_rows(outer, shape.inner_rows, None):
        word = [value for row in rows for value in reversed(row)]
        counts[content(word).parts] += 1
    return tuple(sorted(counts.items(), reverse=True))


def skew_decomposition(alpha: CompositionLike, beta: CompositionLike) -> Dict[Partition, int]:
    """Map each content ``gamma`` to ``c^alpha_{beta,gamma}`` (positive entries only)."""

    outer, inner = as_partition(alpha), as_partition(beta)
    if not componentwise_leq(inner, outer):
        return {}
    return {Partition(gamma): count for gamma, count in _skew_items(outer.parts, inner.parts)}


def lr_coefficient(alpha: CompositionLike, beta: CompositionLike, gamma: CompositionLike) -> int:
    a, b, g = as_partition(alpha), as_partition(beta), as_partition(gamma)
    if b.n + g.n != a.n:
        raise ShapeError(f"|beta| + |gamma| = {b.n + g.n} differs from |alpha| = {a.n}")
    if not componentwise_leq(b, a):
        return 0
    return dict(_skew_items(a.parts, b.parts)).get(g.parts, 0)


@lru_cache(maxsize=None)
def _multi_lr(alpha: Tuple[int, ...], betas: Tuple[Tuple[int, ...], ...]) -> int:
    if len(betas) == 1:
        return 1 if betas[0] == alpha else 0
    if len(betas) == 2:
        return lr_coefficient(alpha, betas[0], betas[1])
    head = sum(sum(beta) for beta in betas[:-1])
    total = 0
    for delta in enumerate_partitions(head):
        if not componentwise_leq(delta, alpha):
            continue
        outer = lr_coefficient(alpha, delta, betas[-1])
        if outer:
            total += outer * _multi_lr(delta.parts, betas[:-1])
    return total


def multi_lr_coefficient(alpha: CompositionLike, betas: Sequence[CompositionLike]) -> int:
    """``c^alpha_{beta^1..beta^p}`` by recursion on the last factor."""

    a = as_partition(alpha)
    parts = tuple(as_partition(beta).parts for beta in betas)
    if not parts:
        raise ShapeError("at least one partition is required")
    if sum(sum(p) for p in parts) != a.n:
        raise ShapeError(f"sizes of {[format_partition(p) for p in parts]} do not add up to |alpha| = {a.n}")
    return _multi_lr(a.parts, parts)


@lru_cache(maxsize=None)
def _restriction(alpha: Tuple[int, ...], sizes: Tuple[int, ...]) -> Tuple[Tuple[Tuple[Tuple[int, ...], ...], int], ...]:
    if len(sizes) == 1:
        return (((alpha,), 1),)
    head = sum(sizes[:-1])
    found: Dict[Tuple[Tuple[int, ...], ...], int] = defaultdict(int)
    for delta in enumerate_partitions(head):
        if not componentwise_leq(delta, alpha):
            continue
        for gamma, outer in _skew_items(alpha, delta.parts):
            for prefix, inner in _restriction(delta.parts, sizes[:-1]):
                found[prefix + (gamma,)] += outer * inner
    return tuple(sorted(found.items(), reverse=True))


def _check_sizes(alpha: Partition, eta: Partition) -> None:
    if alpha.n != eta.n:
        raise ShapeError(f"|alpha| = {alpha.n} differs from |eta| = {eta.n}")
    if not eta.parts:
        raise ShapeError("eta must have at least one block")


def enumerate_admissible(alpha: CompositionLike, eta: CompositionLike) -> List[AdmissibleTuple]:
    """``Adm(alpha, eta)`` with multi-LR coefficients, in reverse lexicographic order."""

    a, e = as_partition(alpha), as_partition(eta)
    _check_sizes(a, e)
    return [
        AdmissibleTuple(parts=tuple(Partition(p) for p in tup), coefficient=coefficient)
        for tup, coefficient in _restriction(a.parts, e.parts)
    ]


def iter_admissible_star(alpha: CompositionLike, eta: CompositionLike) -> Iterator[AdmissibleTuple]:
    a, e = as_partition(alpha), as_partition(eta)
    _check_sizes(a, e)
    rows = len(a)

    def split(index: int, remaining: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if index == len(e) - 1:
            yield (remaining,)
            return
        for gamma in enumerate_weak_compositions(e.parts[index], rows, remaining):
            rest = tuple(x - y for x, y in zip(remaining, gamma))
            for tail in split(index + 1, rest):
                yield (gamma,) + tail

    for tup in split(0, a.parts):
        yield AdmissibleTuple(parts=tuple(WeakComposition(g) for g in tup))


def enumerate_admissible_star(alpha: CompositionLike, eta: CompositionLike) -> List[AdmissibleTuple]:
    """``Adm*(alpha, eta)``: weak compositions ``gamma^i`` of ``eta_i`` summing to ``alpha``."""

    return list(iter_admissible_star(alpha, eta))


def relax_admissible(alpha: CompositionLike, betas: Sequence[CompositionLike]) -> AdmissibleTuple:
    """An ``Adm*`` tuple whose q-sum does not exceed that of the admissible ``betas``.

    For two factors this is ``(beta, alpha - beta)``; longer tuples pick an
    intermediate ``delta`` with both coefficients of the recursion positive.
    """

    a = as_partition(alpha)
    parts = [as_partition(beta) for beta in betas]
    if multi_lr_coefficient(a, parts) == 0:
        raise ShapeError(f"{[format_partition(p) for p in parts]} is not admissible for {format_partition(a)}")
    if len(parts) == 1:
        return AdmissibleTuple(parts=(a,))
    if len(parts) == 2:
        return AdmissibleTuple(parts=(parts[0], subtract(a, parts[0])))
    head = sum(p.n for p in parts[:-1])
    for delta in enumerate_partitions(head):
        if not componentwise_leq(delta, a):
            continue
        if lr_coefficient(a, delta, parts[-1]) and multi_lr_coefficient(delta, parts[:-1]):
            prefix = relax_admissible(delta, parts[:-1])
            return AdmissibleTuple(parts=prefix.parts + (subtract(a, delta),))
    raise AssertionError("positive multi-LR coefficient without a positive term")  # pragma: no cover


def reduce_equal_rows(alpha: CompositionLike, beta: CompositionLike) -> Tuple[Partition, Partition]:
    """Drop the rows where ``alpha_i == beta_i``; LR counts are unchanged."""

    shape = SkewShape(as_partition(alpha), as_partition(beta))
    kept = [(a, b) for a, b in zip(shape.outer.parts, shape.inner_rows) if a != b]
    return Partition(tuple(a for a, _ in kept)), Partition(tuple(b for _, b in kept))


def _blocks(w: Sequence[int], delta: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    blocks, start = [], 0
    for size in delta:
        blocks.append(tuple(w[start:start + size]))
        start += size
    return blocks


def _positive_composition(delta: CompositionLike) -> Tuple[int, ...]:
    parts = as_parts(delta)
    if any(value == 0 for value in parts):
        raise ShapeError(f"{parts} has zero entries; drop equal rows first (reduce_equal_rows)")
    return parts


def is_delta_nonincreasing(w: Sequence[int], delta: CompositionLike) -> bool:
    """Nonincreasing on every block of ``delta``; short words are padded with 1's."""

    parts = _positive_composition(delta)
    if len(w) > sum(parts):
        return False
    padded = tuple(w) + (1,) * (sum(parts) - len(w))
    return all(
        all(x >= y for x, y in zip(block, block[1:]))
        for block in _blocks(padded, parts)
    )


def in_omega(w: Sequence[int], delta: CompositionLike) -> bool:
    parts = _positive_composition(delta)
    return len(w) == sum(parts) and is_lattice_word(w) and is_delta_nonincreasing(w, parts)


def _block_starts(parts: Tuple[int, ...]) -> set:
    starts, position = set(), 0
    for size in parts:
        starts.add(position)
        position += size
    return starts


def enumerate_omega(delta: CompositionLike) -> List[ReadingWord]:
    """Every lattice word that is nonincreasing on the blocks of ``delta``, lexicographically."""

    parts = _positive_composition(delta)
    starts = _block_starts(parts)
    length = sum(parts)
    counts = [0] * (length + 2)
    word: List[int] = []
    found: List[ReadingWord] = []

    def search(largest: int) -> None:
        if len(word) == length:
            found.append(tuple(word))
            return
        upper = largest + 1 if len(word) in starts else word[-1]
        for value in range(1, upper + 1):
            if value > 1 and counts[value] >= counts[value - 1]:
                continue
            word.append(value)
            counts[value] += 1
            search(max(largest, value))
            counts[value] -= 1
            word.pop()

    search(0)
    return found


def minimal_sequence(delta: CompositionLike) -> ReadingWord:
    """Greedy word in ``Omega_delta``: each entry is the largest value that keeps it valid."""

    parts = _positive_composition(delta)
    starts = _block_starts(parts)
    counts = [0] * (sum(parts) + 2)
    word: List[int] = []
    for position in range(sum(parts)):
        upper = max(word, default=0) + 1 if position in starts else word[-1]
        value = upper
        while value > 1 and counts[value] >= counts[value - 1]:
            value -= 1
        word.append(value)
        counts[value] += 1
    return tuple(word)


def running_multiplicity(w: Sequence[int]) -> Tuple[int, ...]:
    """``nu_i`` is the number of ``j <= i`` with ``w_j == w_i``."""

    seen: Counter = Counter()
    result = []
    for value in w:
        seen[value] += 1
        result.append(seen[value])
    return tuple(result)


def minimal_content(alpha: CompositionLike, beta: CompositionLike) -> Partition:
    """The dominance-minimal content of an LR tableau of shape ``alpha/beta``."""

    a, b = as_partition(alpha), as_partition(beta)
    if not componentwise_leq(b, a):
        raise ShapeError(
            f"{format_partition(b)} is not contained in {format_partition(a)}; every LR coefficient vanishes"
        )
    if b.n >= a.n:
        raise ShapeError("minimal content needs |beta| < |alpha|")
    return sort_to_partition(subtract(a, b))


def reconstruct_tableau(omega: Sequence[int], alpha: CompositionLike, beta: CompositionLike) -> SkewTableau:
    """Rebuild the LR tableau whose reading word is ``omega``.

    ``omega`` is cut into the nonempty rows of ``alpha/beta`` and each piece is
    flipped back.  Rows with ``alpha_i == beta_i`` stay empty.  Words of
    ``Omega_delta`` whose disassembly breaks column strictness are rejected.
    """

    shape = SkewShape(as_partition(alpha), as_partition(beta))
    lengths = shape.row_lengths
    reduced = tuple(length for length in lengths if length)
    if not in_omega(omega, reduced):
        raise ShapeError(f"{tuple(omega)} is not a lattice word nonincreasing on the rows of {shape}")
    pieces = iter(_blocks(tuple(omega), reduced))
    rows = tuple(tuple(reversed(next(pieces))) if length else () for length in lengths)
    return SkewTableau(shape=shape, rows=rows)


def is_good_sequence(omega: Sequence[int], alpha: CompositionLike, beta: CompositionLike) -> bool:
    """Whether ``omega`` is the reading word of an LR tableau of shape ``alpha/beta``."""

    try:
        reconstruct_tableau(omega, alpha, beta)
    except ShapeError:
        return False
    return True


__all__ = [
    "AdmissibleTuple",
    "ReadingWord",
    "SkewShape",
    "SkewTableau",
    "content",
    "enumerate_admissible",
    "enumerate_admissible_star",
    "enumerate_lr_tableaux",
    "enumerate_omega",
    "in_omega",
    "is_delta_nonincreasing",
    "is_good_sequence",
    "is_lattice_word",
    "iter_admissible_star",
    "lr_coefficient",
    "minimal_content",
    "minimal_sequence",
    "multi_lr_coefficient",
    "reading_word",
    "reconstruct_tableau",
    "reduce_equal_rows",
    "relax_admissible",
    "render_tableau",
    "running_multiplicity",
    "skew_decomposition",
]
