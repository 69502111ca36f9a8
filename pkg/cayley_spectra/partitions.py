"""Exact arithmetic on integer partitions and weak compositions.

Sequences are stored in canonical form: trailing zeros are dropped, so
``(3, 0, 2, 0, 0)`` and ``(3, 0, 2)`` are the same weak composition.  Rows are
indexed from 1 in the public helpers that take row numbers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import PartitionFormatError, ShapeError

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class WeakComposition:
    """A finite sequence of nonnegative integers, modulo trailing zeros."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(int(value) for value in self.parts)
        if any(value < 0 for value in values):
            raise ShapeError(f"weak composition entries must be nonnegative, got {values}")
        object.__setattr__(self, "parts", _strip(values))

    @property
    def n(self) -> int:
        """The integer this sequence is a composition of."""

        return sum(self.parts)

    def part(self, i: int) -> int:
        """Entry in row ``i`` (1-based); rows past the end read as 0."""

        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Partition(WeakComposition):
    """A nonincreasing sequence of positive integers."""

    def __post_init__(self) -> None:
        super().__post_init__()
        parts = self.parts
        if any(value == 0 for value in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"{parts} is not a partition (entries must be positive and nonincreasing)")


CompositionLike = Union[WeakComposition, Sequence[int]]


def _strip(values: Tuple[int, ...]) -> Tuple[int, ...]:
    end = len(values)
    while end and values[end - 1] == 0:
        end -= 1
    return values[:end]


def as_parts(value: CompositionLike) -> Tuple[int, ...]:
    """Canonical tuple of entries for a composition or a plain sequence."""

    if isinstance(value, WeakComposition):
        return value.parts
    return WeakComposition(tuple(value)).parts


def as_partition(value: CompositionLike) -> Partition:
    if isinstance(value, Partition):
        return value
    return Partition(as_parts(value))


def canonicalize(w: CompositionLike) -> WeakComposition:
    return WeakComposition(as_parts(w))


def conjugate(p: CompositionLike) -> Partition:
    """Transpose of the Young diagram: ``p'_s = |{j : p_j >= s}|``."""

    parts = as_partition(p).parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for row in parts if row >= s) for s in range(1, parts[0] + 1)))


def dominance_leq(a: CompositionLike, b: CompositionLike) -> bool:
    """True iff every prefix sum of ``b`` is at least the matching prefix sum of ``a``.

    Sums of ``a`` and ``b`` need not agree; compare ``n`` first when the
    partition-lattice meaning is wanted.
    """

    total_a = total_b = 0
    for x, y in zip_longest(as_parts(a), as_parts(b), fillvalue=0):
        total_a += x
        total_b += y
        if total_b < total_a:
            return False
    return True


def componentwise_leq(a: CompositionLike, b: CompositionLike) -> bool:
    return all(x <= y for x, y in zip_longest(as_parts(a), as_parts(b), fillvalue=0))


def subtract(a: CompositionLike, b: CompositionLike) -> WeakComposition:
    """Entrywise ``a - b``; requires ``b <= a`` componentwise."""

    if not componentwise_leq(b, a):
        raise ShapeError(f"{format_partition(b)} is not contained in {format_partition(a)}")
    return WeakComposition(tuple(x - y for x, y in zip_longest(as_parts(a), as_parts(b), fillvalue=0)))


def sort_to_partition(w: CompositionLike) -> Partition:
    return Partition(tuple(sorted((value for value in as_parts(w) if value), reverse=True)))


def q_value(w: CompositionLike) -> int:
    """``q_w = 1/2 * sum_i w_i (w_i - (2i - 1))``, defined for any weak composition."""

    twice = sum(value * (value - (2 * i - 1)) for i, value in enumerate(as_parts(w), start=1))
    half, remainder = divmod(twice, 2)
    if remainder:
        raise ArithmeticError(f"odd doubled q statistic {twice} for {as_parts(w)}")
    return half


def q_swap_gain(w: CompositionLike, j: int, k: int) -> int:
    """Change of ``q`` when entries ``j < k`` (1-based) are swapped: ``(w_j - w_k)(j - k)``."""

    if not 1 <= j < k:
        raise ShapeError(f"need 1 <= j < k, got j={j}, k={k}")
    comp = canonicalize(w)
    return (comp.part(j) - comp.part(k)) * (j - k)


def swap_entries(w: CompositionLike, j: int, k: int) -> WeakComposition:
    values = list(as_parts(w))
    values.extend([0] * (max(j, k) - len(values)))
    values[j - 1], values[k - 1] = values[k - 1], values[j - 1]
    return WeakComposition(tuple(values))


def box_move(w: CompositionLike, j: int, k: int) -> WeakComposition:
    """Move one box from row ``k`` to the higher row ``j`` (``j < k``, 1-based)."""

    if not 1 <= j < k:
        raise ShapeError(f"a box moves up: need 1 <= j < k, got j={j}, k={k}")
    values = list(as_parts(w))
    values.extend([0] * (k - len(values)))
    if values[k - 1] == 0:
        raise ShapeError(f"row {k} of {as_parts(w)} is empty")
    values[j - 1] += 1
    values[k - 1] -= 1
    return WeakComposition(tuple(values))


def is_dominance_cover(a: CompositionLike, b: CompositionLike) -> bool:
    """True iff ``b`` is obtained from ``a`` by a single :func:`box_move`."""

    diff = [y - x for x, y in zip_longest(as_parts(a), as_parts(b), fillvalue=0)]
    ups = [i for i, d in enumerate(diff) if d == 1]
    downs = [i for i, d in enumerate(diff) if d == -1]
    rest = [d for d in diff if d not in (0, 1, -1)]
    return not rest and len(ups) == 1 and len(downs) == 1 and ups[0] < downs[0]


def hook_lengths(p: CompositionLike) -> List[List[int]]:
    parts = as_partition(p).parts
    cols = conjugate(parts).parts
    return [[(row - j - 1) + (cols[j] - i - 1) + 1 for j in range(row)] for i, row in enumerate(parts)]


@lru_cache(maxsize=None)
def _dimension(parts: Tuple[int, ...]) -> int:
    product = 1
    for row in hook_lengths(parts):
        for hook in row:
            product *= hook
    return math.factorial(sum(parts)) // product


def dimension(p: CompositionLike) -> int:
    """Degree ``f_p`` of the irreducible representation, by the hook-length formula."""

    return _dimension(as_partition(p).parts)


def transposition_character(p: CompositionLike) -> int:
    """``chi^p`` on a transposition, from ``q_p = n(n-1)/(2 f_p) * chi^p``."""

    partition = as_partition(p)
    n = partition.n
    if n < 2:
        raise ShapeError("S_n has no transpositions for n < 2")
    numerator = 2 * q_value(partition) * dimension(partition)
    value, remainder = divmod(numerator, n * (n - 1))
    if remainder:
        raise ArithmeticError(f"non-integral character value for {partition.parts}")
    return value


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    found = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            found.append((first,) + rest)
    return tuple(found)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""

    if n < 1:
        raise ShapeError(f"n must be positive, got {n}")
    return [Partition(parts) for parts in _partitions(n, n)]


def enumerate_weak_compositions(total: int, length: int, bound: Sequence[int] | None = None) -> Iterable[Tuple[int, ...]]:
    """Length-``length`` tuples of nonnegative integers summing to ``total``.

    Entry ``i`` is capped by ``bound[i]`` when given.  Tuples come out in
    reverse lexicographic order.
    """

    if length == 0:
        if total == 0:
            yield ()
        return
    cap = total if bound is None else min(total, bound[0])
    rest_bound = None if bound is None else bound[1:]
    for first in range(cap, -1, -1):
        for rest in enumerate_weak_compositions(total - first, length - 1, rest_bound):
            yield (first,) + rest


def parse_composition(text: str) -> WeakComposition:
    """Parse ``4,2,1``; ``(4,2,1)`` and exponent shorthand ``5^2,2^3`` are accepted."""

    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1].strip()
    if not stripped:
        if text.strip() == "()":
            return WeakComposition(())
        raise PartitionFormatError("empty partition text")
    values: List[int] = []
    for token in stripped.split(","):
        match = _TOKEN.match(token.strip())
        if not match:
            raise PartitionFormatError(f"cannot parse {token.strip()!r} in {text!r}")
        value = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        values.extend([value] * repeat)
    return WeakComposition(tuple(values))


def parse_partition(text: str) -> Partition:
    composition = parse_composition(text)
    try:
        return Partition(composition.parts)
    except ShapeError as exc:
        raise PartitionFormatError(f"{text!r} is not a partition: entries must be nonincreasing") from exc


def format_partition(p: CompositionLike, exponents: bool = False) -> str:
    """Render as ``(4,2,1)``; with ``exponents`` runs are folded, e.g. ``(5^2,4,2^3)``."""

    parts = as_parts(p)
    if not exponents:
        return "(" + ",".join(str(value) for value in parts) + ")"
    tokens: List[str] = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        tokens.append(f"{parts[i]}^{run}" if run > 1 else str(parts[i]))
        i = j
    return "(" + ",".join(tokens) + ")"


__all__ = [
    "CompositionLike",
    "Partition",
    "WeakComposition",
    "as_partition",
    "as_parts",
    "box_move",
    "canonicalize",
    "componentwise_leq",
    "conjugate",
    "dimension",
    "dominance_leq",
    "enumerate_partitions",
    "enumerate_weak_compositions",
    "format_partition",
    "hook_lengths",
    "is_dominance_cover",
    "parse_composition",
    "parse_partition",
    "q_swap_gain",
    "q_value",
    "sort_to_partition",
    "subtract",
    "swap_entries",
    "transposition_character",
]
