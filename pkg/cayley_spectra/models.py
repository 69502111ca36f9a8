"""Data models shared by the exact engine, the oracle and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import ShapeError
from .partitions import CompositionLike, Partition, as_partition, format_partition, parse_partition


@dataclass(frozen=True)
class MultipartiteShape:
    """The complete multipartite graph ``K_eta`` on the vertices ``1..n``.

    Vertices are split into consecutive blocks of sizes ``eta_1 >= ... >= eta_p``;
    two vertices are adjacent iff they lie in different blocks.
    """

    eta: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "eta", as_partition(self.eta))
        if not self.eta.parts:
            raise ShapeError("a multipartite shape needs at least one block")

    @classmethod
    def from_text(cls, text: str) -> "MultipartiteShape":
        return cls(parse_partition(text))

    @property
    def n(self) -> int:
        return self.eta.n

    @property
    def p(self) -> int:
        return len(self.eta)

    @property
    def edge_count(self) -> int:
        return (self.n ** 2 - sum(size ** 2 for size in self.eta.parts)) // 2

    @property
    def is_complete_graph(self) -> bool:
        return all(size == 1 for size in self.eta.parts)

    def vertex_blocks(self) -> List[Tuple[int, ...]]:
        """The blocks ``N_k``: ``eta_1 + ... + eta_{k-1} + 1`` up to ``eta_1 + ... + eta_k``."""

        blocks, start = [], 1
        for size in self.eta.parts:
            blocks.append(tuple(range(start, start + size)))
            start += size
        return blocks

    def block_of(self) -> Dict[int, int]:
        return {vertex: k for k, block in enumerate(self.vertex_blocks()) for vertex in block}

    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""

        block = self.block_of()
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if block[i] != block[j]
        ]

    def label(self) -> str:
        return ",".join(str(size) for size in self.eta.parts)

    def __str__(self) -> str:
        return "K" + format_partition(self.eta)


ShapeLike = Union[MultipartiteShape, CompositionLike]


def as_shape(value: ShapeLike) -> MultipartiteShape:
    if isinstance(value, MultipartiteShape):
        return value
    return MultipartiteShape(as_partition(value))


@dataclass(frozen=True)
class SpectrumMultiset:
    """Exact integer eigenvalues with positive multiplicities, sorted by eigenvalue."""

    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        merged: Dict[int, int] = {}
        for eigenvalue, multiplicity in self.entries:
            if int(multiplicity) < 1:
                raise ShapeError(f"multiplicity of {eigenvalue} must be positive, got {multiplicity}")
            merged[int(eigenvalue)] = merged.get(int(eigenvalue), 0) + int(multiplicity)
        object.__setattr__(self, "entries", tuple(sorted(merged.items())))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "SpectrumMultiset":
        return cls(tuple((value, count) for value, count in counts.items() if count))

    @property
    def total(self) -> int:
        return sum(multiplicity for _, multiplicity in self.entries)

    @property
    def max(self) -> int:
        if not self.entries:
            raise ValueError("empty spectrum has no maximum")
        return self.entries[-1][0]

    @property
    def min(self) -> int:
        if not self.entries:
            raise ValueError("empty spectrum has no minimum")
        return self.entries[0][0]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def distinct(self) -> Tuple[int, ...]:
        return tuple(value for value, _ in self.entries)

    def multiplicity(self, eigenvalue: int) -> int:
        return self.as_dict().get(eigenvalue, 0)

    def eigenvalues(self) -> List[int]:
        """All eigenvalues with repetition, nondecreasing."""

        return [value for value, multiplicity in self.entries for _ in range(multiplicity)]

    def trace(self) -> int:
        return sum(value * multiplicity for value, multiplicity in self.entries)

    def scaled(self, factor: int) -> "SpectrumMultiset":
        """Every multiplicity multiplied by ``factor``."""

        return SpectrumMultiset(tuple((value, multiplicity * factor) for value, multiplicity in self.entries))

    def reflected(self, shift: int) -> "SpectrumMultiset":
        """The multiset ``{shift - value}``; maps ``W(G)`` eigenvalues to Laplacian ones."""

        return SpectrumMultiset(tuple((shift - value, multiplicity) for value, multiplicity in self.entries))

    def union(self, other: "SpectrumMultiset") -> "SpectrumMultiset":
        return SpectrumMultiset(self.entries + other.entries)

    def to_payload(self) -> List[List[str]]:
        return [[str(value), str(multiplicity)] for value, multiplicity in self.entries]

    @classmethod
    def from_payload(cls, payload: Sequence[Sequence[str]]) -> "SpectrumMultiset":
        return cls(tuple((int(value), int(multiplicity)) for value, multiplicity in payload))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{value}:{multiplicity}" for value, multiplicity in self.entries) + "}"


@dataclass(frozen=True)
class BlockReport:
    """``lambda_max`` and spectrum of one irreducible block ``T^alpha[W(K_eta)]``."""

    alpha: Partition
    lambda_max: int
    spectrum: SpectrumMultiset
    b_bar: Optional[int] = None

    def to_payload(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "alpha": list(self.alpha.parts),
            "lambda_max": str(self.lambda_max),
            "spectrum": self.spectrum.to_payload(),
        }
        if self.b_bar is not None:
            payload["b_bar"] = str(self.b_bar)
        return payload

    @classmethod
    def from_payload(cls, payload: Mapping[str, object]) -> "BlockReport":
        b_bar = payload.get("b_bar")
        return cls(
            alpha=Partition(tuple(payload["alpha"])),  # type: ignore[arg-type]
            lambda_max=int(payload["lambda_max"]),  # type: ignore[arg-type]
            spectrum=SpectrumMultiset.from_payload(payload["spectrum"]),  # type: ignore[arg-type]
            b_bar=None if b_bar is None else int(b_bar),  # type: ignore[arg-type]
        )


ROUTE_COMPLETE_GRAPH = "complete_graph"
ROUTE_RELAXED_BOUND = "relaxed_bound"


@dataclass(frozen=True)
class AldousReport:
    """Outcome of comparing the spectral gaps of ``K_eta`` and its Cayley graph.

    ``verdict`` asserts only equality of the gap values.  ``strict`` records
    whether ``(n-1,1)`` is the unique maximiser, i.e. whether the gap also has
    the same multiplicity on both sides.
    """

    shape: MultipartiteShape
    gap_graph: int
    gap_cayley: int
    per_alpha: Tuple[BlockReport, ...]
    verdict: bool
    argmax: Tuple[Partition, ...] = ()
    route: str = ROUTE_RELAXED_BOUND
    chain_verified: bool = True
    gap_multiplicity_graph: int = 0
    gap_multiplicity_cayley: int = 0
    strict: bool = False

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def edge_count(self) -> int:
        return self.shape.edge_count

    def block(self, alpha: CompositionLike) -> BlockReport:
        wanted = as_partition(alpha)
        for block in self.per_alpha:
            if block.alpha == wanted:
                return block
        raise KeyError(format_partition(wanted))

    def to_payload(self) -> Dict[str, object]:
        return {
            "eta": list(self.shape.eta.parts),
            "n": self.n,
            "edge_count": self.edge_count,
            "gap_graph": str(self.gap_graph),
            "gap_cayley": str(self.gap_cayley),
            "verdict": self.verdict,
            "strict": self.strict,
            "route": self.route,
            "chain_verified": self.chain_verified,
            "argmax": [list(alpha.parts) for alpha in self.argmax],
            "gap_multiplicity_graph": str(self.gap_multiplicity_graph),
            "gap_multiplicity_cayley": str(self.gap_multiplicity_cayley),
            "blocks": [block.to_payload() for block in self.per_alpha],
        }

    @classmethod
    def from_payload(cls, payload: Mapping[str, object]) -> "AldousReport":
        """Rehydrate a report from :meth:`to_payload` output."""

        return cls(
            shape=MultipartiteShape(Partition(tuple(payload["eta"]))),  # type: ignore[arg-type]
            gap_graph=int(payload["gap_graph"]),  # type: ignore[arg-type]
            gap_cayley=int(payload["gap_cayley"]),  # type: ignore[arg-type]
            per_alpha=tuple(BlockReport.from_payload(item) for item in payload["blocks"]),  # type: ignore[union-attr]
            verdict=bool(payload["verdict"]),
            argmax=tuple(Partition(tuple(item)) for item in payload.get("argmax", [])),  # type: ignore[union-attr]
            route=str(payload.get("route", ROUTE_RELAXED_BOUND)),
            chain_verified=bool(payload.get("chain_verified", True)),
            gap_multiplicity_graph=int(payload.get("gap_multiplicity_graph", 0)),  # type: ignore[arg-type]
            gap_multiplicity_cayley=int(payload.get("gap_multiplicity_cayley", 0)),  # type: ignore[arg-type]
            strict=bool(payload.get("strict", False)),
        )


def render_json(payload: object) -> str:
    """Stable JSON rendering: parsing and re-rendering gives the same bytes."""

    return json.dumps(payload, indent=2, sort_keys=True)


__all__ = [
    "AldousReport",
    "BlockReport",
    "MultipartiteShape",
    "ROUTE_COMPLETE_GRAPH",
    "ROUTE_RELAXED_BOUND",
    "ShapeLike",
    "SpectrumMultiset",
    "as_shape",
    "render_json",
]
