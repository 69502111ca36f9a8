"""Exact spectra of Cayley graphs of S_n generated by complete multipartite graphs."""

from .config import EngineConfig
from .errors import CapExceededError, CayleySpectraError, ShapeError
from .models import AldousReport, MultipartiteShape, SpectrumMultiset
from .partitions import Partition, WeakComposition, parse_partition
from .spectra import (
    block_spectrum,
    cayley_spectrum,
    lambda_max,
    spectral_gap_cayley,
    spectral_gap_graph,
    verify_aldous,
)

__all__ = [
    "AldousReport",
    "CapExceededError",
    "CayleySpectraError",
    "EngineConfig",
    "MultipartiteShape",
    "Partition",
    "ShapeError",
    "SpectrumMultiset",
    "WeakComposition",
    "block_spectrum",
    "cayley_spectrum",
    "lambda_max",
    "parse_partition",
    "spectral_gap_cayley",
    "spectral_gap_graph",
    "verify_aldous",
]
