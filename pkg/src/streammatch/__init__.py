"""Deterministic pattern matching over many interleaved byte streams.

One immutable preprocessing pass over the pattern is shared read-only by
every stream; each stream keeps only a few words (exact matching) or O(k)
words (k-mismatch / k-difference) of its own state. See the README for the
CLI and the instrumentation that witnesses those bounds.
"""

from .engine import Engine, UnknownStream, available_backends, load_backend
from .pattern import BuildError, PatternSpace, build_pattern_space
from .reports import (MATCH, NO_ALIGNMENT, NO_MATCH, MatchReport, OpsReport,
                      SpaceReport)

__version__ = "0.1.0"

__all__ = [
    "Engine", "UnknownStream", "BuildError", "PatternSpace",
    "build_pattern_space", "MatchReport", "SpaceReport", "OpsReport",
    "MATCH", "NO_MATCH", "NO_ALIGNMENT", "available_backends",
    "load_backend", "__version__",
]
