"""Report types shared by the matchers, the engine and the oracles."""

from typing import NamedTuple, Optional

MATCH = "match"
NO_MATCH = "no_match"
NO_ALIGNMENT = "no_alignment"


class MatchReport(NamedTuple):
    """Outcome of feeding one symbol to one stream.

    verdict: MATCH, NO_MATCH, or NO_ALIGNMENT (fewer symbols than the
        pattern so far, exact and k-mismatch modes only).
    end: absolute 0-based position of the symbol that produced the report.
    distance: exact distance for MATCH in the bounded modes, else None.
    """

    verdict: str
    end: int
    distance: Optional[int] = None


class SpaceReport(NamedTuple):
    """Measured word counts: shared pattern side plus one entry per stream."""

    pattern_words: int
    per_stream_words: tuple
    total_words: int


class OpsReport(NamedTuple):
    """Worst single-push primitive-operation count seen so far."""

    mode: str
    per_push_max_ops: int
