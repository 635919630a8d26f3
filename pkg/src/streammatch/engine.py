"""Multiplexes any number of streams over one shared pattern space."""

import os

from . import _pybackend
from .pattern import build_pattern_space
from .reports import (MATCH, NO_ALIGNMENT, NO_MATCH, MatchReport, OpsReport,
                      SpaceReport)


class UnknownStream(KeyError):
    """Raised when a push names a stream id that does not exist."""


_VERDICTS = {0: MATCH, 1: NO_MATCH, 2: NO_ALIGNMENT}


def available_backends():
    """Names of usable kernel backends, fastest first."""
    names = []
    try:
        from . import _speedups  # noqa: F401
        names.append("c")
    except ImportError:
        pass
    names.append("pure")
    return names


def load_backend(name=None):
    """Resolve a backend module by name; None picks the best available."""
    if name in (None, "auto"):
        if os.environ.get("STREAMMATCH_PURE"):
            return _pybackend
        try:
            from . import _speedups
            return _speedups
        except ImportError:
            return _pybackend
    if name == "pure":
        return _pybackend
    if name == "c":
        from . import _speedups
        return _speedups
    raise ValueError("unknown backend: %r" % (name,))


class Engine:
    """One pattern, one mode, many independent streams.

    The pattern space is built once and shared read-only; each stream owns
    a small mutable state of the mode's kind. Pushes to different streams
    never interact, so per-stream report sequences are identical to what a
    single-stream run would produce.
    """

    def __init__(self, pattern, mode="exact", k=0, backend=None):
        self.ps = build_pattern_space(pattern, mode, k)
        self.mode = mode
        self.k = k
        self.backend = load_backend(backend)
        self._states = {}
        self._next_sid = 0
        self._max_ops = 0
        if mode == "exact":
            self._new = self.backend.new_exact
            self._push = self.backend.push_exact
        elif mode == "mismatch":
            self._new = lambda ps: self.backend.new_mismatch(ps, k)
            self._push = self.backend.push_mismatch
        else:
            self._new = lambda ps: self.backend.new_diff(ps, k)
            self._push = self.backend.push_diff

    @property
    def backend_name(self):
        return self.backend.NAME

    def add_stream(self):
        """Create a new stream; ids are dense and never reused."""
        sid = self._next_sid
        self._next_sid = sid + 1
        self._states[sid] = self._new(self.ps)
        return sid

    def remove_stream(self, sid):
        """Drop a stream and free its text-side state."""
        try:
            del self._states[sid]
        except KeyError:
            raise UnknownStream(sid) from None

    def push(self, sid, sym):
        """Feed one symbol to one stream and report the outcome."""
        try:
            state = self._states[sid]
        except KeyError:
            raise UnknownStream(sid) from None
        if not isinstance(sym, int):
            sym = sym[0] if isinstance(sym, (bytes, bytearray)) else ord(sym)
        code, dist = self._push(state, self.ps, sym)
        if state.ops_last > self._max_ops:
            self._max_ops = state.ops_last
        return MatchReport(_VERDICTS[code], state.text_len - 1,
                           dist if dist >= 0 else None)

    def stream_ids(self):
        return sorted(self._states)

    def space_report(self):
        """Measured word counts for the pattern side and every stream."""
        pattern_words = self.ps.words()
        per_stream = tuple(self._states[sid].words()
                           for sid in sorted(self._states))
        return SpaceReport(pattern_words, per_stream,
                           pattern_words + sum(per_stream))

    def ops_report(self):
        """Worst single-push primitive-op count over all pushes so far."""
        return OpsReport(self.mode, self._max_ops)

    def stream_diagnostics(self, sid):
        """Instrumentation snapshot for one stream's most recent push."""
        try:
            state = self._states[sid]
        except KeyError:
            raise UnknownStream(sid) from None
        return {
            "text_len": state.text_len,
            "ops_last_push": state.ops_last,
            "ops_max": state.ops_max,
            "used_oow": state.oow_last,
            "overlap_max": state.overlap_max,
            "words": state.words(),
        }
