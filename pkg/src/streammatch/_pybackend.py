"""Pure-Python kernel backend.

The reference implementation of the per-symbol hot paths. The compiled
backend in _speedups mirrors this module operation for operation,
including the instrumentation counters, so the two are interchangeable
and diffable.
"""

from . import difference as _difference
from . import exact as _exact
from . import mismatch as _mismatch
from . import window as _window

NAME = "pure"

OUT_OF_WINDOW = _window.OUT_OF_WINDOW

MATCH = _exact.MATCH
NO_MATCH = _exact.NO_MATCH
NO_ALIGNMENT = _exact.NO_ALIGNMENT


def new_exact(ps):
    return _exact.ExactState()


def new_mismatch(ps, k):
    return _mismatch.MismatchState(k)


def new_diff(ps, k):
    return _difference.DiffState(ps, k)


def push_exact(state, ps, sym):
    return _exact.push(state, ps, sym)


def push_mismatch(state, ps, sym):
    return _mismatch.push(state, ps, sym)


def push_diff(state, ps, sym):
    return _difference.push(state, ps, sym)


def new_window(ps, cap):
    return _window.RegionWindow(cap)


def window_append(w, ps, sym):
    _window.append(w, ps, sym)


def window_lce(w, ps, i1, j):
    return _window.lce(w, ps, i1, j)


def window_lcs(w, ps, i1, j):
    return _window.lcs(w, ps, i1, j)


def window_regions(w):
    return w.regions()
