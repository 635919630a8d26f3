"""Bounded Hamming-distance matching, O(k) per symbol per stream.

Each arrival is checked right to left with at most k + 1 reverse extension
queries against the region window, skipping one mismatching position after
each query. The window keeps the 4(k+1) most recent regions: a query can
cross at most three regions and each skipped position can sit in one more,
so a distance within the bound never needs anything older. A query that
does fall off the window therefore proves the distance exceeds k.
"""

from . import window as _w
from .exact import MATCH, NO_ALIGNMENT, NO_MATCH


class MismatchState:
    """Per-stream state: the region window plus instrumentation."""

    __slots__ = ("window", "k", "ops_last", "ops_max", "oow_last",
                 "queries_last", "involved_last", "involved_max")

    def __init__(self, k, cap=None):
        self.window = _w.RegionWindow(4 * (k + 1) if cap is None else cap)
        self.k = k
        self.ops_last = 0
        self.ops_max = 0
        self.oow_last = False
        self.queries_last = 0
        self.involved_last = 0
        self.involved_max = 0

    @property
    def text_len(self):
        return self.window.text_len

    @property
    def overlap_max(self):
        return self.window.overlap_max

    def words(self):
        return self.window.words() + 7


def push(st, ps, sym):
    """Feed one symbol; returns (verdict code, distance or -1)."""
    w = st.window
    ops0 = w.ops
    oow0 = w.oow_count
    _w.append(w, ps, sym)
    m = ps.m
    k = st.k
    result = (NO_ALIGNMENT, -1)
    queries = 0
    min_seq = w.next_seq - 1
    if w.text_len >= m:
        pos_t = w.text_len - 1
        pos_p = m - 1
        mism = 0
        while True:
            w.ops += 1
            queries += 1
            got = _w.lcs(w, ps, pos_t, pos_p)
            if w.last_min_seq < min_seq:
                min_seq = w.last_min_seq
            if got == _w.OUT_OF_WINDOW:
                result = (NO_MATCH, -1)
                break
            pos_t -= got
            pos_p -= got
            if pos_p < 0:
                result = (MATCH, mism)
                break
            mism += 1
            if mism > k:
                result = (NO_MATCH, -1)
                break
            pos_t -= 1
            pos_p -= 1
            if pos_p < 0:
                result = (MATCH, mism)
                break
    st.queries_last = queries
    st.involved_last = (w.next_seq - 1) - min_seq + 1 if queries else 0
    if st.involved_last > st.involved_max:
        st.involved_max = st.involved_last
    st.oow_last = w.oow_count > oow0
    st.ops_last = w.ops - ops0
    if st.ops_last > st.ops_max:
        st.ops_max = st.ops_last
    return result
