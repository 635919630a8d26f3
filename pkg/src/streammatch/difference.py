"""Bounded edit-distance matching, O(k) per symbol per stream.

Every k-th arrival spawns a bookkeeping child responsible for the k
outputs starting k arrivals later, so at most two children are live and
each gets 2k arrivals of lifetime. A child works in three stages over a
band of the distance table (all values saturate at k + 1):

  A: during the first half of its lead-in it recovers the column just
     before its spawn arrival, restricted to the 3k rows above the output
     row, by sweeping cost frontiers along diagonals; each frontier hop is
     one forward extension query against the region window.
  B: during the second half it rolls that column forward through its spawn
     block, a couple of columns per arrival, by the plain recurrence.
  C: for each owned arrival it computes one live column (now including the
     output row) and reports the bottom cell.

Cells above the band are pinned to k + 1; any alignment that would cross
them costs more than k, so reported values stay exact. The output row's
horizontal dependency enters through the previous arrival's reported
value, which the state carries between pushes.

Patterns short enough that the band would leave the table (m <= 3k + 2)
skip all of this and keep one plain distance column per stream, which is
the same O(k) space.
"""

from . import window as _w
from .exact import MATCH, NO_MATCH

STAGE_A = 0
STAGE_B = 1
STAGE_C = 2

_INVALID = -3  # diagonal has no cell within budget yet


class Child:
    """Resumable computation owning k consecutive outputs."""

    __slots__ = ("active", "start_i", "stage", "tainted", "r_a",
                 "lv_prev", "lv_cur", "a_e", "a_t", "a_quota",
                 "b_next_col", "col", "col2")

    def __init__(self, k, quota):
        self.active = False
        self.start_i = 0
        self.stage = STAGE_A
        self.tainted = False
        self.r_a = [0] * (3 * k)
        self.lv_prev = [_INVALID] * (5 * k)
        self.lv_cur = [_INVALID] * (5 * k)
        self.a_e = 0
        self.a_t = 0
        self.a_quota = quota
        self.b_next_col = 0
        self.col = [0] * (3 * k + 1)
        self.col2 = [0] * (3 * k + 1)

    def words(self):
        return (len(self.r_a) + len(self.lv_prev) + len(self.lv_cur)
                + len(self.col) + len(self.col2) + 10)


class DiffState:
    """Per-stream state: region window plus children, or a fallback column.

    Short patterns (m <= 3k + 2) do not fit the band geometry; they keep a
    plain distance column instead, which needs no window at all and stays
    within O(m) words.
    """

    __slots__ = ("window", "k", "m", "children", "prev_output", "fallback",
                 "ceil_a", "b_ticks", "ops_last", "ops_max", "oow_last",
                 "_tl")

    def __init__(self, ps, k):
        m = ps.m
        self.k = k
        self.m = m
        self.prev_output = k + 1
        self.ops_last = 0
        self.ops_max = 0
        self.oow_last = False
        self._tl = 0
        if m <= 3 * k + 2:
            self.window = None
            self.fallback = [min(k + 1, j + 1) for j in range(m)]
            self.children = ()
            self.ceil_a = 0
            self.b_ticks = 0
        else:
            self.window = _w.RegionWindow(5 * (k + 1))
            self.fallback = None
            self.ceil_a = (k + 1) // 2
            self.b_ticks = k - self.ceil_a
            total_units = 4 * k * (k + 1)
            quota = (total_units + self.ceil_a - 1) // self.ceil_a
            self.children = (Child(k, quota), Child(k, quota))

    @property
    def text_len(self):
        if self.window is None:
            return self._tl
        return self.window.text_len

    @property
    def overlap_max(self):
        return 0 if self.window is None else self.window.overlap_max

    def words(self):
        if self.fallback is not None:
            return len(self.fallback) + 8
        return (self.window.words() + 8
                + self.children[0].words() + self.children[1].words())


def _spawn(st, child, ps, i0):
    child.active = True
    child.start_i = i0
    child.tainted = False
    k = st.k
    k3 = 3 * k
    if i0 == 0:
        # the column before the first arrival is the base case directly
        base_row = st.m - k3 - 1
        cap = k + 1
        for idx in range(k3):
            v = base_row + idx + 1
            child.r_a[idx] = v if v < cap else cap
        _seed_b(st, child, ps)
    else:
        child.stage = STAGE_A
        child.a_e = 0
        child.a_t = 0
        for idx in range(k3):
            child.r_a[idx] = -1


def _seed_b(st, child, ps):
    """Move a child whose band seed is ready into the roll-forward stage."""
    k3 = 3 * st.k
    child.col[0:k3] = child.r_a
    child.stage = STAGE_B
    child.b_next_col = child.start_i
    if st.b_ticks == 0:
        _run_b(st, child, ps, st.k)


def _run_a(st, child, ps, units):
    """Advance the diagonal frontier sweep by at most `units` updates.

    lv_cur[t] holds, for diagonal d = base_d + t, the furthest row reached
    at the current cost level with every cell kept within the columns up
    to the child's seed column. Sentinel _INVALID means no cell yet.
    """
    w = st.window
    k = st.k
    m = st.m
    k5 = 5 * k
    ct = child.start_i - 1
    base_d = child.start_i - m + 1 - k
    e = child.a_e
    t = child.a_t
    prev = child.lv_prev
    cur = child.lv_cur
    r_a = child.r_a
    band_top = m - 3 * k - 1
    while units > 0 and e <= k:
        units -= 1
        w.ops += 1
        d = base_d + t
        best = _INVALID
        if e > 0:
            p = prev[t]
            if p >= -1:
                best = p + 1
            p = prev[t - 1]
            if p >= -1 and p > best:
                best = p
            p = prev[t + 1]
            if p >= -1 and p + 1 > best:
                best = p + 1
        if d >= 0:
            if best < -1:
                best = -1
        elif e >= -d and -1 - d > best:
            best = -1 - d
        if best < -1:
            cur[t] = _INVALID
        else:
            hi = ct - d
            if m - 1 < hi:
                hi = m - 1
            if hi < -1:
                cur[t] = _INVALID
            else:
                r0 = best if best < hi else hi
                if r0 < hi:
                    g = _w.lce(w, ps, r0 + d + 1, r0 + 1)
                    if g == _w.OUT_OF_WINDOW:
                        child.tainted = True
                        g = 0
                    if g > hi - r0:
                        g = hi - r0
                    r0 += g
                cur[t] = r0
                if k <= t < 4 * k:
                    rt = ct - d
                    idx = rt - band_top
                    if r_a[idx] < 0 and r0 >= rt:
                        r_a[idx] = e
        t += 1
        if t > k5 - 1 - e:
            e += 1
            t = e
            prev, cur = cur, prev
    child.a_e = e
    child.a_t = t
    child.lv_prev = prev
    child.lv_cur = cur
    if e > k:
        cap = k + 1
        for idx in range(3 * k):
            if r_a[idx] < 0:
                r_a[idx] = cap
        _seed_b(st, child, ps)


def _symbol_at(w, ps, pos):
    """Text symbol at an absolute position, from the retained regions.

    Returns -1 for a wildcard (symbol absent from the pattern) and -2 when
    the position is no longer retained.
    """
    w.ops += 1
    if pos < w.evicted_before or pos >= w.text_len:
        return -2
    seq = _w._locate(w, pos)
    slot = seq % w.cap if w.cap else seq
    pstart = w.pats[slot]
    if pstart == _w.WILDCARD:
        return -1
    return ps.pattern[pstart + (pos - w.starts[slot])]


def _run_b(st, child, ps, ncols):
    """Roll the band column forward by up to `ncols` columns."""
    w = st.window
    k = st.k
    k3 = 3 * k
    cap = k + 1
    pat = ps.pattern
    band_top = st.m - k3 - 1
    stop = child.start_i + k
    while ncols > 0 and child.b_next_col < stop:
        ncols -= 1
        c = child.b_next_col
        sym = _symbol_at(w, ps, c)
        if sym == -2:
            child.tainted = True
        left = child.col
        new = child.col2
        w.ops += k3
        above = cap  # boundary row just over the band
        diag = cap
        for r in range(k3):
            v = left[r] + 1
            t2 = above + 1
            if t2 < v:
                v = t2
            t3 = diag if sym == pat[band_top + r] else diag + 1
            if t3 < v:
                v = t3
            if v > cap:
                v = cap
            new[r] = v
            diag = left[r]
            above = v
        child.col = new
        child.col2 = left
        child.b_next_col = c + 1
    if child.b_next_col == stop:
        child.stage = STAGE_C


def _run_c(st, child, ps, sym):
    """Compute the live column for the current arrival; returns the output."""
    w = st.window
    k = st.k
    k3 = 3 * k
    cap = k + 1
    pat = ps.pattern
    band_top = st.m - k3 - 1
    left = child.col
    left[k3] = st.prev_output
    new = child.col2
    w.ops += k3 + 1
    above = cap
    diag = cap
    for r in range(k3):
        v = left[r] + 1
        t2 = above + 1
        if t2 < v:
            v = t2
        t3 = diag if sym == pat[band_top + r] else diag + 1
        if t3 < v:
            v = t3
        if v > cap:
            v = cap
        new[r] = v
        diag = left[r]
        above = v
    v = left[k3] + 1
    t2 = above + 1
    if t2 < v:
        v = t2
    t3 = diag if sym == pat[st.m - 1] else diag + 1
    if t3 < v:
        v = t3
    if v > cap:
        v = cap
    new[k3] = v
    child.col = new
    child.col2 = left
    return v


def push(st, ps, sym):
    """Feed one symbol; returns (verdict code, distance or -1)."""
    k = st.k
    cap = k + 1
    out = cap
    tainted = False
    if st.fallback is not None:
        st._tl += 1
        pat = ps.pattern
        col = st.fallback
        m = st.m
        diag = 0
        prev = 0
        for j in range(m):
            old = col[j]
            v = old + 1
            if prev + 1 < v:
                v = prev + 1
            t = diag if pat[j] == sym else diag + 1
            if t < v:
                v = t
            if v > cap:
                v = cap
            col[j] = v
            diag = old
            prev = v
        out = col[m - 1]
        st.ops_last = m + 1
    else:
        w = st.window
        ops0 = w.ops
        _w.append(w, ps, sym)
        i = w.text_len - 1
        if i % k == 0:
            _spawn(st, st.children[(i // k) & 1], ps, i)
        for child in st.children:
            if not child.active:
                continue
            rel = i - child.start_i
            if rel < st.ceil_a:
                if child.stage == STAGE_A:
                    _run_a(st, child, ps, child.a_quota)
            elif rel < k:
                if child.stage == STAGE_A:
                    _run_a(st, child, ps, 1 << 60)
                if child.stage == STAGE_B:
                    remaining = (child.start_i + k) - child.b_next_col
                    ticks = k - rel
                    _run_b(st, child, ps, (remaining + ticks - 1) // ticks)
            else:
                if child.stage == STAGE_A:
                    _run_a(st, child, ps, 1 << 60)
                if child.stage == STAGE_B:
                    _run_b(st, child, ps, 1 << 60)
                out = _run_c(st, child, ps, sym)
                tainted = child.tainted
                if rel == 2 * k - 1:
                    child.active = False
        st.ops_last = w.ops - ops0
    st.prev_output = out
    st.oow_last = tainted
    if st.ops_last > st.ops_max:
        st.ops_max = st.ops_last
    return (MATCH, out) if out <= k else (NO_MATCH, -1)
