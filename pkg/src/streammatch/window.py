"""Per-stream text state: a bounded ring of matched-substring regions.

The recent text is stored as contiguous regions (text_start, pat_start,
length), each asserting that the text piece equals a pattern piece.
Symbols absent from the pattern get WILDCARD regions of length 1 that no
comparison can cross. Appending is greedy: the last region is extended
whenever the grown piece still occurs in the pattern, so the produced
cover uses the fewest possible regions. When a capacity is set, the oldest
region is dropped once the ring is full; queries that would need dropped
history report OUT_OF_WINDOW instead of guessing.

Instrumentation lives on the window: `ops` counts primitive steps (probes,
region hops, extension queries, bisection steps), `oow_count` counts
out-of-window results, `overlap_max` tracks the most regions any single
query extent ever crossed. The compiled backend mirrors the counting
points one for one.
"""

from .pattern import WILDCARD

OUT_OF_WINDOW = -1


class RegionWindow:
    """Ring of regions covering the most recent text of one stream."""

    __slots__ = ("cap", "starts", "pats", "lens", "head_seq", "next_seq",
                 "text_len", "evicted_before", "locus_state", "locus_len",
                 "ops", "oow_count", "overlap_max", "last_min_seq",
                 "last_overlap")

    def __init__(self, cap):
        # cap == 0 means unbounded (diagnostics and tests only)
        self.cap = cap
        if cap:
            self.starts = [0] * cap
            self.pats = [0] * cap
            self.lens = [0] * cap
        else:
            self.starts = []
            self.pats = []
            self.lens = []
        self.head_seq = 0
        self.next_seq = 0
        self.text_len = 0
        self.evicted_before = 0
        self.locus_state = -1
        self.locus_len = 0
        self.ops = 0
        self.oow_count = 0
        self.overlap_max = 0
        self.last_min_seq = 0
        self.last_overlap = 0

    def regions(self):
        """Retained regions as (text_start, pat_start, length) triples."""
        out = []
        for seq in range(self.head_seq, self.next_seq):
            slot = seq % self.cap if self.cap else seq
            out.append((self.starts[slot], self.pats[slot], self.lens[slot]))
        return out

    def words(self):
        return 3 * (self.cap if self.cap else len(self.starts)) + 10


def append(w, ps, sym):
    """Add one symbol, extending the last region when possible. O(1)."""
    pos = w.text_len
    w.text_len = pos + 1
    w.ops += 1
    cap = w.cap
    if w.locus_state >= 0 and w.next_seq > w.head_seq:
        w.ops += 1
        nxt = ps._sam.get(w.locus_state * 256 + sym)
        if nxt >= 0:
            w.locus_state = nxt
            w.locus_len += 1
            slot = (w.next_seq - 1) % cap if cap else w.next_seq - 1
            w.lens[slot] += 1
            w.pats[slot] = ps._sam_first_end[nxt] - w.lens[slot] + 1
            return
    w.ops += 1
    start = ps._sam.get(sym)  # transition from the root state 0
    if start >= 0:
        w.locus_state = start
        w.locus_len = 1
        pat_start = ps._sam_first_end[start]
    else:
        w.locus_state = -1
        w.locus_len = 0
        pat_start = WILDCARD
    seq = w.next_seq
    w.next_seq = seq + 1
    if cap:
        slot = seq % cap
        if seq - w.head_seq == cap:
            w.ops += 1
            old = w.head_seq % cap
            w.evicted_before = w.starts[old] + w.lens[old]
            w.head_seq += 1
        w.starts[slot] = pos
        w.pats[slot] = pat_start
        w.lens[slot] = 1
    else:
        w.starts.append(pos)
        w.pats.append(pat_start)
        w.lens.append(1)


def _locate(w, pos):
    """Sequence number of the retained region containing text position pos."""
    cap = w.cap
    lo = w.head_seq
    hi = w.next_seq - 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        w.ops += 1
        if w.starts[mid % cap if cap else mid] <= pos:
            lo = mid
        else:
            hi = mid - 1
    return lo


def lce(w, ps, i1, j):
    """Match length of text starting at i1 against the pattern suffix at j.

    Returns OUT_OF_WINDOW when i1 has already been evicted.
    """
    w.ops += 1
    w.last_overlap = 0
    w.last_min_seq = w.next_seq
    if j >= ps.m or i1 >= w.text_len:
        return 0
    if i1 < w.evicted_before:
        w.oow_count += 1
        w.last_min_seq = w.head_seq
        return OUT_OF_WINDOW
    cap = w.cap
    m = ps.m
    seq = _locate(w, i1)
    w.last_min_seq = seq
    total = 0
    pos_t = i1
    pos_p = j
    overlap = 0
    while True:
        slot = seq % cap if cap else seq
        w.ops += 1
        pstart = w.pats[slot]
        if pstart == WILDCARD:
            break
        off = pos_t - w.starts[slot]
        avail = w.lens[slot] - off
        w.ops += 1
        g = ps.lce_pp(pstart + off, pos_p)
        if g > avail:
            g = avail
        if g > m - pos_p:
            g = m - pos_p
        if g > 0:
            overlap += 1
            total += g
            pos_t += g
            pos_p += g
        if pos_p >= m or g < avail:
            break
        if pos_t >= w.text_len:
            break
        seq += 1
    if overlap > w.overlap_max:
        w.overlap_max = overlap
    w.last_overlap = overlap
    return total


def lcs(w, ps, i1, j):
    """Match length of text ending at i1 against the pattern prefix ending at j.

    Walks right to left; returns OUT_OF_WINDOW when the match is still
    alive at the eviction boundary, so callers never under-count.
    """
    w.ops += 1
    w.last_overlap = 0
    w.last_min_seq = w.next_seq
    if j < 0 or i1 >= w.text_len:
        return 0
    if i1 < w.evicted_before:
        w.oow_count += 1
        w.last_min_seq = w.head_seq
        return OUT_OF_WINDOW
    cap = w.cap
    seq = _locate(w, i1)
    w.last_min_seq = seq
    total = 0
    pos_t = i1
    pos_p = j
    overlap = 0
    while True:
        slot = seq % cap if cap else seq
        w.ops += 1
        pstart = w.pats[slot]
        if pstart == WILDCARD:
            break
        off = pos_t - w.starts[slot]
        avail = off + 1
        w.ops += 1
        g = ps.lcs_pp(pstart + off, pos_p)
        if g > avail:
            g = avail
        if g > pos_p + 1:
            g = pos_p + 1
        if g > 0:
            overlap += 1
            total += g
            pos_t -= g
            pos_p -= g
        if pos_p < 0 or g < avail:
            break
        if pos_t < w.evicted_before:
            if pos_t < 0:
                break
            if overlap > w.overlap_max:
                w.overlap_max = overlap
            w.last_overlap = overlap
            w.last_min_seq = seq
            w.oow_count += 1
            return OUT_OF_WINDOW
        seq -= 1
        w.last_min_seq = seq
    if overlap > w.overlap_max:
        w.overlap_max = overlap
    w.last_overlap = overlap
    return total
