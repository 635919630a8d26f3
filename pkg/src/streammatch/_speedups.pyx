# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Mirrors _pybackend operation for operation, including every
instrumentation counter, so the two backends are interchangeable and the
test suite can diff them. Keep edits in lockstep with window.py,
exact.py, mismatch.py and difference.py.
"""

from array import array

NAME = "c"

OUT_OF_WINDOW = -1

ctypedef long long ll
ctypedef unsigned long long u64

cdef ll WILDCARD = -1
cdef ll OOW = -1
cdef ll INVALID = -3

cdef int R_MATCH = 0
cdef int R_NO_MATCH = 1
cdef int R_NO_ALIGNMENT = 2

cdef int STAGE_A = 0
cdef int STAGE_B = 1
cdef int STAGE_C = 2


# ---------------------------------------------------------------- tables

cdef class Tables:
    """Flat read-only views over one PatternSpace."""

    cdef ll m
    cdef const unsigned char[::1] pat
    cdef u64 sd_top_mult
    cdef int sd_top_bits
    cdef const u64[::1] sd_bmult
    cdef const ll[::1] sd_bbits
    cdef const ll[::1] sd_bbase
    cdef const ll[::1] sd_keys
    cdef const ll[::1] sd_vals
    cdef u64 sam_top_mult
    cdef int sam_top_bits
    cdef const u64[::1] sam_bmult
    cdef const ll[::1] sam_bbits
    cdef const ll[::1] sam_bbase
    cdef const ll[::1] sam_keys
    cdef const ll[::1] sam_vals
    cdef const ll[::1] sam_first_end
    cdef const ll[::1] rank_f
    cdef const ll[::1] sp_f
    cdef const ll[::1] rank_r
    cdef const ll[::1] sp_r

    def __init__(self, ps):
        self.m = ps.m
        self.pat = ps.pattern
        sd = ps._shift
        self.sd_top_mult = sd.top_mult
        self.sd_top_bits = sd.top_bits
        self.sd_bmult = sd.bucket_mult
        self.sd_bbits = sd.bucket_bits
        self.sd_bbase = sd.bucket_base
        self.sd_keys = sd.slot_keys
        self.sd_vals = sd.slot_vals
        sam = ps._sam
        self.sam_top_mult = sam.top_mult
        self.sam_top_bits = sam.top_bits
        self.sam_bmult = sam.bucket_mult
        self.sam_bbits = sam.bucket_bits
        self.sam_bbase = sam.bucket_base
        self.sam_keys = sam.slot_keys
        self.sam_vals = sam.slot_vals
        self.sam_first_end = ps._sam_first_end
        self.rank_f = ps._lce_fwd.rank
        self.sp_f = ps._lce_fwd.rmq.table
        self.rank_r = ps._lce_rev.rank
        self.sp_r = ps._lce_rev.rmq.table


cdef Tables _tables(ps):
    t = ps._ctables
    if type(t) is Tables:
        return <Tables>t
    tt = Tables(ps)
    ps._ctables = tt
    return tt


cdef inline ll _sd_get(Tables t, u64 key) noexcept:
    cdef u64 b = (t.sd_top_mult * key) >> (64 - t.sd_top_bits)
    cdef ll bits = t.sd_bbits[b]
    cdef Py_ssize_t s
    if bits < 0:
        return -1
    if bits == 0:
        s = t.sd_bbase[b]
    else:
        s = t.sd_bbase[b] + <Py_ssize_t>((t.sd_bmult[b] * key) >> (64 - bits))
    if t.sd_keys[s] == <ll>key:
        return t.sd_vals[s]
    return -1


cdef inline ll _sam_get(Tables t, u64 key) noexcept:
    cdef u64 b = (t.sam_top_mult * key) >> (64 - t.sam_top_bits)
    cdef ll bits = t.sam_bbits[b]
    cdef Py_ssize_t s
    if bits < 0:
        return -1
    if bits == 0:
        s = t.sam_bbase[b]
    else:
        s = t.sam_bbase[b] + <Py_ssize_t>((t.sam_bmult[b] * key) >> (64 - bits))
    if t.sam_keys[s] == <ll>key:
        return t.sam_vals[s]
    return -1


cdef inline ll _rmq(const ll[::1] sp, ll n, ll lo, ll hi) noexcept:
    cdef ll span = hi - lo + 1
    cdef int lv = 0
    cdef ll a, b
    while (<ll>2 << lv) <= span:
        lv += 1
    a = sp[lv * n + lo]
    b = sp[lv * n + hi - ((<ll>1) << lv) + 1]
    return a if a < b else b


cdef inline ll _lce_pp(Tables t, ll j1, ll j2) noexcept:
    cdef ll a, b, tmp
    if j1 == j2:
        return t.m - j1
    if j1 >= t.m or j2 >= t.m:
        return 0
    a = t.rank_f[j1]
    b = t.rank_f[j2]
    if a > b:
        tmp = a
        a = b
        b = tmp
    return _rmq(t.sp_f, t.m, a + 1, b)


cdef inline ll _lcs_pp(Tables t, ll j1, ll j2) noexcept:
    cdef ll a, b, tmp, m1
    if j1 == j2:
        return j1 + 1
    if j1 < 0 or j2 < 0:
        return 0
    m1 = t.m - 1
    a = t.rank_r[m1 - j1]
    b = t.rank_r[m1 - j2]
    if a > b:
        tmp = a
        a = b
        b = tmp
    return _rmq(t.sp_r, t.m, a + 1, b)


# ---------------------------------------------------------------- window

cdef class Window:
    """Ring of regions covering the most recent text of one stream."""

    cdef public ll cap
    cdef object starts_obj
    cdef object pats_obj
    cdef object lens_obj
    cdef ll[::1] starts
    cdef ll[::1] pats
    cdef ll[::1] lens
    cdef ll alloc
    cdef public ll head_seq
    cdef public ll next_seq
    cdef public ll text_len
    cdef public ll evicted_before
    cdef public ll locus_state
    cdef public ll locus_len
    cdef public ll ops
    cdef public ll oow_count
    cdef public ll overlap_max
    cdef public ll last_min_seq
    cdef public ll last_overlap

    def __init__(self, ll cap):
        cdef ll n = cap if cap else 16
        self.cap = cap
        self.alloc = n
        self.starts_obj = array("q", [0]) * n
        self.pats_obj = array("q", [0]) * n
        self.lens_obj = array("q", [0]) * n
        self.starts = self.starts_obj
        self.pats = self.pats_obj
        self.lens = self.lens_obj
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
        out = []
        cdef ll seq, slot
        for seq in range(self.head_seq, self.next_seq):
            slot = seq % self.cap if self.cap else seq
            out.append((self.starts[slot], self.pats[slot], self.lens[slot]))
        return out

    def words(self):
        return 3 * (self.cap if self.cap else self.next_seq) + 10


cdef void _grow(Window w):
    cdef ll n = w.alloc * 2
    ns = array("q", [0]) * n
    np = array("q", [0]) * n
    nl = array("q", [0]) * n
    ns[0:w.alloc] = w.starts_obj
    np[0:w.alloc] = w.pats_obj
    nl[0:w.alloc] = w.lens_obj
    w.starts_obj = ns
    w.pats_obj = np
    w.lens_obj = nl
    w.starts = ns
    w.pats = np
    w.lens = nl
    w.alloc = n


cdef void _append(Window w, Tables t, ll sym):
    cdef ll pos = w.text_len
    cdef ll cap = w.cap
    cdef ll nxt, slot, seq, old, pat_start
    w.text_len = pos + 1
    w.ops += 1
    if w.locus_state >= 0 and w.next_seq > w.head_seq:
        w.ops += 1
        nxt = _sam_get(t, <u64>(w.locus_state * 256 + sym))
        if nxt >= 0:
            w.locus_state = nxt
            w.locus_len += 1
            slot = (w.next_seq - 1) % cap if cap else w.next_seq - 1
            w.lens[slot] += 1
            w.pats[slot] = t.sam_first_end[nxt] - w.lens[slot] + 1
            return
    w.ops += 1
    nxt = _sam_get(t, <u64>sym)
    if nxt >= 0:
        w.locus_state = nxt
        w.locus_len = 1
        pat_start = t.sam_first_end[nxt]
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
        if seq == w.alloc:
            _grow(w)
        w.starts[seq] = pos
        w.pats[seq] = pat_start
        w.lens[seq] = 1


cdef ll _locate(Window w, ll pos):
    cdef ll cap = w.cap
    cdef ll lo = w.head_seq
    cdef ll hi = w.next_seq - 1
    cdef ll mid
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        w.ops += 1
        if w.starts[mid % cap if cap else mid] <= pos:
            lo = mid
        else:
            hi = mid - 1
    return lo


cdef ll _lce(Window w, Tables t, ll i1, ll j):
    cdef ll cap, m, seq, total, pos_t, pos_p, overlap, slot, pstart, off, avail, g
    w.ops += 1
    w.last_overlap = 0
    w.last_min_seq = w.next_seq
    if j >= t.m or i1 >= w.text_len:
        return 0
    if i1 < w.evicted_before:
        w.oow_count += 1
        w.last_min_seq = w.head_seq
        return OOW
    cap = w.cap
    m = t.m
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
        g = _lce_pp(t, pstart + off, pos_p)
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


cdef ll _lcs(Window w, Tables t, ll i1, ll j):
    cdef ll cap, seq, total, pos_t, pos_p, overlap, slot, pstart, off, avail, g
    w.ops += 1
    w.last_overlap = 0
    w.last_min_seq = w.next_seq
    if j < 0 or i1 >= w.text_len:
        return 0
    if i1 < w.evicted_before:
        w.oow_count += 1
        w.last_min_seq = w.head_seq
        return OOW
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
        g = _lcs_pp(t, pstart + off, pos_p)
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
            return OOW
        seq -= 1
        w.last_min_seq = seq
    if overlap > w.overlap_max:
        w.overlap_max = overlap
    w.last_overlap = overlap
    return total


# ----------------------------------------------------------------- exact

cdef class ExactState:
    cdef public ll j
    cdef public ll text_len
    cdef public ll ops_last
    cdef public ll ops_max

    def __init__(self):
        self.j = 0
        self.text_len = 0
        self.ops_last = 0
        self.ops_max = 0

    @property
    def oow_last(self):
        return False

    @property
    def overlap_max(self):
        return 0

    def words(self):
        return 5


def push_exact(ExactState st, ps, ll sym):
    cdef Tables t = _tables(ps)
    cdef ll j = st.j
    cdef ll ops = 2
    cdef ll v
    st.text_len += 1
    if j < t.m and t.pat[j] == sym:
        j += 1
    else:
        ops += 1
        v = _sd_get(t, <u64>(j * 256 + sym))
        if v >= 0:
            j = v + 1
        else:
            j = 1 if t.pat[0] == sym else 0
    st.j = j
    st.ops_last = ops
    if ops > st.ops_max:
        st.ops_max = ops
    if j == t.m:
        return (R_MATCH, -1)
    if st.text_len < t.m:
        return (R_NO_ALIGNMENT, -1)
    return (R_NO_MATCH, -1)


# -------------------------------------------------------------- mismatch

cdef class MismatchState:
    cdef public Window window
    cdef public ll k
    cdef public ll ops_last
    cdef public ll ops_max
    cdef public bint oow_last
    cdef public ll queries_last
    cdef public ll involved_last
    cdef public ll involved_max

    def __init__(self, ll k, cap=None):
        self.window = Window(4 * (k + 1) if cap is None else <ll>cap)
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


def push_mismatch(MismatchState st, ps, ll sym):
    cdef Tables t = _tables(ps)
    cdef Window w = st.window
    cdef ll ops0 = w.ops
    cdef ll oow0 = w.oow_count
    cdef ll m, k, queries, min_seq, pos_t, pos_p, mism, got
    cdef int code = R_NO_ALIGNMENT
    cdef ll dist = -1
    _append(w, t, sym)
    m = t.m
    k = st.k
    queries = 0
    min_seq = w.next_seq - 1
    if w.text_len >= m:
        pos_t = w.text_len - 1
        pos_p = m - 1
        mism = 0
        while True:
            w.ops += 1
            queries += 1
            got = _lcs(w, t, pos_t, pos_p)
            if w.last_min_seq < min_seq:
                min_seq = w.last_min_seq
            if got == OOW:
                code = R_NO_MATCH
                break
            pos_t -= got
            pos_p -= got
            if pos_p < 0:
                code = R_MATCH
                dist = mism
                break
            mism += 1
            if mism > k:
                code = R_NO_MATCH
                break
            pos_t -= 1
            pos_p -= 1
            if pos_p < 0:
                code = R_MATCH
                dist = mism
                break
    st.queries_last = queries
    st.involved_last = (w.next_seq - 1) - min_seq + 1 if queries else 0
    if st.involved_last > st.involved_max:
        st.involved_max = st.involved_last
    st.oow_last = w.oow_count > oow0
    st.ops_last = w.ops - ops0
    if st.ops_last > st.ops_max:
        st.ops_max = st.ops_last
    return (code, dist)


# ------------------------------------------------------------ difference

cdef class Child:
    cdef public bint active
    cdef public bint tainted
    cdef public ll start_i
    cdef public ll stage
    cdef public ll a_e
    cdef public ll a_t
    cdef public ll a_quota
    cdef public ll b_next_col
    cdef object ra_obj
    cdef object lvp_obj
    cdef object lvc_obj
    cdef object col_obj
    cdef object col2_obj
    cdef ll[::1] r_a
    cdef ll[::1] lv_prev
    cdef ll[::1] lv_cur
    cdef ll[::1] col
    cdef ll[::1] col2

    def __init__(self, ll k, ll quota):
        self.active = False
        self.tainted = False
        self.start_i = 0
        self.stage = STAGE_A
        self.a_e = 0
        self.a_t = 0
        self.a_quota = quota
        self.b_next_col = 0
        self.ra_obj = array("q", [0]) * (3 * k)
        self.lvp_obj = array("q", [INVALID]) * (5 * k)
        self.lvc_obj = array("q", [INVALID]) * (5 * k)
        self.col_obj = array("q", [0]) * (3 * k + 1)
        self.col2_obj = array("q", [0]) * (3 * k + 1)
        self.r_a = self.ra_obj
        self.lv_prev = self.lvp_obj
        self.lv_cur = self.lvc_obj
        self.col = self.col_obj
        self.col2 = self.col2_obj

    def words(self):
        return (len(self.ra_obj) + len(self.lvp_obj) + len(self.lvc_obj)
                + len(self.col_obj) + len(self.col2_obj) + 10)

    def ra_list(self):
        return list(self.ra_obj)


cdef class DiffState:
    cdef public Window window
    cdef public ll k
    cdef public ll m
    cdef public ll prev_output
    cdef public ll ceil_a
    cdef public ll b_ticks
    cdef public ll ops_last
    cdef public ll ops_max
    cdef public bint oow_last
    cdef public Child child0
    cdef public Child child1
    cdef object fb_obj
    cdef ll[::1] fb
    cdef public bint has_fb
    cdef public ll _tl

    def __init__(self, ps, ll k):
        cdef Tables t = _tables(ps)
        cdef ll m = t.m
        cdef ll j, quota, total_units
        self.k = k
        self.m = m
        self.prev_output = k + 1
        self.ops_last = 0
        self.ops_max = 0
        self.oow_last = False
        self._tl = 0
        if m <= 3 * k + 2:
            self.window = None
            self.has_fb = True
            self.fb_obj = array("q", [0]) * m
            self.fb = self.fb_obj
            for j in range(m):
                self.fb[j] = j + 1 if j + 1 < k + 1 else k + 1
            self.child0 = None
            self.child1 = None
            self.ceil_a = 0
            self.b_ticks = 0
        else:
            self.window = Window(5 * (k + 1))
            self.has_fb = False
            self.fb_obj = None
            self.ceil_a = (k + 1) // 2
            self.b_ticks = k - self.ceil_a
            total_units = 4 * k * (k + 1)
            quota = (total_units + self.ceil_a - 1) // self.ceil_a
            self.child0 = Child(k, quota)
            self.child1 = Child(k, quota)

    @property
    def text_len(self):
        return self._tl if self.window is None else self.window.text_len

    @property
    def overlap_max(self):
        return 0 if self.window is None else self.window.overlap_max

    @property
    def fallback(self):
        return list(self.fb_obj) if self.has_fb else None

    def words(self):
        if self.has_fb:
            return len(self.fb_obj) + 8
        return (self.window.words() + 8
                + self.child0.words() + self.child1.words())


cdef void _spawn(DiffState st, Child child, Tables t, ll i0):
    cdef ll k = st.k
    cdef ll k3 = 3 * k
    cdef ll base_row, idx, v, cap
    child.active = True
    child.start_i = i0
    child.tainted = False
    if i0 == 0:
        base_row = st.m - k3 - 1
        cap = k + 1
        for idx in range(k3):
            v = base_row + idx + 1
            child.r_a[idx] = v if v < cap else cap
        _seed_b(st, child, t)
    else:
        child.stage = STAGE_A
        child.a_e = 0
        child.a_t = 0
        for idx in range(k3):
            child.r_a[idx] = -1


cdef void _seed_b(DiffState st, Child child, Tables t):
    cdef ll k3 = 3 * st.k
    cdef ll idx
    for idx in range(k3):
        child.col[idx] = child.r_a[idx]
    child.stage = STAGE_B
    child.b_next_col = child.start_i
    if st.b_ticks == 0:
        _run_b(st, child, t, st.k)


cdef void _run_a(DiffState st, Child child, Tables t, ll units):
    cdef Window w = st.window
    cdef ll k = st.k
    cdef ll m = st.m
    cdef ll k5 = 5 * k
    cdef ll ct = child.start_i - 1
    cdef ll base_d = child.start_i - m + 1 - k
    cdef ll e = child.a_e
    cdef ll tt = child.a_t
    cdef ll[::1] prev = child.lv_prev
    cdef ll[::1] cur = child.lv_cur
    cdef ll[::1] r_a = child.r_a
    cdef ll band_top = m - 3 * k - 1
    cdef ll d, best, p, hi, r0, g, rt, idx, cap
    cdef ll[::1] tmpv
    while units > 0 and e <= k:
        units -= 1
        w.ops += 1
        d = base_d + tt
        best = INVALID
        if e > 0:
            p = prev[tt]
            if p >= -1:
                best = p + 1
            p = prev[tt - 1]
            if p >= -1 and p > best:
                best = p
            p = prev[tt + 1]
            if p >= -1 and p + 1 > best:
                best = p + 1
        if d >= 0:
            if best < -1:
                best = -1
        elif e >= -d and -1 - d > best:
            best = -1 - d
        if best < -1:
            cur[tt] = INVALID
        else:
            hi = ct - d
            if m - 1 < hi:
                hi = m - 1
            if hi < -1:
                cur[tt] = INVALID
            else:
                r0 = best if best < hi else hi
                if r0 < hi:
                    g = _lce(w, t, r0 + d + 1, r0 + 1)
                    if g == OOW:
                        child.tainted = True
                        g = 0
                    if g > hi - r0:
                        g = hi - r0
                    r0 += g
                cur[tt] = r0
                if k <= tt < 4 * k:
                    rt = ct - d
                    idx = rt - band_top
                    if r_a[idx] < 0 and r0 >= rt:
                        r_a[idx] = e
        tt += 1
        if tt > k5 - 1 - e:
            e += 1
            tt = e
            tmpv = prev
            prev = cur
            cur = tmpv
    child.a_e = e
    child.a_t = tt
    child.lv_prev = prev
    child.lv_cur = cur
    if e > k:
        cap = k + 1
        for idx in range(3 * k):
            if r_a[idx] < 0:
                r_a[idx] = cap
        _seed_b(st, child, t)


cdef ll _symbol_at(Window w, Tables t, ll pos):
    cdef ll seq, slot, pstart
    w.ops += 1
    if pos < w.evicted_before or pos >= w.text_len:
        return -2
    seq = _locate(w, pos)
    slot = seq % w.cap if w.cap else seq
    pstart = w.pats[slot]
    if pstart == WILDCARD:
        return -1
    return t.pat[pstart + (pos - w.starts[slot])]


cdef void _run_b(DiffState st, Child child, Tables t, ll ncols):
    cdef Window w = st.window
    cdef ll k = st.k
    cdef ll k3 = 3 * k
    cdef ll cap = k + 1
    cdef ll band_top = st.m - k3 - 1
    cdef ll stop = child.start_i + k
    cdef ll c, sym, above, diag, r, v, t2, t3
    cdef ll[::1] left
    cdef ll[::1] new
    cdef ll[::1] tmpv
    while ncols > 0 and child.b_next_col < stop:
        ncols -= 1
        c = child.b_next_col
        sym = _symbol_at(w, t, c)
        if sym == -2:
            child.tainted = True
        left = child.col
        new = child.col2
        w.ops += k3
        above = cap
        diag = cap
        for r in range(k3):
            v = left[r] + 1
            t2 = above + 1
            if t2 < v:
                v = t2
            t3 = diag if sym == t.pat[band_top + r] else diag + 1
            if t3 < v:
                v = t3
            if v > cap:
                v = cap
            new[r] = v
            diag = left[r]
            above = v
        tmpv = child.col
        child.col = child.col2
        child.col2 = tmpv
        tmp = child.col_obj
        child.col_obj = child.col2_obj
        child.col2_obj = tmp
        child.b_next_col = c + 1
    if child.b_next_col == stop:
        child.stage = STAGE_C


cdef ll _run_c(DiffState st, Child child, Tables t, ll sym):
    cdef Window w = st.window
    cdef ll k = st.k
    cdef ll k3 = 3 * k
    cdef ll cap = k + 1
    cdef ll band_top = st.m - k3 - 1
    cdef ll above, diag, r, v, t2, t3
    cdef ll[::1] left = child.col
    cdef ll[::1] new = child.col2
    cdef ll[::1] tmpv
    left[k3] = st.prev_output
    w.ops += k3 + 1
    above = cap
    diag = cap
    for r in range(k3):
        v = left[r] + 1
        t2 = above + 1
        if t2 < v:
            v = t2
        t3 = diag if sym == t.pat[band_top + r] else diag + 1
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
    t3 = diag if sym == t.pat[st.m - 1] else diag + 1
    if t3 < v:
        v = t3
    if v > cap:
        v = cap
    new[k3] = v
    tmpv = child.col
    child.col = child.col2
    child.col2 = tmpv
    tmp = child.col_obj
    child.col_obj = child.col2_obj
    child.col2_obj = tmp
    return v


def push_diff(DiffState st, ps, ll sym):
    cdef Tables t = _tables(ps)
    cdef Window w
    cdef ll ops0
    cdef ll i, k, cap, out, m, diag, prev, j, old, v, tv, rel, remaining, ticks
    cdef bint tainted = False
    cdef Child child
    cdef int ci
    k = st.k
    cap = k + 1
    out = cap
    if st.has_fb:
        st._tl += 1
        m = st.m
        diag = 0
        prev = 0
        for j in range(m):
            old = st.fb[j]
            v = old + 1
            if prev + 1 < v:
                v = prev + 1
            tv = diag if t.pat[j] == sym else diag + 1
            if tv < v:
                v = tv
            if v > cap:
                v = cap
            st.fb[j] = v
            diag = old
            prev = v
        out = st.fb[m - 1]
        st.ops_last = m + 1
    else:
        w = st.window
        ops0 = w.ops
        _append(w, t, sym)
        i = w.text_len - 1
        if i % k == 0:
            _spawn(st, st.child0 if ((i // k) & 1) == 0 else st.child1, t, i)
        for ci in range(2):
            child = st.child0 if ci == 0 else st.child1
            if not child.active:
                continue
            rel = i - child.start_i
            if rel < st.ceil_a:
                if child.stage == STAGE_A:
                    _run_a(st, child, t, child.a_quota)
            elif rel < k:
                if child.stage == STAGE_A:
                    _run_a(st, child, t, <ll>1 << 60)
                if child.stage == STAGE_B:
                    remaining = (child.start_i + k) - child.b_next_col
                    ticks = k - rel
                    _run_b(st, child, t, (remaining + ticks - 1) // ticks)
            else:
                if child.stage == STAGE_A:
                    _run_a(st, child, t, <ll>1 << 60)
                if child.stage == STAGE_B:
                    _run_b(st, child, t, <ll>1 << 60)
                out = _run_c(st, child, t, sym)
                tainted = child.tainted
                if rel == 2 * k - 1:
                    child.active = False
        st.ops_last = w.ops - ops0
    st.prev_output = out
    st.oow_last = tainted
    if st.ops_last > st.ops_max:
        st.ops_max = st.ops_last
    if out <= k:
        return (R_MATCH, out)
    return (R_NO_MATCH, -1)


# -------------------------------------------------------------- adapters

def new_exact(ps):
    return ExactState()


def new_mismatch(ps, k):
    _tables(ps)
    return MismatchState(k)


def new_diff(ps, k):
    return DiffState(ps, k)


def new_window(ps, cap):
    _tables(ps)
    return Window(cap)


def window_append(Window w, ps, sym):
    _append(w, _tables(ps), sym)


def window_lce(Window w, ps, i1, j):
    return _lce(w, _tables(ps), i1, j)


def window_lcs(Window w, ps, i1, j):
    return _lcs(w, _tables(ps), i1, j)


def window_regions(Window w):
    return w.regions()
