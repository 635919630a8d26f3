"""Pattern-only index structures built once during preprocessing.

A suffix array with an LCP table and sparse-table minima answers
longest-common-extension queries between two suffixes of the pattern in
constant time; a suffix automaton with one stored occurrence end per state
recognizes pattern substrings one symbol at a time.
"""

from array import array


def suffix_array(data):
    """Start positions of all suffixes of data in lexicographic order."""
    n = len(data)
    if n == 0:
        return []
    sa = sorted(range(n), key=data.__getitem__)
    rank = [0] * n
    for t in range(1, n):
        rank[sa[t]] = rank[sa[t - 1]] + (data[sa[t]] != data[sa[t - 1]])
    width = 1
    while rank[sa[-1]] < n - 1:
        sec = [rank[i + width] + 1 if i + width < n else 0 for i in range(n)]
        # counting sort by secondary key, then stably by primary key
        cnt = [0] * (n + 2)
        for s in sec:
            cnt[s + 1] += 1
        for t in range(1, n + 2):
            cnt[t] += cnt[t - 1]
        by_sec = [0] * n
        for i in range(n):
            s = sec[i]
            by_sec[cnt[s]] = i
            cnt[s] += 1
        cnt = [0] * (n + 1)
        for r in rank:
            cnt[r + 1] += 1
        for t in range(1, n + 1):
            cnt[t] += cnt[t - 1]
        for i in by_sec:
            r = rank[i]
            sa[cnt[r]] = i
            cnt[r] += 1
        new_rank = [0] * n
        prev = sa[0]
        for t in range(1, n):
            i = sa[t]
            new_rank[i] = new_rank[prev] + (
                rank[i] != rank[prev] or sec[i] != sec[prev])
            prev = i
        rank = new_rank
        width *= 2
    return sa


def lcp_array(data, sa):
    """lcp[t] = common-prefix length of sa[t-1] and sa[t] (lcp[0] = 0)."""
    n = len(sa)
    rank = [0] * n
    for t, i in enumerate(sa):
        rank[i] = t
    lcp = [0] * n
    h = 0
    for i in range(n):
        t = rank[i]
        if t == 0:
            h = 0
            continue
        j = sa[t - 1]
        if h:
            h -= 1
        while i + h < n and j + h < n and data[i + h] == data[j + h]:
            h += 1
        lcp[t] = h
    return lcp


class SparseMin:
    """Range-minimum over a frozen sequence, O(1) per query."""

    __slots__ = ("n", "levels", "table")

    def __init__(self, vals):
        n = len(vals)
        levels = max(1, n.bit_length())
        table = array("q", [0]) * (levels * n)
        table[0:n] = array("q", vals)
        for lv in range(1, levels):
            half = 1 << (lv - 1)
            prev = (lv - 1) * n
            cur = lv * n
            for i in range(n):
                a = table[prev + i]
                if i + half < n:
                    b = table[prev + i + half]
                    if b < a:
                        a = b
                table[cur + i] = a
        self.n = n
        self.levels = levels
        self.table = table

    def query(self, lo, hi):
        """Minimum of vals[lo..hi], inclusive; requires lo <= hi."""
        lv = (hi - lo + 1).bit_length() - 1
        base = lv * self.n
        a = self.table[base + lo]
        b = self.table[base + hi - (1 << lv) + 1]
        return a if a < b else b


class SuffixLce:
    """Constant-time longest-common-prefix between suffixes of one string."""

    __slots__ = ("n", "sa", "rank", "lcp", "rmq")

    def __init__(self, data):
        n = len(data)
        sa = suffix_array(data)
        rank = array("q", [0]) * n
        for t, i in enumerate(sa):
            rank[i] = t
        lcp = lcp_array(data, sa)
        self.n = n
        self.sa = array("q", sa)
        self.rank = rank
        self.lcp = array("q", lcp)
        self.rmq = SparseMin(lcp)

    def extension(self, i, j):
        """Length of the common prefix of the suffixes starting at i and j."""
        if i == j:
            return self.n - i
        a = self.rank[i]
        b = self.rank[j]
        if a > b:
            a, b = b, a
        return self.rmq.query(a + 1, b)

    def words(self):
        return 3 * self.n + len(self.rmq.table) + 4


def suffix_automaton(data):
    """Substring automaton of data.

    Returns (transition items, first_end, state count) where transition
    items are (state * 256 + symbol, next_state) pairs and first_end[s] is
    the end position of the first occurrence of the strings state s stands
    for. State 0 is the root (empty string).
    """
    maxlen = [0]
    link = [-1]
    trans = [{}]
    first_end = [-1]
    last = 0
    for pos, sym in enumerate(data):
        cur = len(maxlen)
        maxlen.append(maxlen[last] + 1)
        link.append(-1)
        trans.append({})
        first_end.append(pos)
        p = last
        while p >= 0 and sym not in trans[p]:
            trans[p][sym] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = trans[p][sym]
            if maxlen[p] + 1 == maxlen[q]:
                link[cur] = q
            else:
                clone = len(maxlen)
                maxlen.append(maxlen[p] + 1)
                link.append(link[q])
                trans.append(dict(trans[q]))
                first_end.append(first_end[q])
                while p >= 0 and trans[p].get(sym) == q:
                    trans[p][sym] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    items = []
    for state, d in enumerate(trans):
        for sym, nxt in d.items():
            items.append((state * 256 + sym, nxt))
    return items, array("q", first_end), len(maxlen)
