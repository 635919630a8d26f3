"""Immutable, shareable preprocessing output for one pattern.

Everything here depends only on the pattern. A built PatternSpace is never
mutated, so any number of per-stream states may read it concurrently.
"""

from .staticdict import StaticDict
from .suffixes import SuffixLce, suffix_automaton

MODES = ("exact", "mismatch", "difference")

WILDCARD = -1


class BuildError(ValueError):
    """Raised when a pattern space cannot be built from the inputs."""


def _as_bytes(pattern):
    if isinstance(pattern, bytes):
        return pattern
    if isinstance(pattern, bytearray):
        return bytes(pattern)
    if isinstance(pattern, str):
        return pattern.encode("latin-1")
    return bytes(pattern)


def _prefix_function(pat):
    """fail[j] = length of the longest proper border of pat[:j]."""
    m = len(pat)
    fail = [0] * (m + 1)
    k = 0
    for j in range(1, m):
        while k and pat[j] != pat[k]:
            k = fail[k]
        if pat[j] == pat[k]:
            k += 1
        fail[j + 1] = k
    return fail


def _shift_entries(pat, fail):
    """Per-prefix shift entries (j, symbol, target prefix length).

    Entry (j, s, t) means: a matched prefix of length j that cannot be
    extended, seeing symbol s, restarts with matched length t + 1. Built
    incrementally: the entries for j are those of its border fail[j] that
    still disagree with pat[j], plus the border itself keyed by the symbol
    it expects next. The entries for j == m (after a full match) follow the
    same rule with no disagreement filter.
    """
    m = len(pat)
    dicts = [dict() for _ in range(m + 1)]
    for j in range(2, m + 1):
        f = fail[j]
        cur = dicts[j]
        blocked = pat[j] if j < m else -1
        for sym, t in dicts[f].items():
            if sym != blocked:
                cur[sym] = t
        if f >= 1 and pat[f] != blocked:
            cur[pat[f]] = f
    entries = []
    for j, d in enumerate(dicts):
        for sym, t in sorted(d.items()):
            entries.append((j, sym, t))
    return entries


class PatternSpace:
    """Read-only pattern side: shift table, self-LCE indexes, substring automaton.

    Use build_pattern_space() to construct one.
    """

    __slots__ = ("pattern", "m", "mode", "k", "shift_entries", "_shift",
                 "_sam", "_sam_first_end", "_lce_fwd", "_lce_rev",
                 "first_occurrence", "_ctables")

    def __init__(self, pattern, mode, k):
        pat = _as_bytes(pattern)
        if len(pat) == 0:
            raise BuildError("pattern must not be empty")
        if mode not in MODES:
            raise BuildError("unknown mode: %r" % (mode,))
        if k < 0:
            raise BuildError("k must be non-negative")
        if mode == "exact" and k != 0:
            raise BuildError("exact mode requires k = 0")
        if mode == "difference" and k < 1:
            raise BuildError("difference mode requires k >= 1")
        m = len(pat)
        self.pattern = pat
        self.m = m
        self.mode = mode
        self.k = k

        fail = _prefix_function(pat)
        self.shift_entries = tuple(_shift_entries(pat, fail))
        self._shift = StaticDict(
            (j * 256 + sym, t) for j, sym, t in self.shift_entries)

        items, first_end, _ = suffix_automaton(pat)
        self._sam = StaticDict(items)
        self._sam_first_end = first_end

        self._lce_fwd = SuffixLce(pat)
        self._lce_rev = SuffixLce(pat[::-1])

        first = {}
        for pos in range(m - 1, -1, -1):
            first[pat[pos]] = pos
        self.first_occurrence = first
        self._ctables = None

    # -- real-time shift automaton ------------------------------------

    def shift_lookup(self, j, sym):
        """Next matched-prefix length from length j on input sym."""
        pat = self.pattern
        if j < self.m and pat[j] == sym:
            return j + 1
        t = self._shift.get(j * 256 + sym)
        if t >= 0:
            return t + 1
        return 1 if pat[0] == sym else 0

    # -- pattern-vs-pattern extensions ---------------------------------

    def lce_pp(self, j1, j2):
        """Common-prefix length of the pattern suffixes at j1 and j2.

        Index m stands for the empty suffix.
        """
        if j1 == j2:
            return self.m - j1
        if j1 >= self.m or j2 >= self.m:
            return 0
        return self._lce_fwd.extension(j1, j2)

    def lcs_pp(self, j1, j2):
        """Common-suffix length of the pattern prefixes ending at j1 and j2.

        Index -1 stands for the empty prefix.
        """
        if j1 == j2:
            return j1 + 1
        if j1 < 0 or j2 < 0:
            return 0
        m1 = self.m - 1
        return self._lce_rev.extension(m1 - j1, m1 - j2)

    # -- incremental substring recognition -----------------------------

    def locus_start(self):
        """Locus of the empty substring."""
        return (0, 0)

    def locus_extend(self, locus, sym):
        """Locus of the extended substring, or None if it does not occur."""
        state, length = locus
        nxt = self._sam.get(state * 256 + sym)
        if nxt < 0:
            return None
        return (nxt, length + 1)

    def locus_position(self, locus):
        """Some start position of the substring the locus stands for."""
        state, length = locus
        if state == 0:
            return 0
        return self._sam_first_end[state] - length + 1

    # -- accounting -----------------------------------------------------

    def shift_dict_sizes(self):
        """Number of shift entries stored for each prefix length 0..m."""
        sizes = [0] * (self.m + 1)
        for j, _, _ in self.shift_entries:
            sizes[j] += 1
        return sizes

    def words(self):
        """Words of storage held by the shared pattern side."""
        return (self.m
                + 3 * len(self.shift_entries)
                + self._shift.words()
                + self._sam.words()
                + len(self._sam_first_end)
                + self._lce_fwd.words()
                + self._lce_rev.words()
                + len(self.first_occurrence)
                + 8)


def build_pattern_space(pattern, mode="exact", k=0):
    """Build the shared pattern side for the given mode and bound."""
    return PatternSpace(pattern, mode, k)
