"""Brute-force reference implementations.

Deliberately naive and obviously correct; the test suite and the CLI
--verify mode diff the streaming matchers against these.
"""

from .pattern import _as_bytes
from .reports import MATCH, NO_ALIGNMENT, NO_MATCH, MatchReport


def oracle_exact(pattern, text):
    """End positions of every occurrence of pattern in text."""
    pattern = _as_bytes(pattern)
    text = _as_bytes(text)
    m = len(pattern)
    return [i for i in range(m - 1, len(text))
            if text[i - m + 1:i + 1] == pattern]


def oracle_hamming(pattern, text, k):
    """Per-arrival reports for the windowed Hamming distance with cutoff k."""
    pattern = _as_bytes(pattern)
    text = _as_bytes(text)
    m = len(pattern)
    out = []
    for i in range(len(text)):
        if i + 1 < m:
            out.append(MatchReport(NO_ALIGNMENT, i))
            continue
        d = 0
        for a, b in zip(pattern, text[i - m + 1:i + 1]):
            if a != b:
                d += 1
                if d > k:
                    break
        if d <= k:
            out.append(MatchReport(MATCH, i, d))
        else:
            out.append(MatchReport(NO_MATCH, i))
    return out


def oracle_kdiff(pattern, text, k):
    """Per-arrival reports for the k-bounded edit distance to any text suffix.

    Fills the full dynamic-programming table with every cell saturated at
    k + 1: rows are pattern prefixes, columns are arrivals, row -1 is all
    zeros (a match may start anywhere) and column -1 is min(k + 1, j + 1).
    """
    pattern = _as_bytes(pattern)
    text = _as_bytes(text)
    m = len(pattern)
    n = len(text)
    cap = k + 1
    d = [[0] * (n + 1) for _ in range(m + 1)]
    for j in range(1, m + 1):
        d[j][0] = min(cap, j)
    for i in range(1, n + 1):
        ti = text[i - 1]
        row_prev = d[0]
        for j in range(1, m + 1):
            row = d[j]
            best = row[i - 1] + 1
            v = row_prev[i] + 1
            if v < best:
                best = v
            v = row_prev[i - 1] + (0 if pattern[j - 1] == ti else 1)
            if v < best:
                best = v
            row[i] = best if best < cap else cap
            row_prev = row
    out = []
    for i in range(n):
        v = d[m][i + 1]
        if v <= k:
            out.append(MatchReport(MATCH, i, v))
        else:
            out.append(MatchReport(NO_MATCH, i))
    return out


def oracle_min_regions(pattern, text):
    """Fewest pattern-substring pieces (plus foreign single symbols) covering text.

    Greedy left-to-right extension using full substring search; a symbol
    absent from the pattern always forms its own length-1 piece.
    """
    pattern = _as_bytes(pattern)
    text = _as_bytes(text)
    n = len(text)
    count = 0
    i = 0
    while i < n:
        length = 1
        if pattern.find(text[i:i + 1]) >= 0:
            while i + length < n and pattern.find(text[i:i + length + 1]) >= 0:
                length += 1
        count += 1
        i += length
    return count


class StreamVerifier:
    """Per-stream incremental oracle used by the CLI --verify mode."""

    def __init__(self, pattern, mode, k):
        self.pattern = _as_bytes(pattern)
        self.mode = mode
        self.k = k
        self.m = len(self.pattern)
        self.count = 0
        if mode == "difference":
            cap = k + 1
            self._col = [min(cap, j + 1) for j in range(self.m)]
        else:
            self._tail = bytearray()

    def push(self, sym):
        """Expected report for the next arriving symbol."""
        i = self.count
        self.count += 1
        m = self.m
        if self.mode == "difference":
            cap = self.k + 1
            pat = self.pattern
            col = self._col
            diag = 0
            prev = 0
            for j in range(m):
                old = col[j]
                v = old + 1
                t = prev + 1
                if t < v:
                    v = t
                t = diag + (0 if pat[j] == sym else 1)
                if t < v:
                    v = t
                if v > cap:
                    v = cap
                col[j] = v
                diag = old
                prev = v
            out = col[m - 1]
            if out <= self.k:
                return MatchReport(MATCH, i, out)
            return MatchReport(NO_MATCH, i)

        tail = self._tail
        tail.append(sym)
        if len(tail) > m:
            del tail[0]
        if self.count < m:
            return MatchReport(NO_ALIGNMENT, i)
        if self.mode == "exact":
            if bytes(tail) == self.pattern:
                return MatchReport(MATCH, i)
            return MatchReport(NO_MATCH, i)
        d = 0
        for a, b in zip(self.pattern, tail):
            if a != b:
                d += 1
                if d > self.k:
                    return MatchReport(NO_MATCH, i)
        return MatchReport(MATCH, i, d)
