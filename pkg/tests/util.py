"""Shared helpers for the test suite: naive reference scans and generators.

The frozen instrumentation budgets live here too; they were calibrated
once on the seeded corpora below (worst observed, plus headroom) and must
not be loosened to make a regression pass.
"""

import random

# worst single-push primitive-op budgets (see ops_report)
MAX_OPS_EXACT = 8
MAX_OPS_MISMATCH_PER_K1 = 20        # budget = 20 * (k + 1)
MAX_OPS_DIFFERENCE_PER_K1 = 128     # budget = 128 * (k + 1)

# per-stream word budgets
MAX_WORDS_EXACT = 8
MAX_WORDS_MISMATCH_PER_K1 = 32      # budget = 32 * (k + 1)
MAX_WORDS_DIFFERENCE_PER_K1 = 64    # budget = 64 * (k + 1), band regime
MAX_WORDS_PATTERN_PER_M = 64        # pattern_words <= 64 * m + 512


def rand_bytes(rng, sigma, n, base=97):
    return bytes(rng.randrange(sigma) + base for _ in range(n))


def instances(seed, count, sigma_choices=(2, 4), m_max=64, n_max=512,
              m_min=1):
    """Deterministic random (pattern, text) pairs."""
    rng = random.Random(seed)
    for _ in range(count):
        sigma = rng.choice(sigma_choices)
        m = rng.randint(m_min, m_max)
        n = rng.randint(0, n_max)
        yield rand_bytes(rng, sigma, m), rand_bytes(rng, sigma, n)


def naive_lce(text, pattern, i, j):
    """Character-scan common prefix of text[i:] and pattern[j:]."""
    g = 0
    while i + g < len(text) and j + g < len(pattern) \
            and text[i + g] == pattern[j + g]:
        g += 1
    return g


def naive_lcs(text, pattern, i, j):
    """Character-scan common suffix of text[:i+1] and pattern[:j+1]."""
    g = 0
    while i - g >= 0 and j - g >= 0 and text[i - g] == pattern[j - g]:
        g += 1
    return g


def prefix_function(pat):
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


def kmp_next_state(pat, fail, j, sym):
    """State the textbook failure-function automaton reaches from j on sym."""
    while True:
        if j < len(pat) and pat[j] == sym:
            return j + 1
        if j == 0:
            return 0
        j = fail[j]


def brute_shift_dicts(pat):
    """Border-enumeration reference for the per-prefix shift entries."""
    m = len(pat)
    dicts = [dict() for _ in range(m + 1)]
    for j in range(m + 1):
        for jp in range(1, j):
            if pat[:jp] == pat[j - jp:j] and (j == m or pat[jp] != pat[j]):
                dicts[j][pat[jp]] = jp  # ascending jp keeps the largest
    return dicts


def feed(engine, sid, text):
    """Push a whole text into one stream, returning all reports."""
    return [engine.push(sid, c) for c in text]
