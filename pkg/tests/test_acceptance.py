"""Acceptance gate: ten criteria, one printed PASS line each.

Run with `pytest tests/test_acceptance.py -v -s` (or directly as a script)
to see the per-criterion lines. Corpora are seeded and shared between
criteria through memoized runners, so each criterion can also run alone.

Budgets (op counts, word counts) are the frozen constants in util.py.
"""

import random
import time

from streammatch import Engine, build_pattern_space, load_backend
from streammatch.oracles import (oracle_exact, oracle_hamming, oracle_kdiff)
from util import (MAX_OPS_DIFFERENCE_PER_K1, MAX_OPS_EXACT,
                  MAX_OPS_MISMATCH_PER_K1, MAX_WORDS_DIFFERENCE_PER_K1,
                  MAX_WORDS_MISMATCH_PER_K1, rand_bytes)

_cache = {}


def _passline(num, text):
    print("PASS criterion %d: %s" % (num, text))


# ---------------------------------------------------------------- corpora

def exact_corpus():
    if "exact" in _cache:
        return _cache["exact"]
    rng = random.Random("acceptance-exact")
    t0 = time.perf_counter()
    mismatches = 0
    worst_ops = 0
    for _ in range(1000):
        sigma = rng.choice([2, 4])
        pattern = rand_bytes(rng, sigma, rng.randint(1, 64))
        text = rand_bytes(rng, sigma, rng.randint(0, 512))
        e = Engine(pattern, "exact")
        sid = e.add_stream()
        got = [i for i, sym in enumerate(text)
               if e.push(sid, sym).verdict == "match"]
        if got != oracle_exact(pattern, text):
            mismatches += 1
        worst_ops = max(worst_ops, e.ops_report().per_push_max_ops)
    result = {"seconds": time.perf_counter() - t0,
              "mismatches": mismatches, "worst_ops": worst_ops}
    _cache["exact"] = result
    return result


def _bounded_corpus(mode, seed, instances, k_choices, extra=()):
    key = (mode, seed)
    if key in _cache:
        return _cache[key]
    oracle = oracle_hamming if mode == "mismatch" else oracle_kdiff
    rng = random.Random(seed)
    t0 = time.perf_counter()
    cases = []
    for _ in range(instances):
        k = rng.choice(k_choices)
        sigma = rng.choice([2, 4])
        if mode == "difference":
            if rng.random() < 0.5:
                m = rng.randint(1, 3 * k + 2)
            else:
                m = rng.randint(3 * k + 3, 64)
        else:
            m = rng.randint(1, 64)
        cases.append((rand_bytes(rng, sigma, m),
                      rand_bytes(rng, sigma, rng.randint(0, 512)), k))
    cases.extend(extra)
    mismatches = 0
    overlap_max = 0
    oow_violations = 0
    matches_seen = 0
    worst_ratio = 0.0
    budget_breaches = 0
    for pattern, text, k in cases:
        e = Engine(pattern, mode, k)
        sid = e.add_stream()
        want = oracle(pattern, text, k)
        for sym, expect in zip(text, want):
            got = e.push(sid, sym)
            if (got.verdict, got.distance) != (expect.verdict,
                                               expect.distance):
                mismatches += 1
            if expect.verdict == "match":
                matches_seen += 1
                if e.stream_diagnostics(sid)["used_oow"]:
                    oow_violations += 1
        diag = e.stream_diagnostics(sid) if text else {"overlap_max": 0}
        overlap_max = max(overlap_max, diag["overlap_max"])
        ops = e.ops_report().per_push_max_ops
        worst_ratio = max(worst_ratio, ops / (k + 1))
        limit = (MAX_OPS_MISMATCH_PER_K1 if mode == "mismatch"
                 else MAX_OPS_DIFFERENCE_PER_K1)
        if ops > limit * (k + 1):
            budget_breaches += 1
    result = {"seconds": time.perf_counter() - t0, "cases": len(cases),
              "mismatches": mismatches, "overlap_max": overlap_max,
              "oow_violations": oow_violations, "matches_seen": matches_seen,
              "worst_ratio": worst_ratio, "budget_breaches": budget_breaches}
    _cache[key] = result
    return result


def mismatch_corpus():
    periodic = []
    for pattern in (b"ab" * 32, b"a" * 64):
        for k in (0, 1, 2, 4, 8):
            periodic.append((pattern, (pattern * 2)[5:] + b"x" + pattern, k))
    return _bounded_corpus("mismatch", "acceptance-mismatch", 500,
                           (0, 1, 2, 4, 8), extra=periodic)


def difference_corpus():
    return _bounded_corpus("difference", "acceptance-difference", 500,
                           (1, 2, 4, 8))


# --------------------------------------------------------------- criteria

def test_criterion_1_exact_oracle_equivalence():
    r = exact_corpus()
    assert r["mismatches"] == 0
    assert r["seconds"] < 10.0
    _passline(1, "exact matches oracle on 1000 instances (%.1fs)"
              % r["seconds"])


def test_criterion_2_mismatch_oracle_equivalence():
    r = mismatch_corpus()
    assert r["mismatches"] == 0
    assert r["seconds"] < 30.0
    _passline(2, "k-mismatch matches oracle on %d instances (%.1fs)"
              % (r["cases"], r["seconds"]))


def test_criterion_3_difference_oracle_equivalence():
    r = difference_corpus()
    assert r["mismatches"] == 0
    assert r["seconds"] < 60.0
    _passline(3, "k-difference matches oracle on %d instances (%.1fs)"
              % (r["cases"], r["seconds"]))


def test_criterion_4_shift_table_size_witness():
    rng = random.Random("acceptance-shift")
    worst = 0.0
    for _ in range(1000):
        m = rng.randint(1, 256)
        pattern = rand_bytes(rng, rng.choice([2, 4]), m)
        ps = build_pattern_space(pattern)
        total = sum(ps.shift_dict_sizes())
        assert total <= m + 1
        worst = max(worst, total / (m + 1))
        lengths = [j - t for j, _, t in ps.shift_entries if j < m]
        assert len(lengths) == len(set(lengths))
    _passline(4, "shift entries <= m+1 with unique shift lengths on 1000 "
                 "patterns (worst fill %.2f)" % worst)


def test_criterion_5_three_region_witness():
    r2 = mismatch_corpus()
    r3 = difference_corpus()
    worst = max(r2["overlap_max"], r3["overlap_max"])
    assert 1 <= worst <= 3
    _passline(5, "no query extent crossed more than 3 regions "
                 "(worst seen: %d)" % worst)


def test_criterion_6_window_sufficiency_witness():
    r2 = mismatch_corpus()
    r3 = difference_corpus()
    assert r2["matches_seen"] > 0 and r3["matches_seen"] > 0
    assert r2["oow_violations"] == 0
    assert r3["oow_violations"] == 0
    _passline(6, "zero out-of-window events across %d within-budget reports"
              % (r2["matches_seen"] + r3["matches_seen"]))


def test_criterion_7_worked_example_reproduction():
    pattern, text = b"babbac", b"abcaababba"
    backend = load_backend(None)
    ps = build_pattern_space(pattern, "mismatch", 2)
    w = backend.new_window(ps, 0)
    for sym in text:
        backend.window_append(w, ps, sym)
    regions = backend.window_regions(w)
    assert [(start, length) for start, _, length in regions] == \
        [(0, 2), (2, 1), (3, 1), (4, 2), (6, 4)]
    pos = 0
    for start, pat_start, length in regions:
        assert start == pos
        assert pat_start >= 0
        assert text[start:start + length] == \
            pattern[pat_start:pat_start + length]
        pos = start + length
    assert pos == len(text)
    _passline(7, "reference stream splits into the expected 5 valid regions")


def test_criterion_8_unamortised_time_bounds():
    r1 = exact_corpus()
    r2 = mismatch_corpus()
    r3 = difference_corpus()
    assert r1["worst_ops"] <= MAX_OPS_EXACT
    assert r2["budget_breaches"] == 0
    assert r3["budget_breaches"] == 0
    _passline(8, "worst pushes: exact %d <= %d; mismatch %.1f, difference "
                 "%.1f ops per (k+1) within budgets %d / %d"
              % (r1["worst_ops"], MAX_OPS_EXACT, r2["worst_ratio"],
                 r3["worst_ratio"], MAX_OPS_MISMATCH_PER_K1,
                 MAX_OPS_DIFFERENCE_PER_K1))


def test_criterion_9_space_bounds():
    pattern = bytes(97 + (i % 4) for i in range(256))

    def per_stream_words(mode, k):
        e = Engine(pattern, mode, k)
        sid = e.add_stream()
        for sym in b"abcd" * 8:
            e.push(sid, sym)
        return e.stream_diagnostics(sid)["words"]

    # exact: flat no matter the pattern length
    exact_words = {per_stream_words("exact", 0)}
    for m in (32, 1024):
        e = Engine(bytes(97 + (i % 4) for i in range(m)), "exact")
        sid = e.add_stream()
        e.push(sid, 97)
        exact_words.add(e.stream_diagnostics(sid)["words"])
    assert len(exact_words) == 1

    # bounded modes: linear in k
    for k in range(1, 17):
        assert per_stream_words("mismatch", k) <= \
            MAX_WORDS_MISMATCH_PER_K1 * (k + 1)
        assert per_stream_words("difference", k) <= \
            MAX_WORDS_DIFFERENCE_PER_K1 * (k + 1)

    # totals decompose as pattern term + per-stream term, exactly linear
    def totals(mode, k, counts):
        points = {}
        for s in counts:
            e = Engine(pattern, mode, k)
            for _ in range(s):
                sid = e.add_stream()
                for sym in b"abcd":
                    e.push(sid, sym)
            rep = e.space_report()
            points[s] = rep
        return points

    for mode, k in (("exact", 0), ("mismatch", 8), ("difference", 8)):
        points = totals(mode, k, (0, 1, 4, 16, 64))
        base = points[0]
        assert base.total_words == base.pattern_words
        slope = points[1].total_words - base.total_words
        for s, rep in points.items():
            assert rep.pattern_words == base.pattern_words
            assert rep.total_words == base.pattern_words + slope * s
    _passline(9, "per-stream words flat in m (exact), linear in k (bounded); "
                 "totals decompose exactly as pattern + slope * streams")


def test_criterion_10_stream_isolation():
    rng = random.Random("acceptance-isolation")
    modes = [("exact", 0), ("mismatch", 2), ("difference", 2)]
    for trial in range(100):
        mode, k = modes[trial % 3]
        pattern = rand_bytes(rng, 2, rng.randint(1, 16))
        nstreams = rng.randint(2, 8)
        events = [(rng.randrange(nstreams), rng.randrange(3) + 97)
                  for _ in range(rng.randint(0, 300))]
        e = Engine(pattern, mode, k)
        for _ in range(nstreams):
            e.add_stream()
        per_stream = {s: [] for s in range(nstreams)}
        for sid, sym in events:
            per_stream[sid].append(e.push(sid, sym))
        for sid in range(nstreams):
            solo = Engine(pattern, mode, k)
            ss = solo.add_stream()
            replay = [solo.push(ss, sym) for s, sym in events if s == sid]
            assert replay == per_stream[sid]
    _passline(10, "100 interleavings replay identically stream by stream")


if __name__ == "__main__":
    import sys
    failures = 0
    for name, fn in sorted((n, f) for n, f in globals().items()
                           if n.startswith("test_criterion")):
        try:
            fn()
        except AssertionError as exc:
            failures += 1
            print("FAIL %s: %s" % (name, exc))
    sys.exit(1 if failures else 0)
