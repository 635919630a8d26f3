import random

from streammatch import Engine
from streammatch.oracles import oracle_exact
from util import MAX_OPS_EXACT, MAX_WORDS_EXACT, feed, instances, rand_bytes


def match_ends(reports):
    return [r.end for r in reports if r.verdict == "match"]


def test_overlapping_matches(backend_name):
    e = Engine(b"abab", "exact", backend=backend_name)
    sid = e.add_stream()
    assert match_ends(feed(e, sid, b"ababab")) == [3, 5]


def test_single_symbol_pattern(backend_name):
    e = Engine(b"a", "exact", backend=backend_name)
    sid = e.add_stream()
    reports = feed(e, sid, b"banana")
    assert match_ends(reports) == [1, 3, 5]
    assert all(r.verdict in ("match", "no_match") for r in reports)


def test_prefix_state_after_shift(backend):
    # feeding abcabc against abcabd leaves a matched prefix of length 3
    from streammatch import build_pattern_space
    ps = build_pattern_space(b"abcabd")
    st = backend.new_exact(ps)
    for sym in b"abcabc":
        code, _ = backend.push_exact(st, ps, sym)
    assert st.j == 3
    assert code != 0  # no match reported


def test_warmup_reports_no_alignment(backend_name):
    e = Engine(b"abc", "exact", backend=backend_name)
    sid = e.add_stream()
    reports = feed(e, sid, b"abc")
    assert [r.verdict for r in reports] == \
        ["no_alignment", "no_alignment", "match"]


def test_matches_equal_oracle_on_random_streams(backend_name):
    for pattern, text in instances(seed=40, count=250):
        e = Engine(pattern, "exact", backend=backend_name)
        sid = e.add_stream()
        assert match_ends(feed(e, sid, text)) == oracle_exact(pattern, text), \
            (pattern, text)


def test_every_push_is_constant_time(backend_name):
    rng = random.Random(41)
    for _ in range(60):
        pattern = rand_bytes(rng, rng.choice([2, 4]), rng.randint(1, 128))
        e = Engine(pattern, "exact", backend=backend_name)
        sid = e.add_stream()
        for sym in rand_bytes(rng, 5, 400):
            e.push(sid, sym)
            assert e.stream_diagnostics(sid)["ops_last_push"] <= MAX_OPS_EXACT
    assert e.ops_report().per_push_max_ops <= MAX_OPS_EXACT


def test_state_size_is_independent_of_pattern(backend_name):
    sizes = set()
    for m in (1, 16, 256, 1024):
        pattern = bytes(97 + (i % 2) for i in range(m))
        e = Engine(pattern, "exact", backend=backend_name)
        sid = e.add_stream()
        feed(e, sid, b"ab" * 50)
        words = e.stream_diagnostics(sid)["words"]
        assert words <= MAX_WORDS_EXACT
        sizes.add(words)
    assert len(sizes) == 1
