import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from streammatch.cli import format_symbol, parse_symbol

ROOT = Path(__file__).resolve().parent.parent
TRACES = ROOT / "traces"


def run_cli(args, stdin_text=None):
    proc = subprocess.run(
        [sys.executable, "-m", "streammatch.cli", *args],
        input=stdin_text, capture_output=True, text=True,
        cwd=str(ROOT), env={"PYTHONPATH": str(ROOT / "src"), "PATH": "/usr/bin:/bin"})
    return proc.returncode, proc.stdout, proc.stderr


def run_inproc(args):
    out, err = io.StringIO(), io.StringIO()
    from streammatch.cli import _build_parser, run
    code = run(_build_parser().parse_args(args), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write_trace(tmp_path, events):
    lines = ["# test trace"]
    lines += ["%d\t%s" % (sid, format_symbol(sym)) for sid, sym in events]
    path = tmp_path / "trace.tsv"
    path.write_text("\n".join(lines) + "\n", encoding="latin-1")
    return str(path)


def test_symbol_roundtrip():
    for code in range(256):
        assert parse_symbol(format_symbol(code)) == code
    with pytest.raises(ValueError):
        parse_symbol("ab")
    with pytest.raises(ValueError):
        parse_symbol("\\xzz")


def test_no_occurrence_means_no_match_records(tmp_path):
    trace = write_trace(tmp_path, [(0, sym) for sym in b"abcaababba"])
    code, out, err = run_inproc(["--pattern", "babbac", "--mode", "exact",
                                 "--trace", trace])
    assert code == 0
    records = [line.split("\t") for line in out.splitlines()]
    assert records, "post-warm-up arrivals must be reported"
    assert all(rec[2] == "no_match" for rec in records)


def test_two_streams_match_independently(tmp_path):
    trace = write_trace(tmp_path, [(0, ord("a")), (1, ord("a")),
                                   (0, ord("b")), (1, ord("b"))])
    code, out, _ = run_inproc(["--pattern", "ab", "--mode", "exact",
                               "--trace", trace])
    assert code == 0
    assert out.splitlines() == ["0\t1\tmatch\t", "1\t1\tmatch\t"]


def test_json_format(tmp_path):
    trace = write_trace(tmp_path, [(0, ord("a")), (0, ord("b"))])
    code, out, _ = run_inproc(["--pattern", "ab", "--mode", "mismatch",
                               "--k", "1", "--format", "json",
                               "--trace", trace])
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec == {"stream": 0, "position": 1, "verdict": "match",
                   "distance": 0}


def test_missing_k_is_usage_error(tmp_path):
    trace = write_trace(tmp_path, [(0, ord("a"))])
    code, _, err = run_inproc(["--pattern", "ab", "--mode", "mismatch",
                               "--trace", trace])
    assert code == 2
    assert "--k" in err


def test_malformed_line_reports_line_number(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("0\ta\nnot a line\n", encoding="latin-1")
    code, _, err = run_inproc(["--pattern", "ab", "--mode", "exact",
                               "--trace", str(path)])
    assert code == 2
    assert "line 2" in err


def test_empty_pattern_is_usage_error(tmp_path):
    trace = write_trace(tmp_path, [(0, ord("a"))])
    code, _, err = run_inproc(["--pattern", "", "--mode", "exact",
                               "--trace", trace])
    assert code == 2


def test_wildcard_symbols_from_trace(tmp_path):
    events = [(0, sym) for sym in b"ab\x00ab"]
    trace = write_trace(tmp_path, events)
    code, out, _ = run_inproc(["--pattern", "ab", "--mode", "mismatch",
                               "--k", "1", "--trace", trace, "--verify"])
    assert code == 0


def test_verify_catches_divergence(tmp_path, monkeypatch):
    from streammatch import engine as engine_mod
    trace = write_trace(tmp_path, [(0, sym) for sym in b"abab"])
    original = engine_mod.Engine.push

    def broken(self, sid, sym):
        report = original(self, sid, sym)
        if report.verdict == "match":
            return report._replace(verdict="no_match", distance=None)
        return report

    monkeypatch.setattr(engine_mod.Engine, "push", broken)
    code, _, err = run_inproc(["--pattern", "ab", "--mode", "exact",
                               "--trace", trace, "--verify"])
    assert code == 1
    assert "verify" in err


def test_output_is_deterministic(tmp_path):
    trace = str(TRACES / "mismatch_k2.tsv")
    args = ["--pattern", "abcabdab", "--mode", "mismatch", "--k", "2",
            "--trace", trace, "--report", "ops"]
    one = run_inproc(args)
    two = run_inproc(args)
    assert one == two
    assert one[0] == 0


def test_report_space_tsv(tmp_path):
    trace = write_trace(tmp_path, [(0, ord("a")), (1, ord("b"))])
    code, out, _ = run_inproc(["--pattern", "ab", "--mode", "exact",
                               "--trace", trace, "--report", "space"])
    assert code == 0
    tail = [line for line in out.splitlines() if line.startswith("#")]
    assert any("pattern_words" in line for line in tail)
    assert any("per_stream_words" in line for line in tail)


def test_stdin_trace():
    code, out, err = run_cli(["--pattern", "ab", "--mode", "exact",
                              "--trace", "-"], stdin_text="0\ta\n0\tb\n")
    assert code == 0, err
    assert out.splitlines() == ["0\t1\tmatch\t"]


@pytest.mark.parametrize("name,pattern,mode,k", [
    ("exact_abab", "abab", "exact", 0),
    ("exact_babbac", "babbac", "exact", 0),
    ("mismatch_k2", "abcabdab", "mismatch", 2),
    ("mismatch_periodic_k4", "ab" * 12, "mismatch", 4),
    ("difference_k1_small", "abc", "difference", 1),
    ("difference_k3", "abracadabraabracadabra", "difference", 3),
])
def test_shipped_corpus_verifies(name, pattern, mode, k):
    args = ["--pattern", pattern, "--mode", mode,
            "--trace", str(TRACES / ("%s.tsv" % name)), "--verify"]
    if mode != "exact":
        args += ["--k", str(k)]
    code, _, err = run_inproc(args)
    assert code == 0, err
