"""Trace replayer: feeds interleaved multi-stream events into an engine.

Trace format, one event per line:

    <stream_id> TAB <symbol>

where <symbol> is a single literal byte or a \\xHH escape (required for
tab, newline, '#' and other unprintable bytes). Lines starting with '#'
and blank lines are ignored. Stream ids must be dense from 0; streams are
created on first mention.

Output records (one per non-warm-up report): stream id, absolute end
position, verdict, distance (empty unless a bounded-mode match). Exit
codes: 0 ok, 1 verification divergence, 2 usage or malformed input.
"""

import argparse
import json
import sys

from .engine import Engine
from .oracles import StreamVerifier
from .reports import NO_ALIGNMENT


class TraceError(ValueError):
    def __init__(self, lineno, message):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


def parse_symbol(field):
    """Decode the symbol field of a trace line to a byte value."""
    if len(field) == 1:
        code = ord(field)
        if code > 255:
            raise ValueError("symbol is not a single byte")
        return code
    if len(field) == 4 and field.startswith("\\x"):
        return int(field[2:], 16)
    raise ValueError("symbol must be one byte or a \\xHH escape")


def format_symbol(code):
    """Encode a byte value the way parse_symbol reads it."""
    if 33 <= code <= 126 and code not in (35, 92):  # printable, not '#' or '\'
        return chr(code)
    return "\\x%02x" % code


def iter_trace(lines):
    """Yield (lineno, stream_id, symbol) triples from trace lines."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise TraceError(lineno, "expected <stream_id>TAB<symbol>")
        sid_text, sym_text = parts
        try:
            sid = int(sid_text)
        except ValueError:
            raise TraceError(lineno, "bad stream id %r" % sid_text) from None
        if sid < 0:
            raise TraceError(lineno, "stream id must be non-negative")
        try:
            sym = parse_symbol(sym_text)
        except ValueError as exc:
            raise TraceError(lineno, str(exc)) from None
        yield lineno, sid, sym


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="streammatch",
        description="Replay a multi-stream trace against one pattern.")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern", help="pattern string (latin-1 bytes)")
    group.add_argument("--pattern-file", help="file holding the raw pattern bytes")
    parser.add_argument("--mode", required=True,
                        choices=["exact", "mismatch", "difference"])
    parser.add_argument("--k", type=int, default=None,
                        help="distance bound (required unless mode is exact)")
    parser.add_argument("--trace", required=True,
                        help="trace file path, or - for stdin")
    parser.add_argument("--verify", action="store_true",
                        help="run the brute-force oracle alongside and diff")
    parser.add_argument("--report", choices=["space", "ops", "none"],
                        default="none", help="append instrumentation")
    parser.add_argument("--format", choices=["tsv", "json"], default="tsv")
    parser.add_argument("--backend", choices=["auto", "pure", "c"],
                        default="auto", help="kernel backend to use")
    return parser


def _emit(out, fmt, sid, report):
    dist = "" if report.distance is None else report.distance
    if fmt == "tsv":
        out.write("%d\t%d\t%s\t%s\n" % (sid, report.end, report.verdict, dist))
    else:
        out.write(json.dumps({"stream": sid, "position": report.end,
                              "verdict": report.verdict,
                              "distance": report.distance},
                             separators=(",", ":")) + "\n")


def run(args, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    if args.mode != "exact" and args.k is None:
        err.write("error: --k is required for mode %s\n" % args.mode)
        return 2
    if args.mode == "exact" and args.k not in (None, 0):
        err.write("error: --k must be 0 in exact mode\n")
        return 2
    k = args.k or 0
    if args.pattern is not None:
        pattern = args.pattern.encode("latin-1")
    else:
        with open(args.pattern_file, "rb") as fh:
            pattern = fh.read()
    try:
        engine = Engine(pattern, args.mode, k,
                        backend=None if args.backend == "auto" else args.backend)
    except ValueError as exc:
        err.write("error: %s\n" % exc)
        return 2

    verifiers = [] if args.verify else None
    known = 0

    def feed(lines):
        nonlocal known
        for lineno, sid, sym in iter_trace(lines):
            while known <= sid:
                engine.add_stream()
                if verifiers is not None:
                    verifiers.append(StreamVerifier(pattern, args.mode, k))
                known += 1
            report = engine.push(sid, sym)
            if verifiers is not None:
                expected = verifiers[sid].push(sym)
                if report != expected:
                    err.write("verify: line %d stream %d: got %r want %r\n"
                              % (lineno, sid, tuple(report), tuple(expected)))
                    return 1
            if report.verdict != NO_ALIGNMENT:
                _emit(out, args.format, sid, report)
        return 0

    try:
        if args.trace == "-":
            status = feed(sys.stdin)
        else:
            with open(args.trace, "r", encoding="latin-1") as fh:
                status = feed(fh)
    except TraceError as exc:
        err.write("error: %s\n" % exc)
        return 2
    except OSError as exc:
        err.write("error: %s\n" % exc)
        return 2
    if status:
        return status

    if args.report != "none":
        if args.report == "space":
            rep = engine.space_report()
            payload = {"pattern_words": rep.pattern_words,
                       "per_stream_words": list(rep.per_stream_words),
                       "total_words": rep.total_words}
        else:
            rep = engine.ops_report()
            payload = {"mode": rep.mode,
                       "per_push_max_ops": rep.per_push_max_ops}
        if args.format == "tsv":
            for key, value in payload.items():
                out.write("# %s\t%s\n" % (key, value))
        else:
            out.write(json.dumps({"report": payload},
                                 separators=(",", ":")) + "\n")
    return 0


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
