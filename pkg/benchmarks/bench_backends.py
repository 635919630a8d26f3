#!/usr/bin/env python3
"""Throughput comparison of the kernel backends.

Feeds the same seeded workload (several streams, symbols interleaved)
through each available backend and reports pushes per second. Run from
the repository root:

    python benchmarks/bench_backends.py [--events N]
"""

import argparse
import os
import random
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from streammatch import Engine, available_backends  # noqa: E402

WORKLOADS = [
    ("exact",      "exact",      0, 64),
    ("mismatch k4", "mismatch",  4, 64),
    ("difference k4", "difference", 4, 64),
]


def make_events(rng, pattern, streams, count):
    events = []
    alphabet = bytes(sorted(set(pattern))) + b"xy"
    for _ in range(count):
        sid = rng.randrange(streams)
        if rng.random() < 0.1:
            for sym in pattern[rng.randrange(len(pattern)):]:
                events.append((sid, sym))
        events.append((sid, rng.choice(alphabet)))
    return events


def run_one(backend, mode, k, pattern, events, streams):
    engine = Engine(pattern, mode, k, backend=backend)
    for _ in range(streams):
        engine.add_stream()
    t0 = time.perf_counter()
    matches = 0
    for sid, sym in events:
        if engine.push(sid, sym).verdict == "match":
            matches += 1
    return time.perf_counter() - t0, matches, len(events)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--events", type=int, default=30000)
    parser.add_argument("--streams", type=int, default=4)
    args = parser.parse_args()

    backends = available_backends()
    print("backends:", ", ".join(backends))
    print()
    print("%-14s %-6s %12s %12s %9s" % ("workload", "back", "pushes/s",
                                        "elapsed", "matches"))
    for label, mode, k, m in WORKLOADS:
        rng = random.Random("bench:" + label)
        pattern = bytes(rng.randrange(4) + 97 for _ in range(m))
        events = make_events(rng, pattern, args.streams, args.events)
        base_rate = None
        for backend in backends:
            elapsed, matches, total = run_one(backend, mode, k, pattern,
                                              events, args.streams)
            rate = total / elapsed
            note = ""
            if backend == "c":
                base_rate = rate
            elif base_rate:
                note = "  (c is %.1fx faster)" % (base_rate / rate)
            print("%-14s %-6s %12.0f %10.3fs %9d%s"
                  % (label, backend, rate, elapsed, matches, note))
        print()


if __name__ == "__main__":
    main()
