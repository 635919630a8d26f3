#!/usr/bin/env python3
"""Regenerate the randomized trace corpus under traces/.

Each corpus file is paired with a header comment recording the pattern,
mode and bound it is meant to be replayed with, so tests and humans can
drive the CLI without guessing. Deterministic: fixed seeds.
"""

import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from streammatch.cli import format_symbol  # noqa: E402

SPECS = [
    ("exact_abab", "abab", "exact", 0, 2, "ab", 400),
    ("exact_babbac", "babbac", "exact", 0, 1, "abc", 200),
    ("mismatch_k2", "abcabdab", "mismatch", 2, 3, "abcd", 500),
    ("mismatch_periodic_k4", "ab" * 12, "mismatch", 4, 2, "ab", 600),
    ("difference_k1_small", "abc", "difference", 1, 2, "abcx", 300),
    ("difference_k3", "abracadabraabracadabra", "difference", 3, 4, "abrcdz", 700),
]


def main():
    here = os.path.dirname(__file__)
    outdir = os.path.join(here, "..", "traces")
    os.makedirs(outdir, exist_ok=True)
    for name, pattern, mode, k, streams, alphabet, events in SPECS:
        rng = random.Random("trace:" + name)
        path = os.path.join(outdir, name + ".tsv")
        with open(path, "w", encoding="latin-1") as fh:
            fh.write("# pattern=%s mode=%s k=%d\n" % (pattern, mode, k))
            fh.write("# replay: streammatch --pattern '%s' --mode %s%s"
                     " --trace traces/%s.tsv --verify\n"
                     % (pattern, mode,
                        "" if mode == "exact" else " --k %d" % k, name))
            for n in range(events):
                sid = rng.randrange(streams)
                if rng.random() < 0.25:
                    # plant pattern fragments so matches actually occur
                    frag = pattern[rng.randrange(len(pattern)):]
                    for ch in frag:
                        fh.write("%d\t%s\n" % (sid, format_symbol(ord(ch))))
                sym = ord(rng.choice(alphabet))
                fh.write("%d\t%s\n" % (sid, format_symbol(sym)))
        print("wrote", path)


if __name__ == "__main__":
    main()
