"""Static integer-key lookup tables with a two-probe worst case.

Built once while preprocessing a pattern, then frozen. Used for the
per-prefix shift entries and for the substring-automaton transitions, so a
lookup during the online phase costs a fixed number of array reads no
matter how unlucky the key set is.

Keys and values are non-negative 64-bit integers; -1 is the miss sentinel.
"""

from array import array

_M64 = (1 << 64) - 1


def _multipliers(salt=0x9E3779B97F4A7C15):
    """Deterministic sequence of odd 64-bit hash multipliers."""
    a = salt
    while True:
        yield a | 1
        a = (a * 0x2545F4914F6CDD1D + 0x1B873593) & _M64


def _spread(mult, key, bits):
    # multiply-shift hash into 2**bits slots
    return ((mult * key) & _M64) >> (64 - bits)


class StaticDict:
    """Immutable int -> int mapping; every get() is exactly two probes.

    Two-level scheme: a multiplicative hash spreads the keys over buckets,
    and each non-empty bucket gets its own collision-free table found by a
    deterministic multiplier search (bucket tables are quadratic in the
    bucket size, which stays linear overall because the first level only
    accepts splits with a small sum of squared bucket sizes).
    """

    __slots__ = ("count", "top_mult", "top_bits", "bucket_mult",
                 "bucket_bits", "bucket_base", "slot_keys", "slot_vals")

    def __init__(self, items):
        items = list(items)
        self.count = len(items)
        if not items:
            self.top_mult = 1
            self.top_bits = 1
            self.bucket_mult = array("Q", [0, 0])
            self.bucket_bits = array("q", [-1, -1])
            self.bucket_base = array("q", [0, 0])
            self.slot_keys = array("q", [-1])
            self.slot_vals = array("q", [-1])
            return

        n = len(items)
        top_bits = max(1, (n - 1).bit_length())
        mults = _multipliers()
        tries = 0
        while True:
            top_mult = next(mults)
            buckets = [[] for _ in range(1 << top_bits)]
            for key, val in items:
                buckets[_spread(top_mult, key, top_bits)].append((key, val))
            if sum(len(b) * len(b) for b in buckets) <= 4 * n:
                break
            tries += 1
            if tries % 16 == 0:
                top_bits += 1

        nbuckets = 1 << top_bits
        bucket_mult = array("Q", [0]) * nbuckets
        bucket_bits = array("q", [-1]) * nbuckets
        bucket_base = array("q", [0]) * nbuckets
        slot_keys = array("q")
        slot_vals = array("q")

        for b, entries in enumerate(buckets):
            nb = len(entries)
            base = len(slot_keys)
            bucket_base[b] = base
            if nb == 0:
                continue
            if nb == 1:
                bucket_bits[b] = 0
                bucket_mult[b] = 1
                slot_keys.append(entries[0][0])
                slot_vals.append(entries[0][1])
                continue
            bits = (nb * nb - 1).bit_length()
            tries = 0
            while True:
                mult = next(mults)
                size = 1 << bits
                keys = [-1] * size
                vals = [-1] * size
                ok = True
                for key, val in entries:
                    s = _spread(mult, key, bits)
                    if keys[s] != -1:
                        ok = False
                        break
                    keys[s] = key
                    vals[s] = val
                if ok:
                    bucket_bits[b] = bits
                    bucket_mult[b] = mult
                    slot_keys.extend(keys)
                    slot_vals.extend(vals)
                    break
                tries += 1
                if tries % 16 == 0:
                    bits += 1
        self.top_mult = top_mult
        self.top_bits = top_bits
        self.bucket_mult = bucket_mult
        self.bucket_bits = bucket_bits
        self.bucket_base = bucket_base
        self.slot_keys = slot_keys
        self.slot_vals = slot_vals

    def get(self, key):
        """Value stored for key, or -1."""
        b = ((self.top_mult * key) & _M64) >> (64 - self.top_bits)
        bits = self.bucket_bits[b]
        if bits < 0:
            return -1
        if bits == 0:
            s = self.bucket_base[b]
        else:
            s = self.bucket_base[b] + (((self.bucket_mult[b] * key) & _M64) >> (64 - bits))
        if self.slot_keys[s] == key:
            return self.slot_vals[s]
        return -1

    def words(self):
        """Words of storage held by the frozen table."""
        return (3 * len(self.bucket_bits) + 2 * len(self.slot_keys) + 4)
