"""Exact matching with one table probe per symbol and one word of state."""

MATCH = 0
NO_MATCH = 1
NO_ALIGNMENT = 2


class ExactState:
    """Per-stream state: just the current matched prefix length."""

    __slots__ = ("j", "text_len", "ops_last", "ops_max", "oow_last")

    def __init__(self):
        self.j = 0
        self.text_len = 0
        self.ops_last = 0
        self.ops_max = 0
        self.oow_last = False

    def words(self):
        return 5

    @property
    def overlap_max(self):
        return 0


def push(st, ps, sym):
    """Advance by one symbol; returns (verdict code, distance or -1).

    The matched prefix length moves exactly as the classic failure-function
    automaton would, but via a single precomputed shift entry instead of an
    iterated fallback chain, so the cost is flat for every single symbol.
    """
    st.text_len += 1
    pat = ps.pattern
    j = st.j
    ops = 2
    if j < ps.m and pat[j] == sym:
        j += 1
    else:
        ops += 1
        t = ps._shift.get(j * 256 + sym)
        if t >= 0:
            j = t + 1
        else:
            j = 1 if pat[0] == sym else 0
    st.j = j
    st.ops_last = ops
    if ops > st.ops_max:
        st.ops_max = ops
    if j == ps.m:
        return (MATCH, -1)
    if st.text_len < ps.m:
        return (NO_ALIGNMENT, -1)
    return (NO_MATCH, -1)
