"""Pure-Python (NumPy) versions of the state-sum kernels.

Crossing ``i`` has two geometric smoothings: choice 0 joins positions
(0,1),(2,3), choice 1 joins (1,2),(3,0).  Bit ``i`` of a state ``g``
selects the choice at crossing ``i``.
"""

import numpy as np


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def state_loop_counts(pairs0, pairs1, n_edges):
    """Number of loops of every state, via union-find over edge arcs.

    ``pairs0``/``pairs1`` are (n, 4) arrays of 0-based edge ids; a row
    ``(a, b, c, d)`` joins a-b and c-d.
    """
    pairs0 = np.asarray(pairs0, dtype=np.int64).tolist()
    pairs1 = np.asarray(pairs1, dtype=np.int64).tolist()
    n = len(pairs0)
    out = np.empty(1 << n, dtype=np.int32)
    if n_edges == 0:
        out[0] = 1
        return out
    for g in range(1 << n):
        parent = list(range(n_edges))
        comps = n_edges
        for i in range(n):
            row = pairs1[i] if g >> i & 1 else pairs0[i]
            for a, b in ((row[0], row[1]), (row[2], row[3])):
                ra, rb = _find(parent, a), _find(parent, b)
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
        out[g] = comps
    return out


def _popcounts(size):
    pc = np.zeros(size, dtype=np.int64)
    for bit in range(max(size - 1, 0).bit_length()):
        pc += (np.arange(size) >> bit) & 1
    return pc


def switch_histograms(loops, n, targets):
    """H[m, k, L] = #{states g : popcount(g ^ targets[m]) == k, loops[g] == L}."""
    loops = np.asarray(loops, dtype=np.int64)
    targets = np.asarray(targets, dtype=np.int64)
    width = n + 2
    size = 1 << n
    states = np.arange(size, dtype=np.int64)
    pc = _popcounts(size)
    out = np.zeros((len(targets), n + 1, width), dtype=np.int64)
    for m, t in enumerate(targets.tolist()):
        k = pc[states ^ t]
        out[m] = np.bincount(k * width + loops, minlength=(n + 1) * width).reshape(n + 1, width)
    return out
