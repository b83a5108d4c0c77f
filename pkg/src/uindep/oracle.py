"""Unknot oracle: Kauffman bracket state sum and writhe-normalized Jones.

The unknot test is ``jones_normalized(d) == 1``.  This relies on the Jones
polynomial detecting the unknot for every diagram within the crossing cap;
no counterexample is known and the statement has been checked by computer
far beyond 14 crossings.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import kernels
from .diagram import PlanarDiagram
from .errors import CapExceeded
from .poly import DELTA, LaurentPoly

DEFAULT_CAP = 14
HARD_CAP = 24
ORACLE_NOTE = (
    "unknot decided by normalized Kauffman bracket == 1 (Jones unknot detection "
    "assumed within the crossing cap)"
)


def _check_cap(d: PlanarDiagram, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if d.n > min(cap, HARD_CAP):
        raise CapExceeded(f"diagram has {d.n} crossings, cap is {cap}")


def _pair_tables(d: PlanarDiagram):
    p0 = np.empty((d.n, 4), dtype=np.int64)
    p1 = np.empty((d.n, 4), dtype=np.int64)
    for i, c in enumerate(d.crossings):
        a, b, cc, dd = (e - 1 for e in c.edges)
        p0[i] = (a, b, cc, dd)
        p1[i] = (b, cc, dd, a)
    return p0, p1


def state_loops(d: PlanarDiagram) -> np.ndarray:
    """Loop count for each of the 2^n geometric smoothing states."""
    p0, p1 = _pair_tables(d)
    return kernels.state_loop_counts(p0, p1, d.edge_count)


def _basis(n: int):
    """B[k, L, e]: coefficients of A^(n-2k) * delta^(L-1), exponent offset ``off``."""
    off = 3 * n + 4
    width = 2 * off + 1
    basis = np.zeros((n + 1, n + 2, width), dtype=np.int64)
    dpow = LaurentPoly.constant(1)
    for L in range(1, n + 2):
        for k in range(n + 1):
            for e, c in dpow.terms.items():
                basis[k, L, n - 2 * k + e + off] = c
        dpow = dpow * DELTA
    return basis, off


def _hist_to_poly(h: np.ndarray, n: int) -> LaurentPoly:
    out = LaurentPoly()
    dpows = [LaurentPoly.constant(1)]
    for _ in range(n + 1):
        dpows.append(dpows[-1] * DELTA)
    for k in range(n + 1):
        for L in range(1, n + 2):
            cnt = int(h[k, L])
            if cnt:
                out = out + dpows[L - 1].shift(n - 2 * k) * cnt
    return out


def kauffman_bracket(d: PlanarDiagram, cap: int | None = None) -> LaurentPoly:
    """State sum over all 2^n smoothings: sum A^(a-b) delta^(loops-1)."""
    _check_cap(d, cap)
    if d.n == 0:
        return LaurentPoly.constant(1)
    loops = state_loops(d)
    h = kernels.switch_histograms(loops, d.n, np.array([d.flag_mask()], dtype=np.int64))[0]
    return _hist_to_poly(h, d.n)


def jones_normalized(d: PlanarDiagram, cap: int | None = None) -> LaurentPoly:
    w = sum(d.signs())
    return LaurentPoly.monomial(-1, 3) ** (-w) * kauffman_bracket(d, cap)


def is_unknot(d: PlanarDiagram, cap: int | None = None) -> bool:
    return jones_normalized(d, cap).is_one()


def skein_bracket(d: PlanarDiagram) -> LaurentPoly:
    """Bracket by recursive skein expansion with label substitution.

    Independent of the state-sum path: no union-find, no state indexing.
    Each smoothing identifies edge labels; an arc whose two ends already
    carry the same label closes a loop.
    """
    if d.n == 0:
        return LaurentPoly.constant(1)
    start = tuple((c.a_pairs(), c.b_pairs()) for c in d.crossings)
    A = LaurentPoly.monomial(1, 1)
    Ainv = LaurentPoly.monomial(1, -1)

    def smooth(rest, pairs):
        loops = 0
        rest = [list(map(list, (pa[0], pa[1], pb[0], pb[1]))) for pa, pb in rest]
        pairs = [list(p) for p in pairs]
        for idx in range(2):
            x, y = pairs[idx]
            if x == y:
                loops += 1
                continue
            for p in pairs[idx + 1:]:
                p[:] = [x if v == y else v for v in p]
            for row in rest:
                for p in row:
                    p[:] = [x if v == y else v for v in p]
        rest = tuple(((tuple(r[0]), tuple(r[1])), (tuple(r[2]), tuple(r[3]))) for r in rest)
        return rest, loops

    def rec(rest, loops):
        if not rest:
            return DELTA ** (loops - 1)
        (apairs, bpairs), tail = rest[0], rest[1:]
        ra, la = smooth(tail, apairs)
        rb, lb = smooth(tail, bpairs)
        return A * rec(ra, loops + la) + Ainv * rec(rb, loops + lb)

    return rec(start, 0)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("UINDEP_WORKERS", "1")))
    except ValueError:
        return 1


def unknot_table(d: PlanarDiagram, workers: int | None = None, cap: int | None = None) -> np.ndarray:
    """Boolean array over all switch masks s: is_unknot(switch_crossings(d, s)).

    Switching the crossings in s swaps A and B at those crossings, so one
    loop table serves every s: the bracket of the switched diagram is the
    histogram of ``popcount(g ^ flags ^ s)`` against loop counts.
    """
    _check_cap(d, cap)
    n = d.n
    if n == 0:
        return np.ones(1, dtype=bool)
    workers = default_workers() if workers is None else max(1, workers)
    loops = state_loops(d)
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    targets = masks ^ d.flag_mask()
    chunks = np.array_split(targets, min(workers, size))
    if len(chunks) == 1:
        hists = [kernels.switch_histograms(loops, n, chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as ex:
            hists = list(ex.map(lambda t: kernels.switch_histograms(loops, n, t), chunks))
    h = np.concatenate(hists)
    basis, off = _basis(n)
    coeffs = h.reshape(size, -1) @ basis.reshape(-1, basis.shape[2])
    signs = np.array(d.signs(), dtype=np.int64)
    flip = np.zeros(size, dtype=np.int64)
    for i in range(n):
        flip += ((masks >> i) & 1) * signs[i]
    w = int(signs.sum()) - 2 * flip
    target_idx = 3 * w + off
    rows = np.arange(size)
    expected = np.where(w % 2 == 0, 1, -1)
    ok = coeffs[rows, target_idx] == expected
    nonzero = np.count_nonzero(coeffs, axis=1)
    return ok & (nonzero == 1)
