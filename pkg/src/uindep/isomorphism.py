"""Isomorphism of independence systems by backtracking with invariant pruning."""

from __future__ import annotations

from collections import Counter

import numpy as np

from .indep import IndependenceSystem, independent_profile


def _element_invariants(sys: IndependenceSystem) -> list[tuple]:
    n = sys.n
    circ = [Counter() for _ in range(n)]
    for c in sys.circuit_masks:
        k = c.bit_count()
        for i in range(n):
            if c >> i & 1:
                circ[i][k] += 1
    indep = [Counter() for _ in range(n)]
    for w in np.flatnonzero(sys.independent_flags):
        w = int(w)
        k = w.bit_count()
        for i in range(n):
            if w >> i & 1:
                indep[i][k] += 1
    return [(tuple(sorted(circ[i].items())), tuple(sorted(indep[i].items()))) for i in range(n)]


def image_masks(perm: dict[int, int], n: int) -> np.ndarray:
    """Image of every mask of ``0..n-1`` under the element map ``perm``."""
    idx = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for i, j in perm.items():
        out |= ((idx >> i) & 1) << j
    return out


def preserves_independence(s1: IndependenceSystem, s2: IndependenceSystem, perm: dict[int, int]) -> bool:
    """Check X in I1 iff perm(X) in I2 for every subset X of the ground set."""
    if s1.n != s2.n or sorted(perm) != list(range(s1.n)) or sorted(perm.values()) != list(range(s2.n)):
        return False
    img = image_masks(perm, s1.n)
    return bool(np.array_equal(s1.independent_flags, s2.independent_flags[img]))


def independence_isomorphic(s1: IndependenceSystem, s2: IndependenceSystem) -> dict[int, int] | None:
    """A bijection of ground sets preserving independence both ways, or None."""
    n = s1.n
    if n != s2.n or independent_profile(s1) != independent_profile(s2):
        return None
    if sorted(c.bit_count() for c in s1.circuit_masks) != sorted(c.bit_count() for c in s2.circuit_masks):
        return None
    inv1, inv2 = _element_invariants(s1), _element_invariants(s2)
    if Counter(inv1) != Counter(inv2):
        return None
    classes = Counter(inv1)
    order = sorted(range(n), key=lambda i: (classes[inv1[i]], i))
    candidates = {i: [j for j in range(n) if inv2[j] == inv1[i]] for i in range(n)}
    circuits2 = set(s2.circuit_masks)
    # circuits of s1 indexed by the element placed last in ``order``
    pos = {e: k for k, e in enumerate(order)}
    closing: dict[int, list[int]] = {e: [] for e in range(n)}
    for c in s1.circuit_masks:
        members = [i for i in range(n) if c >> i & 1]
        closing[max(members, key=pos.__getitem__)].append(c)
    perm: dict[int, int] = {}
    used = [False] * n

    def image(c: int) -> int:
        out = 0
        for i in range(n):
            if c >> i & 1:
                out |= 1 << perm[i]
        return out

    def extend(k: int) -> bool:
        if k == n:
            return preserves_independence(s1, s2, perm)
        e = order[k]
        for j in candidates[e]:
            if used[j]:
                continue
            perm[e] = j
            used[j] = True
            if all(image(c) in circuits2 for c in closing[e]) and extend(k + 1):
                return True
            used[j] = False
            del perm[e]
        return False

    if extend(0):
        return dict(sorted(perm.items()))
    return None
