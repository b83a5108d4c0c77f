"""U-independence systems of knot diagrams.

A crossing set W is U-independent when no *proper* subset of W is an
unknotting set.  W itself may be unknotting: every minimal unknotting set is
a maximal independent set.  Sets are bitmasks over crossing indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .diagram import PlanarDiagram
from .oracle import HARD_CAP, unknot_table

MAX_GROUND = HARD_CAP


@dataclass(frozen=True, order=False)
class CrossingSet:
    """Subset of the crossings ``0..n-1`` of a diagram, stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground size {self.n} outside 0..{MAX_GROUND}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#b} has bits beyond n={self.n}")

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> CrossingSet:
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside 0..{n - 1}")
            mask |= 1 << i
        return cls(mask, n)

    def __iter__(self) -> Iterator[int]:
        return (i for i in range(self.n) if self.mask >> i & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, i):
        return isinstance(i, int) and 0 <= i < self.n and bool(self.mask >> i & 1)

    def _other(self, other: CrossingSet) -> int:
        if other.n != self.n:
            raise ValueError("crossing sets over different ground sets")
        return other.mask

    def __or__(self, other):
        return CrossingSet(self.mask | self._other(other), self.n)

    def __and__(self, other):
        return CrossingSet(self.mask & self._other(other), self.n)

    def __sub__(self, other):
        return CrossingSet(self.mask & ~self._other(other), self.n)

    def __xor__(self, other):
        return CrossingSet(self.mask ^ self._other(other), self.n)

    def __le__(self, other):
        return self.mask & ~self._other(other) == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def complement(self) -> CrossingSet:
        return CrossingSet(((1 << self.n) - 1) & ~self.mask, self.n)

    def sort_key(self):
        return (len(self), tuple(self))

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self):
        return "{" + ",".join(map(str, self)) + "}"

    def __repr__(self):
        return f"CrossingSet({self}, n={self.n})"


def canonical(sets: Iterable[CrossingSet]) -> list[CrossingSet]:
    """Size first, then lexicographic on sorted indices."""
    return sorted(sets, key=CrossingSet.sort_key)


def _popcounts(n: int) -> np.ndarray:
    idx = np.arange(1 << n)
    pc = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        pc += (idx >> i) & 1
    return pc


def _up_closure(marks: np.ndarray, n: int) -> np.ndarray:
    """out[w] = OR of marks[s] over all s subset of w."""
    out = marks.copy()
    for i in range(n):
        bit = 1 << i
        view = out.reshape(-1, 2 * bit)
        view[:, bit:] |= view[:, :bit]
    return out


def _proper_closure(marks: np.ndarray, n: int) -> np.ndarray:
    """out[w] = OR of marks[s] over proper subsets s of w."""
    up = _up_closure(marks, n)
    idx = np.arange(1 << n)
    out = np.zeros_like(marks)
    for i in range(n):
        has = (idx >> i & 1).astype(bool)
        out[has] |= up[idx[has] ^ (1 << i)]
    return out


@dataclass(frozen=True, eq=False)
class UnknottingMap:
    """``status[s]`` is True iff switching the crossings in mask ``s`` unknots the diagram."""

    diagram: PlanarDiagram
    status: np.ndarray

    def __post_init__(self):
        if len(self.status) != 1 << self.diagram.n:
            raise ValueError("status table must have length 2^n")

    @property
    def n(self) -> int:
        return self.diagram.n

    def is_unknotting(self, s) -> bool:
        mask = s.mask if isinstance(s, CrossingSet) else int(s)
        return bool(self.status[mask])

    def unknotting_sets(self) -> list[CrossingSet]:
        return canonical(CrossingSet(int(m), self.n) for m in np.flatnonzero(self.status))


def unknotting_map(d: PlanarDiagram, workers: int | None = None, cap: int | None = None) -> UnknottingMap:
    status = unknot_table(d, workers=workers, cap=cap)
    status.setflags(write=False)
    return UnknottingMap(d, status)


def minimal_unknotting_sets(m: UnknottingMap) -> list[CrossingSet]:
    proper = _proper_closure(m.status, m.n)
    minimal = m.status & ~proper
    return canonical(CrossingSet(int(s), m.n) for s in np.flatnonzero(minimal))


def unknotting_number(m: UnknottingMap) -> int:
    """u(D): least size of an unknotting set of this diagram."""
    return min(len(s) for s in minimal_unknotting_sets(m))


@dataclass(frozen=True, eq=False)
class IndependenceSystem:
    """Ground set ``0..n-1`` with the family of U-independent sets.

    The family is stored through its antichain of minimal unknotting sets;
    a set is independent iff no member of the antichain is a proper subset.
    """

    ground_size: int
    minimal_unknotting: tuple[CrossingSet, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        masks = np.array([s.mask for s in self.minimal_unknotting], dtype=np.int64)
        for a in masks:
            if np.any((masks & a == a) & (masks != a)):
                raise ValueError("minimal unknotting sets must form an antichain")

    @property
    def n(self) -> int:
        return self.ground_size

    @cached_property
    def independent_flags(self) -> np.ndarray:
        """Boolean table over all 2^n masks, from the antichain membership rule."""
        marks = np.zeros(1 << self.n, dtype=bool)
        for s in self.minimal_unknotting:
            marks[s.mask] = True
        flags = ~_proper_closure(marks, self.n)
        flags.setflags(write=False)
        return flags

    @cached_property
    def _popcount(self) -> np.ndarray:
        return _popcounts(self.n)

    def is_independent(self, w) -> bool:
        mask = w.mask if isinstance(w, CrossingSet) else int(w)
        return bool(self.independent_flags[mask])

    def independent_sets(self) -> list[CrossingSet]:
        return canonical(CrossingSet(int(s), self.n) for s in np.flatnonzero(self.independent_flags))

    @cached_property
    def maximal_masks(self) -> tuple[int, ...]:
        flags = self.independent_flags
        idx = np.arange(1 << self.n)
        extendable = np.zeros_like(flags)
        for i in range(self.n):
            lacks = (idx >> i & 1) == 0
            extendable[lacks] |= flags[idx[lacks] | (1 << i)]
        out = np.flatnonzero(flags & ~extendable)
        return tuple(int(s) for s in out)

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        """Minimal dependent sets."""
        flags = self.independent_flags
        idx = np.arange(1 << self.n)
        all_sub_indep = np.ones_like(flags)
        for i in range(self.n):
            has = (idx >> i & 1).astype(bool)
            all_sub_indep[has] &= flags[idx[has] ^ (1 << i)]
        return tuple(int(s) for s in np.flatnonzero(~flags & all_sub_indep))

    def circuits(self) -> list[CrossingSet]:
        return canonical(CrossingSet(s, self.n) for s in self.circuit_masks)

    def is_unknotted_diagram(self) -> bool:
        return any(s.mask == 0 for s in self.minimal_unknotting)


def build_system(m: UnknottingMap, name: str = "") -> IndependenceSystem:
    return IndependenceSystem(m.n, tuple(minimal_unknotting_sets(m)), name)


def is_u_independent(sys: IndependenceSystem, w: CrossingSet) -> bool:
    """Antichain rule: no minimal unknotting set is a proper subset of ``w``."""
    if w.n != sys.n:
        raise ValueError("crossing set over a different ground set")
    return not any(m.mask != w.mask and m.mask & w.mask == m.mask for m in sys.minimal_unknotting)


def is_u_independent_literal(m: UnknottingMap, w: CrossingSet) -> bool:
    """W minus S is not unknotting for every nonempty S subset of W."""
    sub = w.mask
    while True:
        s = w.mask & ~sub  # S = W \ sub ranges over nonempty subsets when sub != W
        if s and m.status[sub]:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & w.mask


def _profile(masks: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for s in masks:
        k = int(s).bit_count()
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))


def independent_profile(sys: IndependenceSystem) -> dict[int, int]:
    """Counts of nonempty U-independent sets by cardinality."""
    return _profile(s for s in np.flatnonzero(sys.independent_flags) if s)


def minimal_profile(sets: Iterable[CrossingSet]) -> dict[int, int]:
    return _profile(s.mask for s in sets)


def maximal_independent_sets(sys: IndependenceSystem) -> list[CrossingSet]:
    return canonical(CrossingSet(s, sys.n) for s in sys.maximal_masks)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.holds


def exchange_property_minimal(src) -> Verdict:
    """For all minimal unknotting S, R and r in R, some s in S gives S - {s} + {r} minimal.

    Pairs with S == R are included.  The witness on failure is (S, R, r).
    Accepts an UnknottingMap or an IndependenceSystem.
    """
    if isinstance(src, UnknottingMap):
        sets = minimal_unknotting_sets(src)
    else:
        sets = canonical(src.minimal_unknotting)
    n = src.n
    minimal = {s.mask for s in sets}
    masks = np.array([s.mask for s in sets], dtype=np.int64)
    seen: set[int] = set()
    for S in sets:
        # good: elements r that some s in S can be traded for
        good = 0
        for r in range(n):
            rb = 1 << r
            if any(((S.mask & ~(1 << s)) | rb) in minimal for s in S):
                good |= rb
        if good in seen:
            continue
        seen.add(good)
        bad = np.flatnonzero(masks & ~good)
        if len(bad):
            R = sets[bad[0]]
            r = ((R.mask & ~good) & -(R.mask & ~good)).bit_length() - 1
            return Verdict(False, (S, R, r), "no exchange element")
    return Verdict(True)


def is_matroid(sys: IndependenceSystem) -> Verdict:
    """Basis exchange over all ordered pairs of maximal independent sets.

    Maximal sets of different sizes already rule out a matroid: repeated
    exchange would carry the larger basis onto the smaller one at constant
    size.  That case returns the two sets as witness.
    """
    bases = list(sys.maximal_masks)
    n = sys.n
    sizes = {b.bit_count() for b in bases}
    if len(sizes) > 1:
        big = max(bases, key=lambda b: (b.bit_count(), b))
        small = min(bases, key=lambda b: (b.bit_count(), b))
        return Verdict(
            False,
            (CrossingSet(big, n), CrossingSet(small, n)),
            "maximal independent sets of different cardinality",
        )
    arr = np.array(bases, dtype=np.int64)
    is_base = np.zeros(1 << n, dtype=bool)
    is_base[arr] = True
    for x in range(n):
        xb = 1 << x
        holders = arr[(arr & xb) != 0]
        rest = holders & ~xb
        # ys[k]: elements y with (M1 - {x}) + {y} a basis, for M1 = holders[k]
        ys = np.zeros(len(holders), dtype=np.int64)
        for y in range(n):
            ys |= is_base[rest | (1 << y)].astype(np.int64) << y
        for v in np.unique(ys):
            misses = np.flatnonzero((arr & v) == 0)
            if len(misses):
                m1 = int(holders[np.flatnonzero(ys == v)[0]])
                return Verdict(
                    False,
                    (CrossingSet(m1, n), CrossingSet(int(arr[misses[0]]), n), x),
                    "no exchange element",
                )
    return Verdict(True)
