"""I-chromatic number: fewest U-independent parts partitioning the ground set."""

from __future__ import annotations

from .errors import UndefinedForUnknot
from .indep import CrossingSet, IndependenceSystem, canonical


def partition_into(sys: IndependenceSystem, k: int) -> list[CrossingSet] | None:
    """A partition of the ground set into at most ``k`` nonempty independent parts, or None.

    Elements are placed in index order; a new part is only ever opened by
    the smallest unassigned element, so part permutations are never revisited.
    """
    flags = sys.independent_flags
    n = sys.n
    parts: list[int] = []

    def place(i: int) -> bool:
        if i == n:
            return True
        bit = 1 << i
        for j in range(len(parts)):
            if flags[parts[j] | bit]:
                parts[j] |= bit
                if place(i + 1):
                    return True
                parts[j] &= ~bit
        if len(parts) < k and flags[bit]:
            parts.append(bit)
            if place(i + 1):
                return True
            parts.pop()
        return False

    if not place(0):
        return None
    return canonical(CrossingSet(p, n) for p in parts)


def chromatic_number(sys: IndependenceSystem) -> tuple[int, list[CrossingSet]]:
    """Least k with a partition into k independent parts, plus one witness partition."""
    if sys.n == 0:
        raise ValueError("chromatic number needs a nonempty ground set")
    if sys.is_unknotted_diagram() or not all(sys.independent_flags[1 << i] for i in range(sys.n)):
        raise UndefinedForUnknot("no singleton is independent; the diagram is already unknotted")
    largest = max(int(m).bit_count() for m in sys.maximal_masks)
    k = -(-sys.n // largest)
    while True:
        part = partition_into(sys, k)
        if part is not None:
            return k, part
        k += 1
