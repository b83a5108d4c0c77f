"""Planar diagrams of knots: PD parsing, validation, crossing switches.

PD convention: ``X[a,b,c,d]`` lists the four edge labels counterclockwise,
starting from the incoming under-strand.  Position ``k`` of a crossing sits
at angle ``-90 + 90*k`` degrees (0 = south, 1 = east, 2 = north, 3 = west).

Crossing sign: ``+1`` when the over-strand, rotated counterclockwise by 90
degrees, points along the under-strand.  With positions as above this is
``(under_out - over_out) % 4 == 1``.  A crossing ``X[1,1,2,2]`` is a
positive kink.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, LabelMultiplicity, MultiComponent, PDParseError

_TOKEN = re.compile(r"X\[([^\]]*)\]")


@dataclass(frozen=True)
class Crossing:
    """Four edge labels in counterclockwise order.

    The strand through positions 0 and 2 always runs 0 -> 2.  When
    ``over_diagonal`` is False that strand is the under-strand (plain PD);
    when True it is the over-strand.
    """

    edges: tuple[int, int, int, int]
    over_diagonal: bool = False

    def switched(self) -> Crossing:
        return Crossing(self.edges, not self.over_diagonal)

    def a_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Edge pairs joined by the A-smoothing."""
        a, b, c, d = self.edges
        if self.over_diagonal:
            return (b, c), (d, a)
        return (a, b), (c, d)

    def b_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        a, b, c, d = self.edges
        if self.over_diagonal:
            return (a, b), (c, d)
        return (b, c), (d, a)


@dataclass(frozen=True, eq=False)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.crossings):
                raise PDParseError("one display label per crossing required")
        _check_labels(self.crossings)
        _ = self._trace  # raises MultiComponent for links

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def _trace(self) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
        return _trace_strands(self.crossings)

    @property
    def passes(self) -> tuple[tuple[int, int], ...]:
        """(crossing, in-position) for each strand pass, in traversal order."""
        return self._trace[0]

    @property
    def odd_strand_in(self) -> tuple[int, ...]:
        """In-position (1 or 3) of the strand through positions 1 and 3."""
        return self._trace[1]

    def sign(self, i: int) -> int:
        c = self.crossings[i]
        odd_out = (self.odd_strand_in[i] + 2) % 4
        if c.over_diagonal:
            under_out, over_out = odd_out, 2
        else:
            under_out, over_out = 2, odd_out
        return 1 if (under_out - over_out) % 4 == 1 else -1

    def signs(self) -> tuple[int, ...]:
        return tuple(self.sign(i) for i in range(self.n))

    def flag_mask(self) -> int:
        return sum(1 << i for i, c in enumerate(self.crossings) if c.over_diagonal)

    def standard_tuples(self) -> tuple[tuple[int, int, int, int], ...]:
        """Crossings rewritten in plain PD form (under-in edge first)."""
        out = []
        for i, c in enumerate(self.crossings):
            q = self.odd_strand_in[i] if c.over_diagonal else 0
            out.append(tuple(c.edges[(q + k) % 4] for k in range(4)))
        return tuple(out)

    def to_pd(self) -> str:
        return " ".join("X[%d,%d,%d,%d]" % t for t in self.standard_tuples())

    def __eq__(self, other):
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return self.standard_tuples() == other.standard_tuples()

    def __hash__(self):
        return hash(self.standard_tuples())

    def __repr__(self):
        return f"PlanarDiagram({self.to_pd()!r})"

    def __str__(self):
        return self.to_pd()


def _check_labels(crossings: Sequence[Crossing]) -> None:
    counts: dict[int, int] = {}
    for c in crossings:
        if len(c.edges) != 4:
            raise PDParseError(f"crossing {c.edges} does not have 4 entries")
        for e in c.edges:
            counts[e] = counts.get(e, 0) + 1
    expected = set(range(1, 2 * len(crossings) + 1))
    bad = sorted(e for e, k in counts.items() if k != 2)
    if bad:
        raise LabelMultiplicity(f"edge label(s) {bad} do not appear exactly twice")
    if set(counts) != expected:
        raise LabelMultiplicity(
            f"edge labels must be exactly 1..{2 * len(crossings)}, got {sorted(counts)}"
        )


def _trace_strands(crossings: Sequence[Crossing]):
    n = len(crossings)
    if n == 0:
        return (), ()
    where: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(crossings):
        for p, e in enumerate(c.edges):
            where.setdefault(e, []).append((ci, p))
    odd_in = [None] * n
    passes = []
    ci, p_in = 0, 0
    while True:
        passes.append((ci, p_in))
        if p_in % 2 == 0:
            if p_in != 0:
                raise PDParseError(f"crossing {ci} is traversed against its PD orientation")
        else:
            odd_in[ci] = p_in
        p_out = (p_in + 2) % 4
        e = crossings[ci].edges[p_out]
        a, b = where[e]
        ci, p_in = b if a == (ci, p_out) else a
        if (ci, p_in) == (0, 0):
            break
        if len(passes) > 2 * n:
            raise PDParseError("strand trace does not close")
    if len(passes) != 2 * n:
        raise MultiComponent(
            f"strand trace covers {len(passes)} of {2 * n} passes; input is a link"
        )
    return tuple(passes), tuple(odd_in)


def validate(d: PlanarDiagram) -> None:
    """Re-check the diagram invariants; raises on failure."""
    _check_labels(d.crossings)
    _trace_strands(d.crossings)


def from_tuples(tuples: Iterable[Sequence[int]], labels=None) -> PlanarDiagram:
    crossings = []
    for t in tuples:
        t = tuple(int(x) for x in t)
        if len(t) != 4:
            raise PDParseError(f"crossing {t} has arity {len(t)}, expected 4")
        crossings.append(Crossing(t))
    return PlanarDiagram(tuple(crossings), labels)


def parse_pd(text: str) -> PlanarDiagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` tokens; ``#`` starts a comment."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    tuples = []
    pos = 0
    for m in _TOKEN.finditer(body):
        if body[pos:m.start()].strip():
            raise PDParseError(f"unexpected text {body[pos:m.start()].strip()!r}")
        pos = m.end()
        raw = [x.strip() for x in m.group(1).split(",")]
        if not all(x.isdigit() and int(x) > 0 for x in raw):
            raise PDParseError(f"malformed token {m.group(0)!r}")
        if len(raw) != 4:
            raise PDParseError(f"token {m.group(0)!r} has arity {len(raw)}, expected 4")
        tuples.append([int(x) for x in raw])
    if body[pos:].strip():
        raise PDParseError(f"unexpected text {body[pos:].strip()!r}")
    return from_tuples(tuples)


def _as_indices(d: PlanarDiagram, s) -> set[int]:
    if isinstance(s, int):
        idx = {i for i in range(s.bit_length()) if s >> i & 1}
    elif hasattr(s, "mask"):
        idx = set(s)
    else:
        idx = set(s)
    for i in idx:
        if not 0 <= i < d.n:
            raise IndexOutOfRange(f"crossing index {i} outside 0..{d.n - 1}")
    return idx


def switch_crossings(d: PlanarDiagram, s) -> PlanarDiagram:
    """Switch every crossing in ``s`` (indices, bitmask int, or CrossingSet)."""
    idx = _as_indices(d, s)
    return PlanarDiagram(
        tuple(c.switched() if i in idx else c for i, c in enumerate(d.crossings)), d.labels
    )


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    return PlanarDiagram(tuple(c.switched() for c in d.crossings), d.labels)


def writhe(d: PlanarDiagram) -> int:
    return sum(d.signs())


def is_alternating(d: PlanarDiagram) -> bool:
    """True iff consecutive passes along the strand alternate over/under."""
    if d.n == 0:
        return True
    kinds = []
    for ci, p_in in d.passes:
        on_even = p_in % 2 == 0
        kinds.append(on_even == d.crossings[ci].over_diagonal)  # True = over
    return all(kinds[i] != kinds[i - 1] for i in range(len(kinds)))


def component_count(d: PlanarDiagram) -> int:
    validate(d)
    return 1
