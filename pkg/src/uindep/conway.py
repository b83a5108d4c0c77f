"""Rational knot diagrams from integer Conway words.

The word ``(c1, ..., cj)`` is realised as a rational tangle built by twist
regions that alternate between vertical and horizontal, the last region
``cj`` being horizontal, followed by numerator closure.  The tangle fraction
is ``cj + 1/(c(j-1) + ... + 1/c1)``.  Positive entries give alternating
diagrams; a negative entry mirrors its twist region.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, PlanarDiagram
from .errors import InvalidSpec, MultiComponent


@dataclass(frozen=True)
class ConwaySpec:
    twists: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))
        if not self.twists:
            raise InvalidSpec("Conway word must be nonempty")
        if any(t == 0 for t in self.twists):
            raise InvalidSpec("Conway word entries must be nonzero")

    @classmethod
    def parse(cls, text: str) -> ConwaySpec:
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError:
            raise InvalidSpec(f"cannot parse Conway word {text!r}") from None

    def fraction(self) -> tuple[int, int]:
        """(p, q) with p/q the tangle fraction; the closure is a knot iff p is odd."""
        p, q = self.twists[0], 1
        for c in self.twists[1:]:
            p, q = c * p + q, p
        return p, q

    def __str__(self):
        return ",".join(map(str, self.twists))


class _Tangle:
    def __init__(self, vertical_start: bool):
        self.crossings: list[list] = []  # [ids(4, ccw), over02, label]
        self.next_id = 2
        if vertical_start:
            self.ends = {"NW": 0, "SW": 0, "NE": 1, "SE": 1}
        else:
            self.ends = {"NW": 0, "NE": 0, "SW": 1, "SE": 1}

    def _fresh(self) -> int:
        self.next_id += 1
        return self.next_id - 1

    def horizontal(self, positive: bool, label: str):
        ne, se = self.ends["NE"], self.ends["SE"]
        new_ne, new_se = self._fresh(), self._fresh()
        # corners ccw from SW: old SE, new SE, new NE, old NE
        self.crossings.append([[se, new_se, new_ne, ne], not positive, label])
        self.ends["NE"], self.ends["SE"] = new_ne, new_se

    def vertical(self, positive: bool, label: str):
        sw, se = self.ends["SW"], self.ends["SE"]
        new_sw, new_se = self._fresh(), self._fresh()
        # corners ccw from SW: new SW, new SE, old SE, old SW
        self.crossings.append([[new_sw, new_se, se, sw], not positive, label])
        self.ends["SW"], self.ends["SE"] = new_sw, new_se

    def _merge(self, a: int, b: int):
        if a == b:
            raise InvalidSpec("closure produces a free loop")
        for c in self.crossings:
            c[0] = [a if x == b else x for x in c[0]]
        for k, v in self.ends.items():
            if v == b:
                self.ends[k] = a

    def numerator_closure(self):
        self._merge(self.ends["NW"], self.ends["NE"])
        self._merge(self.ends["SW"], self.ends["SE"])


def diagram_from_unoriented(crossings, labels=None) -> PlanarDiagram:
    """Orient and relabel a diagram given as ``(ids_ccw, over02)`` pairs.

    Arc ids are arbitrary hashables appearing exactly twice.  Raises
    MultiComponent when the strands form more than one closed curve.
    """
    n = len(crossings)
    if n == 0:
        return PlanarDiagram(())
    where: dict = {}
    for ci, (ids, _) in enumerate(crossings):
        for p, e in enumerate(ids):
            where.setdefault(e, []).append((ci, p))
    if any(len(v) != 2 for v in where.values()):
        raise InvalidSpec("every arc must join exactly two crossing positions")
    slot = [[0] * 4 for _ in range(n)]
    under_in = [None] * n
    ci, p_in = 0, 0
    label = 0
    for _ in range(2 * n):
        if (p_in % 2 == 0) != crossings[ci][1]:
            under_in[ci] = p_in
        p_out = (p_in + 2) % 4
        label += 1
        slot[ci][p_out] = label
        a, b = where[crossings[ci][0][p_out]]
        ci, p_in = b if a == (ci, p_out) else a
        slot[ci][p_in] = label
        if (ci, p_in) == (0, 0):
            break
    if label != 2 * n or (ci, p_in) != (0, 0):
        raise MultiComponent("Conway word closes to a link, not a knot")
    tuples = []
    for ci in range(n):
        q = under_in[ci]
        tuples.append(tuple(slot[ci][(q + k) % 4] for k in range(4)))
    return PlanarDiagram(tuple(Crossing(t) for t in tuples), labels)


def conway_to_pd(spec: ConwaySpec | tuple | list | str) -> PlanarDiagram:
    if isinstance(spec, str):
        spec = ConwaySpec.parse(spec)
    elif not isinstance(spec, ConwaySpec):
        spec = ConwaySpec(tuple(spec))
    words = spec.twists
    j = len(words)
    if spec.fraction()[0] % 2 == 0:
        raise MultiComponent(f"Conway word ({spec}) closes to a two-component link")
    tangle = _Tangle(vertical_start=(j % 2 == 0))
    for region, c in enumerate(words):
        horizontal = (j - 1 - region) % 2 == 0
        for k in range(abs(c)):
            lab = f"t{region + 1}.{k + 1}"
            if horizontal:
                tangle.horizontal(c > 0, lab)
            else:
                tangle.vertical(c > 0, lab)
    tangle.numerator_closure()
    raw = [(ids, over02) for ids, over02, _ in tangle.crossings]
    labels = tuple(lab for _, _, lab in tangle.crossings)
    return diagram_from_unoriented(raw, labels)
