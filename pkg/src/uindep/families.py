"""Conway families (2n+1), (2n,2), (2n+1,1,2n) and their verification drivers."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .conway import conway_to_pd
from .diagram import PlanarDiagram
from .errors import CapExceeded, InvalidSpec, MultiComponent
from .indep import (
    build_system,
    is_matroid,
    maximal_independent_sets,
    minimal_profile,
    minimal_unknotting_sets,
    unknotting_map,
    unknotting_number,
)
from .oracle import DEFAULT_CAP

KINDS = ("torus_odd", "twist_pair", "bridge_triple")
DEFAULT_MAX_N = {"torus_odd": 5, "twist_pair": 4, "bridge_triple": 2}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int

    def __post_init__(self):
        kind = self.kind.replace("-", "_")
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise InvalidSpec(f"unknown family {self.kind!r}; expected one of {KINDS}")
        if self.n < 1:
            raise InvalidSpec("family index n must be >= 1")

    def word(self) -> tuple[int, ...]:
        n = self.n
        return {
            "torus_odd": (2 * n + 1,),
            "twist_pair": (2 * n, 2),
            "bridge_triple": (2 * n + 1, 1, 2 * n),
        }[self.kind]

    def __str__(self):
        return f"{self.kind}(n={self.n}) = ({','.join(map(str, self.word()))})"


def family_diagram(spec: FamilySpec, cap: int | None = None) -> PlanarDiagram:
    word = spec.word()
    limit = DEFAULT_CAP if cap is None else cap
    if sum(word) > limit:
        raise CapExceeded(f"{spec} has {sum(word)} crossings, cap is {limit}")
    try:
        return conway_to_pd(word)
    except MultiComponent as exc:  # cannot happen for these words
        raise RuntimeError(f"family word {word} closed to a link") from exc


@dataclass
class FamilyCheck:
    family: str
    n: int
    holds: bool
    u: int
    matroid: bool
    details: dict = field(default_factory=dict)


def verify_lemma_unknotting(n: int, cap: int | None = None, workers: int | None = None) -> FamilyCheck:
    """u(D) = n for (2n+1), and every n-subset of crossings unknots it."""
    spec = FamilySpec("torus_odd", n)
    d = family_diagram(spec, cap)
    m = unknotting_map(d, workers=workers, cap=cap)
    u = unknotting_number(m)
    all_n = all(m.status[sum(1 << i for i in c)] for c in combinations(range(d.n), n))
    mat = is_matroid(build_system(m))
    return FamilyCheck(
        str(spec), n, u == n and all_n, u, mat.holds,
        {"all_n_subsets_unknotting": all_n, "expected_u": n},
    )


def verify_proposition(
    part: str,
    n: int,
    pd: PlanarDiagram | None = None,
    cap: int | None = None,
    workers: int | None = None,
) -> FamilyCheck:
    """Run the matroid check on the family diagram named by ``part``.

    a: (2n+1,1,2n), expected non-matroid; ``pd`` substitutes an externally
       supplied diagram of the family.
    b: (2n+1), expected matroid.
    c: (2n,2), expected non-matroid for n >= 2 with minimal unknotting sets
       of sizes 1 and n; the figure-eight (n = 1) is a matroid.
    """
    kind = {"a": "bridge_triple", "b": "torus_odd", "c": "twist_pair"}.get(part)
    if kind is None:
        raise InvalidSpec(f"unknown proposition part {part!r}")
    spec = FamilySpec(kind, n)
    d = pd if pd is not None else family_diagram(spec, cap)
    m = unknotting_map(d, workers=workers, cap=cap)
    sys_ = build_system(m)
    mat = is_matroid(sys_)
    u = unknotting_number(m)
    prof = minimal_profile(minimal_unknotting_sets(m))
    details = {
        "minimal_profile": prof,
        "maximal_profile": minimal_profile(maximal_independent_sets(sys_)),
        "diagram": "external PD" if pd is not None else "reduced alternating",
    }
    if mat.witness is not None:
        details["witness"] = [list(x) if hasattr(x, "mask") else x for x in mat.witness]
    if part == "b":
        sizes = set(details["maximal_profile"])
        holds = mat.holds and sizes == {n}
    elif part == "c":
        coexist = 1 in prof and n in prof
        details["sizes_1_and_n_coexist"] = coexist
        holds = mat.holds if n == 1 else (not mat.holds and coexist)
    else:
        holds = not mat.holds
    return FamilyCheck(str(spec), n, holds, u, mat.holds, details)
