"""AnalysisReport: the serializable summary of one diagram's independence system."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from . import kernels
from .coloring import chromatic_number
from .diagram import PlanarDiagram
from .errors import UndefinedForUnknot
from .indep import (
    build_system,
    exchange_property_minimal,
    independent_profile,
    is_matroid,
    maximal_independent_sets,
    minimal_profile,
    minimal_unknotting_sets,
    unknotting_map,
    unknotting_number,
)
from .oracle import ORACLE_NOTE


def _sets(sets) -> list[list[int]]:
    return [list(s) for s in sets]


@dataclass
class AnalysisReport:
    diagram: str
    n: int
    u: int
    minimal_unknotting_sets: list[list[int]]
    minimal_profile: dict[int, int]
    independent_profile: dict[int, int]
    maximal_profile: dict[int, int]
    exchange: bool
    matroid: bool
    chromatic: int | None
    witnesses: dict[str, Any]
    oracle_note: str = ORACLE_NOTE
    labels: list[str] | None = None
    pd: str = ""
    extra: dict[str, Any] = field(default_factory=dict)
    timing: dict[str, float] | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("minimal_profile", "independent_profile", "maximal_profile"):
            d[key] = {str(k): v for k, v in d[key].items()}
        if d["timing"] is None:
            del d["timing"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisReport:
        d = dict(d)
        for key in ("minimal_profile", "independent_profile", "maximal_profile"):
            d[key] = {int(k): v for k, v in d[key].items()}
        d.setdefault("timing", None)
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))

    def to_table(self) -> str:
        def prof(p):
            return ", ".join(f"{k}:{v}" for k, v in p.items()) or "-"

        rows = [
            ("diagram", self.diagram),
            ("crossings", str(self.n)),
            ("u(D)", str(self.u)),
            ("minimal unknotting sets", str(len(self.minimal_unknotting_sets))),
            ("  by size", prof(self.minimal_profile)),
            ("independent sets by size", prof(self.independent_profile)),
            ("maximal independent by size", prof(self.maximal_profile)),
            ("exchange property (minimal sets)", "yes" if self.exchange else "no"),
            ("matroid", "yes" if self.matroid else "no"),
            ("I-chromatic number", "undefined" if self.chromatic is None else str(self.chromatic)),
        ]
        for k, v in sorted(self.extra.items()):
            rows.append((k, json.dumps(v) if not isinstance(v, str) else v))
        if self.timing:
            rows.append(("time (s)", f"{self.timing.get('total', 0):.3f}"))
        width = max(len(r[0]) for r in rows)
        lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
        lines.append(f"note: {self.oracle_note}")
        return "\n".join(lines) + "\n"


def analyze(
    d: PlanarDiagram,
    name: str = "",
    workers: int | None = None,
    cap: int | None = None,
    timing: bool = False,
) -> AnalysisReport:
    t0 = time.perf_counter()
    m = unknotting_map(d, workers=workers, cap=cap)
    t1 = time.perf_counter()
    sys_ = build_system(m, name)
    minimal = minimal_unknotting_sets(m)
    exch = exchange_property_minimal(m)
    mat = is_matroid(sys_)
    witnesses: dict[str, Any] = {}
    if not exch.holds:
        S, R, r = exch.witness
        witnesses["exchange"] = {"S": list(S), "R": list(R), "r": r}
    if not mat.holds:
        w = mat.witness
        witnesses["matroid"] = {"M1": list(w[0]), "M2": list(w[1]), "reason": mat.reason}
        if len(w) == 3:
            witnesses["matroid"]["x"] = w[2]
    chrom = None
    if d.n:
        try:
            chrom, part = chromatic_number(sys_)
            witnesses["chromatic_partition"] = _sets(part)
        except UndefinedForUnknot:
            chrom = None
    t2 = time.perf_counter()
    return AnalysisReport(
        diagram=name or "pd",
        n=d.n,
        u=unknotting_number(m),
        minimal_unknotting_sets=_sets(minimal),
        minimal_profile=minimal_profile(minimal),
        independent_profile=independent_profile(sys_),
        maximal_profile=minimal_profile(maximal_independent_sets(sys_)),
        exchange=exch.holds,
        matroid=mat.holds,
        chromatic=chrom,
        witnesses=witnesses,
        labels=list(d.labels) if d.labels else None,
        pd=d.to_pd(),
        timing={"unknotting_map": t1 - t0, "total": t2 - t0, "backend": kernels.BACKEND} if timing else None,
    )
