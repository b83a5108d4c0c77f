"""Embedded table of Rolfsen knots as PD codes."""

from __future__ import annotations

from functools import lru_cache
from importlib.resources import files

from .diagram import PlanarDiagram, parse_pd
from .errors import UnknownName

TABLE1_KNOTS = (
    "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3",
    "7_1", "7_2", "7_3", "7_4", "7_5", "7_6", "7_7",
    "8_1", "8_2", "8_3", "8_4", "8_5", "8_6",
)


@lru_cache(maxsize=None)
def _records() -> dict[str, str]:
    text = files("uindep").joinpath("data/rolfsen_pd.txt").read_text()
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, pd = line.split(None, 1)
        out[name] = pd
    return out


def catalog_names() -> list[str]:
    return list(_records())


def load_catalog(name: str) -> PlanarDiagram:
    try:
        pd = _records()[name]
    except KeyError:
        raise UnknownName(f"{name!r} is not in the embedded catalog") from None
    return parse_pd(pd)
