from functools import lru_cache
from pathlib import Path

import pytest

from uindep.catalog import catalog_names, load_catalog
from uindep.indep import build_system, unknotting_map
from uindep.poly import parse_t_poly

DATA = Path(__file__).parent / "data"


def pytest_addoption(parser):
    parser.addoption("--run-long", action="store_true", default=False, help="run long checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="needs --run-long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@lru_cache(maxsize=None)
def umap(name):
    return unknotting_map(load_catalog(name))


@lru_cache(maxsize=None)
def system(name):
    return build_system(umap(name), name)


@lru_cache(maxsize=None)
def knotinfo_jones():
    out = {}
    for line in (DATA / "knotinfo_jones.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        name, poly = line.split("|")
        out[name.strip()] = parse_t_poly(poly)
    return out


SMALL_CATALOG = [n for n in catalog_names() if load_catalog(n).n <= 8]
