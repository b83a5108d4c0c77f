import numpy as np
import pytest

from conftest import SMALL_CATALOG, knotinfo_jones
from uindep import _kernels_py, kernels
from uindep.catalog import catalog_names, load_catalog
from uindep.conway import conway_to_pd
from uindep.diagram import mirror, parse_pd, switch_crossings
from uindep.errors import CapExceeded
from uindep.oracle import (
    _pair_tables,
    is_unknot,
    jones_normalized,
    kauffman_bracket,
    skein_bracket,
    unknot_table,
)
from uindep.poly import LaurentPoly, bracket_to_jones

KINK = parse_pd("X[1,1,2,2]")


class TestBracket:
    def test_unknot(self):
        assert kauffman_bracket(parse_pd("")) == 1

    def test_kinks(self):
        assert kauffman_bracket(KINK) == LaurentPoly({3: -1})
        assert kauffman_bracket(mirror(KINK)) == LaurentPoly({-3: -1})

    def test_trefoil_golden(self):
        # positive trefoil as listed in the catalog
        assert str(kauffman_bracket(load_catalog("3_1"))) == "-A^5 - A^-3 + A^-7"
        assert str(kauffman_bracket(mirror(load_catalog("3_1")))) == "A^7 - A^3 - A^-5"

    @pytest.mark.parametrize("name", SMALL_CATALOG)
    def test_state_sum_equals_skein(self, name):
        d = load_catalog(name)
        assert kauffman_bracket(d) == skein_bracket(d)
        s = {i for i in range(d.n) if i % 3 == 0}
        assert kauffman_bracket(switch_crossings(d, s)) == skein_bracket(switch_crossings(d, s))

    def test_independent_of_crossing_order(self):
        d = load_catalog("7_7")
        reordered = parse_pd(" ".join(reversed(d.to_pd().split())))
        assert kauffman_bracket(reordered) == kauffman_bracket(d)


class TestJones:
    def test_kink_normalizes_to_one(self):
        assert jones_normalized(parse_pd("")) == 1
        assert jones_normalized(KINK) == 1
        assert jones_normalized(mirror(KINK)) == 1

    @pytest.mark.parametrize("name", catalog_names())
    def test_matches_published_jones(self, name):
        assert bracket_to_jones(jones_normalized(load_catalog(name))) == knotinfo_jones()[name]

    @pytest.mark.parametrize("name", ["3_1", "5_2", "7_6", "8_5"])
    def test_mirror_negates_exponents(self, name):
        d = load_catalog(name)
        assert jones_normalized(mirror(d)) == jones_normalized(d).reflect()

    def test_two_diagrams_of_6_1(self):
        assert jones_normalized(conway_to_pd((4, 2))) == jones_normalized(load_catalog("6_1"))


class TestIsUnknot:
    def test_examples(self):
        assert is_unknot(parse_pd(""))
        assert not is_unknot(load_catalog("3_1"))
        d = load_catalog("4_1")
        assert all(is_unknot(switch_crossings(d, {i})) for i in range(4))

    @pytest.mark.parametrize("name", catalog_names())
    def test_catalog_knots_are_knotted(self, name):
        assert not is_unknot(load_catalog(name))

    def test_trefoil_singletons(self):
        d = load_catalog("3_1")
        assert all(is_unknot(switch_crossings(d, {i})) for i in range(3))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            is_unknot(load_catalog("10_8"), cap=8)


class TestUnknotTable:
    @pytest.mark.parametrize("name", ["3_1", "5_2", "6_2", "7_3", "8_3"])
    def test_matches_per_switch_oracle(self, name):
        d = load_catalog(name)
        table = unknot_table(d)
        brute = [is_unknot(switch_crossings(d, s)) for s in range(1 << d.n)]
        assert table.tolist() == brute

    @pytest.mark.parametrize("name", ["4_1", "8_6"])
    def test_mirror_table_identical(self, name):
        d = load_catalog(name)
        assert np.array_equal(unknot_table(d), unknot_table(mirror(d)))

    def test_workers_bit_identical(self):
        d = load_catalog("10_8")
        base = unknot_table(d, workers=1)
        for w in (2, 3, 8):
            assert np.array_equal(unknot_table(d, workers=w), base)

    def test_unknot_table_of_unknot(self):
        assert unknot_table(parse_pd("")).tolist() == [True]


@pytest.mark.parametrize("name", ["3_1", "6_3", "8_4"])
def test_backends_agree(name):
    d = load_catalog(name)
    p0, p1 = _pair_tables(d)
    loops_py = _kernels_py.state_loop_counts(p0, p1, d.edge_count)
    loops = kernels.state_loop_counts(p0, p1, d.edge_count)
    assert np.array_equal(loops_py, loops)
    t = np.arange(1 << d.n, dtype=np.int64)
    assert np.array_equal(
        _kernels_py.switch_histograms(loops, d.n, t), kernels.switch_histograms(loops, d.n, t)
    )


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
