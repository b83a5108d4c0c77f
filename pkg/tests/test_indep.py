from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import SMALL_CATALOG, system, umap
from uindep.catalog import TABLE1_KNOTS, load_catalog
from uindep.coloring import chromatic_number, partition_into
from uindep.conway import conway_to_pd
from uindep.diagram import mirror, parse_pd
from uindep.errors import UndefinedForUnknot
from uindep.indep import (
    CrossingSet,
    IndependenceSystem,
    build_system,
    exchange_property_minimal,
    independent_profile,
    is_matroid,
    is_u_independent,
    is_u_independent_literal,
    maximal_independent_sets,
    minimal_profile,
    minimal_unknotting_sets,
    unknotting_map,
    unknotting_number,
)
from uindep.isomorphism import independence_isomorphic, preserves_independence


def cs(n, *idx):
    return CrossingSet.from_indices(idx, n)


# ---- brute-force oracles ---------------------------------------------------

def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_chromatic(sys):
    best = None
    for part in set_partitions(list(range(sys.n))):
        if all(is_u_independent(sys, CrossingSet.from_indices(p, sys.n)) for p in part):
            best = len(part) if best is None else min(best, len(part))
    return best


def brute_isomorphic(s1, s2):
    f1 = s1.independent_flags
    for perm in permutations(range(s1.n)):
        img = [sum(1 << perm[i] for i in range(s1.n) if x >> i & 1) for x in range(1 << s1.n)]
        if all(f1[x] == s2.independent_flags[img[x]] for x in range(1 << s1.n)):
            return True
    return False


# ---- CrossingSet -----------------------------------------------------------

class TestCrossingSet:
    def test_algebra(self):
        a, b = cs(5, 0, 1, 2), cs(5, 2, 3)
        assert (a | b).mask == 0b1111
        assert (a & b) == cs(5, 2)
        assert (a - b) == cs(5, 0, 1)
        assert (a ^ b) == cs(5, 0, 1, 3)
        assert cs(5, 0) < a and a <= a and not a < a
        assert len(a) == 3 and 1 in a and 4 not in a
        assert a.complement() == cs(5, 3, 4)

    def test_bits_beyond_n(self):
        with pytest.raises(ValueError):
            CrossingSet(0b1000, 3)

    @given(st.integers(0, 14).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1))))
    def test_iteration_matches_mask(self, nm):
        n, mask = nm
        s = CrossingSet(mask, n)
        assert CrossingSet.from_indices(list(s), n) == s
        assert len(s) == bin(mask).count("1")


# ---- unknotting map and minimal sets --------------------------------------

class TestUnknottingMap:
    def test_unknot(self):
        m = unknotting_map(parse_pd(""))
        assert m.status.tolist() == [True]
        assert minimal_unknotting_sets(m) == [CrossingSet(0, 0)]
        assert unknotting_number(m) == 0

    def test_trefoil(self):
        m = umap("3_1")
        # switching one or two crossings leaves a one-crossing-twist unknot
        assert [m.is_unknotting(s) for s in range(8)] == [False, True, True, True, True, True, True, False]

    def test_7_3_six_unknotting_pairs(self):
        pairs = [s for s in umap("7_3").unknotting_sets() if len(s) == 2]
        assert len(pairs) == 6
        # the six pairs live on one 4-element block
        block = CrossingSet(0, 7)
        for p in pairs:
            block = block | p
        assert len(block) == 4

    def test_7_3_profile(self):
        m = umap("7_3")
        assert minimal_profile(minimal_unknotting_sets(m)) == {2: 6, 3: 12}
        assert unknotting_number(m) == 2

    def test_5_2_profile(self):
        assert minimal_profile(minimal_unknotting_sets(umap("5_2"))) == {1: 2, 2: 3}

    def test_order_is_size_then_lex(self):
        sets = minimal_unknotting_sets(umap("7_3"))
        assert sets == sorted(sets, key=lambda s: (len(s), tuple(s)))

    def test_unknotting_numbers(self):
        assert unknotting_number(unknotting_map(conway_to_pd((5, 1, 4)))) == 3
        assert unknotting_number(unknotting_map(conway_to_pd((7,)))) == 3


# ---- system properties -----------------------------------------------------

@pytest.mark.parametrize("name", SMALL_CATALOG)
class TestSystemProperties:
    def test_antichain(self, name):
        ms = system(name).minimal_unknotting
        assert not any(a < b for a in ms for b in ms)

    def test_hereditary(self, name):
        s = system(name)
        for w in np.flatnonzero(s.independent_flags):
            w = int(w)
            for i in range(s.n):
                if w >> i & 1:
                    assert s.independent_flags[w & ~(1 << i)]

    def test_minimal_sets_are_maximal(self, name):
        s = system(name)
        maximal = set(maximal_independent_sets(s))
        assert set(s.minimal_unknotting) <= maximal

    def test_literal_rule_agrees(self, name):
        s, m = system(name), umap(name)
        for w in range(1 << s.n):
            w = CrossingSet(w, s.n)
            lit = is_u_independent_literal(m, w)
            assert lit == is_u_independent(s, w) == s.is_independent(w)

    def test_mirror_invariance(self, name):
        mm = build_system(unknotting_map(mirror(load_catalog(name))))
        assert mm.minimal_unknotting == system(name).minimal_unknotting

    def test_u_is_min_minimal_size(self, name):
        assert unknotting_number(umap(name)) == min(len(s) for s in system(name).minimal_unknotting)

    def test_exchange_implies_equal_sizes(self, name):
        if exchange_property_minimal(umap(name)):
            assert len({len(s) for s in system(name).minimal_unknotting}) == 1

    def test_matroid_implies_equal_bases(self, name):
        s = system(name)
        if is_matroid(s):
            assert len({len(b) for b in maximal_independent_sets(s)}) == 1

    def test_circuits_are_minimal_dependent(self, name):
        s = system(name)
        for c in s.circuit_masks:
            assert not s.independent_flags[c]
            assert all(s.independent_flags[c & ~(1 << i)] for i in range(s.n) if c >> i & 1)


def test_converse_fails_somewhere():
    """Some maximal independent set is not a minimal unknotting set."""
    found = [n for n in TABLE1_KNOTS if set(maximal_independent_sets(system(n))) - set(system(n).minimal_unknotting)]
    assert "7_3" in found and "6_2" in found


class TestIndependence:
    def test_empty_always_independent(self):
        for n in ("3_1", "7_3"):
            assert is_u_independent(system(n), CrossingSet(0, system(n).n))

    def test_7_3_non_unknotting_independent_pair(self):
        m, s = umap("7_3"), system("7_3")
        pairs = [cs(7, i, j) for i, j in combinations(range(7), 2)]
        assert any(not m.is_unknotting(p) and is_u_independent(s, p) for p in pairs)

    def test_strict_superset_of_minimal_is_dependent(self):
        s = system("7_3")
        for m in s.minimal_unknotting:
            for i in set(range(7)) - set(m):
                assert not is_u_independent(s, m | cs(7, i))

    def test_6_1_block(self):
        s, m = system("6_1"), umap("6_1")
        singles = [i for i in range(6) if m.is_unknotting(1 << i)]
        block = [i for i in range(6) if i not in singles]
        assert len(singles) == 2 and len(block) == 4
        assert all(is_u_independent(s, cs(6, i, j)) for i, j in combinations(block, 2))
        assert not any(is_u_independent(s, cs(6, *t)) for t in combinations(range(6), 3))

    def test_profiles_6_1_6_2(self):
        assert independent_profile(system("6_1")) == {1: 6, 2: 6}
        assert independent_profile(system("6_2")) == {1: 6, 2: 10}

    def test_maximal_6_1(self):
        assert minimal_profile(maximal_independent_sets(system("6_1"))) == {1: 2, 2: 6}

    def test_maximal_unknot(self):
        s = build_system(unknotting_map(parse_pd("")))
        assert maximal_independent_sets(s) == [CrossingSet(0, 0)]

    def test_antichain_enforced(self):
        with pytest.raises(ValueError):
            IndependenceSystem(3, (cs(3, 0), cs(3, 0, 1)))


class TestExchangeAndMatroid:
    @pytest.mark.parametrize("name,expected", [("4_1", True), ("8_3", False), ("5_2", False), ("3_1", True)])
    def test_exchange(self, name, expected):
        assert bool(exchange_property_minimal(umap(name))) == expected

    def test_8_3_witness_from_disjoint_pairs(self):
        v = exchange_property_minimal(umap("8_3"))
        S, R, r = v.witness
        assert len(S) == len(R) == 2 and not (S & R).mask and r in R
        assert all(not umap("8_3").is_unknotting((S - cs(8, s)) | cs(8, r)) for s in S)

    @pytest.mark.parametrize("word,expected", [((3,), True), ((4, 2), False), ((2, 2), True), ((7,), True)])
    def test_matroid(self, word, expected):
        assert bool(is_matroid(build_system(unknotting_map(conway_to_pd(word))))) == expected

    def test_matroid_literal_failure_with_equal_sizes(self):
        # two disjoint bases {0,1},{2,3} and nothing else: sizes agree, exchange fails
        s = IndependenceSystem(4, (cs(4, 0, 1), cs(4, 2, 3), cs(4, 0, 2), cs(4, 1, 3), cs(4, 0, 3)))
        v = is_matroid(s)
        # maximal sets are the five listed pairs plus {1,2}? {1,2} is independent and maximal
        assert bool(v) == brute_matroid(s)


def brute_matroid(s):
    bases = [set(b) for b in maximal_independent_sets(s)]
    fs = [frozenset(b) for b in bases]
    return all(
        any(frozenset((m1 - {x}) | {y}) in fs for y in m2)
        for m1 in bases for m2 in bases for x in m1
    )


@pytest.mark.parametrize("name", SMALL_CATALOG)
def test_matroid_matches_brute(name):
    assert bool(is_matroid(system(name))) == brute_matroid(system(name))


class TestChromatic:
    @pytest.mark.parametrize("name,k", [("7_2", 4), ("7_7", 5), ("3_1", 3)])
    def test_values(self, name, k):
        got, part = chromatic_number(system(name))
        assert got == k
        assert sorted(i for p in part for i in p) == list(range(system(name).n))
        assert all(system(name).is_independent(p) for p in part)
        assert partition_into(system(name), k - 1) is None

    @pytest.mark.parametrize("name", [n for n in SMALL_CATALOG if load_catalog(n).n <= 7])
    def test_matches_brute_force(self, name):
        assert chromatic_number(system(name))[0] == brute_chromatic(system(name))

    def test_unknot_undefined(self):
        s = build_system(unknotting_map(parse_pd("X[1,1,2,2]")))
        with pytest.raises(UndefinedForUnknot):
            chromatic_number(s)


class TestIsomorphism:
    def test_6_1_6_3(self):
        phi = independence_isomorphic(system("6_1"), system("6_3"))
        assert phi is not None
        assert preserves_independence(system("6_1"), system("6_3"), phi)

    def test_6_1_6_2(self):
        assert independence_isomorphic(system("6_1"), system("6_2")) is None

    def test_self_identity(self):
        assert independence_isomorphic(system("7_7"), system("7_7")) == {i: i for i in range(7)}

    @pytest.mark.parametrize("a,b", [("6_1", "6_3"), ("6_1", "6_2"), ("7_2", "7_7"), ("5_2", "5_1"), ("7_4", "7_1")])
    def test_matches_brute_force(self, a, b):
        assert (independence_isomorphic(system(a), system(b)) is not None) == brute_isomorphic(system(a), system(b))

    def test_isomorphic_systems_share_invariants(self):
        s1, s2 = system("6_1"), system("6_3")
        assert independent_profile(s1) == independent_profile(s2)
        assert chromatic_number(s1)[0] == chromatic_number(s2)[0]
        assert bool(is_matroid(s1)) == bool(is_matroid(s2))

    @pytest.mark.parametrize("name,word", [("6_1", (4, 2)), ("7_3", (4, 3)), ("8_3", (4, 4))])
    def test_two_reduced_alternating_diagrams(self, name, word):
        other = build_system(unknotting_map(conway_to_pd(word)))
        phi = independence_isomorphic(system(name), other)
        assert phi is not None and preserves_independence(system(name), other, phi)
