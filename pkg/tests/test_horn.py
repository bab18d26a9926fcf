import itertools

import pytest

from horncalc.errors import DomainError
from horncalc.horn import HornTable, horn0, horn_classes, horn_enumerate, horn_member, is_intersecting_exact
from horncalc.subsets import CardSubset, PositionTuple, enumerate_subsets
from horncalc.tables import APPENDIX_A_KEYS, appendix_a_tuple


def pt(n, *parts):
    return PositionTuple.from_lists(n, parts)


class TestMembership:
    def test_failing_pair(self, cache):
        v = horn_member(pt(4, [1, 4], [2, 3]), cache)
        assert not v.member
        assert v.violation.kind == "composition"
        assert v.violation.d == 1
        assert v.violation.j_tuple == pt(2, [1], [2])
        assert v.violation.edim_value == -1

    def test_passing_pair(self, cache):
        v = horn_member(pt(4, [1, 4], [2, 4]), cache)
        assert v.member and v.edim == 1

    def test_symmetric_triple(self, cache):
        v = horn_member(pt(6, [2, 4, 6], [2, 4, 6], [2, 4, 6]), cache)
        assert v.member and v.edim == 0

    def test_rank_two_chain(self, cache):
        v = horn_member(pt(2, [1], [2], [2]), cache)
        assert v.member and v.edim == 0

    def test_negative_edim_violation(self, cache):
        v = horn_member(pt(4, [1, 2], [1, 2]), cache)
        assert not v.member
        assert v.violation.kind == "edim"
        assert v.violation.edim_value == v.edim < 0


class TestIntersectingAlias:
    def test_examples(self, cache):
        assert is_intersecting_exact(pt(4, [1, 4], [2, 4]), cache)
        assert not is_intersecting_exact(pt(4, [1, 4], [2, 3]), cache)

    def test_dense_components_always_intersect(self, cache):
        # (J1, {r-d+1..r}, ..., {r-d+1..r}) passes for every J1
        r, d, s = 5, 2, 3
        top = list(range(r - d + 1, r + 1))
        for j1 in enumerate_subsets(d, r):
            tup = PositionTuple((j1,) + (CardSubset(r, tuple(top)),) * (s - 1))
            assert is_intersecting_exact(tup, cache)

    def test_s1_everything_passes(self, cache):
        for sub in enumerate_subsets(2, 4):
            assert is_intersecting_exact(PositionTuple((sub,)), cache)


class TestEnumeration:
    def test_rank1_chain_classes(self, cache):
        classes = horn_classes(1, 2, 3, cache)
        assert [(t.sort_key(), e) for t, e in classes] == [
            (((1,), (2,), (2,)), 0),
            (((2,), (2,), (2,)), 1),
        ]

    def test_full_cardinality(self, cache):
        classes = horn_classes(3, 3, 4, cache)
        assert len(classes) == 1
        tup, e = classes[0]
        assert e == 0 and all(p.elements == (1, 2, 3) for p in tup.parts)

    def test_against_reference_tables(self, cache):
        for d, r in APPENDIX_A_KEYS:
            expected = [(t.canonical(), e) for t, e in appendix_a_tuple(d, r)]
            assert horn_classes(d, r, 3, cache) == expected

    def test_enumerate_is_closed_under_permutation(self, cache):
        members = {t for t, _ in horn_enumerate(2, 4, 3, cache)}
        for t in list(members):
            assert t.permutations() <= members

    def test_enumerate_matches_membership(self, cache):
        members = {t for t, _ in horn_enumerate(2, 4, 2, cache)}
        for parts in itertools.product(enumerate_subsets(2, 4), repeat=2):
            tup = PositionTuple(parts)
            assert (tup in members) == horn_member(tup, cache).member

    def test_bad_args(self, cache):
        with pytest.raises(DomainError):
            horn_enumerate(3, 2, 3, cache)
        with pytest.raises(DomainError):
            horn_enumerate(1, 2, 0, cache)


class TestZeroSlice:
    def test_rank2(self, cache):
        zs = horn0(1, 2, 3, cache)
        assert len(zs) == 3
        assert {t.canonical() for t in zs} == {pt(2, [1], [2], [2])}

    def test_rank3_level2(self, cache):
        zs = horn0(2, 3, 3, cache)
        expected = pt(3, [1, 2], [2, 3], [2, 3]).permutations() | pt(3, [1, 3], [1, 3], [2, 3]).permutations()
        assert set(zs) == expected

    def test_rank4_level1(self, cache):
        zs = horn0(1, 4, 3, cache)
        expected = (
            pt(4, [1], [4], [4]).permutations()
            | pt(4, [2], [3], [4]).permutations()
            | pt(4, [3], [3], [3]).permutations()
        )
        assert set(zs) == expected

    def test_full_level_admitted(self, cache):
        zs = horn0(3, 3, 2, cache)
        assert len(zs) == 1 and zs[0] == pt(3, [1, 2, 3], [1, 2, 3])


class TestStructuralProperties:
    def test_composition_closure_and_strengthening(self, cache):
        # exhaustive at small scale: members compose into members, and the
        # composed edim dominates the inner edim
        for s in (2, 3):
            for n in range(2, 6):
                for r in range(2, n + 1):
                    outer = horn_enumerate(r, n, s, cache)
                    for d in range(1, r):
                        inner = horn_enumerate(d, r, s, cache)
                        for t, te in outer:
                            for u, ue in inner:
                                comp = t.compose(u)
                                assert horn_member(comp, cache).member
                                assert comp.edim() >= ue

    def test_permutation_equivariance(self, cache):
        import random

        rng = random.Random(5)
        subs = enumerate_subsets(2, 5)
        for _ in range(150):
            tup = PositionTuple(tuple(rng.choice(subs) for _ in range(3)))
            base = horn_member(tup, cache).member
            for perm in itertools.permutations(range(3)):
                shuffled = PositionTuple(tuple(tup.parts[p] for p in perm))
                assert horn_member(shuffled, cache).member == base

    def test_cold_warm_cache_agree(self, cache):
        fresh = HornTable()
        for parts in itertools.product(enumerate_subsets(2, 4), repeat=3):
            tup = PositionTuple(parts)
            assert horn_member(tup, fresh).member == horn_member(tup, cache).member

    def test_verdict_violation_rechecks(self, cache):
        for parts in itertools.product(enumerate_subsets(2, 4), repeat=2):
            tup = PositionTuple(parts)
            v = horn_member(tup, cache)
            if v.member:
                continue
            if v.violation.kind == "edim":
                assert tup.edim() == v.violation.edim_value < 0
            else:
                j = v.violation.j_tuple
                assert j in horn0(v.violation.d, tup.cardinality, tup.s, cache)
                assert j.edim() == 0
                assert tup.compose(j).edim() == v.violation.edim_value < 0
