from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import EXAMPLE_D, EXAMPLE_EXTREMES
from diagseq import (
    EmptyStratum,
    InvalidPeel,
    NotStrict,
    SProfile,
    WeightMismatch,
    a1_set,
    alpha_bar,
    alpha_under,
    classes_oracle,
    conjugate,
    diagonal_sequence,
    from_s_profile,
    majorizes,
    peel_first_row,
    s_from_strict,
    stratum_max,
    stratum_min,
)
from diagseq.extremal import greedy_largest_part_max

profiles = st.integers(1, 5).flatmap(
    lambda q: st.tuples(st.just(q), st.tuples(*[st.integers(0, 4)] * q))
).map(lambda qs: SProfile(*qs))


class TestAlphaBarUnder:
    @pytest.mark.parametrize(
        "q, s, top, bottom",
        [
            (4, (1, 1, 0, 2), (8, 6, 4, 3), (4, 4, 4, 3, 2, 2, 1, 1)),
            (3, (0, 0, 0), (3, 2, 1), (3, 2, 1)),
            (2, (0, 1), (3, 2), (2, 2, 1)),
        ],
    )
    def test_examples(self, q, s, top, bottom):
        sp = SProfile(q, s)
        assert alpha_bar(sp) == top
        assert alpha_under(sp) == bottom
        assert diagonal_sequence(top) == from_s_profile(sp)

    @given(profiles)
    def test_properties(self, sp):
        top, bottom = alpha_bar(sp), alpha_under(sp)
        d = from_s_profile(sp)
        assert all(a > b for a, b in zip(top, top[1:]))
        assert bottom == conjugate(top)
        assert diagonal_sequence(top) == d == diagonal_sequence(bottom)
        assert Counter(bottom) == Counter(d)
        assert s_from_strict(top) == sp


class TestSFromStrict:
    def test_examples(self):
        assert s_from_strict((8, 6, 4, 3)) == SProfile(4, (1, 1, 0, 2))
        assert s_from_strict((3, 2, 1)) == SProfile(3, (0, 0, 0))

    def test_not_strict(self):
        with pytest.raises(NotStrict):
            s_from_strict((4, 4))


class TestA1:
    def test_examples(self):
        assert a1_set(EXAMPLE_D) == (4, 6, 7, 8)
        assert str(a1_set(EXAMPLE_D)) == "{4,6,7,8}"
        assert a1_set((1, 2, 3, 4, 5)) == (5,)
        assert a1_set((1, 2, 2)) == (2, 3)

    def test_peeled_sets(self):
        assert a1_set((1, 2, 3, 3, 3, 2, 1)) == (3, 5, 6, 7)
        assert a1_set((1, 1, 1)) == (1, 3)

    def test_against_oracle(self):
        for n in range(1, 19):
            for d, members in classes_oracle(n).entries.items():
                a1 = a1_set(d)
                assert min(a1) == d.peak and max(a1) == len(d)
                assert {p[0] for p in members} == set(a1)
                assert {len(p) for p in members} == set(a1)


class TestPeel:
    def test_peel_steps(self):
        d1 = peel_first_row(EXAMPLE_D, 6)
        assert d1 == (1, 2, 3, 3, 3, 2, 1)
        assert peel_first_row(d1, 6) == (1, 2, 2, 2, 1, 1)
        assert peel_first_row(EXAMPLE_D, 8) == (1, 2, 3, 3, 3, 1)

    def test_invalid(self):
        with pytest.raises(InvalidPeel):
            peel_first_row(EXAMPLE_D, 5)

    def test_weight_drops_by_k(self):
        for q in range(1, 5):
            for s in product(range(3), repeat=q):
                d = from_s_profile(SProfile(q, s))
                for k in a1_set(d):
                    assert sum(peel_first_row(d, k)) == sum(d) - k

    def test_matches_removing_first_row(self):
        for n in range(1, 15):
            for d, members in classes_oracle(n).entries.items():
                for p in members:
                    assert peel_first_row(d, p[0]) == diagonal_sequence(p[1:])


class TestMajorizes:
    def test_examples(self):
        assert majorizes((8, 6, 4, 3), (7, 7, 4, 1, 1, 1))
        assert majorizes((7, 7, 4, 1, 1, 1), (4, 4, 4, 3, 2, 2, 1, 1))
        assert majorizes((3, 2, 1), (3, 2, 1))
        assert majorizes((3, 1, 1), (2, 2, 1))
        assert not majorizes((2, 2, 1), (3, 1, 1))

    def test_incomparable(self):
        assert not majorizes((3, 1, 1, 1), (2, 2, 2))
        assert not majorizes((2, 2, 2), (3, 1, 1, 1))

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            majorizes((3,), (2,))

    def test_conjugation_reverses(self):
        from diagseq import enumerate_partitions

        ps = list(enumerate_partitions(9))
        for a in ps:
            for b in ps:
                assert majorizes(a, b) == majorizes(conjugate(b), conjugate(a))
                if a != b:
                    assert not (majorizes(a, b) and majorizes(b, a))


class TestStrata:
    @pytest.mark.parametrize("k", [4, 6, 7, 8])
    def test_example_table(self, k):
        top, bottom = EXAMPLE_EXTREMES[k]
        assert stratum_max(EXAMPLE_D, k) == top
        assert stratum_min(EXAMPLE_D, k) == bottom

    def test_example_greedy(self):
        assert greedy_largest_part_max(EXAMPLE_D, 6) == (6, 6, 6, 3)

    def test_staircase(self):
        assert stratum_max((1, 2, 3), 3) == (3, 2, 1)
        assert stratum_min((1, 2, 3), 3) == (3, 2, 1)

    def test_empty_stratum(self):
        with pytest.raises(EmptyStratum) as err:
            stratum_max(EXAMPLE_D, 5)
        assert err.value.a1 == (4, 6, 7, 8)
        with pytest.raises(EmptyStratum):
            stratum_min(EXAMPLE_D, 9)

    def test_greedy_is_max_of_largest_part_stratum(self):
        for n in range(1, 16):
            for d, members in classes_oracle(n).entries.items():
                for k in a1_set(d):
                    top = greedy_largest_part_max(d, k)
                    layer = [p for p in members if p[0] == k]
                    assert top in layer
                    assert all(majorizes(top, p) for p in layer)
