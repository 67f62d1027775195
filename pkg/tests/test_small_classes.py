"""Classes with at most four members, completed beyond the listed families."""

from diagseq import count_class, enumerate_class, enumerate_diagonals
from test_acceptance import small_class_forms

# (1,...,q,1) has q + 1 members; q = 2 and q = 3 fall outside the list.
EXTRA = {
    (3, (1, 2, 2)): {(3, 2), (2, 2, 1), (3, 1, 1)},
    (4, (1, 2, 3, 1)): {(4, 2, 1), (3, 3, 1), (3, 2, 2), (3, 2, 1, 1)},
}


def test_one_peak_tail_has_peak_plus_one_members():
    for q in range(1, 9):
        assert count_class(tuple(range(1, q + 1)) + (1,)) == q + 1


def test_completed_characterisation_upto_15():
    forms = {(size, d): ms for size, d, ms in small_class_forms(15)}
    forms.update(EXTRA)
    for n in range(1, 16):
        for d in enumerate_diagonals(n):
            size = count_class(d)
            if size <= 4:
                assert forms.get((size, tuple(d))) == set(enumerate_class(d)), d
