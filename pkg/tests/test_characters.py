import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperfaces.characters import (
    c_frak,
    c_frak_over_f,
    c_frak_over_f_closed,
    chi_beta_special,
    chi_two_face,
    nonvanishing_shapes,
    mn_character,
    mn_character_ordered,
    two_face_family,
)
from hyperfaces.combinat import Partition, class_size, partitions_of, young_stats
from hyperfaces.errors import ShapeMismatch, UnsupportedBeta, UnsupportedN, UnsupportedShape

P = Partition


def test_small_table_s3():
    cls = [P(1, 1, 1), P(2, 1), P(3)]
    assert [mn_character(P(3), c) for c in cls] == [1, 1, 1]
    assert [mn_character(P(2, 1), c) for c in cls] == [2, 0, -1]
    assert [mn_character(P(1, 1, 1), c) for c in cls] == [1, -1, 1]


def test_column_orthogonality_s5():
    lams = list(partitions_of(5))
    for mu in lams:
        for nu in lams:
            s = sum(mn_character(l, mu) * mn_character(l, nu) for l in lams)
            want = math.factorial(5) // class_size(mu) if mu == nu else 0
            assert s == want


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.sampled_from(list(partitions_of(n))),
                                                       st.sampled_from(list(partitions_of(n))),
                                                       st.randoms())))
def test_mn_order_independent(args):
    lam, mu, rnd = args
    order = list(mu.parts)
    rnd.shuffle(order)
    assert mn_character_ordered(lam, tuple(order)) == mn_character(lam, mu)


def test_support_size():
    for n in range(6, 11):
        assert len(nonvanishing_shapes(n)) == 2 * (n - 5) + 6
        assert all(two_face_family(l) is not None for l in nonvanishing_shapes(n))


@pytest.mark.parametrize("n", range(6, 10))
def test_two_face_table(n):
    face = P(2, n - 2)
    support = set(nonvanishing_shapes(n))
    for lam in partitions_of(n):
        v = mn_character(lam, face)
        assert chi_two_face(lam, n) == v
        if lam not in support:
            assert v == 0


@pytest.mark.parametrize("n", range(6, 10))
def test_beta_special(n):
    for beta in partitions_of(n):
        if beta.min_part() < 3:
            continue
        for lam in nonvanishing_shapes(n):
            assert chi_beta_special(lam, beta) == mn_character(lam, beta)


def test_closed_form_errors():
    with pytest.raises(UnsupportedN):
        chi_two_face(P(5), 5)
    with pytest.raises(UnsupportedBeta):
        chi_beta_special(P(6), P(2, 4))
    with pytest.raises(UnsupportedShape):
        chi_beta_special(P(3, 2, 1), P(3, 3))
    with pytest.raises(ShapeMismatch):
        mn_character(P(3), P(2, 2))


def test_c_frak_matches_fraction_form():
    for lam in partitions_of(5):
        f = young_stats(lam).dimension
        for m in range(1, 6):
            assert c_frak(lam, m) == c_frak_over_f(lam, m) * f


@pytest.mark.parametrize("n", range(6, 11))
def test_content_closed_forms(n):
    for lam in nonvanishing_shapes(n):
        fam = two_face_family(lam)
        if fam.kind == "col22" or fam == ("row", 2):
            with pytest.raises(UnsupportedShape):
                c_frak_over_f_closed(lam, 2)
            continue
        for m in range(1, n + 1):
            assert c_frak_over_f_closed(lam, m) == c_frak_over_f(lam, m)


def test_row_content_ratio():
    # trivial shape: binomial(n-1, m-1)
    assert c_frak_over_f(P(6), 2) == Fraction(5)
