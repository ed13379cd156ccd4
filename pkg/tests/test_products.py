import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperfaces.combinat import Partition, Permutation, class_size, partitions_of
from hyperfaces.errors import BoundExceeded, NonIntegralGenus, ShapeMismatch
from hyperfaces.products import (
    CycleHistogram,
    brute_force_histogram,
    genus_of,
    parity_allowed,
    xi_character,
    xi_fixed_first,
    xi_histogram,
)

P = Partition

# frozen from the brute-force oracle
FROZEN = {
    (P(2, 3), P(2, 3)): {1: 6, 3: 13, 5: 1},
    (P(2, 4), P(3, 3)): {2: 28, 4: 12},
    (P(2, 3), P(1, 4)): {1: 12, 3: 18},
    (P(2, 3), P(5)): {2: 18, 4: 6},
}


@pytest.mark.parametrize("types,counts", FROZEN.items(), ids=lambda v: str(v))
def test_frozen_histograms(types, counts):
    hist = brute_force_histogram(*types)
    assert hist == CycleHistogram(types[0].n, counts)
    assert hist.total == class_size(types[1])


def test_histogram_merge():
    a = CycleHistogram(5, {1: 2, 3: 0})
    b = CycleHistogram(5, {1: 1, 5: 4})
    assert (a + b).counts == {1: 3, 5: 4}
    assert a[3] == 0


@given(st.integers(1, 500))
def test_chunk_size_irrelevant(chunk):
    ref = brute_force_histogram(P(2, 4), P(3, 3))
    assert brute_force_histogram(P(2, 4), P(3, 3), chunk_size=chunk) == ref


@given(st.permutations(range(6)))
def test_alpha_representative_irrelevant(perm):
    base = Permutation.from_cycles(6, [(1, 2), (3, 4, 5, 6)])
    sigma = Permutation(tuple(perm))
    alpha = sigma * base * sigma.inverse()
    ref = brute_force_histogram(P(2, 4), P(2, 2, 1, 1))
    assert brute_force_histogram(P(2, 4), P(2, 2, 1, 1), alpha=alpha) == ref


def test_parallel_matches_serial():
    ref = brute_force_histogram(P(2, 5), P(3, 4))
    assert brute_force_histogram(P(2, 5), P(3, 4), workers=2, chunk_size=50) == ref


def test_bounds_and_shapes():
    with pytest.raises(BoundExceeded):
        brute_force_histogram(P(2, 10), P(3, 9))
    with pytest.raises(ShapeMismatch):
        brute_force_histogram(P(2, 3), P(3, 3))
    with pytest.raises(ShapeMismatch):
        brute_force_histogram(P(2, 4), P(3, 3), alpha=Permutation.identity(6))


def test_xi_example():
    classes = [P(2, 4), P(3, 3)]
    assert xi_fixed_first(2, classes) == 28
    assert xi_character(2, classes) == 28 * class_size(P(2, 4))
    assert xi_fixed_first(3, classes) == 0


@pytest.mark.parametrize("n", range(4, 7))
def test_xi_matches_brute_force_all_pairs(n):
    for a in partitions_of(n):
        for b in partitions_of(n):
            assert xi_histogram([a, b]) == brute_force_histogram(a, b)


def test_xi_three_classes():
    # identity class contributes nothing extra
    classes = [P(2, 3), P(1, 1, 1, 1, 1), P(5)]
    assert xi_histogram(classes) == brute_force_histogram(P(2, 3), P(5))


def test_genus():
    assert genus_of(2, 6, 2) == 1
    assert genus_of(4, 6, 2) == 0
    assert genus_of(5, 5, 2) == -1
    with pytest.raises(NonIntegralGenus):
        genus_of(3, 6, 2)


def test_parity():
    for m in range(1, 7):
        assert parity_allowed(m, 6, P(2, 4), P(3, 3)) == (m % 2 == 0)
