import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperfaces.combinat import (
    Partition,
    Permutation,
    canonical_representative,
    class_size,
    cycle_type,
    enumerate_class,
    iter_class_images,
    parse_partition,
    partitions_of,
    stirling1_unsigned,
    young_stats,
)
from hyperfaces.errors import BoundExceeded, ParseError, SumMismatch


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_reverse_lex_order():
    assert [str(p) for p in partitions_of(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]


@pytest.mark.parametrize(
    "text,parts",
    [("3,3", (3, 3)), ("[3^2]", (3, 3)), ("1^2,4", (4, 1, 1)), ("[2, 5]", (5, 2)), (" 7 ", (7,))],
)
def test_parse(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("bad", ["", "[]", "3,,3", "0,3", "[3,3", "a"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_partition(bad)


def test_parse_sum_mismatch():
    with pytest.raises(SumMismatch):
        parse_partition("3,3", 7)


@given(st.integers(1, 12).flatmap(lambda n: st.sampled_from(list(partitions_of(n)))))
def test_parse_round_trip(lam):
    assert parse_partition(str(lam)) == lam
    assert parse_partition(lam.exponent_str()) == lam
    assert lam.conjugate().conjugate() == lam


def test_class_sizes():
    assert class_size(Partition(3, 3)) == 40
    assert class_size(Partition(2, 3)) == 20
    assert class_size(Partition(1, 4)) == 30
    for n in range(1, 9):
        assert sum(class_size(p) for p in partitions_of(n)) == math.factorial(n)


def test_stirling():
    assert [stirling1_unsigned(4, k) for k in range(5)] == [0, 6, 11, 6, 1]
    for n in range(8):
        assert sum(stirling1_unsigned(n, k) for k in range(n + 1)) == math.factorial(n)


def test_young_stats():
    st_ = young_stats(Partition(3, 3))
    assert st_.dimension == 5
    for n in range(1, 8):
        assert sum(young_stats(p).dimension ** 2 for p in partitions_of(n)) == math.factorial(n)


def test_permutation_algebra():
    a = Permutation.from_cycles(4, [(1, 2)])
    b = Permutation.from_cycles(4, [(2, 3, 4)])
    ab = a * b
    assert ab * ab.inverse() == Permutation.identity(4)
    assert cycle_type(ab) == Partition(4)


def test_canonical_representative():
    for lam in partitions_of(7):
        assert cycle_type(canonical_representative(lam)) == lam


def test_class_enumeration_complete():
    for lam in partitions_of(6):
        imgs = list(iter_class_images(lam))
        assert len(imgs) == len(set(imgs)) == class_size(lam)
        assert all(cycle_type(i) == lam for i in imgs)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        next(enumerate_class(Partition(3, 9), max_n=10))


def test_bound_from_environment(monkeypatch):
    from hyperfaces.combinat import default_max_n

    monkeypatch.setenv("HYPERFACES_MAX_N", "12")
    assert default_max_n() == 12
    monkeypatch.delenv("HYPERFACES_MAX_N")
    assert default_max_n() == 10
