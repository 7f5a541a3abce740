from itertools import product

import pytest
from hypothesis import given, strategies as st

from nilops.partitions import (
    IncomparableError,
    Partition,
    add,
    conjugate,
    format_partition,
    length,
    n_stat,
    nat_leq,
    parse_partition,
    partitions_of,
    prefix_sums,
    union,
)

partitions = st.lists(st.integers(1, 9), max_size=8).map(Partition.from_parts)


def test_length():
    assert length(Partition((4, 3, 2))) == 9
    assert length(Partition()) == 0
    assert length(Partition((7, 6, 4, 1, 1, 1))) == 20


def test_conjugate_examples():
    assert conjugate(Partition((7, 7, 5, 2, 2, 1))) == (6, 5, 3, 3, 3, 2, 2)
    assert conjugate(Partition()) == ()
    assert conjugate(Partition((3,))) == (1, 1, 1)


def test_add_examples():
    assert add(Partition((4, 3, 2)), Partition((3, 3, 2, 1, 1, 1))) == (7, 6, 4, 1, 1, 1)
    assert add(Partition((5, 2)), Partition()) == (5, 2)
    assert add(Partition((1, 1)), Partition((1,))) == (2, 1)


def test_union_examples():
    assert union(Partition((4, 3)), Partition((3, 1))) == (4, 3, 3, 1)
    assert union(Partition((2, 1, 1)), Partition((1, 1))) == (2, 1, 1, 1, 1)
    assert union(Partition((8, 6, 4, 2, 1, 1)), Partition((1, 1))) == (8, 6, 4, 2, 1, 1, 1, 1)


def test_n_stat():
    assert n_stat(Partition((5,))) == 0
    assert n_stat(Partition((3, 2))) == 2
    assert n_stat(Partition((2, 1))) == 1


def test_nat_leq_examples():
    assert nat_leq(Partition((2, 2)), Partition((2, 1, 1)))
    assert nat_leq(Partition((2, 1, 1)), Partition((2, 1, 1)))
    assert not nat_leq(Partition((2, 1, 1)), Partition((2, 2)))


def test_nat_leq_unequal_totals():
    with pytest.raises(IncomparableError, match="incomparable totals"):
        nat_leq(Partition((2,)), Partition((1,)))


def test_prefix_sums():
    assert prefix_sums(Partition((3, 1)), 1) == 3
    assert prefix_sums(Partition((3, 1)), 5) == 4
    assert prefix_sums(Partition(), 2) == 0


def test_out_of_range_reads_zero():
    p = Partition((3, 1))
    assert p.at(1) == 3 and p.at(2) == 1 and p.at(3) == 0 and p.at(100) == 0


@pytest.mark.parametrize("bad", [(1, 2), (0,), (3, -1)])
def test_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_from_parts_canonicalises():
    assert Partition.from_parts([1, 0, 3, 2, 0]) == (3, 2, 1)


def test_text_round_trip():
    assert format_partition(Partition((7, 6, 4, 1, 1, 1))) == "[7,6,4,1,1,1]"
    assert parse_partition(" [7, 6,4,1,1,1] ") == (7, 6, 4, 1, 1, 1)
    assert parse_partition("[]") == ()
    with pytest.raises(ValueError):
        parse_partition("7,6")


def test_partition_counts():
    # p(n) for n = 0..10
    assert [sum(1 for _ in partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@given(partitions)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert length(conjugate(p)) == length(p)


@given(partitions, partitions)
def test_lengths_are_additive(p, q):
    assert length(union(p, q)) == length(p) + length(q)
    assert length(add(p, q)) == length(p) + length(q)


def test_conjugate_involution_exhaustive():
    for n in range(13):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_nat_order_axioms_exhaustive():
    for n in range(9):
        ps = list(partitions_of(n))
        for p in ps:
            assert nat_leq(p, p)
        for p, q in product(ps, repeat=2):
            if p != q and nat_leq(p, q):
                assert not nat_leq(q, p)
        for p, q, r in product(ps, repeat=3):
            if nat_leq(p, q) and nat_leq(q, r):
                assert nat_leq(p, r)


def test_nat_order_via_conjugates():
    for n in range(9):
        ps = list(partitions_of(n))
        for p, q in product(ps, repeat=2):
            by_conj = all(
                prefix_sums(conjugate(p), k) <= prefix_sums(conjugate(q), k)
                for k in range(1, n + 1)
            )
            assert nat_leq(p, q) == by_conj
