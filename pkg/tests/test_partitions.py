import pytest

from algebra.errors import InvalidPartition, SizeMismatch
from algebra.partitions import (
    BOX, EMPTY, Bipartition, SimpleType, StrictPartition, add_box, count_standard_shifted, dominance_leq,
    enumerate_bipartitions, enumerate_strict, format_bipartition, format_partition, parse_bipartition,
    parse_partition, remove_box, simple_type,
)

P = StrictPartition.of


def test_enumerate_strict():
    assert enumerate_strict(0) == [EMPTY]
    assert enumerate_strict(4) == [P(4), P(3, 1)]
    assert enumerate_strict(6) == [P(6), P(5, 1), P(4, 2), P(3, 2, 1)]
    assert [len(enumerate_strict(n)) for n in range(11)] == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]


def test_partitions_are_validated():
    with pytest.raises(InvalidPartition):
        P(2, 2)
    with pytest.raises(InvalidPartition):
        P(1, 3)
    with pytest.raises(InvalidPartition):
        P(2, 0)


def test_partition_attributes():
    lam = P(4, 2, 1)
    assert lam.size == 7
    assert lam.length == 3
    assert lam.parity == 1
    assert EMPTY.parity == 0


def test_add_and_remove_box():
    assert set(add_box(P(3, 1))) == {P(4, 1), P(3, 2)}
    assert set(remove_box(P(3, 1))) == {P(2, 1), P(3)}
    assert remove_box(EMPTY) == []
    assert add_box(EMPTY) == [BOX]
    assert set(remove_box(P(2, 1))) == {P(2)}


def test_add_and_remove_are_inverse():
    for n in range(7):
        for lam in enumerate_strict(n):
            for bigger in add_box(lam):
                assert lam in remove_box(bigger)
            for smaller in remove_box(lam):
                assert lam in add_box(smaller)


def test_dominance():
    assert dominance_leq(P(3, 1), P(4))
    assert not dominance_leq(P(4), P(3, 1))
    assert dominance_leq(P(3, 2, 1), P(4, 2))
    with pytest.raises(SizeMismatch):
        dominance_leq(P(3), P(2))


def test_simple_type():
    assert simple_type(Bipartition(BOX, BOX)) == SimpleType.M
    assert simple_type(Bipartition(P(2), EMPTY)) == SimpleType.Q
    assert simple_type(Bipartition(P(2), BOX)) == SimpleType.M


def test_bipartition_attributes():
    bp = Bipartition(P(3), P(2, 1))
    assert bp.degree == 3
    assert bp.block == 0
    assert bp.parity == 1
    assert Bipartition(P(2), BOX).block == 1


def test_enumerate_bipartitions():
    labels = enumerate_bipartitions(2)
    # strict partitions of size <= 2: -, (1), (2)
    assert len(labels) == 9
    assert labels == sorted(labels)
    assert Bipartition() in labels


def test_count_standard_shifted():
    assert count_standard_shifted(EMPTY) == 1
    assert count_standard_shifted(P(3)) == 1
    assert count_standard_shifted(P(2, 1)) == 1
    assert count_standard_shifted(P(3, 1)) == 2
    assert count_standard_shifted(P(3, 2, 1)) == 2


def test_text_syntax():
    assert parse_partition("3,1") == P(3, 1)
    assert parse_partition("-") == EMPTY
    assert parse_partition("") == EMPTY
    assert parse_bipartition("2|1") == Bipartition(P(2), BOX)
    assert parse_bipartition("-|3,1") == Bipartition(EMPTY, P(3, 1))
    assert format_partition(EMPTY) == "-"
    assert format_bipartition(Bipartition(P(3, 1), EMPTY)) == "3,1|-"
    with pytest.raises(InvalidPartition):
        parse_partition("1,1")
    with pytest.raises(InvalidPartition):
        parse_partition("a")
    with pytest.raises(InvalidPartition):
        parse_bipartition("1")
