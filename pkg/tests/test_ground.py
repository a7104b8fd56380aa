import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcmatroid import (
    CapacityError,
    UniverseMismatchError,
    Universe,
    ValidationError,
    cardinality,
    complement,
    difference,
    intersection,
    is_subset_of,
    union,
)
from pcmatroid.ground import submasks


def test_complement_examples(u3):
    assert complement(u3.subset([0])) == u3.subset([1, 2])
    assert complement(u3.empty) == u3.full
    assert complement(u3.full) == u3.empty


def test_binary_ops(u3):
    assert union(u3.subset([0, 1]), u3.subset([1, 2])) == u3.subset([0, 1, 2])
    assert intersection(u3.subset([0, 1]), u3.subset([2])) == u3.empty
    assert difference(u3.subset([0, 1]), u3.subset([1])) == u3.subset([0])
    assert cardinality(u3.subset([0, 1, 2])) == 3
    assert is_subset_of(u3.subset([1]), u3.subset([0, 1]))
    assert not is_subset_of(u3.subset([2]), u3.subset([0, 1]))


def test_universe_mismatch():
    a, b = Universe(3), Universe(4)
    with pytest.raises(UniverseMismatchError):
        union(a.subset([0]), b.subset([0]))
    with pytest.raises(UniverseMismatchError):
        is_subset_of(a.empty, b.full)


def test_labels_round_trip():
    u = Universe.of(["a", "b", "c"])
    x = u.subset_of_labels(["c", "a"])
    assert x.members == (0, 2)
    assert x.labels() == ["a", "c"]
    assert repr(x) == "{a, c}"


@pytest.mark.parametrize("labels", [["a", "a"], ["a"]])
def test_bad_labels(labels):
    with pytest.raises(ValidationError):
        Universe(2, tuple(labels))


def test_out_of_range(u3):
    with pytest.raises(ValidationError):
        u3.subset([3])
    with pytest.raises(ValidationError):
        Universe.of(["a"]).subset_of_labels(["z"])


def test_empty_universe():
    u = Universe(0)
    assert list(u.all_subsets()) == [u.empty]
    assert complement(u.empty) == u.full == u.empty


def test_enumeration_bound():
    with pytest.raises(CapacityError):
        next(Universe(17).all_subsets())
    # the algebra itself has no bound
    big = Universe(100)
    assert len(complement(big.subset([5]))) == 99


@pytest.mark.parametrize("n", range(6))
def test_laws_exhaustive(n):
    u = Universe(n)
    subsets = list(u.all_subsets())
    for x in subsets:
        assert ~~x == x
        assert len(x) + len(~x) == n
        for y in subsets:
            assert ~(x | y) == ~x & ~y
            assert ~(x & y) == ~x | ~y


def test_submasks():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    assert list(submasks(0)) == [0]


@given(st.integers(1, 40).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1)))))
def test_complement_property(case):
    n, members = case
    u = Universe(n)
    x = u.subset(members)
    assert set(~x) == set(range(n)) - members
    assert ~~x == x
