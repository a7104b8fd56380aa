import pytest

from pcmatroid import CapacityError, SetFamily, Universe, low, max_elems, min_elems, opp, upp

from oracles import as_frozensets, powerset


def fam(n, *subsets):
    u = Universe(n)
    return SetFamily.of(u, subsets)


def members(f):
    return as_frozensets(s.members for s in f.subsets())


def test_upp_examples():
    assert members(upp(fam(2, [0]))) == {frozenset({0}), frozenset({0, 1})}
    assert members(upp(fam(2))) == set()
    expected = {x for x in powerset(range(2)) if any(a <= x for a in [frozenset({0}), frozenset({1})])}
    assert expected == {frozenset({0}), frozenset({1}), frozenset({0, 1})}
    assert members(upp(fam(2, [0], [1]))) == expected


def test_low_examples():
    assert members(low(fam(2, [0, 1]))) == set(powerset(range(2)))
    assert members(low(fam(2))) == set()
    expected = {x for x in powerset(range(2)) if x <= frozenset({0})}
    assert members(low(fam(2, [0]))) == expected == {frozenset(), frozenset({0})}


def test_max_min_examples():
    chain = fam(2, [0], [0, 1])
    assert members(max_elems(chain)) == {frozenset({0, 1})}
    assert members(min_elems(chain)) == {frozenset({0})}
    anti = fam(2, [0], [1])
    assert max_elems(anti) == anti == min_elems(anti)
    full = SetFamily.power_set(Universe(2))
    assert members(max_elems(full)) == {frozenset({0, 1})}
    assert members(min_elems(full)) == {frozenset()}


def test_opp_examples():
    u = Universe(3)
    assert len(opp(SetFamily.power_set(u))) == 0
    assert len(opp(SetFamily(u, members=[]))) == 8
    assert members(opp(fam(1, []))) == {frozenset({0})}


def test_lazy_families_are_not_materialized():
    u = Universe(40)
    big = upp(SetFamily.of(u, [[3]]))
    assert not big.is_explicit
    assert u.subset([3, 39]) in big
    assert u.subset([2]) not in big
    assert u.subset([2]) in opp(big)
    with pytest.raises(CapacityError):
        max_elems(big)


def test_where_and_materialize_agree():
    u = Universe(4)
    lazy = SetFamily.where(u, lambda s: len(s) % 2 == 0)
    explicit = lazy.materialize()
    assert explicit.is_explicit
    for x in u.all_subsets():
        assert (x in lazy) == (x in explicit)
    assert explicit.masks() == sorted(explicit.masks())


def test_duplicates_collapse():
    f = fam(2, [0], [0], [1])
    assert len(f) == 2


def test_json_order_is_by_bit_pattern():
    f = fam(3, [2], [0, 1], [], [0])
    assert f.labels() == [[], [0], [0, 1], [2]]


def families(n):
    """Every family of subsets of an n-set; keep n <= 2."""
    masks = range(1 << n)
    for code in range(1 << len(masks)):
        yield SetFamily(Universe(n), members=[m for m in masks if code >> m & 1])


@pytest.mark.parametrize("n", [0, 1, 2])
def test_invariants_exhaustive(n):
    u = Universe(n)
    for a in families(n):
        assert opp(opp(a)) == a
        for x in a:
            assert x in upp(a) and x in low(a)
        assert upp(upp(a)) == upp(a)
        assert low(low(a)) == low(a)
        # lazy input takes the other code path
        lazy = SetFamily.where(u, lambda s, a=a: s in a)
        assert upp(lazy) == upp(a)
        assert low(lazy) == low(a)
        if len(a):
            assert max_elems(low(a)) == max_elems(a)
            assert min_elems(upp(a)) == min_elems(a)


def test_invariants_sampled_n5():
    import random
    rng = random.Random(3)
    u = Universe(5)
    for _ in range(60):
        a = SetFamily(u, members=[rng.randrange(32) for _ in range(rng.randint(1, 6))])
        assert opp(opp(a)) == a
        assert upp(upp(a)) == upp(a)
        assert low(low(a)) == low(a)
        assert max_elems(low(a)) == max_elems(a)
        assert min_elems(upp(a)) == min_elems(a)
