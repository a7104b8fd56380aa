"""Families of subsets and the Upp/Low/Max/Min/Opp combinators.

A family is either *explicit* (a finite set of member masks) or *lazy* (a
membership predicate on masks). Upp, Low and Opp always return lazy
families because their results can be exponentially large; Max and Min
need the members in hand and materialize lazy input first, which is only
allowed within the brute-force bound.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .errors import UniverseMismatchError
from .ground import Subset, Universe, check_enumerable, popcount, submasks

MaskPredicate = Callable[[int], bool]


class SetFamily:
    __slots__ = ("universe", "_members", "_predicate")

    def __init__(self, universe: Universe, members: Iterable[int] | None = None,
                 predicate: MaskPredicate | None = None):
        if (members is None) == (predicate is None):
            raise TypeError("give exactly one of members or predicate")
        self.universe = universe
        self._members = None if members is None else frozenset(members)
        self._predicate = predicate
        if self._members is not None:
            for m in self._members:
                if m < 0 or m >> universe.size:
                    raise ValueError(f"mask {m:#x} lies outside the universe")

    @classmethod
    def of(cls, universe: Universe, subsets: Iterable[Subset | Iterable[int]]) -> "SetFamily":
        """Explicit family from subsets or iterables of element indices."""
        masks = []
        for s in subsets:
            if isinstance(s, Subset):
                if s.universe != universe:
                    raise UniverseMismatchError()
                masks.append(s.mask)
            else:
                masks.append(universe.subset(s).mask)
        return cls(universe, members=masks)

    @classmethod
    def where(cls, universe: Universe, test: Callable[[Subset], bool]) -> "SetFamily":
        """Lazy family of the subsets for which ``test`` holds. ``test`` must be pure."""
        return cls(universe, predicate=lambda m: bool(test(Subset(universe, m))))

    @classmethod
    def power_set(cls, universe: Universe) -> "SetFamily":
        return cls(universe, predicate=lambda m: True)

    @property
    def is_explicit(self) -> bool:
        return self._members is not None

    def contains_mask(self, mask: int) -> bool:
        if self._members is not None:
            return mask in self._members
        return self._predicate(mask)

    def __contains__(self, x: Subset) -> bool:
        if x.universe != self.universe:
            raise UniverseMismatchError()
        return self.contains_mask(x.mask)

    def masks(self, limit: int | None = None) -> list[int]:
        """Member masks in ascending order, materializing a lazy family if needed."""
        if self._members is not None:
            return sorted(self._members)
        check_enumerable(self.universe, limit)
        return [m for m in range(1 << self.universe.size) if self._predicate(m)]

    def materialize(self, limit: int | None = None) -> "SetFamily":
        if self._members is not None:
            return self
        return SetFamily(self.universe, members=self.masks(limit))

    def subsets(self, limit: int | None = None) -> list[Subset]:
        return [Subset(self.universe, m) for m in self.masks(limit)]

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.subsets())

    def __len__(self) -> int:
        return len(self.masks())

    def same_members(self, other: "SetFamily", limit: int | None = None) -> bool:
        if other.universe != self.universe:
            return False
        return self.masks(limit) == other.masks(limit)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.same_members(other)

    def __hash__(self):
        return hash((self.universe, tuple(self.masks())))

    def labels(self) -> list[list]:
        return [s.labels() for s in self.subsets()]

    def __repr__(self) -> str:
        if self._members is None:
            return f"SetFamily(<lazy over {self.universe.size} elements>)"
        return "SetFamily([" + ", ".join(map(repr, self.subsets())) + "])"


def upp(family: SetFamily) -> SetFamily:
    """Subsets that contain some member of ``family``."""
    if family.is_explicit:
        members = family.masks()
        return SetFamily(family.universe, predicate=lambda x: any(a & ~x == 0 for a in members))
    return SetFamily(family.universe,
                     predicate=lambda x: any(family.contains_mask(s) for s in submasks(x)))


def low(family: SetFamily) -> SetFamily:
    """Subsets contained in some member of ``family``."""
    if family.is_explicit:
        members = family.masks()
        return SetFamily(family.universe, predicate=lambda x: any(x & ~a == 0 for a in members))
    full = family.universe.full_mask
    return SetFamily(family.universe,
                     predicate=lambda x: any(family.contains_mask(x | s) for s in submasks(full & ~x)))


def opp(family: SetFamily) -> SetFamily:
    """Subsets that are not members of ``family``."""
    return SetFamily(family.universe, predicate=lambda x: not family.contains_mask(x))


def max_elems(family: SetFamily, limit: int | None = None) -> SetFamily:
    """Members not strictly contained in another member."""
    members = family.masks(limit)
    by_size = sorted(members, key=popcount, reverse=True)
    keep = [x for x in members
            if not any(y != x and x & ~y == 0 for y in by_size if popcount(y) > popcount(x))]
    return SetFamily(family.universe, members=keep)


def min_elems(family: SetFamily, limit: int | None = None) -> SetFamily:
    """Members that strictly contain no other member."""
    members = family.masks(limit)
    by_size = sorted(members, key=popcount)
    keep = [x for x in members
            if not any(y != x and y & ~x == 0 for y in by_size if popcount(y) < popcount(x))]
    return SetFamily(family.universe, members=keep)
