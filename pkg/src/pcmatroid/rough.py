"""Partitions, equivalence relations and Pawlak lower/upper approximations."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import UniverseMismatchError, ValidationError
from .ground import Subset, Universe, bits, popcount


@dataclass(frozen=True)
class Partition:
    """Pairwise-disjoint nonempty blocks covering a universe.

    Blocks are stored sorted by their smallest element, so two partitions with
    the same blocks compare equal regardless of input order.
    """

    universe: Universe
    blocks: tuple[Subset, ...]
    _block_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = tuple(self.blocks)
        seen = 0
        for b in blocks:
            if b.universe != self.universe:
                raise UniverseMismatchError("block belongs to a different universe")
            if not b.mask:
                raise ValidationError("partition blocks must be nonempty", law="nonempty", witness=(b,))
            if seen & b.mask:
                shared = Subset(self.universe, seen & b.mask)
                raise ValidationError(f"blocks overlap on {shared!r}", law="disjoint", witness=(shared,))
            seen |= b.mask
        if seen != self.universe.full_mask:
            missing = Subset(self.universe, self.universe.full_mask & ~seen)
            raise ValidationError(f"blocks do not cover {missing!r}", law="cover", witness=(missing,))
        blocks = tuple(sorted(blocks, key=lambda b: (b.mask & -b.mask)))
        object.__setattr__(self, "blocks", blocks)
        owner = [0] * self.universe.size
        for k, b in enumerate(blocks):
            for i in b:
                owner[i] = k
        object.__setattr__(self, "_block_of", tuple(owner))

    @classmethod
    def from_indices(cls, universe: Universe | int, blocks: Iterable[Iterable[int]]) -> "Partition":
        if isinstance(universe, int):
            universe = Universe(universe)
        return cls(universe, tuple(universe.subset(b) for b in blocks))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.blocks)

    def block_index(self, i: int) -> int:
        """Position of the block holding element ``i``."""
        return self._block_of[i]

    def block_of(self, i: int) -> Subset:
        return self.blocks[self._block_of[i]]

    def intersection_counts(self, x: Subset) -> list[int]:
        """``|x & P|`` for each block ``P``, computed in one pass over ``x``."""
        if x.universe != self.universe:
            raise UniverseMismatchError()
        counts = [0] * len(self.blocks)
        for i in x:
            counts[self._block_of[i]] += 1
        return counts

    def __repr__(self) -> str:
        return "Partition(" + ", ".join(map(repr, self.blocks)) + ")"


@dataclass(frozen=True)
class EquivalenceRelation:
    """A relation given by explicit ordered pairs of element indices.

    The three equivalence laws are checked on construction; the first failure
    raises :class:`ValidationError` with the law name and a witness.
    """

    universe: Universe
    pairs: frozenset

    def __post_init__(self):
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        n = self.universe.size
        for a, b in sorted(pairs):
            if not (0 <= a < n and 0 <= b < n):
                raise ValidationError(f"pair ({a}, {b}) lies outside the universe",
                                      law="membership", witness=(a, b))
        for a in range(n):
            if (a, a) not in pairs:
                raise ValidationError(f"not reflexive: ({a}, {a}) missing",
                                      law="reflexive", witness=(a, a))
        for a, b in sorted(pairs):
            if (b, a) not in pairs:
                raise ValidationError(f"not symmetric: ({a}, {b}) present but ({b}, {a}) missing",
                                      law="symmetric", witness=(a, b))
        succ = [[] for _ in range(n)]
        for a, b in sorted(pairs):
            succ[a].append(b)
        for a in range(n):
            for b in succ[a]:
                for c in succ[b]:
                    if (a, c) not in pairs:
                        raise ValidationError(
                            f"not transitive: ({a}, {b}) and ({b}, {c}) present but ({a}, {c}) missing",
                            law="transitive", witness=(a, b, c))

    @classmethod
    def reflexive_closure(cls, universe: Universe, pairs: Iterable[tuple[int, int]]) -> "EquivalenceRelation":
        pairs = set(pairs)
        pairs.update((i, i) for i in range(universe.size))
        return cls(universe, frozenset(pairs))

    def related(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs


def partition_from_relation(relation: EquivalenceRelation) -> Partition:
    """The equivalence classes of ``relation``."""
    u = relation.universe
    classes = {}
    for a, b in relation.pairs:
        classes[a] = classes.get(a, 0) | (1 << b)
    blocks = {classes[a] for a in range(u.size)}
    return Partition(u, tuple(Subset(u, m) for m in blocks))


def relation_from_partition(partition: Partition) -> EquivalenceRelation:
    pairs = set()
    for b in partition.blocks:
        members = b.members
        pairs.update((x, y) for x in members for y in members)
    return EquivalenceRelation(partition.universe, frozenset(pairs))


def _check(partition: Partition, x: Subset) -> None:
    if x.universe != partition.universe:
        raise UniverseMismatchError()


def lower_approx(partition: Partition, x: Subset) -> Subset:
    """Union of the blocks entirely contained in ``x``."""
    _check(partition, x)
    mask = 0
    for b in partition.masks:
        if b & ~x.mask == 0:
            mask |= b
    return Subset(x.universe, mask)


def upper_approx(partition: Partition, x: Subset) -> Subset:
    """Union of the blocks that meet ``x``."""
    _check(partition, x)
    mask = 0
    for b in partition.masks:
        if b & x.mask:
            mask |= b
    return Subset(x.universe, mask)


def boundary(partition: Partition, x: Subset) -> Subset:
    return upper_approx(partition, x) - lower_approx(partition, x)


def all_partitions(universe: Universe | int) -> Iterator[Partition]:
    """Every set partition of ``universe`` (Bell-number many), via restricted growth strings."""
    if isinstance(universe, int):
        universe = Universe(universe)
    n = universe.size
    if n == 0:
        yield Partition(universe, ())
        return

    def grow(i, masks):
        if i == n:
            yield Partition(universe, tuple(Subset(universe, m) for m in masks))
            return
        for k in range(len(masks)):
            masks[k] |= 1 << i
            yield from grow(i + 1, masks)
            masks[k] &= ~(1 << i)
        masks.append(1 << i)
        yield from grow(i + 1, masks)
        masks.pop()

    yield from grow(0, [])


def random_partition(universe: Universe | int, rng: random.Random) -> Partition:
    """A random partition; each element joins an existing block or opens a new one."""
    if isinstance(universe, int):
        universe = Universe(universe)
    masks: list[int] = []
    for i in range(universe.size):
        k = rng.randrange(len(masks) + 1)
        if k == len(masks):
            masks.append(1 << i)
        else:
            masks[k] |= 1 << i
    return Partition(universe, tuple(Subset(universe, m) for m in masks))


def block_sizes(partition: Partition) -> list[int]:
    return [popcount(m) for m in partition.masks]


def describe(partition: Partition) -> list[list]:
    """Blocks as lists of labels, for display and JSON output."""
    return [[partition.universe.label(i) for i in bits(m)] for m in partition.masks]
