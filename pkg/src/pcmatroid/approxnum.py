"""Lower and upper approximation numbers over coverings."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .errors import UniverseMismatchError, ValidationError
from .ground import Subset, Universe
from .rough import Partition


@dataclass(frozen=True)
class Covering:
    """Nonempty blocks whose union is the universe; blocks may overlap.

    Duplicate blocks are dropped on construction (a covering is a *set* of
    blocks) and ``deduplicated`` records whether that happened.
    """

    universe: Universe
    blocks: tuple[Subset, ...]
    deduplicated: bool = field(default=False, compare=False)

    def __post_init__(self):
        seen = set()
        unique = []
        cover = 0
        for b in self.blocks:
            if b.universe != self.universe:
                raise UniverseMismatchError("block belongs to a different universe")
            if not b.mask:
                raise ValidationError("covering blocks must be nonempty", law="nonempty", witness=(b,))
            if b.mask in seen:
                continue
            seen.add(b.mask)
            unique.append(b)
            cover |= b.mask
        if cover != self.universe.full_mask:
            missing = Subset(self.universe, self.universe.full_mask & ~cover)
            raise ValidationError(f"blocks do not cover {missing!r}", law="cover", witness=(missing,))
        if len(unique) != len(self.blocks):
            object.__setattr__(self, "deduplicated", True)
        unique.sort(key=lambda b: b.mask)
        object.__setattr__(self, "blocks", tuple(unique))

    @classmethod
    def from_indices(cls, universe: Universe | int, blocks: Iterable[Iterable[int]]) -> "Covering":
        if isinstance(universe, int):
            universe = Universe(universe)
        return cls(universe, tuple(universe.subset(b) for b in blocks))

    @classmethod
    def from_partition(cls, partition: Partition) -> "Covering":
        return cls(partition.universe, partition.blocks)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def _masks(blocks: Covering | Partition, x: Subset) -> tuple[int, ...]:
    if x.universe != blocks.universe:
        raise UniverseMismatchError()
    return blocks.masks


def lower_number(blocks: Covering | Partition, x: Subset) -> int:
    """How many blocks lie inside ``x``."""
    return sum(1 for b in _masks(blocks, x) if b & ~x.mask == 0)


def upper_number(blocks: Covering | Partition, x: Subset) -> int:
    """How many blocks meet ``x``."""
    return sum(1 for b in _masks(blocks, x) if b & x.mask)


def random_covering(universe: Universe | int, rng: random.Random, max_blocks: int | None = None) -> Covering:
    """A random covering: a few random nonempty blocks, then patches for uncovered elements."""
    if isinstance(universe, int):
        universe = Universe(universe)
    n = universe.size
    full = universe.full_mask
    if max_blocks is None:
        max_blocks = max(1, 2 * n)
    masks = [rng.randint(1, full) for _ in range(rng.randint(1, max_blocks))] if n else []
    covered = 0
    for m in masks:
        covered |= m
    missing = full & ~covered
    while missing:
        # a random block that includes the lowest missing element
        low = missing & -missing
        m = low | (rng.randint(0, full) & rng.randint(0, full))
        masks.append(m)
        missing &= ~m
    return Covering(universe, tuple(Subset(universe, m) for m in masks))
