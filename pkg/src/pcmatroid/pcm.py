"""Partition-circuit matroids and partition matroids in closed form.

For a partition ``P`` the partition-circuit matroid is the matroid whose
circuits are exactly the blocks of ``P``. A set is independent when it
contains no whole block, which makes it the partition matroid with capacity
``|P_i| - 1`` on every block. Its dual is the partition matroid with
capacity 1 per block (partial transversals).

Every query here runs off per-block intersection counts or the lower/upper
approximation numbers, in time linear in ``|U| + m``. Nothing enumerates
subsets except :meth:`PartitionCircuitMatroid.bases`, which walks the
product of the blocks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .approxnum import lower_number, upper_number
from .errors import ValidationError
from .family import SetFamily
from .ground import Subset, popcount
from .rough import Partition, lower_approx, upper_approx


@dataclass(frozen=True)
class PartitionCircuitMatroid:
    partition: Partition

    @property
    def universe(self):
        return self.partition.universe

    def _counts(self, x: Subset) -> list[int]:
        return self.partition.intersection_counts(x)

    # -- independence, four equivalent ways --------------------------------

    def is_independent(self, x: Subset) -> bool:
        """No block lies wholly inside ``x``: ``|x & P| <= |P| - 1`` for every block."""
        sizes = self.block_sizes
        return all(c <= s - 1 for c, s in zip(self._counts(x), sizes))

    def is_independent_by_lower_approx(self, x: Subset) -> bool:
        return not lower_approx(self.partition, x)

    def is_independent_by_upper_approx(self, x: Subset) -> bool:
        """The upper approximation of the complement is the whole universe."""
        return upper_approx(self.partition, ~x) == self.universe.full

    def is_independent_by_lower_number(self, x: Subset) -> bool:
        return lower_number(self.partition, x) == 0

    # -- structure ---------------------------------------------------------

    @property
    def block_sizes(self) -> list[int]:
        return [popcount(m) for m in self.partition.masks]

    def circuits(self) -> SetFamily:
        return SetFamily(self.universe, members=self.partition.masks)

    def loops(self) -> Subset:
        """Elements in singleton blocks; they belong to no independent set."""
        mask = 0
        for m in self.partition.masks:
            if m & (m - 1) == 0:
                mask |= m
        return Subset(self.universe, mask)

    def bases(self) -> SetFamily:
        """Drop exactly one element from every block (product over blocks)."""
        full = self.universe.full_mask
        choices = [[1 << i for i in Subset(self.universe, m)] for m in self.partition.masks]
        members = [full & ~sum(pick) for pick in itertools.product(*choices)]
        return SetFamily(self.universe, members=members)

    def as_partition_matroid(self) -> "PartitionMatroid":
        return PartitionMatroid(self.partition, tuple(s - 1 for s in self.block_sizes))

    # -- rank and closure --------------------------------------------------

    def rank(self, x: Subset) -> int:
        """``|x|`` minus the number of blocks inside ``x``."""
        return len(x) - lower_number(self.partition, x)

    def closure(self, x: Subset) -> Subset:
        """``x`` plus every outside element whose addition completes a block.

        Adding ``e`` raises the lower approximation number by one exactly when
        ``e``'s block already has all its other elements in ``x``.
        """
        counts = self._counts(x)
        sizes = self.block_sizes
        mask = x.mask
        for e in ~x:
            k = self.partition.block_index(e)
            if counts[k] == sizes[k] - 1:
                mask |= 1 << e
        return Subset(self.universe, mask)

    def is_closed(self, x: Subset) -> bool:
        """Adding any single element leaves the lower approximation number unchanged."""
        counts = self._counts(x)
        sizes = self.block_sizes
        for e in ~x:
            k = self.partition.block_index(e)
            if counts[k] == sizes[k] - 1:
                return False
        return True

    # -- the dual matroid --------------------------------------------------

    def dual_is_independent(self, x: Subset) -> bool:
        """At most one element of ``x`` per block."""
        return all(c <= 1 for c in self._counts(x))

    def dual_is_independent_by_upper_number(self, x: Subset) -> bool:
        return upper_number(self.partition, x) == len(x)

    def dual_rank(self, x: Subset) -> int:
        """Number of blocks meeting ``x``."""
        return upper_number(self.partition, x)

    def dual_closure(self, x: Subset) -> Subset:
        """Elements whose addition leaves the upper approximation number unchanged.

        Those are exactly the elements of blocks already met by ``x``, i.e. the
        upper approximation of ``x``.
        """
        return upper_approx(self.partition, x)

    def dual_is_closed(self, x: Subset) -> bool:
        return self.dual_closure(x) == x

    def dual(self) -> "PartitionMatroid":
        return self.as_partition_matroid().dual()


def from_partition(partition: Partition) -> PartitionCircuitMatroid:
    return PartitionCircuitMatroid(partition)


@dataclass(frozen=True)
class PartitionMatroid:
    """Independent sets: ``|X & P_i| <= k_i`` for each block ``P_i``.

    Capacities above a block's size never bind, so they are clamped to the
    block size on construction; ``clamped`` records whether that happened.
    """

    partition: Partition
    capacities: tuple[int, ...]
    clamped: bool = field(default=False, compare=False)

    def __post_init__(self):
        caps = tuple(self.capacities)
        if len(caps) != len(self.partition):
            raise ValidationError(
                f"{len(caps)} capacities given for {len(self.partition)} blocks",
                law="capacities", witness=(len(caps), len(self.partition)))
        for k in caps:
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise ValidationError(f"capacity {k!r} is not a nonnegative integer",
                                      law="capacities", witness=(k,))
        sizes = [popcount(m) for m in self.partition.masks]
        fitted = tuple(min(k, s) for k, s in zip(caps, sizes))
        object.__setattr__(self, "capacities", fitted)
        if fitted != caps:
            object.__setattr__(self, "clamped", True)

    @property
    def universe(self):
        return self.partition.universe

    @property
    def block_sizes(self) -> list[int]:
        return [popcount(m) for m in self.partition.masks]

    def is_independent(self, x: Subset) -> bool:
        return all(c <= k for c, k in zip(self.partition.intersection_counts(x), self.capacities))

    def rank(self, x: Subset) -> int:
        return sum(min(c, k) for c, k in zip(self.partition.intersection_counts(x), self.capacities))

    def dual(self) -> "PartitionMatroid":
        """Same blocks, capacities ``|P_i| - k_i``."""
        return PartitionMatroid(self.partition,
                                tuple(s - k for s, k in zip(self.block_sizes, self.capacities)))

    def is_partition_circuit(self) -> bool:
        return all(k == s - 1 for k, s in zip(self.capacities, self.block_sizes))

    def greedy_max_weight_independent(self, weights: Sequence[float]) -> Subset:
        """Scan elements by descending weight (ties: lower index first), keeping
        each one whose block still has spare capacity.

        Negative weights are kept like any other, so the result is a maximum
        weight *basis*; it is a maximum weight independent set whenever all
        weights are nonnegative.
        """
        n = self.universe.size
        if len(weights) != n:
            raise ValidationError(f"{len(weights)} weights given for {n} elements",
                                  law="weights", witness=(len(weights), n))
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, (int, float)) or not math.isfinite(w):
                raise ValidationError(f"weight {w!r} is not a finite number", law="weights", witness=(w,))
        used = [0] * len(self.partition)
        mask = 0
        for e in sorted(range(n), key=lambda i: (-weights[i], i)):
            k = self.partition.block_index(e)
            if used[k] < self.capacities[k]:
                used[k] += 1
                mask |= 1 << e
        return Subset(self.universe, mask)


def dual_partition_matroid(m: PartitionMatroid) -> PartitionMatroid:
    return m.dual()


def greedy_max_weight_independent(m: PartitionMatroid, weights: Sequence[float]) -> Subset:
    return m.greedy_max_weight_independent(weights)


def weight_of(x: Subset, weights: Sequence[float]):
    return sum(weights[i] for i in x)
