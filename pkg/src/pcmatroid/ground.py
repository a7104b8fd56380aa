"""Finite universes and subsets stored as integer bit masks.

Bit ``i`` of a subset's mask is set when element ``i`` belongs to it. The
algebra itself works for any universe size; only operations that enumerate
the power set enforce :data:`BRUTE_FORCE_LIMIT`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, UniverseMismatchError, ValidationError

# 16 elements = 65,536 subsets.
BRUTE_FORCE_LIMIT = 16


def check_enumerable(universe: "Universe", limit: int | None = None) -> None:
    """Raise :class:`CapacityError` if ``universe`` is too large to enumerate."""
    bound = BRUTE_FORCE_LIMIT if limit is None else limit
    if universe.size > bound:
        raise CapacityError(
            f"universe has {universe.size} elements; brute-force bound is {bound}"
        )


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and ``mask``) in descending order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Universe:
    """A finite ground set ``{0, ..., size-1}`` with optional display labels."""

    size: int
    labels: tuple | None = None

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise ValidationError(f"universe size must be a nonnegative integer, got {self.size!r}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise ValidationError(
                    f"{len(labels)} labels given for a universe of size {self.size}",
                    law="labels",
                )
            seen = set()
            for lab in labels:
                if lab in seen:
                    raise ValidationError(f"duplicate label {lab!r}", law="labels", witness=(lab,))
                seen.add(lab)

    @classmethod
    def of(cls, spec: int | Sequence) -> "Universe":
        """Build a universe from a size or from a sequence of labels."""
        if isinstance(spec, bool):
            raise ValidationError("universe must be an integer or a list of labels")
        if isinstance(spec, int):
            return cls(spec)
        return cls(len(spec), tuple(spec))

    def __len__(self) -> int:
        return self.size

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def full(self) -> "Subset":
        return Subset(self, self.full_mask)

    @property
    def empty(self) -> "Subset":
        return Subset(self, 0)

    def label(self, i: int):
        return i if self.labels is None else self.labels[i]

    def index(self, label) -> int:
        if self.labels is None:
            if isinstance(label, int) and not isinstance(label, bool) and 0 <= label < self.size:
                return label
            raise ValidationError(f"element {label!r} is not in a universe of size {self.size}",
                                  law="membership", witness=(label,))
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown element label {label!r}",
                                  law="membership", witness=(label,)) from None

    def subset(self, indices: Iterable[int] = ()) -> "Subset":
        """The subset with the given element indices."""
        mask = 0
        for i in indices:
            if not 0 <= i < self.size:
                raise ValidationError(f"element index {i} out of range for universe of size {self.size}",
                                      law="membership", witness=(i,))
            mask |= 1 << i
        return Subset(self, mask)

    def subset_of_labels(self, labels: Iterable) -> "Subset":
        return self.subset(self.index(lab) for lab in labels)

    def singleton(self, i: int) -> "Subset":
        return self.subset((i,))

    def all_subsets(self, limit: int | None = None) -> Iterator["Subset"]:
        """Every subset, in increasing mask order."""
        check_enumerable(self, limit)
        for mask in range(1 << self.size):
            yield Subset(self, mask)


@dataclass(frozen=True)
class Subset:
    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.universe.size:
            raise ValidationError(f"mask {self.mask:#x} has bits outside a universe of size {self.universe.size}")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.universe.size and bool(self.mask >> i & 1)

    def _other(self, other: "Subset") -> int:
        if not isinstance(other, Subset):
            raise TypeError(f"expected a Subset, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatchError()
        return other.mask

    def __or__(self, other):
        return Subset(self.universe, self.mask | self._other(other))

    def __and__(self, other):
        return Subset(self.universe, self.mask & self._other(other))

    def __sub__(self, other):
        return Subset(self.universe, self.mask & ~self._other(other))

    def __invert__(self):
        return Subset(self.universe, self.universe.full_mask & ~self.mask)

    def __le__(self, other):
        return self.mask & ~self._other(other) == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def add(self, i: int) -> "Subset":
        return self | self.universe.singleton(i)

    def remove(self, i: int) -> "Subset":
        return Subset(self.universe, self.mask & ~(1 << i))

    def labels(self) -> list:
        """Members as labels (indices when the universe is unlabeled), ascending by index."""
        return [self.universe.label(i) for i in self]

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self.labels())) + "}"


def complement(x: Subset) -> Subset:
    return ~x


def union(x: Subset, y: Subset) -> Subset:
    return x | y


def intersection(x: Subset, y: Subset) -> Subset:
    return x & y


def difference(x: Subset, y: Subset) -> Subset:
    return x - y


def cardinality(x: Subset) -> int:
    return len(x)


def is_subset_of(x: Subset, y: Subset) -> bool:
    return x <= y
