"""Generic matroids by exhaustive enumeration.

Nothing here knows about partitions. Every derivation (bases, circuits,
rank, closure, dual) is read straight off the definitions by enumerating
subsets, so this module serves as the reference the closed-form formulas in
:mod:`pcmatroid.pcm` are checked against.

Axiom checkers scan candidate violations in a fixed order (members by
ascending mask, elements by ascending index) and report the first one found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import UniverseMismatchError, ValidationError
from .family import SetFamily, max_elems, min_elems
from .ground import Subset, Universe, bits, check_enumerable, popcount

# Exhaustive derivations refuse universes beyond this many elements.
ORACLE_LIMIT = 16
# Dedekind(6) is about 7.8 million, so antichain enumeration stops at 5
ANTICHAIN_LIMIT = 5

LAWS = ("I1", "I2", "I3", "B1", "B2", "C1", "C2", "C3")


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom check.

    When ``verdict`` is false, ``violated_law`` names the first failing law and
    ``witness`` holds the subsets (and element, if the law quantifies over one)
    that exhibit the failure.
    """

    verdict: bool
    violated_law: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.verdict

    def replay(self, family: SetFamily) -> bool:
        """Re-check the witness against the law; True when the failure reproduces."""
        if self.verdict:
            return False
        return _replay(self.violated_law, self.witness, family)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict}
        if not self.verdict:
            out["law"] = self.violated_law
            subsets = [w for w in self.witness if isinstance(w, Subset)]
            label = subsets[0].universe.label if subsets else (lambda i: i)
            out["witness"] = [w.labels() if isinstance(w, Subset) else label(w) for w in self.witness]
        return out


def _fail(law: str, *witness) -> AxiomReport:
    return AxiomReport(False, law, tuple(witness))


def _explicit(family: SetFamily, limit: int | None) -> tuple[Universe, list[int], frozenset]:
    check_enumerable(family.universe, ORACLE_LIMIT if limit is None else limit)
    members = family.masks()
    return family.universe, members, frozenset(members)


def check_independence_axioms(family: SetFamily, limit: int | None = None) -> AxiomReport:
    u, members, index = _explicit(family, limit)
    if 0 not in index:
        return _fail("I1", u.empty)
    for m in members:
        for i in bits(m):
            if m & ~(1 << i) not in index:
                return _fail("I2", Subset(u, m), Subset(u, m & ~(1 << i)))
    for a in members:
        for b in members:
            if popcount(a) < popcount(b):
                if not any(a | (1 << e) in index for e in bits(b & ~a)):
                    return _fail("I3", Subset(u, a), Subset(u, b))
    return AxiomReport(True)


def check_base_axioms(family: SetFamily, limit: int | None = None) -> AxiomReport:
    u, members, index = _explicit(family, limit)
    if not members:
        return _fail("B1")
    for b1 in members:
        for b2 in members:
            for x in bits(b1 & ~b2):
                rest = b1 & ~(1 << x)
                if not any(rest | (1 << y) in index for y in bits(b2 & ~b1)):
                    return _fail("B2", Subset(u, b1), Subset(u, b2), x)
    return AxiomReport(True)


def check_circuit_axioms(family: SetFamily, limit: int | None = None) -> AxiomReport:
    u, members, index = _explicit(family, limit)
    if 0 in index:
        return _fail("C1", u.empty)
    for c in members:
        for d in members:
            if d != c and d & ~c == 0:
                return _fail("C2", Subset(u, d), Subset(u, c))
    for c1 in members:
        for c2 in members:
            if c1 == c2:
                continue
            for e in bits(c1 & c2):
                room = (c1 | c2) & ~(1 << e)
                if not any(c3 & ~room == 0 for c3 in members):
                    return _fail("C3", Subset(u, c1), Subset(u, c2), e)
    return AxiomReport(True)


CHECKERS = {
    "independents": check_independence_axioms,
    "bases": check_base_axioms,
    "circuits": check_circuit_axioms,
}


def _replay(law: str, witness: tuple, family: SetFamily) -> bool:
    members = family.masks()
    inside = family.contains_mask
    if law == "I1":
        return not inside(0)
    if law == "I2":
        big, small = witness
        return inside(big.mask) and small <= big and not inside(small.mask)
    if law == "I3":
        a, b = witness
        return (inside(a.mask) and inside(b.mask) and len(a) < len(b)
                and not any(inside(a.mask | 1 << e) for e in bits(b.mask & ~a.mask)))
    if law == "B1":
        return not members
    if law == "B2":
        b1, b2, x = witness
        if not (inside(b1.mask) and inside(b2.mask) and x in b1 and x not in b2):
            return False
        rest = b1.mask & ~(1 << x)
        return not any(inside(rest | 1 << y) for y in bits(b2.mask & ~b1.mask))
    if law == "C1":
        return inside(0)
    if law == "C2":
        small, big = witness
        return inside(small.mask) and inside(big.mask) and small < big
    if law == "C3":
        c1, c2, e = witness
        if not (inside(c1.mask) and inside(c2.mask) and c1 != c2 and e in c1 and e in c2):
            return False
        room = (c1.mask | c2.mask) & ~(1 << e)
        return not any(c3 & ~room == 0 for c3 in members)
    raise ValueError(f"unknown law {law!r}")


class Matroid:
    """A matroid held as its explicit family of independent sets."""

    __slots__ = ("universe", "independents", "_indep")

    def __init__(self, universe: Universe, independents: SetFamily, validate: bool = True):
        if independents.universe != universe:
            raise UniverseMismatchError()
        check_enumerable(universe, ORACLE_LIMIT)
        independents = independents.materialize(ORACLE_LIMIT)
        if validate:
            report = check_independence_axioms(independents)
            if not report:
                raise ValidationError(f"not a matroid: {report.violated_law} fails",
                                      law=report.violated_law, witness=report.witness)
        self.universe = universe
        self.independents = independents
        self._indep = tuple(independents.masks())

    @classmethod
    def from_test(cls, universe: Universe, test: Callable[[Subset], bool], validate: bool = True) -> "Matroid":
        """Enumerate the subsets passing ``test`` and take them as the independent sets."""
        return cls(universe, SetFamily.where(universe, test).materialize(ORACLE_LIMIT), validate)

    @classmethod
    def free(cls, universe: Universe) -> "Matroid":
        return cls(universe, SetFamily.power_set(universe), validate=False)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.universe == other.universe and self._indep == other._indep

    def __hash__(self):
        return hash((self.universe, self._indep))

    def __repr__(self) -> str:
        return f"Matroid(n={self.universe.size}, independents={len(self._indep)})"

    def _mask(self, x: Subset) -> int:
        if x.universe != self.universe:
            raise UniverseMismatchError()
        return x.mask

    def is_independent(self, x: Subset) -> bool:
        return self.independents.contains_mask(self._mask(x))

    def rank(self, x: Subset) -> int:
        """Size of the largest independent set inside ``x``."""
        m = self._mask(x)
        return max(popcount(i) for i in self._indep if i & ~m == 0)

    def bases(self) -> SetFamily:
        return max_elems(self.independents)

    def circuits(self) -> SetFamily:
        indep = set(self._indep)
        dependent = [m for m in range(1 << self.universe.size) if m not in indep]
        return min_elems(SetFamily(self.universe, members=dependent))

    def closure(self, x: Subset) -> Subset:
        r = self.rank(x)
        mask = 0
        for u in range(self.universe.size):
            if self.rank(x.add(u)) == r:
                mask |= 1 << u
        return Subset(self.universe, mask)

    def is_closed(self, x: Subset) -> bool:
        return self.closure(x) == x

    def dual(self) -> "Matroid":
        """The matroid whose bases are the complements of this one's bases."""
        full = self.universe.full_mask
        co_bases = [full & ~b for b in self.bases().masks()]
        indep = [m for m in range(1 << self.universe.size) if any(m & ~b == 0 for b in co_bases)]
        return Matroid(self.universe, SetFamily(self.universe, members=indep), validate=False)


def matroid_from_circuits(circuits: SetFamily, validate: bool = True) -> Matroid:
    """The matroid whose independent sets are the subsets containing no given circuit."""
    u = circuits.universe
    check_enumerable(u, ORACLE_LIMIT)
    if validate:
        report = check_circuit_axioms(circuits)
        if not report:
            raise ValidationError(f"not a circuit family: {report.violated_law} fails",
                                  law=report.violated_law, witness=report.witness)
    cs = circuits.masks()
    indep = [m for m in range(1 << u.size) if not any(c & ~m == 0 for c in cs)]
    return Matroid(u, SetFamily(u, members=indep), validate=False)


def matroid_from_bases(bases: SetFamily, validate: bool = True) -> Matroid:
    u = bases.universe
    check_enumerable(u, ORACLE_LIMIT)
    if validate:
        report = check_base_axioms(bases)
        if not report:
            raise ValidationError(f"not a base family: {report.violated_law} fails",
                                  law=report.violated_law, witness=report.witness)
    bs = bases.masks()
    indep = [m for m in range(1 << u.size) if any(m & ~b == 0 for b in bs)]
    return Matroid(u, SetFamily(u, members=indep), validate=False)


def all_antichains(universe: Universe) -> list[SetFamily]:
    """Every antichain of subsets of ``universe`` (Dedekind-number many)."""
    n = universe.size
    check_enumerable(universe, ANTICHAIN_LIMIT)
    order = sorted(range(1 << n), key=lambda m: (popcount(m), m))
    out = []

    def walk(k, chosen):
        if k == len(order):
            out.append(SetFamily(universe, members=chosen))
            return
        m = order[k]
        walk(k + 1, chosen)
        # earlier masks are never larger, so only check they are not inside m
        if not any(c & ~m == 0 for c in chosen):
            chosen.append(m)
            walk(k + 1, chosen)
            chosen.pop()

    walk(0, [])
    return out


def all_matroids(universe: Universe) -> list[Matroid]:
    """Every matroid on ``universe``, one per valid circuit antichain."""
    return [matroid_from_circuits(a, validate=False)
            for a in all_antichains(universe) if check_circuit_axioms(a)]
