"""JSON forms of universes, subsets, families, partitions, coverings and relations.

A subset is written as an array of element labels, or of indices when the
universe has no labels. A universe is either a size (``3``) or a label list
(``["a", "b", "c"]``).
"""

from __future__ import annotations

from .approxnum import Covering
from .errors import ValidationError
from .family import SetFamily
from .ground import Subset, Universe
from .rough import EquivalenceRelation, Partition, partition_from_relation


def universe_from_json(value) -> Universe:
    if isinstance(value, bool) or not isinstance(value, (int, list)):
        raise ValidationError("universe must be a nonnegative integer or an array of labels", law="schema")
    if isinstance(value, list):
        for lab in value:
            if isinstance(lab, bool) or not isinstance(lab, (str, int)):
                raise ValidationError(f"label {lab!r} must be a string or integer", law="schema")
    return Universe.of(value)


def subset_from_json(universe: Universe, value) -> Subset:
    if not isinstance(value, list):
        raise ValidationError(f"a subset must be an array of elements, got {value!r}", law="schema")
    return universe.subset_of_labels(value)


def subset_to_json(x: Subset) -> list:
    return x.labels()


def element_to_json(universe: Universe, i: int):
    return universe.label(i)


def family_from_json(universe: Universe, value) -> SetFamily:
    if not isinstance(value, list):
        raise ValidationError("a family must be an array of subsets", law="schema")
    return SetFamily.of(universe, [subset_from_json(universe, s) for s in value])


def family_to_json(family: SetFamily) -> list[list]:
    """Members in ascending bit-pattern order."""
    return [s.labels() for s in family.subsets()]


def _blocks(doc: dict, universe: Universe) -> tuple[Subset, ...]:
    blocks = doc.get("blocks")
    if not isinstance(blocks, list):
        raise ValidationError('expected "blocks": an array of subsets', law="schema")
    return tuple(subset_from_json(universe, b) for b in blocks)


def _universe(doc: dict) -> Universe:
    if "universe" not in doc:
        raise ValidationError('missing "universe"', law="schema")
    return universe_from_json(doc["universe"])


def partition_from_json(doc: dict) -> Partition:
    u = _universe(doc)
    return Partition(u, _blocks(doc, u))


def partition_to_json(p: Partition) -> dict:
    u = p.universe
    return {"universe": list(u.labels) if u.labels is not None else u.size,
            "blocks": [b.labels() for b in p.blocks]}


def covering_from_json(doc: dict) -> Covering:
    u = _universe(doc)
    return Covering(u, _blocks(doc, u))


def relation_from_json(doc: dict, reflexive_close: bool = False) -> EquivalenceRelation:
    u = _universe(doc)
    pairs = doc.get("pairs")
    if not isinstance(pairs, list):
        raise ValidationError('expected "pairs": an array of [a, b] pairs', law="schema")
    idx = []
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValidationError(f"relation pair {pair!r} must have two elements", law="schema")
        idx.append((u.index(pair[0]), u.index(pair[1])))
    try:
        if reflexive_close:
            return EquivalenceRelation.reflexive_closure(u, idx)
        return EquivalenceRelation(u, frozenset(idx))
    except ValidationError as err:
        if err.law in ("reflexive", "symmetric", "transitive"):
            labelled = tuple(u.label(i) for i in err.witness)
            raise ValidationError(str(err), law=err.law, witness=labelled) from None
        raise


def relation_to_json(r: EquivalenceRelation) -> list:
    u = r.universe
    return [[u.label(a), u.label(b)] for a, b in sorted(r.pairs)]


def partition_from_relation_json(doc: dict, reflexive_close: bool = False) -> Partition:
    return partition_from_relation(relation_from_json(doc, reflexive_close))
