"""Partition-circuit matroids, rough-set approximations and approximation numbers."""

from .approxnum import Covering, lower_number, upper_number
from .errors import CapacityError, PcmError, UniverseMismatchError, ValidationError
from .family import SetFamily, low, max_elems, min_elems, opp, upp
from .ground import (
    Subset,
    Universe,
    cardinality,
    complement,
    difference,
    intersection,
    is_subset_of,
    union,
)
from .matroid import (
    AxiomReport,
    Matroid,
    check_base_axioms,
    check_circuit_axioms,
    check_independence_axioms,
    matroid_from_bases,
    matroid_from_circuits,
)
from .pcm import (
    PartitionCircuitMatroid,
    PartitionMatroid,
    dual_partition_matroid,
    from_partition,
    greedy_max_weight_independent,
)
from .rough import (
    EquivalenceRelation,
    Partition,
    lower_approx,
    partition_from_relation,
    relation_from_partition,
    upper_approx,
)

__version__ = "0.1.0"
