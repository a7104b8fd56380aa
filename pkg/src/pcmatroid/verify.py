"""Property sweeps that check every closed-form result against brute force.

Each sweep returns a :class:`SweepResult` counting the individual checks it
made and recording (up to a cap) the ones that failed. ``run_all`` bundles
them for the ``verify`` command.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .approxnum import lower_number, random_covering, upper_number
from .family import SetFamily, min_elems
from .ground import Subset, Universe, bits, popcount
from .matroid import (
    ANTICHAIN_LIMIT,
    Matroid,
    all_matroids,
    check_circuit_axioms,
    check_independence_axioms,
    matroid_from_circuits,
)
from .pcm import PartitionCircuitMatroid, PartitionMatroid
from .rough import (
    Partition,
    all_partitions,
    lower_approx,
    partition_from_relation,
    random_partition,
    relation_from_partition,
    upper_approx,
)

MAX_REPORTED = 20


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append(what() if callable(what) else str(what))

    def fail(self, what: str) -> None:
        """Record a failure among checks counted separately."""
        self.failed += 1
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failed": self.failed,
                "failures": list(self.failures)}


def rough_laws(max_n: int = 5) -> SweepResult:
    """The eight lower/upper approximation laws over every partition and pair of subsets."""
    res = SweepResult("rough-laws")
    for n in range(max_n + 1):
        u = Universe(n)
        full = u.full_mask
        size = 1 << n
        for p in all_partitions(u):
            res.check(partition_from_relation(relation_from_partition(p)) == p,
                      lambda: f"round trip fails for {p}")
            lo = [lower_approx(p, Subset(u, x)).mask for x in range(size)]
            up = [upper_approx(p, Subset(u, x)).mask for x in range(size)]
            for x in range(size):
                where = lambda law: f"{law} fails for {p}, X={Subset(u, x)}"
                res.check(lo[x] & ~x == 0, lambda: where("1L"))
                res.check(x & ~up[x] == 0, lambda: where("1H"))
                res.check(lo[full ^ x] == full ^ up[x], lambda: where("3L"))
                res.check(up[full ^ x] == full ^ lo[x], lambda: where("3H"))
                res.check(lo[full ^ lo[x]] == full ^ lo[x], lambda: where("4L"))
                res.check(up[full ^ up[x]] == full ^ up[x], lambda: where("4H"))
                for y in range(size):
                    if lo[x & y] != lo[x] & lo[y]:
                        res.fail(f"2L fails for {p}, X={Subset(u, x)}, Y={Subset(u, y)}")
                    if up[x | y] != up[x] | up[y]:
                        res.fail(f"2H fails for {p}, X={Subset(u, x)}, Y={Subset(u, y)}")
                res.checked += 2 * size
    return res


def _is_partition(masks: list[int], full: int) -> bool:
    seen = 0
    for m in masks:
        if m == 0 or seen & m:
            return False
        seen |= m
    return seen == full


def random_family(rng: random.Random, max_n: int = 5) -> SetFamily:
    """A random family that is not a partition, biased towards small circuits."""
    while True:
        n = rng.randint(1, max_n)
        u = Universe(n)
        full = u.full_mask
        count = rng.randint(1, 5)
        masks = {rng.randint(0 if rng.random() < 0.05 else 1, full) for _ in range(count)}
        if not _is_partition(list(masks), full):
            return SetFamily(u, members=masks)


def circuit_axioms(max_n: int = 6, random_families: int = 500, seed: int = 0) -> SweepResult:
    """Partition blocks always pass the circuit axioms; random families are classified
    and cross-checked against the independence axioms of the family they induce."""
    res = SweepResult("circuit-axioms")
    for n in range(max_n + 1):
        for p in all_partitions(n):
            rep = check_circuit_axioms(SetFamily(p.universe, members=p.masks))
            res.check(rep.verdict, lambda: f"blocks of {p} rejected: {rep.violated_law} {rep.witness}")
    rng = random.Random(seed)
    for _ in range(random_families):
        fam = random_family(rng)
        rep = check_circuit_axioms(fam)
        if rep.verdict:
            m = matroid_from_circuits(fam, validate=False)
            res.check(check_independence_axioms(m.independents).verdict and m.circuits() == fam,
                      lambda: f"{fam} accepted but does not induce a matroid with these circuits")
        else:
            res.check(rep.replay(fam), lambda: f"{fam}: witness {rep.violated_law} {rep.witness} does not replay")
            indep = [x for x in range(1 << fam.universe.size)
                     if not any(c & ~x == 0 for c in fam.masks())]
            induced = SetFamily(fam.universe, members=indep)
            genuine = (check_independence_axioms(induced).verdict
                       and Matroid(fam.universe, induced, validate=False).circuits() == fam)
            res.check(not genuine, lambda: f"{fam} rejected by {rep.violated_law} but is a circuit family")
    return res


def characterizations(max_n: int = 5) -> SweepResult:
    """The four independence tests agree with each other and with the oracle."""
    res = SweepResult("independence-characterizations")
    for n in range(max_n + 1):
        for p in all_partitions(n):
            pcm = PartitionCircuitMatroid(p)
            oracle = matroid_from_circuits(SetFamily(p.universe, members=p.masks))
            for x in p.universe.all_subsets():
                answers = (pcm.is_independent(x), pcm.is_independent_by_lower_approx(x),
                           pcm.is_independent_by_upper_approx(x), pcm.is_independent_by_lower_number(x),
                           oracle.is_independent(x))
                res.check(len(set(answers)) == 1, lambda: f"{p}, X={x}: {answers}")
    return res


def _compare_formulas(res: SweepResult, p: Partition, xs, oracle: Matroid | None = None) -> None:
    pcm = PartitionCircuitMatroid(p)
    u = p.universe
    if oracle is None:
        oracle = matroid_from_circuits(SetFamily(u, members=p.masks))
    dual = oracle.dual()
    full_rank = pcm.rank(u.full)
    res.check(pcm.circuits() == oracle.circuits(), lambda: f"circuits differ for {p}")
    for x in xs:
        where = lambda what: f"{what} differs for {p}, X={x}"
        res.check(pcm.rank(x) == oracle.rank(x), lambda: where("rank"))
        res.check(pcm.closure(x) == oracle.closure(x), lambda: where("closure"))
        res.check(pcm.is_closed(x) == oracle.is_closed(x), lambda: where("is_closed"))
        d = dual.is_independent(x)
        res.check(pcm.dual_is_independent(x) == d, lambda: where("dual independence (block count)"))
        res.check(pcm.dual_is_independent_by_upper_number(x) == d,
                  lambda: where("dual independence (upper number)"))
        res.check(pcm.dual_rank(x) == dual.rank(x), lambda: where("dual rank"))
        res.check(pcm.dual_rank(x) == len(x) - full_rank + pcm.rank(~x), lambda: where("dual rank identity"))
        res.check(pcm.dual_closure(x) == dual.closure(x), lambda: where("dual closure"))


def _circuits_by_lower_number(p: Partition) -> SetFamily:
    u = p.universe
    ones = [x.mask for x in u.all_subsets() if lower_number(p, x) == 1]
    return min_elems(SetFamily(u, members=ones))


def formulas(max_n: int = 5, sample_n: int = 8, samples: int = 1000, seed: int = 0) -> SweepResult:
    """Closed forms versus oracle: exhaustive up to ``max_n``, sampled at ``sample_n``."""
    res = SweepResult("formulas-vs-oracle")
    for n in range(max_n + 1):
        for p in all_partitions(n):
            res.check(PartitionCircuitMatroid(p).circuits() == _circuits_by_lower_number(p),
                      lambda: f"circuits differ from Min{{f_low = 1}} for {p}")
            _compare_formulas(res, p, list(p.universe.all_subsets()))
    if samples and sample_n:
        rng = random.Random(seed)
        u = Universe(sample_n)
        per_partition = 20
        done = 0
        while done < samples:
            p = random_partition(u, rng)
            k = min(per_partition, samples - done)
            xs = [Subset(u, rng.getrandbits(sample_n)) for _ in range(k)]
            _compare_formulas(res, p, xs)
            done += k
    return res


def duality(max_n: int = 5) -> SweepResult:
    """Double duals, the dual rank identity, and capacity duality of partition matroids."""
    res = SweepResult("duality")
    # enumerating every matroid is only feasible up to the antichain limit
    for n in range(min(max_n, ANTICHAIN_LIMIT) + 1):
        u = Universe(n)
        full = u.full
        for m in all_matroids(u):
            d = m.dual()
            res.check(d.dual() == m, lambda: f"dual of dual differs for {m.independents}")
            co = sorted(u.full_mask & ~b for b in m.bases().masks())
            res.check(d.bases().masks() == co, lambda: f"dual bases are not complements for {m.independents}")
            r_full = m.rank(full)
            for x in u.all_subsets():
                res.check(d.rank(x) == len(x) - r_full + m.rank(~x),
                          lambda: f"dual rank identity fails for {m.independents}, X={x}")
    for n in range(max_n + 1):
        for p in all_partitions(n):
            sizes = [popcount(b) for b in p.masks]
            for caps in _capacity_vectors(sizes):
                pm = PartitionMatroid(p, caps)
                oracle = Matroid.from_test(p.universe, lambda x: _within(p.masks, caps, x.mask)).dual()
                dual = pm.dual()
                res.check(dual.capacities == tuple(s - k for s, k in zip(sizes, caps)),
                          lambda: f"dual capacities wrong for {p}, k={caps}")
                for x in p.universe.all_subsets():
                    res.check(dual.is_independent(x) == oracle.is_independent(x),
                              lambda: f"capacity duality fails for {p}, k={caps}, X={x}")
    return res


def _capacity_vectors(sizes):
    if not sizes:
        yield ()
        return
    for k in range(sizes[0] + 1):
        for rest in _capacity_vectors(sizes[1:]):
            yield (k,) + rest


def _within(blocks, caps, x: int) -> bool:
    return all(popcount(x & b) <= k for b, k in zip(blocks, caps))


_INDEX_CACHE: dict[int, tuple] = {}


def _pair_tables(n: int):
    if n not in _INDEX_CACHE:
        idx = np.arange(1 << n)
        _INDEX_CACHE[n] = (idx, idx[:, None] | idx[None, :], idx[:, None] & idx[None, :],
                           (idx[:, None] & ~idx[None, :]) == 0)
    return _INDEX_CACHE[n]


def approx_numbers(sizes=(3, 4, 5, 6), coverings: int = 500, seed: int = 0) -> SweepResult:
    """The five properties of the approximation numbers over random coverings, all X and Y."""
    res = SweepResult("approximation-numbers")
    rng = random.Random(seed)
    for n in sizes:
        u = Universe(n)
        idx, union, inter, subset = _pair_tables(n)
        full = u.full_mask
        for _ in range(coverings):
            c = random_covering(u, rng)
            xs = list(u.all_subsets())
            lo = np.array([lower_number(c, x) for x in xs])
            hi = np.array([upper_number(c, x) for x in xs])
            res.check(lo[0] == 0, lambda: f"f_low(empty) != 0 for {c.blocks}")
            bad = subset & (lo[:, None] > lo[None, :])
            res.check(not bad.any(), lambda: f"monotonicity fails for {c.blocks}")
            bad = lo[:, None] + lo[None, :] > lo[union] + lo[inter]
            res.check(not bad.any(), lambda: f"supermodularity fails for {c.blocks}")
            res.check(bool(np.all(lo <= hi)), lambda: f"f_low <= f_up fails for {c.blocks}")
            res.check(bool(np.all(lo + hi[full ^ idx] == len(c))),
                      lambda: f"f_low(X) + f_up(X^c) != |C| for {c.blocks}")
    return res


def greedy(sizes=range(4, 11), instances: int = 100, seed: int = 0, max_weight: int = 100) -> SweepResult:
    """Greedy weight equals the brute-force optimum on random weighted partition matroids."""
    res = SweepResult("greedy-optimality")
    rng = random.Random(seed)
    for n in sizes:
        u = Universe(n)
        for _ in range(instances):
            p = random_partition(u, rng)
            caps = tuple(rng.randint(0, popcount(b)) for b in p.masks)
            w = [rng.randint(0, max_weight) for _ in range(n)]
            got = PartitionMatroid(p, caps).greedy_max_weight_independent(w)
            best = max(sum(w[i] for i in bits(x)) for x in range(1 << n) if _within(p.masks, caps, x))
            res.check(_within(p.masks, caps, got.mask) and sum(w[i] for i in got) == best,
                      lambda: f"greedy gives {got} (weight {sum(w[i] for i in got)}) but optimum is {best}"
                              f" for {p}, k={caps}, w={w}")
    return res


def run_all(max_n: int = 5, seed: int = 0) -> list[SweepResult]:
    return [
        rough_laws(max_n),
        circuit_axioms(max_n, seed=seed),
        characterizations(max_n),
        formulas(max_n, seed=seed),
        duality(max_n),
        approx_numbers(seed=seed),
        greedy(seed=seed),
    ]
