"""
Claim registry for the verification harness.

Each claim has an instance builder (constructed families or seeded random
digraphs) and an evaluator that first checks the claim's hypotheses and
then its conclusion. Instances whose hypotheses fail are vacuous, never
passes. Failed results carry a witness that ``recheck`` can re-run.
"""
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import structlog

from ...infrastructure.dependencies import get_settings
from ..exceptions import SamplingExhaustedError, UnknownClaimError
from ..models.claims import (
    BatchSummary,
    ClaimId,
    ClaimInstance,
    ClaimResult,
    ClaimStatus,
    ClaimTier,
    ClaimWitness,
    FilterKind,
    RandomSpec,
)
from ..models.digraph import Cycle, Digraph, Path
from .connectivity import is_k_strong, is_strong, strong_components, vertex_connectivity
from .constructions import darbinyan_counterexample, expand_at, reduce_pair, thomassen_refutation
from .degree_conditions import (
    condition_M,
    condition_N,
    has_many_high_degree_vertices,
    is_M_strongly_connected,
    is_meyniel_set,
)
from .digraph_ops import add_arcs, degree, minimum_degree, missing_arcs, vertices_with_degree_at_least
from .ham_solver import (
    HamiltonianMode,
    count_hamiltonian,
    cycle_of_length_through,
    cycle_through,
    extend_path_max,
    hamiltonian_cycle,
    hamiltonian_path_between,
    hamiltonian_path_ends,
    insert_vertex,
    longest_cycle,
    strongly_hamiltonian_connected,
)
from .sampling import (
    cycle_with_external_vertex,
    derive_seed,
    greedy_meyniel_set,
    make_rng,
    path_with_external_vertex,
    random_digraph,
)

logger = structlog.get_logger(__name__)

Verdict = Tuple[ClaimStatus, str]
Builder = Callable[[int, int, int, Sequence[int]], List[ClaimInstance]]
Evaluator = Callable[[ClaimInstance], Verdict]


@dataclass(frozen=True)
class ClaimDefinition:
    claim_id: ClaimId
    tier: ClaimTier
    statement: str
    default_sizes: Tuple[int, ...]
    min_order: int
    build: Builder
    evaluate: Evaluator
    randomized: bool = True
    # random instances per batch when the caller does not choose
    default_samples: int = 0

    def batch_size(self, samples: Optional[int] = None, override: Optional[int] = None) -> int:
        """Explicit request first, then the DIGRAPH_VERIFY_SAMPLES override, then the claim default"""
        if samples is not None:
            return samples
        return self.default_samples if override is None else override


def _passed(detail: str) -> Verdict:
    return ClaimStatus.PASSED, detail


def _failed(detail: str) -> Verdict:
    return ClaimStatus.FAILED, detail


def _vacuous(detail: str) -> Verdict:
    return ClaimStatus.VACUOUS, detail


# Random instance plumbing

def _probability(options: Sequence[float], index: int) -> float:
    return options[index % len(options)]


def _sampled_instance(
    instance_id: int,
    spec: RandomSpec,
    **params: Any,
) -> ClaimInstance:
    description = f"random n={spec.n} p={spec.arc_probability} seed={spec.seed}"
    try:
        digraph = random_digraph(spec)
    except SamplingExhaustedError:
        return ClaimInstance(
            instance_id=instance_id,
            description=description + " (sampling gave up)",
            order=spec.n,
            params={**params, "sampling_exhausted": True},
        )
    return ClaimInstance.from_digraph(instance_id, description, digraph, **params)


def _random_batch(
    probabilities: Sequence[float],
    filters: Tuple[FilterKind, ...] = (),
    k: Optional[int] = None,
    with_z0: bool = False,
) -> Builder:
    def build(claim_index: int, seed: int, samples: int, sizes: Sequence[int]) -> List[ClaimInstance]:
        instances = []
        for i in range(samples):
            n = sizes[i % len(sizes)]
            rng = make_rng(derive_seed(seed, claim_index, i))
            params: Dict[str, Any] = {}
            if with_z0:
                params["z0"] = int(rng.integers(n))
            spec = RandomSpec(
                n=n,
                arc_probability=_probability(probabilities, i),
                seed=derive_seed(seed, claim_index, i, 1),
                post_filters=filters,
                k=k,
                z0=params.get("z0"),
            )
            instances.append(_sampled_instance(i, spec, **params))
        return instances

    return build


def _incomplete(instance: ClaimInstance, *names: str) -> Optional[Verdict]:
    if instance.params.get("sampling_exhausted"):
        return _vacuous("no sample met the filters")
    missing = [name for name in names if instance.params.get(name) is None]
    if missing:
        return _vacuous(f"instance lacks parameter(s) {missing}")
    return None


# Reduction and expansion lemmas

def _evaluate_reduction_connectivity(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance)
    if skip:
        return skip
    d = instance.digraph()
    if d.n < 5:
        return _vacuous(f"order {d.n} < 5")
    k = vertex_connectivity(d)
    if k < 3:
        return _vacuous(f"connectivity {k} < 3")
    for u, v in permutations(d.vertices, 2):
        reduced = reduce_pair(d, u, v)
        if not is_k_strong(reduced.digraph, k - 1):
            return _failed(f"reduce_pair(D, {u}, {v}) is not {k - 1}-strong although D is {k}-strong")
    return _passed(f"D is {k}-strong; all {d.n * (d.n - 1)} reductions are {k - 1}-strong")


def _evaluate_expansion_connectivity(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance)
    if skip:
        return skip
    h = instance.digraph()
    if h.n < 4:
        return _vacuous(f"order {h.n} < 4")
    k = vertex_connectivity(h)
    if k < 2:
        return _vacuous(f"connectivity {k} < 2")
    for z in h.vertices:
        expanded = expand_at(h, z)
        if not is_k_strong(expanded.digraph, k + 1):
            return _failed(f"expand_at(H, {z}) is not {k + 1}-strong although H is {k}-strong")
    return _passed(f"H is {k}-strong; all {h.n} expansions are {k + 1}-strong")


def _evaluate_bijection(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance)
    if skip:
        return skip
    d = instance.digraph()
    if d.n < 5:
        return _vacuous(f"order {d.n} < 5")
    for u in d.vertices:
        ends = hamiltonian_path_ends(d, u)
        for v in d.vertices:
            if u == v:
                continue
            reduced = reduce_pair(d, u, v).digraph
            has_cycle = hamiltonian_cycle(reduced).found
            if (v in ends) != has_cycle:
                return _failed(
                    f"Hamiltonian ({u},{v})-path in D: {v in ends}, "
                    f"Hamiltonian cycle in reduce_pair(D,{u},{v}): {has_cycle}"
                )
            paths = count_hamiltonian(d, HamiltonianMode.PATH, (u, v))
            cycles = count_hamiltonian(reduced, HamiltonianMode.CYCLE)
            if paths != cycles:
                return _failed(f"{paths} Hamiltonian ({u},{v})-paths but {cycles} cycles after reduction")

    # converse direction: D itself plays H
    is_hamiltonian = hamiltonian_cycle(d).found
    cycles = count_hamiltonian(d, HamiltonianMode.CYCLE)
    for z in d.vertices:
        expanded = expand_at(d, z)
        e = expanded.digraph
        has_path = hamiltonian_path_between(e, expanded.u, expanded.v).found
        if has_path != is_hamiltonian:
            return _failed(
                f"expand_at(H, {z}) has Hamiltonian (u,v)-path: {has_path}, H Hamiltonian: {is_hamiltonian}"
            )
        paths = count_hamiltonian(e, HamiltonianMode.PATH, (expanded.u, expanded.v))
        if paths != cycles:
            return _failed(f"expand_at(H, {z}) has {paths} Hamiltonian (u,v)-paths but H has {cycles} cycles")
    return _passed(f"path/cycle correspondence exact on all {d.n * (d.n - 1)} pairs and {d.n} expansions")


# Constructed families

def _constructed(claim_sizes: Callable[[int], List[Tuple[str, Digraph, Dict[str, Any]]]]) -> Builder:
    def build(claim_index: int, seed: int, samples: int, sizes: Sequence[int]) -> List[ClaimInstance]:
        instances = []
        for n in sizes:
            for description, digraph, params in claim_sizes(n):
                instances.append(ClaimInstance.from_digraph(len(instances), description, digraph, **params))
        return instances

    return build


def _counterexample_instances(n: int) -> List[Tuple[str, Digraph, Dict[str, Any]]]:
    return [(f"darbinyan_counterexample({n})", darbinyan_counterexample(n), {"family_order": n})]


def _evaluate_counterexample(instance: ClaimInstance) -> Verdict:
    d = instance.digraph()
    n = d.n
    kappa = vertex_connectivity(d)
    if kappa != 2:
        return _failed(f"vertex connectivity {kappa}, expected 2")
    if hamiltonian_cycle(d).found:
        return _failed("digraph is Hamiltonian")
    high = vertices_with_degree_at_least(d, n)
    if len(high) != n - 1:
        return _failed(f"{len(high)} vertices of degree >= {n}, expected {n - 1}")
    expected = {0: 4, n - 5: 2 * n - 8, n - 6: n + 4}
    expected.update({n - 4 + i: n for i in (1, 2, 3)})
    for x, value in sorted(expected.items()):
        if d.total_degree(x) != value:
            return _failed(f"d({x}) = {d.total_degree(x)}, expected {value}")
    return _passed(f"2-strong, non-Hamiltonian, {n - 1} vertices of degree >= {n}")


def _sharpness_instances(n: int) -> List[Tuple[str, Digraph, Dict[str, Any]]]:
    base = darbinyan_counterexample(n)
    return [
        (f"darbinyan_counterexample({n}) + {x}->{y}", add_arcs(base, [(x, y)]), {"family_order": n, "added_arc": [x, y]})
        for x, y in missing_arcs(base)
    ]


def _evaluate_sharpness(instance: ClaimInstance) -> Verdict:
    answer = hamiltonian_cycle(instance.digraph())
    if not answer.found:
        return _failed(f"adding {instance.params.get('added_arc')} leaves the digraph non-Hamiltonian")
    return _passed(f"Hamiltonian cycle {answer.witness.vertices}")


def _refutation_instances(n: int) -> List[Tuple[str, Digraph, Dict[str, Any]]]:
    result = thomassen_refutation(n)
    return [(f"thomassen_refutation({n})", result.digraph, {"u": result.u, "v": result.v})]


def _evaluate_refutation(instance: ClaimInstance) -> Verdict:
    d = instance.digraph()
    n = d.n
    u = instance.params.get("u", n - 2)
    v = instance.params.get("v", n - 1)
    if not is_k_strong(d, 3):
        return _failed(f"not 3-strong (connectivity {vertex_connectivity(d)})")
    low = minimum_degree(d)
    if low < n + 1:
        return _failed(f"minimum degree {low} < {n + 1}")
    path = hamiltonian_path_between(d, u, v)
    if path.found:
        return _failed(f"Hamiltonian ({u},{v})-path {path.witness.vertices} exists")
    connected, _ = strongly_hamiltonian_connected(d)
    if connected:
        return _failed("digraph is strongly Hamiltonian-connected")
    return _passed(f"3-strong, minimum degree {low}, no Hamiltonian ({u},{v})-path")


# Degree-sum claims

def _evaluate_long_order_statement(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance)
    if skip:
        return skip
    d = instance.digraph()
    n = d.n
    if n < 9:
        return _vacuous(f"order {n} < 9")
    if not is_k_strong(d, 2):
        return _vacuous("not 2-strong")
    low = minimum_degree(d)
    if low < n - 4:
        return _vacuous(f"minimum degree {low} < {n - 4}")
    high = vertices_with_degree_at_least(d, n)
    if len(high) < n - 1:
        return _vacuous(f"only {len(high)} vertices of degree >= {n}")
    if not hamiltonian_cycle(d).found:
        return _failed("hypotheses hold but the digraph is not Hamiltonian")
    return _passed("Hamiltonian")


def _build_transfer(claim_index: int, seed: int, samples: int, sizes: Sequence[int]) -> List[ClaimInstance]:
    instances = []
    for i in range(samples):
        n = sizes[i % len(sizes)]
        spec_seed = derive_seed(seed, claim_index, i, 1)
        if i % 2 == 0:
            spec = RandomSpec(n=n, arc_probability=0.85, seed=spec_seed, post_filters=(FilterKind.CONDITION_N,))
            instances.append(_sampled_instance(i, spec, direction="reduce"))
        else:
            z0 = int(make_rng(derive_seed(seed, claim_index, i)).integers(n))
            spec = RandomSpec(
                n=n,
                arc_probability=0.8,
                seed=spec_seed,
                post_filters=(FilterKind.STRONG, FilterKind.CONDITION_M),
                z0=z0,
            )
            instances.append(_sampled_instance(i, spec, direction="expand", z0=z0))
    return instances


def _evaluate_transfer(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance)
    if skip:
        return skip
    d = instance.digraph()
    if instance.params.get("direction", "reduce") == "reduce":
        if d.n < 5:
            return _vacuous(f"order {d.n} < 5")
        if not condition_N(d).holds:
            return _vacuous("condition (N) fails")
        k = vertex_connectivity(d)
        if k < 3:
            return _vacuous(f"connectivity {k} < 3")
        for u in d.vertices:
            ends = hamiltonian_path_ends(d, u)
            for v in d.vertices:
                if u == v:
                    continue
                reduced = reduce_pair(d, u, v)
                h = reduced.digraph
                verdict = condition_M(h, reduced.z0)
                if not verdict.holds:
                    return _failed(f"reduce_pair(D,{u},{v}) breaks condition (M): {verdict.describe()}")
                if not is_k_strong(h, k - 1):
                    return _failed(f"reduce_pair(D,{u},{v}) is not {k - 1}-strong")
                if (v in ends) != hamiltonian_cycle(h).found:
                    return _failed(f"Hamiltonian ({u},{v})-path and cycle of reduce_pair(D,{u},{v}) disagree")
        return _passed(f"(N) and {k}-strong carry over to (M) and {k - 1}-strong on every reduction")

    z0 = instance.params.get("z0")
    if z0 is None:
        return _vacuous("instance lacks parameter(s) ['z0']")
    if d.n < 4:
        return _vacuous(f"order {d.n} < 4")
    if not condition_M(d, z0).holds:
        return _vacuous(f"condition (M) fails for z0={z0}")
    k = vertex_connectivity(d)
    if k < 2:
        return _vacuous(f"connectivity {k} < 2")
    expanded = expand_at(d, z0)
    e = expanded.digraph
    verdict = condition_N(e)
    if not verdict.holds:
        return _failed(f"expand_at(H,{z0}) breaks condition (N): {verdict.describe()}")
    if not is_k_strong(e, k + 1):
        return _failed(f"expand_at(H,{z0}) is not {k + 1}-strong")
    if hamiltonian_path_between(e, expanded.u, expanded.v).found != hamiltonian_cycle(d).found:
        return _failed(f"Hamiltonian (u,v)-path of expand_at(H,{z0}) and cycle of H disagree")
    return _passed(f"(M) and {k}-strong carry over to (N) and {k + 1}-strong on expansion")


def _condition_m_hypotheses(d: Digraph, z0: int) -> Optional[Verdict]:
    if d.n < 3:
        return _vacuous(f"order {d.n} < 3")
    if not is_strong(d):
        return _vacuous("not strong")
    verdict = condition_M(d, z0)
    if not verdict.holds:
        return _vacuous(verdict.describe())
    return None


def _evaluate_long_cycle(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance, "z0")
    if skip:
        return skip
    d = instance.digraph()
    skip = _condition_m_hypotheses(d, instance.params["z0"])
    if skip:
        return skip
    if hamiltonian_cycle(d).found:
        return _passed("Hamiltonian")
    longest = longest_cycle(d)
    length = 0 if longest is None else longest.length
    if length < d.n - 1:
        return _failed(f"not Hamiltonian and the longest cycle has {length} < {d.n - 1} vertices")
    return _passed(f"cycle of length {length}")


def _evaluate_cycle_avoiding_z0(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance, "z0")
    if skip:
        return skip
    d = instance.digraph()
    z0 = instance.params["z0"]
    skip = _condition_m_hypotheses(d, z0)
    if skip:
        return skip
    found = cycle_through(d, [v for v in d.vertices if v != z0])
    if found is None:
        return _failed(f"no cycle contains V(D) - {{{z0}}}")
    return _passed(f"cycle {found.vertices}")


def _evaluate_high_degree_cycle(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance)
    if skip:
        return skip
    d = instance.digraph()
    if d.n < 3:
        return _vacuous(f"order {d.n} < 3")
    if not is_strong(d):
        return _vacuous("not strong")
    many, high = has_many_high_degree_vertices(d)
    if not many:
        return _vacuous(f"only {len(high)} vertices of degree >= {d.n}")
    found = cycle_through(d, high)
    if found is None:
        return _failed(f"no cycle contains the high-degree vertices {high}")
    return _passed(f"cycle {found.vertices}")


# Meyniel sets

def _build_meyniel(strong_only: bool, probabilities: Sequence[float]) -> Builder:
    def build(claim_index: int, seed: int, samples: int, sizes: Sequence[int]) -> List[ClaimInstance]:
        instances = []
        for i in range(samples):
            n = sizes[i % len(sizes)]
            spec = RandomSpec(
                n=n,
                arc_probability=_probability(probabilities, i),
                seed=derive_seed(seed, claim_index, i, 1),
                post_filters=(FilterKind.STRONG,) if strong_only else (),
            )
            instance = _sampled_instance(i, spec)
            if instance.params.get("sampling_exhausted"):
                instances.append(instance)
                continue
            d = instance.digraph()
            rng = make_rng(derive_seed(seed, claim_index, i))
            order = [int(v) for v in rng.permutation(n)]
            allowed = None
            if not strong_only:
                report = strong_components(d)
                allowed = report.components[report.component_of(order[0])]
            instance.params["M"] = greedy_meyniel_set(d, order, allowed)
            instances.append(instance)
        return instances

    return build


def _evaluate_meyniel_strong(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance, "M")
    if skip:
        return skip
    d = instance.digraph()
    chosen = list(instance.params["M"])
    if not chosen:
        return _vacuous("M is empty")
    if not is_strong(d):
        return _vacuous("not strong")
    verdict = is_meyniel_set(d, chosen)
    if not verdict.holds:
        return _vacuous(verdict.describe())
    found = cycle_through(d, chosen)
    if found is None:
        return _failed(f"no cycle contains the Meyniel set {chosen}")
    return _passed(f"cycle {found.vertices} contains M={chosen}")


def _evaluate_meyniel_m_strong(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance, "M")
    if skip:
        return skip
    d = instance.digraph()
    chosen = list(instance.params["M"])
    if len(chosen) < 2:
        return _vacuous(f"|M| = {len(chosen)} < 2")
    verdict = is_meyniel_set(d, chosen)
    if not verdict.holds:
        return _vacuous(verdict.describe())
    if not is_M_strongly_connected(d, chosen):
        return _vacuous(f"D is not M-strongly connected for M={chosen}")
    found = cycle_through(d, chosen)
    if found is None:
        return _failed(f"no cycle contains the Meyniel set {chosen}")
    return _passed(f"cycle {found.vertices} contains M={chosen}")


# Insertion lemmas

def _build_external_vertex(with_cycle: bool) -> Builder:
    def build(claim_index: int, seed: int, samples: int, sizes: Sequence[int]) -> List[ClaimInstance]:
        instances = []
        for i in range(samples):
            n = sizes[i % len(sizes)]
            rng = make_rng(derive_seed(seed, claim_index, i))
            m = int(rng.integers(2, n))
            extra = n - 1 - m
            if with_cycle:
                d, cycle, x = cycle_with_external_vertex(rng, m, extra)
                params = {"cycle": list(cycle), "x": x}
                kind = "cycle"
            else:
                d, path, x = path_with_external_vertex(rng, m, extra)
                params = {"path": list(path.vertices), "x": x}
                kind = "path"
            description = f"{kind} of {m} vertices + external vertex, n={n}"
            instances.append(ClaimInstance.from_digraph(i, description, d, **params))
        return instances

    return build


def _evaluate_cycle_lengths(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance, "cycle", "x")
    if skip:
        return skip
    d = instance.digraph()
    x = instance.params["x"]
    cycle = Cycle(tuple(instance.params["cycle"]))
    m = cycle.length
    if d.n < 3 or not 2 <= m <= d.n - 1 or x in cycle.vertices or not cycle.is_valid_in(d):
        return _vacuous("cycle/vertex setup does not fit the hypotheses")
    toward = degree(d, x, cycle.vertices).total
    if toward < m + 1:
        return _vacuous(f"d(x, C) = {toward} < {m + 1}")
    for k in range(2, m + 2):
        if cycle_of_length_through(d, x, k) is None:
            return _failed(f"no cycle of length {k} through {x} although d(x, C) = {toward}")
    return _passed(f"cycles of every length 2..{m + 1} through {x}")


def _evaluate_insertion(instance: ClaimInstance) -> Verdict:
    skip = _incomplete(instance, "path", "x")
    if skip:
        return skip
    d = instance.digraph()
    x = instance.params["x"]
    path = Path(tuple(instance.params["path"]))
    m = len(path)
    if d.n < 3 or not 2 <= m <= d.n - 1 or x in path or not path.is_valid_in(d):
        return _vacuous("path/vertex setup does not fit the hypotheses")
    toward = degree(d, x, path.vertices).total
    if toward < m + 2:
        return _vacuous(f"d(x, P) = {toward} < {m + 2}")
    extended = insert_vertex(d, path, x)
    if extended is None:
        return _failed(f"{x} cannot be inserted into {path.vertices} although d(x, P) = {toward}")
    if not extended.is_valid_in(d) or (extended.start, extended.end) != (path.start, path.end):
        return _failed(f"insertion produced an invalid path {extended.vertices}")
    if extend_path_max(d, path, [x]).leftover:
        return _failed("extend_path_max left the insertable vertex out")
    return _passed(f"inserted: {extended.vertices}")


CLAIMS: Dict[ClaimId, ClaimDefinition] = {
    definition.claim_id: definition
    for definition in (
        ClaimDefinition(
            ClaimId.LEMMA_3_1, ClaimTier.MUST_PASS,
            "reduce_pair of a k-strong digraph (k >= 3) is (k-1)-strong",
            (6, 7, 8, 9, 10), 5,
            _random_batch((0.7, 0.8, 0.9), (FilterKind.STRONG,)),
            _evaluate_reduction_connectivity,
            default_samples=200,
        ),
        ClaimDefinition(
            ClaimId.LEMMA_3_2, ClaimTier.MUST_PASS,
            "expand_at of a k-strong digraph (k >= 2) is (k+1)-strong",
            (6, 7, 8, 9, 10), 4,
            _random_batch((0.6, 0.75, 0.9), (FilterKind.STRONG,)),
            _evaluate_expansion_connectivity,
            default_samples=200,
        ),
        ClaimDefinition(
            ClaimId.THM_3_3_BIJECTION, ClaimTier.MUST_PASS,
            "Hamiltonian (u,v)-paths of D correspond to Hamiltonian cycles of reduce_pair(D,u,v)",
            (6, 7, 8, 9), 5,
            _random_batch((0.4, 0.55, 0.7)),
            _evaluate_bijection,
            default_samples=100,
        ),
        ClaimDefinition(
            ClaimId.THM_3_4, ClaimTier.MUST_PASS,
            "the counterexample family is 2-strong and non-Hamiltonian with n-1 vertices of degree >= n",
            (8, 9, 10, 11, 12), 8,
            _constructed(_counterexample_instances),
            _evaluate_counterexample,
            randomized=False,
        ),
        ClaimDefinition(
            ClaimId.REMARK_3_5, ClaimTier.MUST_PASS,
            "adding any missing arc to the counterexample makes it Hamiltonian",
            (8, 9), 8,
            _constructed(_sharpness_instances),
            _evaluate_sharpness,
            randomized=False,
        ),
        ClaimDefinition(
            ClaimId.THM_3_6, ClaimTier.MUST_PASS,
            "the refutation family is 3-strong with minimum degree >= n+1 and not strongly Hamiltonian-connected",
            (9, 10, 11, 12), 9,
            _constructed(_refutation_instances),
            _evaluate_refutation,
            randomized=False,
        ),
        ClaimDefinition(
            ClaimId.THM_3_7_EMPIRICAL, ClaimTier.EMPIRICAL,
            "2-strong, order >= 9, minimum degree >= n-4 and n-1 vertices of degree >= n imply Hamiltonian",
            (9, 10), 9,
            _random_batch((0.65, 0.75), (FilterKind.K_STRONG,), k=2),
            _evaluate_long_order_statement,
            default_samples=100,
        ),
        ClaimDefinition(
            ClaimId.THM_4_1_TRANSFER, ClaimTier.MUST_PASS,
            "reduce_pair turns (N) into (M) and expand_at turns (M) into (N), preserving the path/cycle correspondence",
            (6, 7, 8, 9), 5,
            _build_transfer,
            _evaluate_transfer,
            default_samples=100,
        ),
        ClaimDefinition(
            ClaimId.LEMMA_4_3, ClaimTier.MUST_PASS,
            "a vertex with d(x,C) >= m+1 lies on cycles of every length 2..m+1",
            (4, 5, 6, 7, 8), 3,
            _build_external_vertex(with_cycle=True),
            _evaluate_cycle_lengths,
            default_samples=300,
        ),
        ClaimDefinition(
            ClaimId.LEMMA_4_4, ClaimTier.MUST_PASS,
            "a vertex with d(x,P) >= m+2 can be inserted into P",
            (4, 5, 6, 7, 8), 3,
            _build_external_vertex(with_cycle=False),
            _evaluate_insertion,
            default_samples=300,
        ),
        ClaimDefinition(
            ClaimId.THM_4_5, ClaimTier.MUST_PASS,
            "a strong digraph satisfying (M) is Hamiltonian or has a cycle of length n-1",
            (5, 6, 7, 8, 9, 10), 3,
            _random_batch((0.7, 0.8, 0.9), (FilterKind.STRONG, FilterKind.CONDITION_M), with_z0=True),
            _evaluate_long_cycle,
            default_samples=500,
        ),
        ClaimDefinition(
            ClaimId.COR_4_7, ClaimTier.MUST_PASS,
            "a strong digraph satisfying (M) has a cycle through every vertex except possibly z0",
            (5, 6, 7, 8, 9, 10), 3,
            _random_batch((0.7, 0.8, 0.9), (FilterKind.STRONG, FilterKind.CONDITION_M), with_z0=True),
            _evaluate_cycle_avoiding_z0,
            default_samples=500,
        ),
        ClaimDefinition(
            ClaimId.COR_4_8, ClaimTier.MUST_PASS,
            "a strong digraph with n-1 vertices of degree >= n has a cycle through all of them",
            (5, 6, 7, 8, 9, 10), 3,
            _random_batch((0.7, 0.8, 0.9), (FilterKind.STRONG,)),
            _evaluate_high_degree_cycle,
            default_samples=500,
        ),
        ClaimDefinition(
            ClaimId.THM_4_9, ClaimTier.MUST_PASS,
            "a strong digraph has a cycle through any Meyniel set",
            (4, 5, 6, 7, 8, 9), 2,
            _build_meyniel(strong_only=True, probabilities=(0.4, 0.55, 0.7)),
            _evaluate_meyniel_strong,
            default_samples=300,
        ),
        ClaimDefinition(
            ClaimId.THM_4_10, ClaimTier.MUST_PASS,
            "an M-strongly connected digraph has a cycle through the Meyniel set M",
            (4, 5, 6, 7, 8, 9), 2,
            _build_meyniel(strong_only=False, probabilities=(0.3, 0.45, 0.6)),
            _evaluate_meyniel_m_strong,
            default_samples=300,
        ),
    )
}


def get_claim(claim_id: Union[ClaimId, str]) -> ClaimDefinition:
    try:
        return CLAIMS[ClaimId(claim_id)]
    except ValueError:
        raise UnknownClaimError(f"unknown claim id {claim_id!r}; known: {[c.value for c in ClaimId]}") from None


def claim_index(claim_id: Union[ClaimId, str]) -> int:
    return list(ClaimId).index(get_claim(claim_id).claim_id)


def build_instances(
    claim_id: Union[ClaimId, str],
    seed: int = 0,
    samples: Optional[int] = None,
    sizes: Optional[Sequence[int]] = None,
) -> List[ClaimInstance]:
    """Instances for one claim batch; sizes below the claim's minimum order are dropped"""
    definition = get_claim(claim_id)
    count = definition.batch_size(samples, get_settings().VERIFY_SAMPLES)
    orders = [n for n in (sizes or definition.default_sizes) if n >= definition.min_order]
    if not orders:
        return []
    return definition.build(claim_index(definition.claim_id), seed, count, orders)


def instance_from_spec(instance_id: int, spec: RandomSpec) -> ClaimInstance:
    params: Dict[str, Any] = {}
    if spec.z0 is not None:
        params["z0"] = spec.z0
    if spec.vertex_set:
        params["M"] = list(spec.vertex_set)
    return _sampled_instance(instance_id, spec, **params)


def evaluate_instance(claim_id: Union[ClaimId, str], instance: ClaimInstance) -> ClaimResult:
    definition = get_claim(claim_id)
    status, detail = definition.evaluate(instance)
    witness = None
    if status is ClaimStatus.FAILED:
        witness = ClaimWitness(order=instance.order, arcs=instance.arcs, params=instance.params, detail=detail)
        logger.error("claim_failed", claim=definition.claim_id.value, instance=instance.instance_id, detail=detail)
    return ClaimResult(
        claim_id=definition.claim_id,
        instance_id=instance.instance_id,
        instance_descr=instance.description,
        status=status,
        detail=detail,
        witness=witness,
    )


def verify_claim(
    claim_id: Union[ClaimId, str],
    instances: Optional[Sequence[Union[ClaimInstance, RandomSpec]]] = None,
    *,
    seed: int = 0,
    samples: Optional[int] = None,
    sizes: Optional[Sequence[int]] = None,
) -> List[ClaimResult]:
    """Evaluate a claim on given instances (or RandomSpecs), or on its generated batch"""
    definition = get_claim(claim_id)
    if instances is None:
        batch = build_instances(definition.claim_id, seed, samples, sizes)
    else:
        batch = [
            instance_from_spec(i, item) if isinstance(item, RandomSpec) else item
            for i, item in enumerate(instances)
        ]
    results = [evaluate_instance(definition.claim_id, instance) for instance in batch]
    return sorted(results, key=lambda r: r.instance_id)


def summarize(claim_id: Union[ClaimId, str], results: Sequence[ClaimResult]) -> BatchSummary:
    definition = get_claim(claim_id)
    vacuous = sum(1 for r in results if r.status is ClaimStatus.VACUOUS)
    failed = sum(1 for r in results if r.status is ClaimStatus.FAILED)
    satisfied = len(results) - vacuous
    return BatchSummary(
        claim_id=definition.claim_id,
        tier=definition.tier,
        total=len(results),
        satisfied=satisfied,
        vacuous=vacuous,
        failed=failed,
        vacuous_batch=satisfied == 0,
    )


def recheck(result: ClaimResult) -> bool:
    """Re-run the claim on a failed result's witness; True iff the failure reproduces"""
    if result.witness is None:
        return False
    instance = ClaimInstance(
        instance_id=result.instance_id,
        description=result.instance_descr,
        order=result.witness.order,
        arcs=result.witness.arcs,
        params=result.witness.params,
    )
    status, _ = get_claim(result.claim_id).evaluate(instance)
    return status is ClaimStatus.FAILED
