"""
Seeded random digraphs for the verification harness.

All randomness goes through numpy's ``Generator(PCG64(seed))``: an arc
(u, v), u != v, is present iff entry (u, v) of one ``random((n, n))``
draw is below the arc probability. Rejected samples keep drawing from
the same generator, so a RandomSpec always yields the same digraph.
"""
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from ...infrastructure.dependencies import get_settings
from ..exceptions import SamplingExhaustedError
from ..models.claims import FilterKind, RandomSpec
from ..models.digraph import Digraph, Path
from .connectivity import is_k_strong, is_strong
from .degree_conditions import condition_M, condition_N, is_meyniel_set
from .digraph_ops import make_digraph

logger = structlog.get_logger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def derive_seed(seed: int, *path: int) -> int:
    """Independent 64-bit child seed for (seed, claim index, instance index, ...)"""
    state = np.random.SeedSequence([seed, *path]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def draw_digraph(rng: np.random.Generator, n: int, arc_probability: float) -> Digraph:
    """One unfiltered sample"""
    chosen = rng.random((n, n)) < arc_probability
    np.fill_diagonal(chosen, False)
    arcs = [(int(u), int(v)) for u, v in np.argwhere(chosen)]
    return make_digraph(n, arcs)


def _filter_checks(spec: RandomSpec) -> List[Tuple[FilterKind, Callable[[Digraph], bool]]]:
    table: Dict[FilterKind, Callable[[Digraph], bool]] = {
        FilterKind.STRONG: is_strong,
        FilterKind.K_STRONG: lambda d: is_k_strong(d, spec.k),
        FilterKind.CONDITION_M: lambda d: condition_M(d, spec.z0).holds,
        FilterKind.CONDITION_N: lambda d: condition_N(d).holds,
        FilterKind.MEYNIEL_SET: lambda d: is_meyniel_set(d, spec.vertex_set).holds,
    }
    return [(kind, table[kind]) for kind in spec.post_filters]


def random_digraph(spec: RandomSpec, max_attempts: Optional[int] = None) -> Digraph:
    """Sample until every post filter accepts, or give up after the attempt cap"""
    cap = get_settings().SAMPLER_MAX_ATTEMPTS if max_attempts is None else max_attempts
    rng = make_rng(spec.seed)
    checks = _filter_checks(spec)
    for attempt in range(1, cap + 1):
        candidate = draw_digraph(rng, spec.n, spec.arc_probability)
        if all(check(candidate) for _, check in checks):
            if attempt > 1:
                logger.debug("sample_accepted", n=spec.n, attempts=attempt)
            return candidate
    logger.warning(
        "sampling_exhausted",
        n=spec.n,
        arc_probability=spec.arc_probability,
        filters=[kind.value for kind in spec.post_filters],
        attempts=cap,
    )
    raise SamplingExhaustedError(
        f"no sample of order {spec.n} with p={spec.arc_probability} passed "
        f"{[kind.value for kind in spec.post_filters]} within {cap} attempts"
    )


def _random_subset(rng: np.random.Generator, population: int, minimum: int) -> List[int]:
    size = int(rng.integers(minimum, population + 1))
    return sorted(int(i) for i in rng.choice(population, size=size, replace=False))


def _external_vertex_digraph(
    rng: np.random.Generator,
    base_arcs: List[Tuple[int, int]],
    m: int,
    extra: int,
    minimum_arcs: int,
    filler_probability: float,
) -> Digraph:
    """Base structure on 0..m-1, external vertex x = m, then ``extra`` filler vertices"""
    x = m
    candidates = [(x, i) for i in range(m)] + [(i, x) for i in range(m)]
    arcs = list(base_arcs)
    arcs += [candidates[i] for i in _random_subset(rng, len(candidates), minimum_arcs)]
    n = m + 1 + extra
    if extra:
        filler = draw_digraph(rng, n, filler_probability)
        arcs += [(u, v) for u, v in filler.arcs() if u > x or v > x]
    return make_digraph(n, arcs)


def cycle_with_external_vertex(
    rng: np.random.Generator, m: int, extra: int = 0, filler_probability: float = 0.3
) -> Tuple[Digraph, Tuple[int, ...], int]:
    """Cycle 0..m-1 plus a vertex x = m with d(x, C) >= m+1"""
    cycle = tuple(range(m))
    base = [(i, (i + 1) % m) for i in range(m)]
    digraph = _external_vertex_digraph(rng, base, m, extra, m + 1, filler_probability)
    return digraph, cycle, m


def path_with_external_vertex(
    rng: np.random.Generator, m: int, extra: int = 0, filler_probability: float = 0.3
) -> Tuple[Digraph, Path, int]:
    """Path 0..m-1 plus a vertex x = m with d(x, P) >= m+2"""
    base = [(i, i + 1) for i in range(m - 1)]
    digraph = _external_vertex_digraph(rng, base, m, extra, m + 2, filler_probability)
    return digraph, Path(tuple(range(m))), m


def greedy_meyniel_set(
    digraph: Digraph, order: Sequence[int], allowed: Optional[Sequence[int]] = None
) -> List[int]:
    """Grow a Meyniel set by scanning ``order`` and keeping each vertex that fits"""
    pool = set(digraph.vertices if allowed is None else allowed)
    chosen: List[int] = []
    for v in order:
        if v in pool and is_meyniel_set(digraph, chosen + [v]).holds:
            chosen.append(v)
    return sorted(chosen)
