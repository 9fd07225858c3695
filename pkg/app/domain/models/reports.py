"""
Result types returned by the connectivity, construction, solver and
degree-condition services
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from .digraph import Cycle, Digraph, Path


@dataclass(frozen=True)
class ConnectivityReport:
    """Strong components in condensation order plus connectivity flags.

    No arc goes from a later component to an earlier one.
    """

    components: Tuple[Tuple[int, ...], ...]
    is_strong: bool
    is_unilateral: bool
    vertex_connectivity: Optional[int] = None

    @property
    def component_count(self) -> int:
        return len(self.components)

    def component_of(self, v: int) -> int:
        for index, component in enumerate(self.components):
            if v in component:
                return index
        raise KeyError(v)


@dataclass(frozen=True)
class ReductionResult:
    """H_D(u,v): u and v merged into the fresh vertex z0 (largest id)"""

    digraph: Digraph
    z0: int
    old_to_new: Dict[int, int]

    @property
    def new_to_old(self) -> Dict[int, int]:
        return {new: old for old, new in self.old_to_new.items()}


@dataclass(frozen=True)
class ExpansionResult:
    """D_H(z0): z0 split into the fresh vertices u, v (the two largest ids)"""

    digraph: Digraph
    u: int
    v: int
    old_to_new: Dict[int, int]


@dataclass(frozen=True)
class HamiltonicityAnswer:
    found: bool
    witness: Optional[Union[Cycle, Path]] = None
    nodes_explored: int = 0
    method: str = ""

    def __post_init__(self):
        if self.found != (self.witness is not None):
            raise ValueError("witness must be present exactly when found")


@dataclass(frozen=True)
class ExtensionOutcome:
    """Path extended as much as possible with candidates from a set"""

    path: Path
    absorbed: FrozenSet[int]
    leftover: FrozenSet[int]
    steps: List[Path] = field(default_factory=list)


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of a degree-condition check.

    ``violator`` is a vertex tuple (one vertex or a pair); ``value`` is the
    offending degree or degree sum and ``threshold`` the bound it missed.
    ``measure`` names what ``value`` counts.
    """

    condition: str
    holds: bool
    violator: Optional[Tuple[int, ...]] = None
    value: Optional[int] = None
    threshold: Optional[int] = None
    measure: str = "value"

    def __post_init__(self):
        if self.holds != (self.violator is None):
            raise ValueError("violator must be present exactly when the condition fails")

    def describe(self) -> str:
        if self.holds:
            return f"{self.condition}: holds"
        return (
            f"{self.condition}: fails at {self.violator} "
            f"({self.measure} {self.value} < threshold {self.threshold})"
        )
