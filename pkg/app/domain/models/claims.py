"""
Domain models for claim verification
"""
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from .digraph import Digraph


class ClaimId(str, Enum):
    LEMMA_3_1 = "LEMMA_3_1"
    LEMMA_3_2 = "LEMMA_3_2"
    THM_3_3_BIJECTION = "THM_3_3_BIJECTION"
    THM_3_4 = "THM_3_4"
    REMARK_3_5 = "REMARK_3_5"
    THM_3_6 = "THM_3_6"
    THM_3_7_EMPIRICAL = "THM_3_7_EMPIRICAL"
    THM_4_1_TRANSFER = "THM_4_1_TRANSFER"
    LEMMA_4_3 = "LEMMA_4_3"
    LEMMA_4_4 = "LEMMA_4_4"
    THM_4_5 = "THM_4_5"
    COR_4_7 = "COR_4_7"
    COR_4_8 = "COR_4_8"
    THM_4_9 = "THM_4_9"
    THM_4_10 = "THM_4_10"


class ClaimTier(str, Enum):
    MUST_PASS = "must-pass"
    EMPIRICAL = "empirical"


class ClaimStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    VACUOUS = "vacuous"


class FilterKind(str, Enum):
    STRONG = "strong"
    K_STRONG = "k-strong"
    CONDITION_M = "condition_M"
    CONDITION_N = "condition_N"
    MEYNIEL_SET = "meyniel_set"


class RandomSpec(BaseModel):
    """Parameters of one seeded random digraph"""

    model_config = {"frozen": True}

    n: int = Field(..., ge=1, description="Order")
    arc_probability: float = Field(..., ge=0.0, le=1.0, description="Independent arc probability")
    seed: int = Field(..., ge=0, lt=2 ** 64, description="PCG64 seed")
    post_filters: Tuple[FilterKind, ...] = Field(default=(), description="Conditions every accepted sample must meet")
    k: Optional[int] = Field(None, ge=1, description="k for the k-strong filter")
    z0: Optional[int] = Field(None, ge=0, description="Distinguished vertex for condition_M")
    vertex_set: Optional[Tuple[int, ...]] = Field(None, description="Set for the meyniel_set filter")

    @model_validator(mode="after")
    def check_filter_params(self) -> "RandomSpec":
        if FilterKind.K_STRONG in self.post_filters and self.k is None:
            raise ValueError("the k-strong filter needs k")
        if FilterKind.CONDITION_M in self.post_filters and self.z0 is None:
            raise ValueError("the condition_M filter needs z0")
        if FilterKind.MEYNIEL_SET in self.post_filters and not self.vertex_set:
            raise ValueError("the meyniel_set filter needs vertex_set")
        if self.z0 is not None and self.z0 >= self.n:
            raise ValueError(f"z0={self.z0} is not a vertex of an order {self.n} digraph")
        if self.vertex_set and any(not 0 <= v < self.n for v in self.vertex_set):
            raise ValueError(f"vertex_set {self.vertex_set} leaves 0..{self.n - 1}")
        return self


class ClaimInstance(BaseModel):
    """One digraph plus the claim-specific parameters it is checked with"""

    instance_id: int = Field(..., description="Position inside the batch")
    description: str = Field(..., description="Human readable origin of the instance")
    order: int = Field(..., ge=1)
    arcs: List[Tuple[int, int]] = Field(default_factory=list)
    params: Dict[str, Any] = Field(default_factory=dict, description="e.g. z0, M, path, cycle, vertex")

    @classmethod
    def from_digraph(cls, instance_id: int, description: str, digraph: Digraph, **params: Any) -> "ClaimInstance":
        return cls(
            instance_id=instance_id,
            description=description,
            order=digraph.n,
            arcs=list(digraph.arcs()),
            params=params,
        )

    def digraph(self) -> Digraph:
        from ..services.digraph_ops import make_digraph

        return make_digraph(self.order, self.arcs)


class ClaimWitness(BaseModel):
    """Counter-evidence: the offending instance and what went wrong"""

    order: int
    arcs: List[Tuple[int, int]]
    params: Dict[str, Any] = Field(default_factory=dict)
    detail: str = Field(..., description="Which part of the conclusion failed")


class ClaimResult(BaseModel):
    claim_id: ClaimId
    instance_id: int
    instance_descr: str
    status: ClaimStatus
    detail: str = ""
    witness: Optional[ClaimWitness] = None

    @property
    def passed(self) -> bool:
        return self.status is ClaimStatus.PASSED

    @property
    def hypothesis_held(self) -> bool:
        return self.status is not ClaimStatus.VACUOUS


class BatchSummary(BaseModel):
    """Vacuity accounting for one claim batch"""

    claim_id: ClaimId
    tier: ClaimTier
    total: int
    satisfied: int = Field(..., description="Instances whose hypotheses held")
    vacuous: int
    failed: int
    vacuous_batch: bool = Field(..., description="No instance met the hypotheses")

    @property
    def ok(self) -> bool:
        return self.failed == 0 and not self.vacuous_batch


class SuiteReport(BaseModel):
    seed: int
    claims: List[ClaimId]
    summaries: List[BatchSummary] = Field(default_factory=list)
    results: List[ClaimResult] = Field(default_factory=list)

    @property
    def must_pass_ok(self) -> bool:
        return all(s.ok for s in self.summaries if s.tier is ClaimTier.MUST_PASS)
