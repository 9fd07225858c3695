"""
Application layer schemas: edge-list documents, DOT rendering and report text.

Edge-list format::

    # comment
    n 3
    0 1
    1 2

The header must be the first non-comment line. Arcs are rendered in
ascending lexicographic order, so equal digraphs render to equal bytes.
"""
from typing import List, Optional

from pydantic import BaseModel, Field

from ...domain.exceptions import DocumentParseError
from ...domain.models.claims import ClaimStatus, SuiteReport
from ...domain.models.digraph import Digraph
from ...domain.services.digraph_ops import make_digraph


class CheckOutcome(BaseModel):
    """One line of a ``check`` report"""

    name: str = Field(..., description="Check as the user wrote it")
    holds: bool
    witness: str = Field(default="", description="Cycle, path, pair or value backing the verdict")

    def render(self) -> str:
        verdict = "yes" if self.holds else "no"
        return f"{self.name}: {verdict}" + (f" {self.witness}" if self.witness else "")


def _parse_int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise DocumentParseError(f"{what} {token!r} is not an integer", line_number) from None


def parse_edge_list(text: str) -> Digraph:
    order: Optional[int] = None
    arcs = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise DocumentParseError(f"expected header 'n <order>', got {line!r}", line_number)
            order = _parse_int(tokens[1], line_number, "order")
            if order < 1:
                raise DocumentParseError(f"order must be at least 1, got {order}", line_number)
            continue
        if len(tokens) != 2:
            raise DocumentParseError(f"expected an arc 'u v', got {line!r}", line_number)
        u = _parse_int(tokens[0], line_number, "vertex")
        v = _parse_int(tokens[1], line_number, "vertex")
        if not (0 <= u < order and 0 <= v < order):
            raise DocumentParseError(f"arc {u} {v} leaves the vertex range 0..{order - 1}", line_number)
        if u == v:
            raise DocumentParseError(f"loop arc {u} {v} is not allowed", line_number)
        arcs.append((u, v))
    if order is None:
        raise DocumentParseError("missing header 'n <order>'", max(1, len(text.splitlines())))
    return make_digraph(order, arcs)


def render_edge_list(digraph: Digraph) -> str:
    lines = [f"n {digraph.n}"]
    lines += [f"{u} {v}" for u, v in sorted(digraph.arcs())]
    return "\n".join(lines) + "\n"


def render_dot(digraph: Digraph, name: str = "D") -> str:
    """DOT export; vertices carry their construction labels when present"""
    lines = [f"digraph {name} {{"]
    for v in digraph.vertices:
        lines.append(f'  {v} [label="{digraph.label(v)}"];')
    for u, v in sorted(digraph.arcs()):
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_check_report(outcomes: List[CheckOutcome]) -> str:
    return "".join(outcome.render() + "\n" for outcome in outcomes)


def render_suite_text(report: SuiteReport) -> str:
    """Human summary: one line per claim batch, then every failure"""
    lines = [f"seed {report.seed}"]
    for summary in report.summaries:
        flag = "  VACUOUS BATCH" if summary.vacuous_batch else ""
        lines.append(
            f"{summary.claim_id.value:<18} {summary.tier.value:<9} "
            f"satisfied {summary.satisfied}/{summary.total}  "
            f"vacuous {summary.vacuous}  failed {summary.failed}{flag}"
        )
    failures = [r for r in report.results if r.status is ClaimStatus.FAILED]
    for result in failures:
        lines.append(f"FAILED {result.claim_id.value} #{result.instance_id} {result.instance_descr}: {result.detail}")
    lines.append("must-pass: ok" if report.must_pass_ok else "must-pass: FAILED")
    return "\n".join(lines) + "\n"


def render_suite_json(report: SuiteReport) -> str:
    return report.model_dump_json(indent=2) + "\n"
