"""
Application service for running claim batches.

Instances of one batch are independent; each is evaluated as its own task
on a thread pool and the results are sorted by instance id afterwards, so
the report never depends on completion order.
"""
import asyncio
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple, Union

import structlog

from ...core.config import Settings
from ...domain.exceptions import ReportNotFoundError
from ...domain.models.claims import BatchSummary, ClaimId, ClaimResult, ClaimTier, SuiteReport
from ...domain.services.claims import build_instances, evaluate_instance, get_claim, summarize
from ...infrastructure.repositories.report_repository import ReportRepository

logger = structlog.get_logger(__name__)


class VerificationApplicationService:
    def __init__(self, settings: Settings, report_repository: Optional[ReportRepository] = None):
        self.settings = settings
        self.report_repository = report_repository or ReportRepository(settings.REPORTS_DIR)

    async def run_claim(
        self,
        claim_id: Union[ClaimId, str],
        seed: int = 0,
        samples: Optional[int] = None,
        sizes: Optional[Sequence[int]] = None,
        executor: Optional[ThreadPoolExecutor] = None,
    ) -> Tuple[BatchSummary, List[ClaimResult]]:
        """Build and evaluate one claim batch"""
        definition = get_claim(claim_id)
        count = definition.batch_size(samples, self.settings.VERIFY_SAMPLES)
        loop = asyncio.get_running_loop()
        owned = executor is None
        pool = executor or ThreadPoolExecutor(max_workers=self.settings.VERIFY_WORKERS)
        try:
            logger.info("batch_started", claim=definition.claim_id.value, seed=seed, samples=count)
            instances = await loop.run_in_executor(
                pool, build_instances, definition.claim_id, seed, count, sizes
            )
            results = await asyncio.gather(*[
                loop.run_in_executor(pool, evaluate_instance, definition.claim_id, instance)
                for instance in instances
            ])
        finally:
            if owned:
                pool.shutdown(wait=True)

        results = sorted(results, key=lambda r: r.instance_id)
        summary = summarize(definition.claim_id, results)
        if summary.vacuous_batch:
            logger.warning("vacuous_batch", claim=definition.claim_id.value, total=summary.total)
        logger.info(
            "batch_finished",
            claim=definition.claim_id.value,
            satisfied=summary.satisfied,
            vacuous=summary.vacuous,
            failed=summary.failed,
        )
        return summary, results

    async def run_suite(
        self,
        claim_ids: Optional[Sequence[Union[ClaimId, str]]] = None,
        seed: int = 0,
        samples: Optional[int] = None,
        sizes: Optional[Sequence[int]] = None,
    ) -> SuiteReport:
        """Run several claims (all by default) with one shared seed"""
        chosen = [get_claim(c).claim_id for c in claim_ids] if claim_ids else list(ClaimId)
        report = SuiteReport(seed=seed, claims=chosen)
        with ThreadPoolExecutor(max_workers=self.settings.VERIFY_WORKERS) as pool:
            for claim_id in chosen:
                summary, results = await self.run_claim(claim_id, seed, samples, sizes, executor=pool)
                report.summaries.append(summary)
                report.results.extend(results)

        empirical = [s for s in report.summaries if s.tier is ClaimTier.EMPIRICAL]
        if empirical:
            logger.info("empirical_claims", claims=[s.claim_id.value for s in empirical])
        return report

    async def save_report(self, report: SuiteReport) -> str:
        """Persist a suite report"""
        return await self.report_repository.save_report(report)

    async def load_report(self, name: str) -> SuiteReport:
        """Load a report saved by ``save_report``"""
        report = await self.report_repository.get_report(name)
        if report is None:
            known = await self.report_repository.list_reports()
            raise ReportNotFoundError(f"no saved report {name!r} in {self.report_repository.storage_path}; saved: {known}")
        return report
