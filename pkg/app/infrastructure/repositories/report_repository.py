"""
Infrastructure layer repository for verification report persistence
"""
import os
from typing import List, Optional

from ...domain.models.claims import ClaimId, SuiteReport


class ReportRepository:
    def __init__(self, storage_path: str = "data/reports"):
        self.storage_path = storage_path

    def report_name(self, report: SuiteReport) -> str:
        if sorted(report.claims) == sorted(ClaimId):
            scope = "all"
        else:
            scope = "-".join(claim.value for claim in report.claims)
        return f"suite-{scope}-seed{report.seed}"

    async def save_report(self, report: SuiteReport) -> str:
        """Save a suite report as JSON; returns the file path"""
        os.makedirs(self.storage_path, exist_ok=True)
        report_file = os.path.join(self.storage_path, f"{self.report_name(report)}.json")
        with open(report_file, "w") as f:
            f.write(report.model_dump_json(indent=2))
            f.write("\n")
        return report_file

    async def get_report(self, name: str) -> Optional[SuiteReport]:
        """Load a saved report by name (file name without .json)"""
        report_file = os.path.join(self.storage_path, f"{name}.json")
        if not os.path.exists(report_file):
            return None
        with open(report_file, "r") as f:
            return SuiteReport.model_validate_json(f.read())

    async def list_reports(self) -> List[str]:
        if not os.path.isdir(self.storage_path):
            return []
        return sorted(
            filename[:-5] for filename in os.listdir(self.storage_path) if filename.endswith(".json")
        )
