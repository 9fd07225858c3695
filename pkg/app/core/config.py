"""
Configuration management for solvers, sampler and harness
"""

from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional


class Settings(BaseSettings):
    """Application settings"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="DIGRAPH_",
        case_sensitive=True,
        extra="ignore",
    )

    # Application
    APP_NAME: str = "digraph-hamiltonicity"
    VERSION: str = "1.0.0"

    # Solvers
    HELD_KARP_LIMIT: int = 20
    COUNT_LIMIT: int = 16
    SUBSET_DP_LIMIT: int = 16

    # Sampling and verification
    SAMPLER_MAX_ATTEMPTS: int = 10000
    VERIFY_WORKERS: int = 4
    # unset: each claim uses its own batch size
    VERIFY_SAMPLES: Optional[int] = None

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None
    LOG_JSON: bool = False

    # Reports
    REPORTS_DIR: str = "data/reports"
