"""
Dependency providers
"""
from functools import lru_cache

from ..core.config import Settings


@lru_cache()
def get_settings() -> Settings:
    """Get application settings instance"""
    return Settings()


def get_verification_service():
    """Get verification application service instance"""
    from ..application.services.verification_service import VerificationApplicationService

    return VerificationApplicationService(get_settings())
