"""
Domain errors. All derive from ValueError so callers that only know about
bad input keep working.
"""
from typing import Optional


class DigraphError(ValueError):
    """Base class for every error raised by the toolkit"""


class InvalidDigraphError(DigraphError):
    """Arc list violates the loop-free simple digraph model"""


class VertexError(DigraphError):
    """A vertex or vertex set does not fit the operation"""


class ConstructionError(DigraphError):
    """Order bounds of a construction are violated"""


class SolverLimitError(DigraphError):
    """Instance is larger than the solver is configured to handle"""

    def __init__(self, message: str, setting: Optional[str] = None):
        if setting:
            message = f"{message} (raise DIGRAPH_{setting} to allow larger inputs)"
        super().__init__(message)
        self.setting = setting


class SamplingExhaustedError(DigraphError):
    """Rejection sampling gave up before the filters were met"""


class UnknownClaimError(DigraphError):
    """Claim identifier is not registered"""


class DocumentParseError(DigraphError):
    """Edge-list document could not be parsed"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CheckSpecError(DigraphError):
    """A requested check is unknown or has the wrong arguments"""


class ReportNotFoundError(DigraphError):
    """No saved report has the requested name"""
