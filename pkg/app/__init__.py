"""
Digraph Hamiltonicity toolkit: constructions, exact solvers and a claim-verification harness
"""
from .infrastructure.logging import configure_default_logging

__version__ = "1.0.0"

configure_default_logging()
