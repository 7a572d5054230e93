"""
Core orchestration package.

- Run configuration and report models (RunConfig, ComputeReport, ...)
- Pipeline from an input diagram to homology reports (core.pipeline)
- The verification suite behind `khss verify` (core.verification)

The pipeline modules import the computational packages, which in turn
use core.utils, so they are imported by module path rather than here.
"""

from .schemas import (
    CheckReport,
    ComputeReport,
    InvarianceReport,
    PageReport,
    RunConfig,
    TransverseReport,
    VerifyReport,
)

__all__ = [
    "CheckReport",
    "ComputeReport",
    "InvarianceReport",
    "PageReport",
    "RunConfig",
    "TransverseReport",
    "VerifyReport",
]
