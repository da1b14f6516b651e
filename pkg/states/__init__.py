"""
States package
--------------
Run configuration and the record shapes passed between CLI commands and reports.
"""

from states.state import RecipeResult, RunConfig, SweepRow, SystemReport

__all__ = ["RecipeResult", "RunConfig", "SweepRow", "SystemReport"]
