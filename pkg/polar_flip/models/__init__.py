"""Data models for codes, decisions and results."""

from .code import *
from .decision import *
from .results import *

__all__ = [
    # Code
    "PolarCode",
    "is_power_of_two",
    # Decisions
    "DecisionEntry",
    "DecisionList",
    "FlipTarget",
    # Results
    "DecodeResult",
    "TrialRecord",
    "SweepRow",
    "GapReport",
    "CSV_HEADER",
]
