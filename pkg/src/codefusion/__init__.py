"""Ensemble code completion with acceptance gating, fusion ranking, and a
coding-simulation harness for keystroke benefit/cost evaluation."""

from .ensemble import CompletionList, CompletionPipeline, PipelineConfig
from .strategies import Candidate, merge_candidates

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "CompletionList",
    "CompletionPipeline",
    "PipelineConfig",
    "merge_candidates",
    "__version__",
]
