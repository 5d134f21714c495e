from .base import Candidate, QueryContext, Session, Strategy, merge_candidates
from .globalfreq import GlobalFrequencyStrategy, SubtokenTrie, build_subtoken_trie
from .localfreq import LocalCounts, LocalFrequencyStrategy
from .ngram_lm import BeamConfig, LanguageModelStrategy, LineCache, NgramModel, beam_search
from .external import ExternalStrategy

__all__ = [
    "Candidate",
    "QueryContext",
    "Session",
    "Strategy",
    "merge_candidates",
    "GlobalFrequencyStrategy",
    "SubtokenTrie",
    "build_subtoken_trie",
    "LocalCounts",
    "LocalFrequencyStrategy",
    "BeamConfig",
    "LanguageModelStrategy",
    "LineCache",
    "NgramModel",
    "beam_search",
    "ExternalStrategy",
]
