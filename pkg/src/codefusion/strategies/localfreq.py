"""Local Frequency strategy: occurrence counts of word tokens already
typed in the current file, updated as the cursor advances."""

from __future__ import annotations

from collections import Counter
from typing import List

from .base import Candidate, QueryContext, Session, Strategy


class LocalCounts:
    """Token-level vocabulary of the code before the cursor."""

    def __init__(self) -> None:
        self.counts: Counter = Counter()

    def update(self, token_text: str) -> None:
        self.counts[token_text] += 1

    def query(self, prefix: str, k: int) -> List[Candidate]:
        if not prefix:
            return []
        matches = [
            (word, count)
            for word, count in self.counts.items()
            if word.startswith(prefix) and len(word) > len(prefix)
        ]
        matches.sort(key=lambda wc: (-wc[1], wc[0]))
        return [
            Candidate(
                text=word[len(prefix) :],
                scores={"local_count": float(count)},
                strategies=("local",),
            )
            for word, count in matches[:k]
        ]


class LocalFrequencyStrategy(Strategy):
    strategy_id = "local"
    primary_dimension = "local_count"
    dimensions = ("local_count",)

    def __init__(self, cap: int = 5):
        self.cap = cap

    def query(self, ctx: QueryContext, session: Session) -> List[Candidate]:
        if not ctx.ident_prefix:
            return []
        return session.local.query(ctx.ident_prefix, self.cap)
