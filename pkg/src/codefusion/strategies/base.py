"""Completion-strategy contract and cross-strategy candidate merging."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from ..lexer import identifier_prefix, subtoken_prefix


@dataclass
class Candidate:
    """One proposed completion: the characters suggested after the cursor."""

    text: str
    scores: Dict[str, float]
    strategies: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("candidate text must be non-empty")

    @property
    def length(self) -> int:
        return len(self.text)


@dataclass
class QueryContext:
    """Everything a strategy may look at: the code before the cursor."""

    prefix: str  # windowed tail of the text before the cursor
    position: int  # absolute cursor offset in the file
    ident_prefix: str = ""
    sub_prefix: str = ""

    @classmethod
    def at(cls, text: str, position: int, window: int = 2048) -> "QueryContext":
        prefix = text[max(0, position - window) : position]
        return cls(
            prefix=prefix,
            position=position,
            ident_prefix=identifier_prefix(prefix),
            sub_prefix=subtoken_prefix(prefix),
        )


@dataclass
class Session:
    """Per-file mutable strategy state (single owner)."""

    local: "LocalCounts" = None  # type: ignore[assignment]
    lm_cache: Optional["LineCache"] = None

    def __post_init__(self) -> None:
        if self.local is None:
            from .localfreq import LocalCounts

            self.local = LocalCounts()


class Strategy:
    """A candidate generator.  Subclasses set the class attributes and
    implement query()."""

    strategy_id: str = ""
    primary_dimension: str = ""
    dimensions: Tuple[str, ...] = ()

    def query(self, ctx: QueryContext, session: Session) -> List[Candidate]:
        raise NotImplementedError

    def close(self) -> None:
        pass


def merge_candidates(lists: Iterable[List[Candidate]]) -> List[Candidate]:
    """Unify candidates with identical text across strategies.

    Input lists are ordered canonically by their smallest strategy id, so
    the result does not depend on the order the lists are passed in.  The
    merged candidate's score map is the union of all dimensions; a
    conflicting value for the same dimension is an error (dimension names
    are strategy-scoped, so this cannot happen by construction).
    """
    canon = sorted(
        (lst for lst in lists if lst),
        key=lambda lst: min(min(c.strategies) for c in lst),
    )
    merged: Dict[str, Candidate] = {}
    order: List[str] = []
    for lst in canon:
        for cand in lst:
            existing = merged.get(cand.text)
            if existing is None:
                merged[cand.text] = Candidate(
                    text=cand.text,
                    scores=dict(cand.scores),
                    strategies=tuple(cand.strategies),
                )
                order.append(cand.text)
                continue
            for dim, value in cand.scores.items():
                if dim in existing.scores and existing.scores[dim] != value:
                    raise ValueError(
                        f"conflicting values for dimension {dim!r} on {cand.text!r}"
                    )
                existing.scores[dim] = value
            existing.strategies = tuple(
                sorted(set(existing.strategies) | set(cand.strategies))
            )
    return [merged[text] for text in order]
