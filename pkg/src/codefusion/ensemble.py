"""Runtime completion pipeline: gather candidates, merge, gate the list
through the acceptance model, rank, and emit at most five suggestions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .features import (
    FeatureSchema,
    extract_candidate,
    extract_context,
    extract_set,
    primary_dimension,
)
from .learn import DimensionScaler, GbdtModel
from .strategies import Candidate, QueryContext, Session, Strategy, merge_candidates

MAX_LIST_LENGTH = 5
MODES = ("fusion", "normalized", "unranked")


@dataclass
class PipelineConfig:
    acceptance_threshold: float = 0.5
    mode: str = "fusion"
    gate: bool = True
    candidate_cap: int = 5
    context_window: int = 2048

    def __post_init__(self) -> None:
        if not 0.0 <= self.acceptance_threshold <= 1.0:
            raise ValueError("acceptance threshold must lie in [0, 1]")
        if self.mode not in MODES:
            raise ValueError(f"unknown ranking mode {self.mode!r}")


@dataclass
class CompletionList:
    candidates: List[Candidate] = field(default_factory=list)
    final_scores: List[float] = field(default_factory=list)
    mode: str = "unranked"
    accepted: bool = False
    acceptance_probability: Optional[float] = None

    def __len__(self) -> int:
        return len(self.candidates)


def rank_normalized(
    candidates: Sequence[Candidate], scaler: DimensionScaler
) -> List[Tuple[Candidate, float]]:
    """Order by the z-score of each candidate's own strategy's primary
    dimension (best across its strategies); stable on ties."""
    scored = []
    for cand in candidates:
        zs = [
            scaler.transform(primary_dimension(sid), cand.scores[primary_dimension(sid)])
            for sid in cand.strategies
            if primary_dimension(sid) in cand.scores
        ]
        scored.append((cand, max(zs) if zs else 0.0))
    return sorted(scored, key=lambda cz: -cz[1])


def rank_fusion(
    candidates: Sequence[Candidate],
    regressor: GbdtModel,
    context_features: Dict[str, float],
    schema: FeatureSchema,
    strategy_ids: Sequence[str],
) -> List[Tuple[Candidate, float]]:
    """Order by the regressor's predicted expected completion length."""
    regressor.check_schema(schema)
    vectors = np.vstack(
        [
            extract_candidate(context_features, cand, candidates, schema, strategy_ids)
            for cand in candidates
        ]
    )
    predictions = regressor.predict(vectors)
    scored = list(zip(candidates, (float(p) for p in predictions)))
    # Ties break by shorter text then lexicographically, so the ordering is
    # independent of the input order.
    return sorted(scored, key=lambda cz: (-cz[1], len(cz[0].text), cz[0].text))


class CompletionPipeline:
    def __init__(
        self,
        strategies: Sequence[Strategy],
        config: PipelineConfig,
        set_schema: Optional[FeatureSchema] = None,
        candidate_schema: Optional[FeatureSchema] = None,
        acceptance_model: Optional[GbdtModel] = None,
        ranking_model: Optional[GbdtModel] = None,
        scaler: Optional[DimensionScaler] = None,
        strategy_ids: Optional[Sequence[str]] = None,
    ):
        self.strategies = list(strategies)
        if strategy_ids is None:
            strategy_ids = [s.strategy_id for s in self.strategies]
        self.strategy_ids = sorted(strategy_ids)
        self.config = config
        self.set_schema = set_schema
        self.candidate_schema = candidate_schema
        self.acceptance_model = acceptance_model
        self.ranking_model = ranking_model
        self.scaler = scaler

    def complete(self, text: str, position: int, session: Session) -> CompletionList:
        """Query every strategy at the cursor, then gate and rank."""
        ctx = QueryContext.at(text, position, self.config.context_window)
        lists = [
            strategy.query(ctx, session)[: self.config.candidate_cap]
            for strategy in self.strategies
        ]
        merged = merge_candidates(lists)
        return self.evaluate(ctx.prefix, merged)

    def evaluate(self, prefix: str, merged: Sequence[Candidate]) -> CompletionList:
        """Gate + rank a pre-gathered merged candidate list."""
        mode = self.config.mode
        if not merged:
            return CompletionList(mode=mode, accepted=False)
        context_features = extract_context(prefix)

        probability: Optional[float] = None
        accepted = True
        if self.config.gate and self.acceptance_model is not None:
            if self.set_schema is None:
                raise ValueError("gate enabled but no set-level schema loaded")
            self.acceptance_model.check_schema(self.set_schema)
            vec = extract_set(context_features, merged, self.set_schema, self.strategy_ids)
            probability = float(self.acceptance_model.predict_proba(vec[None, :])[0])
            accepted = probability >= self.config.acceptance_threshold

        if mode == "fusion":
            if self.ranking_model is None or self.candidate_schema is None:
                raise ValueError("fusion mode requires a fitted ranking model")
            scored = rank_fusion(
                merged, self.ranking_model, context_features, self.candidate_schema, self.strategy_ids
            )
        elif mode == "normalized":
            if self.scaler is None:
                raise ValueError("normalized mode requires a fitted scaler")
            scored = rank_normalized(merged, self.scaler)
        else:
            # Unranked keeps the merged order (a single strategy's own sort).
            scored = [(cand, 0.0) for cand in merged]

        if mode != "unranked":
            # Final ordering: score desc, then shorter text, then lexicographic.
            scored.sort(key=lambda cz: (-cz[1], len(cz[0].text), cz[0].text))
        top = scored[:MAX_LIST_LENGTH]
        return CompletionList(
            candidates=[c for c, _ in top],
            final_scores=[s for _, s in top],
            mode=mode,
            accepted=accepted,
            acceptance_probability=probability,
        )
