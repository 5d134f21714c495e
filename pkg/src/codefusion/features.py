"""Fixed-schema numeric features for the acceptance (set-level) and
ranking (candidate-level) models.

Extraction is a pure function of the code before the cursor and the
candidate set; it never sees the ground truth.  Missing values use the
sentinel -1.  Categorical token texts are hashed with blake2b (keyed,
constant) so values are stable across runs and platforms.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from . import lexer
from .lexer import identifier_prefix, tokenize
from .strategies import Candidate

SENTINEL = -1.0
HASH_KEY = b"codefusion-fx"
_ADJACENCY_TAIL = 256  # chars of context inspected for token adjacency

CONTEXT_FEATURES = (
    "line_number",
    "tokens_in_current_line",
    "prefix_length",
    "prefix_is_capitalized",
    "last_token_hash",
    "last_symbol_hash",
    "chars_since_line_start",
)

PRIMARY_DIMENSIONS = {
    "global": "global_count",
    "local": "local_count",
    "lm": "lm_logprob",
}


def stable_hash(text: str) -> float:
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8, key=HASH_KEY).digest()
    return float(int.from_bytes(digest, "big") % (2**31))


def primary_dimension(strategy_id: str) -> str:
    return PRIMARY_DIMENSIONS.get(strategy_id, f"{strategy_id}_score")


@dataclass(frozen=True)
class FeatureSchema:
    names: Tuple[str, ...]
    level: str  # "set" or "candidate"

    @property
    def version(self) -> str:
        payload = self.level + "|" + "|".join(self.names)
        return hashlib.sha256(payload.encode("ascii")).hexdigest()[:12]

    def __len__(self) -> int:
        return len(self.names)

    def to_dict(self) -> dict:
        return {"level": self.level, "names": list(self.names), "version": self.version}

    @classmethod
    def from_dict(cls, data: dict) -> "FeatureSchema":
        schema = cls(names=tuple(data["names"]), level=data["level"])
        if data.get("version") and data["version"] != schema.version:
            raise ValueError("feature schema version mismatch")
        return schema


def build_set_schema(strategy_ids: Sequence[str]) -> FeatureSchema:
    names: List[str] = list(CONTEXT_FEATURES)
    for sid in sorted(strategy_ids):
        names += [
            f"{sid}_candidate_count",
            f"{sid}_top1_score",
            f"{sid}_top2_score",
            f"{sid}_top1_length",
            f"{sid}_top2_length",
        ]
    names += ["max_cross_strategy_occurrence", "total_candidate_count"]
    return FeatureSchema(names=tuple(names), level="set")


def build_candidate_schema(strategy_ids: Sequence[str]) -> FeatureSchema:
    names: List[str] = list(CONTEXT_FEATURES)
    names.append("candidate_length")
    dims: List[str] = []
    for sid in sorted(strategy_ids):
        if sid in ("global",):
            dims += ["global_count", "global_file_count", "global_project_count"]
        elif sid == "local":
            dims.append("local_count")
        elif sid == "lm":
            dims.append("lm_logprob")
        else:
            dims.append(f"{sid}_score")
    names += [f"score_{dim}" for dim in dims]
    names += ["provenance_count", "rank_in_strategy"]
    return FeatureSchema(names=tuple(names), level="candidate")


def extract_context(prefix: str) -> Dict[str, float]:
    """Position, uncompleted-token, and adjacent-token features.

    Token adjacency looks at a bounded tail of the prefix, which keeps the
    cost per position constant; multi-line constructs longer than the tail
    degrade gracefully.
    """
    line_start = prefix.rfind("\n") + 1
    ident = identifier_prefix(prefix)
    tail = prefix[-_ADJACENCY_TAIL:]
    before_ident = tail[: len(tail) - len(ident)]
    last_token = SENTINEL
    last_symbol = SENTINEL
    tokens_in_line = 0.0
    for tok in tokenize(before_ident):
        if tok.kind in (lexer.WHITESPACE, lexer.NEWLINE):
            continue
        if tok.kind == lexer.SYMBOL:
            last_symbol = stable_hash(tok.text)
        last_token = stable_hash(tok.text)
    line_tail_start = max(0, line_start - (len(prefix) - len(tail)))
    for tok in tokenize(tail[line_tail_start:]):
        if tok.kind not in (lexer.WHITESPACE, lexer.NEWLINE):
            tokens_in_line += 1
    if ident:
        tokens_in_line -= 1  # the uncompleted token is not finished yet
    return {
        "line_number": float(prefix.count("\n")),
        "tokens_in_current_line": max(tokens_in_line, 0.0),
        "prefix_length": float(len(ident)),
        "prefix_is_capitalized": 1.0 if ident[:1].isupper() else 0.0,
        "last_token_hash": last_token,
        "last_symbol_hash": last_symbol,
        "chars_since_line_start": float(len(prefix) - line_start),
    }


def strategy_members(
    candidates: Sequence[Candidate], strategy_id: str
) -> List[Candidate]:
    """Candidates proposed by a strategy, in that strategy's own order."""
    dim = primary_dimension(strategy_id)
    members = [c for c in candidates if strategy_id in c.strategies]
    members.sort(key=lambda c: (-c.scores.get(dim, float("-inf")), c.text))
    return members


def extract_set(
    context: Mapping[str, float],
    candidates: Sequence[Candidate],
    schema: FeatureSchema,
    strategy_ids: Sequence[str],
) -> np.ndarray:
    values: List[float] = [context[name] for name in CONTEXT_FEATURES]
    for sid in sorted(strategy_ids):
        members = strategy_members(candidates, sid)
        dim = primary_dimension(sid)
        row = [float(len(members)), SENTINEL, SENTINEL, SENTINEL, SENTINEL]
        if len(members) >= 1:
            row[1] = members[0].scores.get(dim, SENTINEL)
            row[3] = float(members[0].length)
        if len(members) >= 2:
            row[2] = members[1].scores.get(dim, SENTINEL)
            row[4] = float(members[1].length)
        values += row
    max_occurrence = max((len(c.strategies) for c in candidates), default=0)
    values.append(float(max_occurrence))
    values.append(float(len(candidates)))
    vec = np.asarray(values, dtype=np.float64)
    if len(vec) != len(schema):
        raise ValueError("set feature vector does not match schema length")
    return vec


def extract_candidate(
    context: Mapping[str, float],
    candidate: Candidate,
    candidates: Sequence[Candidate],
    schema: FeatureSchema,
    strategy_ids: Sequence[str],
) -> np.ndarray:
    values: List[float] = [context[name] for name in CONTEXT_FEATURES]
    values.append(float(candidate.length))
    for name in schema.names:
        if name.startswith("score_"):
            values.append(candidate.scores.get(name[len("score_") :], SENTINEL))
    values.append(float(len(candidate.strategies)))
    best_rank = SENTINEL
    for sid in candidate.strategies:
        members = strategy_members(candidates, sid)
        for rank, member in enumerate(members, start=1):
            if member.text == candidate.text:
                if best_rank == SENTINEL or rank < best_rank:
                    best_rank = float(rank)
                break
    values.append(best_rank)
    vec = np.asarray(values, dtype=np.float64)
    if len(vec) != len(schema):
        raise ValueError("candidate feature vector does not match schema length")
    return vec


def save_schemas(path: str, set_schema: FeatureSchema, cand_schema: FeatureSchema) -> None:
    with open(path, "w", encoding="ascii") as fh:
        json.dump(
            {"set": set_schema.to_dict(), "candidate": cand_schema.to_dict()},
            fh,
            indent=2,
            sort_keys=True,
        )


def load_schemas(path: str) -> Tuple[FeatureSchema, FeatureSchema]:
    with open(path, "r", encoding="ascii") as fh:
        data = json.load(fh)
    return FeatureSchema.from_dict(data["set"]), FeatureSchema.from_dict(data["candidate"])
