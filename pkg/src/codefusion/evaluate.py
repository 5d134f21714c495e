"""Keystroke benefit/cost evaluation over replayed completion sessions.

Replay model: at each cursor position the pipeline runs.  When a shown
list contains a correct candidate, the user types the character under the
cursor (one keystroke) and the rest of the longest correct candidate is
completed for free, so a length-L acceptance saves L-1 keystrokes and
covers L-1 following characters; browsing cost is the rank of that
candidate.  A shown list without a correct candidate costs its full
length in browsing, and the character is typed.  Blocked or empty lists
cost nothing to browse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .ensemble import CompletionList, CompletionPipeline
from .lexer import identifier_prefix, tokenize
from .simulate import SimulationSample, label_candidates
from .strategies import Candidate, Session


@dataclass
class CompletionEvent:
    position: int
    shown: bool
    list_length: int
    hit_positions: Tuple[int, ...]  # 1-based ranks of all correct candidates
    chosen_length: int = 0  # length of the longest correct candidate
    chosen_rank: int = 0  # its rank (the browsing cost on a hit)

    @property
    def has_hit(self) -> bool:
        return bool(self.hit_positions)


@dataclass
class SessionLedger:
    file_id: str
    n_ori: int
    n_cc: int = 0
    events: List[CompletionEvent] = field(default_factory=list)

    def shown_events(self) -> List[CompletionEvent]:
        return [e for e in self.events if e.shown]


def _event_from_list(
    position: int, shown: CompletionList, suffix: str
) -> CompletionEvent:
    hits = label_candidates(shown.candidates, suffix)
    ranks = tuple(r for r, h in enumerate(hits, start=1) if h)
    chosen_length = 0
    chosen_rank = 0
    for rank, (cand, hit) in enumerate(zip(shown.candidates, hits), start=1):
        if hit and cand.length > chosen_length:
            chosen_length = cand.length
            chosen_rank = rank
    return CompletionEvent(
        position=position,
        shown=shown.accepted,
        list_length=len(shown.candidates),
        hit_positions=ranks,
        chosen_length=chosen_length,
        chosen_rank=chosen_rank,
    )


def replay(
    text: str,
    file_id: str,
    evaluate: Callable[[str, int], CompletionList],
) -> SessionLedger:
    """Sweep the cursor; ``evaluate(prefix, position)`` yields the gated,
    ranked list the pipeline would display at that position."""
    ledger = SessionLedger(file_id=file_id, n_ori=len(text))
    pos = 0
    while pos < len(text):
        shown = evaluate(text[:pos], pos)
        if shown.candidates:
            event = _event_from_list(pos, shown, text[pos:])
            ledger.events.append(event)
            if event.shown and event.has_hit:
                ledger.n_cc += 1  # typing through the accepted candidate
                pos += event.chosen_length
                continue
        ledger.n_cc += 1
        pos += 1
    return ledger


def replay_pipeline(
    text: str, file_id: str, pipeline: CompletionPipeline, session: Session
) -> SessionLedger:
    """Live replay: strategies queried fresh at every visited position."""
    from .lexer import tokenize as _tokenize

    tokens = _tokenize(text)
    feed = {"idx": 0}

    def evaluate(prefix: str, pos: int) -> CompletionList:
        while feed["idx"] < len(tokens) and tokens[feed["idx"]].end < pos:
            tok = tokens[feed["idx"]]
            if tok.is_word:
                session.local.update(tok.text)
            feed["idx"] += 1
        return pipeline.complete(text, pos, session)

    return replay(text, file_id, evaluate)


def replay_samples(
    text: str,
    file_id: str,
    samples: Sequence[SimulationSample],
    pipeline: CompletionPipeline,
) -> SessionLedger:
    """Store-driven replay: the per-position merged candidate sets were
    already collected by the simulator, so only gate + rank run here."""

    def evaluate(prefix: str, pos: int) -> CompletionList:
        return pipeline.evaluate(prefix, samples[pos].candidates)

    return replay(text, file_id, evaluate)


# --------------------------------------------------------------------------
# Metrics
# --------------------------------------------------------------------------


def accuracy_at_k(events: Sequence[CompletionEvent], k: int) -> Optional[float]:
    """Fraction of shown lists whose top-k contains a correct candidate.

    Returns None when no list was shown.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    shown = [e for e in events if e.shown]
    if not shown:
        return None
    hits = sum(1 for e in shown if any(rank <= k for rank in e.hit_positions))
    return hits / len(shown)


def benefit(ledger: SessionLedger) -> int:
    return ledger.n_ori - ledger.n_cc


def hidden_cost(ledger: SessionLedger) -> int:
    """Browsing cost: rank of the longest correct candidate on hits, the
    full list length on shown misses."""
    cost = 0
    for event in ledger.shown_events():
        cost += event.chosen_rank if event.has_hit else event.list_length
    return cost


def bcr(ledger: SessionLedger) -> Optional[float]:
    cost = hidden_cost(ledger)
    if cost == 0:
        return None
    return benefit(ledger) / cost


def merge_ledgers(ledgers: Sequence[SessionLedger]) -> SessionLedger:
    total = SessionLedger(file_id="<all>", n_ori=0)
    for ledger in ledgers:
        total.n_ori += ledger.n_ori
        total.n_cc += ledger.n_cc
        total.events.extend(ledger.events)
    return total


def invalid_list_rate(events: Sequence[CompletionEvent]) -> Optional[float]:
    shown = [e for e in events if e.shown]
    if not shown:
        return None
    return sum(1 for e in shown if not e.has_hit) / len(shown)


def cost_spectrum(ledger: SessionLedger, n_chars: int) -> List[int]:
    """Per-character coding cost in 0..6.

    0: produced by a prior acceptance.  1..5: the list's hit rank at this
    position (1 also covers a plain manual tap with no or a blocked list).
    list length + 1 (6 for a full list): browsed an all-invalid list, then
    typed.
    """
    costs = [1] * n_chars
    for event in ledger.events:
        if not event.shown:
            continue
        if event.has_hit:
            costs[event.position] = event.chosen_rank
            for i in range(event.position + 1, event.position + event.chosen_length):
                if i < n_chars:
                    costs[i] = 0
        else:
            costs[event.position] = event.list_length + 1
    return costs


def nearest_rank_quantile(values: Sequence[float], q: float) -> Optional[float]:
    if not values:
        return None
    ordered = sorted(values)
    import math

    rank = max(1, math.ceil(q * len(ordered)))
    return ordered[rank - 1]


# --------------------------------------------------------------------------
# Strategy characteristics (single-strategy view over stored samples)
# --------------------------------------------------------------------------


def strategy_characteristics(
    files: Sequence[Tuple[str, List[SimulationSample]]],
    texts: Dict[str, str],
    strategy_id: str,
) -> dict:
    """Occurrence rate, hit-position and prefix-length 90% quantiles,
    completeness, and Accuracy@1/@5 for one strategy.

    Samples are restricted to the strategy's own candidates (in its own
    order) and critical positions are re-marked for that restriction.
    """
    from .features import primary_dimension
    from .simulate import mark_critical

    dim = primary_dimension(strategy_id)
    positions = 0
    non_empty = 0
    hit_ranks: List[int] = []
    prefix_lengths: List[int] = []
    complete_full_token = 0
    top1 = 0
    top5 = 0

    for file_id, samples in files:
        text = texts[file_id]
        token_ends = {tok.end for tok in tokenize(text)}
        restricted: List[SimulationSample] = []
        for sample in samples:
            members = [
                (c, h)
                for c, h in zip(sample.candidates, sample.hits)
                if strategy_id in c.strategies
            ]
            members.sort(key=lambda ch: (-ch[0].scores.get(dim, float("-inf")), ch[0].text))
            members = members[:5]
            sub = SimulationSample(
                file_id=sample.file_id,
                pos=sample.pos,
                candidates=[c for c, _ in members],
                hits=[h for _, h in members],
            )
            restricted.append(sub)
        mark_critical(restricted)
        for sample in restricted:
            if not sample.critical:
                continue
            positions += 1
            if not sample.candidates:
                continue
            non_empty += 1
            if not sample.has_hit:
                continue
            chosen_rank = 0
            chosen_len = 0
            for rank, (cand, hit) in enumerate(
                zip(sample.candidates, sample.hits), start=1
            ):
                if hit and cand.length > chosen_len:
                    chosen_len = cand.length
                    chosen_rank = rank
            hit_ranks.append(chosen_rank)
            prefix_lengths.append(len(identifier_prefix(text[: sample.pos])))
            if (sample.pos + chosen_len) in token_ends:
                complete_full_token += 1
            if sample.hits[0]:
                top1 += 1
            top5 += 1

    return {
        "strategy": strategy_id,
        "occurrence_rate": (non_empty / positions) if positions else None,
        "hit_position_p90": nearest_rank_quantile(hit_ranks, 0.9),
        "prefix_length_p90": nearest_rank_quantile(prefix_lengths, 0.9),
        "completeness": (complete_full_token / len(hit_ranks)) if hit_ranks else None,
        "accuracy_at_1": (top1 / non_empty) if non_empty else None,
        "accuracy_at_5": (top5 / non_empty) if non_empty else None,
    }


# --------------------------------------------------------------------------
# Ablation over ranking/gate combinations
# --------------------------------------------------------------------------


def ablation_report(
    files: Sequence[Tuple[str, List[SimulationSample]]],
    texts: Dict[str, str],
    pipelines: Dict[str, CompletionPipeline],
) -> dict:
    """Accuracy@1/@5, BCR, and invalid-list rate per pipeline variant,
    each replayed from the same stored candidate sets."""
    rows = {}
    for name, pipeline in pipelines.items():
        ledgers = [
            replay_samples(texts[file_id], file_id, samples, pipeline)
            for file_id, samples in files
        ]
        total = merge_ledgers(ledgers)
        rows[name] = {
            "accuracy_at_1": accuracy_at_k(total.events, 1),
            "accuracy_at_5": accuracy_at_k(total.events, 5),
            "benefit": benefit(total),
            "hidden_cost": hidden_cost(total),
            "bcr": bcr(total),
            "invalid_list_rate": invalid_list_rate(total.events),
            "shown_events": len(total.shown_events()),
        }
    return rows


def write_report_json(path: str, payload: dict) -> None:
    import os

    with open(path + ".tmp", "w", encoding="ascii") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
    os.replace(path + ".tmp", path)


def write_table_csv(path: str, rows: Sequence[dict], columns: Sequence[str]) -> None:
    import csv
    import os

    with open(path + ".tmp", "w", encoding="ascii", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(columns))
        writer.writeheader()
        for row in rows:
            writer.writerow({col: row.get(col) for col in columns})
    os.replace(path + ".tmp", path)
