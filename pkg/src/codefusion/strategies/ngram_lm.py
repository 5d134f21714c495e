"""Sentence-level language model strategy.

A backoff n-gram model over BPE ids stands in for a neural LM behind the
same contract: per-step log-probabilities, beam search with dynamic batch
shrinking, and a per-line result cache.  Smoothing is absolute
discounting, so every conditional distribution sums to one.
"""

from __future__ import annotations

import json
import math
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..bpe import BpeCodec
from .base import Candidate, QueryContext, Session, Strategy

COMMENT_STARTS = ("//", "/*", "#")
LOOP_WINDOW = 4
MAX_CONTEXT_IDS = 256  # context window cap, in BPE ids


class NgramModel:
    """Absolute-discount backoff n-gram over BPE token ids.

    The BOS id is ``vocab_size`` and is never predicted; the prediction
    space is the codec's ids 0..vocab_size-1, with a uniform floor at the
    unigram level, so probabilities over the full vocabulary sum to 1.
    """

    def __init__(self, order: int, vocab_size: int, discount: float = 0.4):
        if order < 1:
            raise ValueError("order must be >= 1")
        if not 0.0 < discount < 1.0:
            raise ValueError("discount must lie in (0, 1)")
        self.order = order
        self.vocab_size = vocab_size
        self.discount = discount
        self.bos = vocab_size
        self.tables: Dict[Tuple[int, ...], Counter] = defaultdict(Counter)
        self.totals: Dict[Tuple[int, ...], int] = {}
        self._top_unigrams: List[int] = []
        self._next_cache: Dict[Tuple[Tuple[int, ...], int], List[Tuple[int, float]]] = {}

    def fit_lines(self, id_lines: Iterable[Sequence[int]]) -> "NgramModel":
        for ids in id_lines:
            ids = list(ids)[:MAX_CONTEXT_IDS]
            seq = [self.bos] * (self.order - 1) + ids
            for pos in range(self.order - 1, len(seq)):
                tok = seq[pos]
                for ctx_len in range(self.order):
                    ctx = tuple(seq[pos - ctx_len : pos])
                    self.tables[ctx][tok] += 1
        self.totals = {ctx: sum(c.values()) for ctx, c in self.tables.items()}
        uni = self.tables.get((), Counter())
        self._top_unigrams = [t for t, _ in sorted(uni.items(), key=lambda kv: (-kv[1], kv[0]))]
        self._next_cache.clear()
        return self

    def prob(self, token: int, context: Sequence[int]) -> float:
        ctx = tuple(context[-(self.order - 1) :]) if self.order > 1 else ()
        return self._p(token, ctx)

    def logprob(self, token: int, context: Sequence[int]) -> float:
        return math.log(self._p(token, tuple(context[-(self.order - 1) :]) if self.order > 1 else ()))

    def _p(self, token: int, ctx: Tuple[int, ...]) -> float:
        if not ctx:
            table = self.tables.get((), None)
            if not table:
                return 1.0 / self.vocab_size
            total = self.totals[()]
            c = table.get(token, 0)
            lam = self.discount * len(table) / total
            return max(c - self.discount, 0.0) / total + lam / self.vocab_size
        table = self.tables.get(ctx)
        if not table:
            return self._p(token, ctx[1:])
        total = self.totals[ctx]
        c = table.get(token, 0)
        lam = self.discount * len(table) / total
        return max(c - self.discount, 0.0) / total + lam * self._p(token, ctx[1:])

    def next_logprobs(self, context: Sequence[int], top_m: int) -> List[Tuple[int, float]]:
        """Top-m (token, logprob) continuations, exact over the full vocab.

        Candidates are the successors observed at any non-empty backoff
        level plus the highest-count unigrams.  Tokens outside that set
        share the context's full backoff factor, so their order among
        themselves is unigram order: the included top unigrams always
        cover the true top-m.  Results are memoised per context suffix.
        """
        ctx = tuple(context[-(self.order - 1) :]) if self.order > 1 else ()
        key = (ctx, top_m)
        cached = self._next_cache.get(key)
        if cached is not None:
            return cached
        seen: set = set()
        probe = ctx
        while probe:
            table = self.tables.get(probe)
            if table:
                seen.update(table.keys())
            probe = probe[1:]
        extra = 0
        for tok in self._top_unigrams:
            if extra >= top_m:
                break
            if tok not in seen:
                seen.add(tok)
                extra += 1
        scored = [(tok, math.log(self._p(tok, ctx))) for tok in seen]
        scored.sort(key=lambda ts: (-ts[1], ts[0]))
        result = scored[:top_m]
        if len(self._next_cache) > 500_000:
            self._next_cache.clear()
        self._next_cache[key] = result
        return result

    def save(self, path: str) -> None:
        payload = {
            "order": self.order,
            "vocab_size": self.vocab_size,
            "discount": self.discount,
            "tables": [
                [list(ctx), sorted(counter.items())]
                for ctx, counter in sorted(self.tables.items())
            ],
        }
        with open(path, "w", encoding="ascii") as fh:
            json.dump(payload, fh)

    @classmethod
    def load(cls, path: str) -> "NgramModel":
        with open(path, "r", encoding="ascii") as fh:
            data = json.load(fh)
        model = cls(data["order"], data["vocab_size"], data["discount"])
        for ctx, items in data["tables"]:
            model.tables[tuple(ctx)] = Counter({int(t): int(c) for t, c in items})
        model.totals = {ctx: sum(c.values()) for ctx, c in model.tables.items()}
        uni = model.tables.get((), Counter())
        model._top_unigrams = [
            t for t, _ in sorted(uni.items(), key=lambda kv: (-kv[1], kv[0]))
        ]
        return model


def train_ngram(
    texts: Iterable[str], codec: BpeCodec, order: int, discount: float = 0.4
) -> NgramModel:
    """Encode each line of each text (newline kept) and fit the model."""
    model = NgramModel(order, codec.vocab_size, discount)

    def lines() -> Iterable[List[int]]:
        for text in texts:
            for line in text.splitlines(keepends=True):
                if line:
                    yield codec.encode(line)

    return model.fit_lines(lines())


@dataclass
class BeamConfig:
    k: int = 5
    threshold: float = -10.0
    max_steps: int = 16
    time_budget_ms: int = 0

    def __post_init__(self) -> None:
        if self.k < 1 or self.max_steps < 1:
            raise ValueError("beam size and max_steps must be >= 1")


@dataclass
class BeamHypothesis:
    ids: Tuple[int, ...]
    logprob: float
    text: str
    reason: str = ""


@dataclass
class BeamResult:
    finished: List[BeamHypothesis] = field(default_factory=list)
    eval_count: int = 0
    step_batches: List[int] = field(default_factory=list)
    truncated: bool = False


def beam_search(
    model,
    context_ids: Sequence[int],
    cfg: BeamConfig,
    id_text: Optional[Callable[[int], str]] = None,
) -> BeamResult:
    """Beam search with per-step termination pruning.

    At each round the live batch is re-checked in order: (a) aggregate
    score below the threshold drops the sequence, (b) an end-of-line
    character finishes it as a candidate, (c) a comment start drops it,
    (d) a repeated recent token window (closed loop) drops it, and (e)
    exhausting max_steps evaluation rounds finishes the survivors.  Only
    (b)- and (e)-terminated sequences are returned.  ``eval_count`` is the
    sum of per-round surviving batch sizes; scoring the initial context is
    not counted, matching a naive cost of k * max_steps.
    """
    result = BeamResult()
    context = tuple(context_ids)
    if not context:
        return result
    id_text = id_text or str
    deadline = (
        time.monotonic() + cfg.time_budget_ms / 1000.0 if cfg.time_budget_ms > 0 else None
    )

    first = model.next_logprobs(context, cfg.k)
    live = [
        BeamHypothesis(ids=(tok,), logprob=lp, text=id_text(tok))
        for tok, lp in first[: cfg.k]
    ]

    for round_idx in range(cfg.max_steps + 1):
        survivors: List[BeamHypothesis] = []
        for hyp in live:
            if hyp.logprob < cfg.threshold:
                continue
            if "\n" in id_text(hyp.ids[-1]):
                hyp.reason = "eol"
                result.finished.append(hyp)
                continue
            if any(mark in hyp.text for mark in COMMENT_STARTS):
                continue
            if _closed_loop(hyp.ids):
                continue
            survivors.append(hyp)
        if deadline is not None and time.monotonic() > deadline:
            result.truncated = True
            for hyp in survivors:
                hyp.reason = "budget"
            result.finished.extend(survivors)
            break
        if round_idx == cfg.max_steps or not survivors:
            for hyp in survivors:
                hyp.reason = "max_steps"
            result.finished.extend(survivors)
            break
        result.eval_count += len(survivors)
        result.step_batches.append(len(survivors))
        pool: List[BeamHypothesis] = []
        for hyp in survivors:
            for tok, lp in model.next_logprobs(context + hyp.ids, cfg.k):
                pool.append(
                    BeamHypothesis(
                        ids=hyp.ids + (tok,),
                        logprob=hyp.logprob + lp,
                        text=hyp.text + id_text(tok),
                    )
                )
        pool.sort(key=lambda h: (-h.logprob, h.ids))
        live = pool[: cfg.k]
    return result


def _closed_loop(ids: Tuple[int, ...]) -> bool:
    if len(ids) < 2 * LOOP_WINDOW:
        return False
    tail = ids[-LOOP_WINDOW:]
    for i in range(len(ids) - LOOP_WINDOW):
        if ids[i : i + LOOP_WINDOW] == tail:
            return True
    return False


class LineCache:
    """Results cache for the current line.

    Exact-context memoisation is always on and transparent.  Prefix reuse
    (serving cached completions minus the newly typed characters) is the
    fallback for time-budgeted queries that cannot finish a fresh search,
    mirroring background-completed results; it can be forced with
    reuse="always".
    """

    def __init__(self, reuse: str = "timeout"):
        if reuse not in ("timeout", "always", "off"):
            raise ValueError(f"unknown reuse mode {reuse!r}")
        self.reuse = reuse
        self.line_no = -1
        self.exact: Dict[str, List[Tuple[str, float]]] = {}
        self.last_context: Optional[str] = None
        self.last_results: List[Tuple[str, float]] = []

    def sync_line(self, line_no: int) -> None:
        if line_no != self.line_no:
            self.line_no = line_no
            self.exact.clear()
            self.last_context = None
            self.last_results = []

    def lookup_exact(self, context: str) -> Optional[List[Tuple[str, float]]]:
        return self.exact.get(context)

    def lookup_prefix(self, context: str) -> Optional[List[Tuple[str, float]]]:
        if self.last_context is None or not context.startswith(self.last_context):
            return None
        delta = context[len(self.last_context) :]
        if "\n" in delta:
            return None
        served = [
            (text[len(delta) :], lp)
            for text, lp in self.last_results
            if text.startswith(delta) and len(text) > len(delta)
        ]
        return served or None

    def store(self, context: str, results: List[Tuple[str, float]]) -> None:
        self.exact[context] = results
        self.last_context = context
        self.last_results = results


class LanguageModelStrategy(Strategy):
    strategy_id = "lm"
    primary_dimension = "lm_logprob"
    dimensions = ("lm_logprob",)

    def __init__(
        self,
        model: NgramModel,
        codec: BpeCodec,
        beam: BeamConfig | None = None,
        cap: int = 5,
        trigger: str = "always",
    ):
        self.model = model
        self.codec = codec
        self.beam = beam or BeamConfig()
        self.cap = cap
        if trigger not in ("always", "word_boundary"):
            raise ValueError(f"unknown trigger mode {trigger!r}")
        self.trigger = trigger
        self.eval_count = 0  # cumulative model evaluations, for cache tests

    def query(self, ctx: QueryContext, session: Session) -> List[Candidate]:
        if not ctx.prefix:
            return []
        if self.trigger == "word_boundary" and ctx.ident_prefix:
            return []
        cache = session.lm_cache
        if cache is not None:
            cache.sync_line(ctx.prefix.count("\n"))
            memo = cache.lookup_exact(ctx.prefix)
            if memo is not None:
                return self._to_candidates(memo)
            if cache.reuse == "always" or (
                cache.reuse == "timeout" and self.beam.time_budget_ms > 0
            ):
                served = cache.lookup_prefix(ctx.prefix)
                if served is not None:
                    cache.store(ctx.prefix, served)
                    return self._to_candidates(served)
        results = self._search(ctx.prefix)
        if cache is not None:
            cache.store(ctx.prefix, results)
        return self._to_candidates(results)

    def _search(self, prefix: str) -> List[Tuple[str, float]]:
        context = self.codec.encode(prefix)[-MAX_CONTEXT_IDS:]
        if not context:
            return []
        outcome = beam_search(
            self.model, context, self.beam, id_text=self._id_text
        )
        self.eval_count += outcome.eval_count
        best: Dict[str, float] = {}
        for hyp in outcome.finished:
            if hyp.text and (hyp.text not in best or hyp.logprob > best[hyp.text]):
                best[hyp.text] = hyp.logprob
        ranked = sorted(best.items(), key=lambda tl: (-tl[1], len(tl[0]), tl[0]))
        return ranked[: self.cap]

    def _id_text(self, token_id: int) -> str:
        return self.codec.decode([token_id])

    def _to_candidates(self, results: List[Tuple[str, float]]) -> List[Candidate]:
        return [
            Candidate(text=text, scores={"lm_logprob": lp}, strategies=("lm",))
            for text, lp in results[: self.cap]
        ]
