"""Coding simulation: sweep the cursor over each file one character at a
time, collect merged candidate sets from every strategy, label hits
against the real text after the cursor, and mark critical positions.

Sample position p means "p characters typed": the context is text[:p] and
the ground truth is text[p:].  A file of n characters yields exactly n
samples.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .corpus import CodeFile
from .lexer import tokenize
from .strategies import Candidate, QueryContext, Session, Strategy, merge_candidates

log = logging.getLogger(__name__)


@dataclass
class SimulationConfig:
    candidate_cap: int = 5
    context_window: int = 2048
    workers: int = 1
    seed: int = 7

    def __post_init__(self) -> None:
        if self.candidate_cap > 5 or self.candidate_cap < 1:
            raise ValueError("per-strategy candidate cap must be in 1..5")


@dataclass
class SimulationSample:
    file_id: str
    pos: int
    candidates: List[Candidate] = field(default_factory=list)
    hits: List[int] = field(default_factory=list)
    critical: int = 0

    @property
    def has_hit(self) -> bool:
        return any(self.hits)

    def longest_hit_length(self) -> int:
        lengths = [c.length for c, h in zip(self.candidates, self.hits) if h]
        return max(lengths, default=0)


def label_candidates(candidates: Sequence[Candidate], suffix: str) -> List[int]:
    """1 iff the candidate's text equals the next len(text) characters."""
    return [1 if suffix.startswith(c.text) else 0 for c in candidates]


def mark_critical(samples: List[SimulationSample]) -> List[SimulationSample]:
    """Flag the positions where a completion request fires in real usage.

    Scanning left to right: at a critical position with at least one hit,
    the longest hit candidate is accepted, which produces the next
    length-1 characters, so those positions are non-critical and the
    cursor's next stop is critical again.  Without a hit, one character is
    typed and the next position stays critical.
    """
    skip = 0
    for sample in samples:
        if skip > 0:
            sample.critical = 0
            skip -= 1
            continue
        sample.critical = 1
        if sample.has_hit:
            skip = sample.longest_hit_length() - 1
    return samples


def simulate_file(
    code_file: CodeFile,
    strategies: Sequence[Strategy],
    cfg: SimulationConfig,
    session_factory: Optional[Callable[[], Session]] = None,
) -> List[SimulationSample]:
    """One sample per character position, with local state and the LM
    cache advancing alongside the cursor."""
    text = code_file.text
    tokens = tokenize(text)
    session = session_factory() if session_factory else Session()
    samples: List[SimulationSample] = []
    feed_idx = 0
    for pos in range(len(text)):
        while feed_idx < len(tokens) and tokens[feed_idx].end < pos:
            tok = tokens[feed_idx]
            if tok.is_word:
                session.local.update(tok.text)
            feed_idx += 1
        ctx = QueryContext.at(text, pos, cfg.context_window)
        lists: List[List[Candidate]] = []
        for strategy in strategies:
            try:
                lists.append(strategy.query(ctx, session)[: cfg.candidate_cap])
            except Exception:
                log.exception(
                    "strategy %s failed at %s:%d", strategy.strategy_id, code_file.path, pos
                )
                lists.append([])
        merged = merge_candidates(lists)
        sample = SimulationSample(file_id=code_file.path, pos=pos, candidates=merged)
        sample.hits = label_candidates(merged, text[pos:])
        samples.append(sample)
    mark_critical(samples)
    return samples


# --------------------------------------------------------------------------
# Sample store: one JSONL shard per file plus a ground-truth shard, under
# <store_dir>/<split>/.
# --------------------------------------------------------------------------


def shard_name(file_id: str) -> str:
    return file_id.replace("/", "__").replace(os.sep, "__")


def write_samples(
    store_dir: str, file_id: str, samples: Sequence[SimulationSample], text: str
) -> Tuple[str, str]:
    os.makedirs(store_dir, exist_ok=True)
    base = os.path.join(store_dir, shard_name(file_id))
    sample_path = base + ".jsonl"
    truth_path = base + ".truth.jsonl"
    with open(sample_path + ".tmp", "w", encoding="ascii") as fh:
        for s in samples:
            fh.write(
                json.dumps(
                    {
                        "file": s.file_id,
                        "pos": s.pos,
                        "critical": s.critical,
                        "candidates": [
                            {
                                "text": c.text,
                                "strategies": list(c.strategies),
                                "scores": {k: c.scores[k] for k in sorted(c.scores)},
                                "hit": h,
                            }
                            for c, h in zip(s.candidates, s.hits)
                        ],
                    },
                    sort_keys=True,
                )
                + "\n"
            )
    os.replace(sample_path + ".tmp", sample_path)
    with open(truth_path + ".tmp", "w", encoding="ascii") as fh:
        for s in samples:
            need = max((c.length for c in s.candidates), default=0)
            fh.write(
                json.dumps({"pos": s.pos, "suffix": text[s.pos : s.pos + need]}) + "\n"
            )
    os.replace(truth_path + ".tmp", truth_path)
    return sample_path, truth_path


def read_samples(store_dir: str, file_id: str) -> List[SimulationSample]:
    path = os.path.join(store_dir, shard_name(file_id)) + ".jsonl"
    samples: List[SimulationSample] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            row = json.loads(line)
            sample = SimulationSample(file_id=row["file"], pos=row["pos"], critical=row["critical"])
            for item in row["candidates"]:
                sample.candidates.append(
                    Candidate(
                        text=item["text"],
                        scores=item["scores"],
                        strategies=tuple(item["strategies"]),
                    )
                )
                sample.hits.append(item["hit"])
            samples.append(sample)
    return samples


def _digest(paths: Iterable[str]) -> str:
    h = hashlib.sha256()
    for path in paths:
        with open(path, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()


# Worker-process globals, set once per process by _init_worker.
_WORKER_STRATEGIES: Optional[Sequence[Strategy]] = None
_WORKER_CFG: Optional[SimulationConfig] = None
_WORKER_SESSION_FACTORY: Optional[Callable[[], Session]] = None
_WORKER_STORE: str = ""


def _init_worker(strategy_loader, loader_args, cfg, store_dir) -> None:
    global _WORKER_STRATEGIES, _WORKER_CFG, _WORKER_SESSION_FACTORY, _WORKER_STORE
    strategies, session_factory = strategy_loader(*loader_args)
    _WORKER_STRATEGIES = strategies
    _WORKER_SESSION_FACTORY = session_factory
    _WORKER_CFG = cfg
    _WORKER_STORE = store_dir


def _run_file(code_file: CodeFile) -> Tuple[str, int, int]:
    samples = simulate_file(
        code_file, _WORKER_STRATEGIES, _WORKER_CFG, _WORKER_SESSION_FACTORY
    )
    write_samples(_WORKER_STORE, code_file.path, samples, code_file.text)
    critical = sum(s.critical for s in samples)
    return code_file.path, len(samples), critical


def run_parallel(
    files: Sequence[CodeFile],
    strategy_loader: Callable,
    loader_args: tuple,
    cfg: SimulationConfig,
    store_dir: str,
) -> dict:
    """Simulate files with a process pool; output is deterministic for any
    worker count.  A crashed file is retried once, then marked failed."""
    if cfg.workers < 1:
        raise ValueError("worker count must be >= 1")
    os.makedirs(store_dir, exist_ok=True)
    results: Dict[str, Tuple[int, int]] = {}
    failed: Dict[str, str] = {}

    if cfg.workers == 1:
        _init_worker(strategy_loader, loader_args, cfg, store_dir)
        try:
            for code_file in files:
                for attempt in (1, 2):
                    try:
                        file_id, count, critical = _run_file(code_file)
                        results[file_id] = (count, critical)
                        break
                    except Exception as exc:
                        log.warning(
                            "simulation of %s failed (attempt %d): %s",
                            code_file.path,
                            attempt,
                            exc,
                        )
                        if attempt == 2:
                            failed[code_file.path] = repr(exc)
        finally:
            for strategy in _WORKER_STRATEGIES or ():
                strategy.close()
    else:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=cfg.workers,
            initializer=_init_worker,
            initargs=(strategy_loader, loader_args, cfg, store_dir),
        ) as pool:
            pending = {pool.submit(_run_file, f): (f, 1) for f in files}
            while pending:
                done, _ = concurrent.futures.wait(
                    pending, return_when=concurrent.futures.FIRST_COMPLETED
                )
                for fut in done:
                    code_file, attempt = pending.pop(fut)
                    try:
                        file_id, count, critical = fut.result()
                        results[file_id] = (count, critical)
                    except Exception as exc:
                        log.warning(
                            "simulation of %s failed (attempt %d): %s",
                            code_file.path,
                            attempt,
                            exc,
                        )
                        if attempt == 1:
                            pending[pool.submit(_run_file, code_file)] = (code_file, 2)
                        else:
                            failed[code_file.path] = repr(exc)

    entries = []
    total = 0
    critical_total = 0
    for code_file in sorted(files, key=lambda f: f.path):
        if code_file.path in results:
            count, critical = results[code_file.path]
            total += count
            critical_total += critical
            base = os.path.join(store_dir, shard_name(code_file.path))
            entries.append(
                {
                    "id": code_file.path,
                    "status": "ok",
                    "samples": count,
                    "critical": critical,
                    "digest": _digest([base + ".jsonl", base + ".truth.jsonl"]),
                }
            )
        else:
            entries.append(
                {
                    "id": code_file.path,
                    "status": "failed",
                    "error": failed.get(code_file.path, "unknown"),
                }
            )
    manifest = {
        "files": entries,
        "total_samples": total,
        "total_critical": critical_total,
        "critical_fraction": (critical_total / total) if total else None,
    }
    manifest_path = os.path.join(store_dir, "manifest.json")
    with open(manifest_path + ".tmp", "w", encoding="ascii") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
    os.replace(manifest_path + ".tmp", manifest_path)
    return manifest
