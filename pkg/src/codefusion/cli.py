"""Command-line orchestration of the full pipeline.

Subcommands: ingest, train-strategies, simulate, fit, eval, complete.
Each validates its inputs, writes artifacts atomically, and prints one
machine-readable JSON summary line.  Exit codes: 0 success, 2 config
error, 3 missing upstream artifact, 4 internal error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import bpe as bpe_mod
from . import corpus as corpus_mod
from .config import ConfigError, RunConfig, config_keys_help, load_config
from .corpus import CodeFile, PreprocessConfig
from .ensemble import CompletionPipeline, PipelineConfig
from .features import build_candidate_schema, build_set_schema, load_schemas, save_schemas
from .learn import (
    DimensionScaler,
    GbdtClassifier,
    GbdtModel,
    GbdtRegressor,
    fit_score_scaler,
    make_acceptance_dataset,
    make_ranking_dataset,
)
from .simulate import SimulationConfig, read_samples, run_parallel
from .strategies import (
    BeamConfig,
    ExternalStrategy,
    GlobalFrequencyStrategy,
    LanguageModelStrategy,
    LineCache,
    LocalFrequencyStrategy,
    NgramModel,
    Session,
    SubtokenTrie,
)
from .strategies.ngram_lm import train_ngram

log = logging.getLogger(__name__)


class MissingArtifact(RuntimeError):
    pass


def _require(path: str, stage: str) -> str:
    if not os.path.exists(path):
        raise MissingArtifact(f"missing artifact {path}; run '{stage}' first")
    return path


def _write_atomic(path: str, text: str) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path + ".tmp", "w", encoding="ascii") as fh:
        fh.write(text)
    os.replace(path + ".tmp", path)


def _summary(**kv) -> None:
    print(json.dumps(kv, sort_keys=True))


def _load_manifest(cfg: RunConfig) -> dict:
    path = _require(cfg.manifest_path(), "ingest")
    with open(path, "r", encoding="ascii") as fh:
        return json.load(fh)


def _read_split(cfg: RunConfig, split: str) -> List[CodeFile]:
    manifest = _load_manifest(cfg)
    out = []
    for entry in manifest["files"]:
        if entry["split"] != split:
            continue
        path = os.path.join(cfg.files_dir(), entry["path"])
        with open(path, "r", encoding="ascii") as fh:
            out.append(
                CodeFile(
                    path=entry["path"],
                    text=fh.read(),
                    project_id=entry["project_id"],
                    split=split,
                )
            )
    return out


# --------------------------------------------------------------------------
# Strategy loading (also used by simulation worker processes)
# --------------------------------------------------------------------------


def load_strategies(models_dir: str, cfg_dict: dict):
    """Build strategy objects and a per-file session factory from trained
    artifacts.  Module-level so process-pool workers can import it."""
    strategies = []
    cap = cfg_dict["candidate_cap"]
    if "global" in cfg_dict["strategies"]:
        trie = SubtokenTrie.load(os.path.join(models_dir, "trie.json"))
        strategies.append(GlobalFrequencyStrategy(trie, cap=cap))
    if "local" in cfg_dict["strategies"]:
        strategies.append(LocalFrequencyStrategy(cap=cap))
    if "lm" in cfg_dict["strategies"]:
        codec = bpe_mod.BpeCodec.load(os.path.join(models_dir, "bpe.txt"))
        model = NgramModel.load(os.path.join(models_dir, "lm.json"))
        beam = BeamConfig(
            k=cfg_dict["beam_k"],
            threshold=cfg_dict["beam_threshold"],
            max_steps=cfg_dict["beam_max_steps"],
            time_budget_ms=cfg_dict["time_budget_ms"],
        )
        strategies.append(
            LanguageModelStrategy(
                model, codec, beam=beam, cap=cap, trigger=cfg_dict["lm_trigger"]
            )
        )
    for entry in cfg_dict.get("external_strategies", ()):
        sid, _, command = entry.partition(":")
        strategies.append(
            ExternalStrategy(sid.strip(), command.strip().split(), cap=cap)
        )
    reuse = cfg_dict["lm_cache_reuse"]

    def session_factory() -> Session:
        return Session(lm_cache=LineCache(reuse=reuse))

    return strategies, session_factory


def _strategy_cfg_dict(cfg: RunConfig) -> dict:
    return {
        "strategies": list(cfg.strategies),
        "external_strategies": list(cfg.external_strategies),
        "candidate_cap": cfg.candidate_cap,
        "beam_k": cfg.beam_k,
        "beam_threshold": cfg.beam_threshold,
        "beam_max_steps": cfg.beam_max_steps,
        "time_budget_ms": cfg.time_budget_ms,
        "lm_trigger": cfg.lm_trigger,
        "lm_cache_reuse": cfg.lm_cache_reuse,
    }


def enabled_strategy_ids(cfg: RunConfig) -> List[str]:
    ids = list(cfg.strategies)
    for entry in cfg.external_strategies:
        ids.append(entry.partition(":")[0].strip())
    return sorted(ids)


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------


def cmd_ingest(cfg: RunConfig) -> None:
    pre = PreprocessConfig(
        string_len_threshold=cfg.string_len_threshold,
        string_freq_threshold=cfg.string_freq_threshold,
        placeholder_string=cfg.placeholder_string,
        placeholder_number=cfg.placeholder_number,
    )
    if not os.path.isdir(cfg.corpus_dir):
        raise ConfigError(f"corpus_dir {cfg.corpus_dir!r} is not a directory")
    files, manifest = corpus_mod.ingest(
        cfg.corpus_dir,
        cfg.split_ratios,
        cfg.seed,
        pre,
        method_filtering=cfg.method_filtering,
    )
    for f in files:
        _write_atomic(os.path.join(cfg.files_dir(), f.path), f.text)
    _write_atomic(cfg.manifest_path(), manifest.to_json())
    splits = {s: sum(1 for f in files if f.split == s) for s in ("train", "simulation", "test")}
    _summary(command="ingest", files=len(files), splits=splits, manifest=cfg.manifest_path())


def cmd_train_strategies(cfg: RunConfig) -> None:
    train_files = _read_split(cfg, "train")
    if not train_files:
        raise MissingArtifact("no training files; run 'ingest' first")
    models_dir = cfg.models_dir()
    os.makedirs(models_dir, exist_ok=True)

    trie = None
    if "global" in cfg.strategies:
        from .strategies.globalfreq import build_subtoken_trie

        trie = build_subtoken_trie(
            ((f.project_id, f.text) for f in train_files),
            filter_rule=cfg.global_filter_rule,
        )
        trie.save(os.path.join(models_dir, "trie.json"))

    vocab_size = None
    if "lm" in cfg.strategies:
        codec = bpe_mod.train((f.text for f in train_files), cfg.bpe_vocab_size)
        codec.save(os.path.join(models_dir, "bpe.txt"))
        model = train_ngram(
            (f.text for f in train_files), codec, cfg.lm_order, cfg.lm_discount
        )
        model.save(os.path.join(models_dir, "lm.json"))
        vocab_size = codec.vocab_size

    _summary(
        command="train-strategies",
        trie_words=trie.size if trie else None,
        bpe_vocab=vocab_size,
        models_dir=models_dir,
    )


def cmd_simulate(cfg: RunConfig) -> None:
    models_dir = cfg.models_dir()
    if "global" in cfg.strategies:
        _require(os.path.join(models_dir, "trie.json"), "train-strategies")
    if "lm" in cfg.strategies:
        _require(os.path.join(models_dir, "lm.json"), "train-strategies")
    sim_cfg = SimulationConfig(
        candidate_cap=cfg.candidate_cap,
        context_window=cfg.context_window,
        workers=cfg.workers,
        seed=cfg.seed,
    )
    import time

    results = {}
    for split in ("simulation", "test"):
        files = _read_split(cfg, split)
        start = time.perf_counter()
        manifest = run_parallel(
            files,
            load_strategies,
            (models_dir, _strategy_cfg_dict(cfg)),
            sim_cfg,
            cfg.samples_dir(split),
        )
        results[split] = {
            "files": len(files),
            "samples": manifest["total_samples"],
            "critical_fraction": manifest["critical_fraction"],
            "digest": _store_digest(cfg.samples_dir(split)),
            "elapsed_s": round(time.perf_counter() - start, 3),
            "workers": cfg.workers,
        }
    _summary(command="simulate", **results)


def _store_digest(store_dir: str) -> str:
    h = hashlib.sha256()
    for name in sorted(os.listdir(store_dir)):
        if name.endswith(".tmp"):
            continue
        with open(os.path.join(store_dir, name), "rb") as fh:
            h.update(name.encode())
            h.update(fh.read())
    return h.hexdigest()


def _load_split_samples(cfg: RunConfig, split: str):
    store = cfg.samples_dir(split)
    _require(os.path.join(store, "manifest.json"), "simulate")
    with open(os.path.join(store, "manifest.json"), "r", encoding="ascii") as fh:
        manifest = json.load(fh)
    files = []
    for entry in manifest["files"]:
        if entry["status"] != "ok":
            continue
        files.append((entry["id"], read_samples(store, entry["id"])))
    texts = {f.path: f.text for f in _read_split(cfg, split)}
    return files, texts, manifest


def cmd_fit(cfg: RunConfig) -> None:
    files, texts, _ = _load_split_samples(cfg, "simulation")
    strategy_ids = enabled_strategy_ids(cfg)
    set_schema = build_set_schema(strategy_ids)
    cand_schema = build_candidate_schema(strategy_ids)

    pairs = []
    all_samples = []
    for file_id, samples in files:
        text = texts[file_id]
        for sample in samples:
            pairs.append((sample, text[: sample.pos]))
            all_samples.append(sample)

    X_set, y_set = make_acceptance_dataset(
        pairs, set_schema, strategy_ids, include_empty=cfg.acceptance_include_empty
    )
    X_cand, y_cand = make_ranking_dataset(pairs, cand_schema, strategy_ids)
    if len(X_set) == 0 or len(X_cand) == 0:
        raise MissingArtifact("simulation store produced no training rows; run 'simulate'")

    gbdt_params = dict(
        n_trees=cfg.gbdt_trees,
        max_depth=cfg.gbdt_depth,
        learning_rate=cfg.gbdt_learning_rate,
        min_samples_leaf=cfg.gbdt_min_leaf,
    )
    clf = GbdtClassifier(**gbdt_params).fit(X_set, y_set, schema_version=set_schema.version)
    reg = GbdtRegressor(**gbdt_params).fit(X_cand, y_cand, schema_version=cand_schema.version)
    scaler = fit_score_scaler(all_samples, strategy_ids)

    models_dir = cfg.models_dir()
    os.makedirs(models_dir, exist_ok=True)
    clf.model_.save(os.path.join(models_dir, "acceptance.json"))
    reg.model_.save(os.path.join(models_dir, "ranking.json"))
    scaler.save(os.path.join(models_dir, "scaler.json"))
    save_schemas(os.path.join(models_dir, "schema.json"), set_schema, cand_schema)

    importance = {
        "acceptance": _named_importance(clf.model_, set_schema),
        "ranking": _named_importance(reg.model_, cand_schema),
    }
    _write_atomic(
        os.path.join(cfg.reports_dir(), "feature_importance.json"),
        json.dumps(importance, indent=2, sort_keys=True),
    )
    _summary(
        command="fit",
        acceptance_rows=len(X_set),
        positive_rate=float(y_set.mean()) if len(y_set) else None,
        ranking_rows=len(X_cand),
        models_dir=models_dir,
    )


def _named_importance(model: GbdtModel, schema) -> Dict[str, int]:
    counts = model.feature_importance(len(schema))
    return {schema.names[i]: c for i, c in sorted(counts.items()) if c > 0}


def _build_pipeline(cfg: RunConfig, mode: str, gate: bool):
    models_dir = cfg.models_dir()
    set_schema, cand_schema = load_schemas(_require(os.path.join(models_dir, "schema.json"), "fit"))
    acceptance = GbdtModel.load(os.path.join(models_dir, "acceptance.json")) if gate else None
    ranking = (
        GbdtModel.load(os.path.join(models_dir, "ranking.json")) if mode == "fusion" else None
    )
    scaler = (
        DimensionScaler.load(os.path.join(models_dir, "scaler.json"))
        if mode == "normalized"
        else None
    )
    strategies, session_factory = load_strategies(models_dir, _strategy_cfg_dict(cfg))
    pipe_cfg = PipelineConfig(
        acceptance_threshold=cfg.acceptance_threshold,
        mode=mode,
        gate=gate,
        candidate_cap=cfg.candidate_cap,
        context_window=cfg.context_window,
    )
    pipeline = CompletionPipeline(
        strategies,
        pipe_cfg,
        set_schema=set_schema,
        candidate_schema=cand_schema,
        acceptance_model=acceptance,
        ranking_model=ranking,
        scaler=scaler,
    )
    return pipeline, session_factory


def cmd_eval(cfg: RunConfig) -> None:
    from . import evaluate as ev

    files, texts, sim_manifest = _load_split_samples(cfg, "test")
    _require(os.path.join(cfg.models_dir(), "schema.json"), "fit")
    reports = cfg.reports_dir()
    os.makedirs(reports, exist_ok=True)

    characteristics = [
        ev.strategy_characteristics(files, texts, sid) for sid in enabled_strategy_ids(cfg)
    ]
    ev.write_table_csv(
        os.path.join(reports, "characteristics.csv"),
        characteristics,
        [
            "strategy",
            "occurrence_rate",
            "hit_position_p90",
            "prefix_length_p90",
            "completeness",
            "accuracy_at_1",
            "accuracy_at_5",
        ],
    )

    pipelines = {
        "normalized": _build_pipeline_variant(cfg, "normalized", gate=False),
        "fusion": _build_pipeline_variant(cfg, "fusion", gate=False),
        "acceptance+normalized": _build_pipeline_variant(cfg, "normalized", gate=True),
        "acceptance+fusion": _build_pipeline_variant(cfg, "fusion", gate=True),
    }
    ablation = ev.ablation_report(files, texts, pipelines)
    rows = [{"pipeline": name, **row} for name, row in ablation.items()]
    ev.write_table_csv(
        os.path.join(reports, "ablation.csv"),
        rows,
        [
            "pipeline",
            "accuracy_at_1",
            "accuracy_at_5",
            "benefit",
            "hidden_cost",
            "bcr",
            "invalid_list_rate",
            "shown_events",
        ],
    )

    spectra_dir = os.path.join(reports, "spectra")
    os.makedirs(spectra_dir, exist_ok=True)
    best = pipelines["acceptance+fusion"]
    for file_id, samples in files:
        text = texts[file_id]
        ledger = ev.replay_samples(text, file_id, samples, best)
        costs = ev.cost_spectrum(ledger, len(text))
        lines = ["position,cost"] + [f"{i},{c}" for i, c in enumerate(costs)]
        _write_atomic(
            os.path.join(spectra_dir, file_id.replace("/", "__") + ".csv"),
            "\n".join(lines) + "\n",
        )

    summary = {
        "characteristics": characteristics,
        "ablation": ablation,
        "test_critical_fraction": sim_manifest.get("critical_fraction"),
    }
    ev.write_report_json(os.path.join(reports, "summary.json"), summary)
    _summary(
        command="eval",
        report=os.path.join(reports, "summary.json"),
        bcr={name: row["bcr"] for name, row in ablation.items()},
        invalid={name: row["invalid_list_rate"] for name, row in ablation.items()},
    )


def _build_pipeline_variant(cfg: RunConfig, mode: str, gate: bool) -> CompletionPipeline:
    # Ablation variants only differ in gate/mode; stored samples already
    # carry the candidates, so strategies are not re-queried there.
    models_dir = cfg.models_dir()
    set_schema, cand_schema = load_schemas(os.path.join(models_dir, "schema.json"))
    return CompletionPipeline(
        [],
        PipelineConfig(
            acceptance_threshold=cfg.acceptance_threshold,
            mode=mode,
            gate=gate,
            candidate_cap=cfg.candidate_cap,
            context_window=cfg.context_window,
        ),
        set_schema=set_schema,
        candidate_schema=cand_schema,
        acceptance_model=(
            GbdtModel.load(os.path.join(models_dir, "acceptance.json")) if gate else None
        ),
        ranking_model=(
            GbdtModel.load(os.path.join(models_dir, "ranking.json"))
            if mode == "fusion"
            else None
        ),
        scaler=(
            DimensionScaler.load(os.path.join(models_dir, "scaler.json"))
            if mode == "normalized"
            else None
        ),
        strategy_ids=enabled_strategy_ids(cfg),
    )


def cmd_complete(cfg: RunConfig, file_path: str, offset: int) -> None:
    if not os.path.exists(file_path):
        raise MissingArtifact(f"input file {file_path} does not exist")
    with open(file_path, "r", encoding="utf-8") as fh:
        text = fh.read()
    offset = max(0, min(offset, len(text)))
    pipeline, session_factory = _build_pipeline(cfg, cfg.ranking_mode, cfg.gate)
    session = session_factory()
    from .lexer import tokenize

    for tok in tokenize(text[:offset]):
        if tok.is_word and tok.end < offset:
            session.local.update(tok.text)
    shown = pipeline.complete(text, offset, session)
    payload = {
        "accepted": shown.accepted,
        "acceptance_probability": shown.acceptance_probability,
        "mode": shown.mode,
        "candidates": [
            {
                "text": c.text,
                "score": s,
                "strategies": list(c.strategies),
            }
            for c, s in zip(shown.candidates, shown.final_scores)
        ],
    }
    print(json.dumps(payload, sort_keys=True))
    for strategy in pipeline.strategies:
        strategy.close()


# --------------------------------------------------------------------------
# Entry point
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codefusion",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, keys: Sequence[str]):
        p = sub.add_parser(
            name,
            help=help_text,
            epilog="reads config keys: " + ", ".join(keys) + "\n\n" + config_keys_help(),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        p.add_argument("-c", "--config", default="codefusion.conf", help="config file path")
        return p

    add(
        "ingest",
        "filter, preprocess, and split the corpus",
        ["corpus_dir", "build_dir", "seed", "split_ratios", "method_filtering",
         "string_len_threshold", "string_freq_threshold", "placeholder_string",
         "placeholder_number"],
    )
    add(
        "train-strategies",
        "build the sub-token trie, BPE codec, and language model",
        ["build_dir", "strategies", "global_filter_rule", "bpe_vocab_size",
         "lm_order", "lm_discount"],
    )
    add(
        "simulate",
        "per-character simulation of the simulation and test splits",
        ["build_dir", "strategies", "external_strategies", "candidate_cap",
         "context_window", "beam_k", "beam_threshold", "beam_max_steps",
         "time_budget_ms", "lm_trigger", "lm_cache_reuse", "workers", "seed"],
    )
    add(
        "fit",
        "fit the acceptance, ranking, and scaler models",
        ["build_dir", "strategies", "external_strategies", "gbdt_trees",
         "gbdt_depth", "gbdt_learning_rate", "gbdt_min_leaf",
         "acceptance_include_empty"],
    )
    add(
        "eval",
        "metrics, characteristics, ablation, and cost spectra on the test split",
        ["build_dir", "strategies", "external_strategies", "acceptance_threshold",
         "candidate_cap", "context_window"],
    )
    complete = add(
        "complete",
        "one completion list for a file and cursor offset",
        ["build_dir", "strategies", "external_strategies", "ranking_mode", "gate",
         "acceptance_threshold", "candidate_cap", "context_window", "beam_k",
         "beam_threshold", "beam_max_steps", "time_budget_ms"],
    )
    complete.add_argument("file", help="source file to complete")
    complete.add_argument("offset", type=int, help="cursor offset (characters typed)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = load_config(args.config)
        if args.command == "ingest":
            cmd_ingest(cfg)
        elif args.command == "train-strategies":
            cmd_train_strategies(cfg)
        elif args.command == "simulate":
            cmd_simulate(cfg)
        elif args.command == "fit":
            cmd_fit(cfg)
        elif args.command == "eval":
            cmd_eval(cfg)
        elif args.command == "complete":
            cmd_complete(cfg, args.file, args.offset)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except MissingArtifact as exc:
        print(f"missing artifact: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error")
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
