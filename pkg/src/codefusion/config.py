"""Run configuration: a plain-text key = value file drives every command.

Flags only pick the config path, subcommand, and verbosity; anything that
affects artifacts lives here so runs are reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from typing import List, Tuple


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    corpus_dir: str = "toycorpus"
    build_dir: str = "build"
    seed: int = 7
    split_ratios: Tuple[float, float, float] = (0.8, 0.1, 0.1)
    method_filtering: bool = False

    string_len_threshold: int = 32
    string_freq_threshold: int = 10
    placeholder_string: str = '"<STR>"'
    placeholder_number: str = "0"

    strategies: Tuple[str, ...] = ("global", "local", "lm")
    external_strategies: Tuple[str, ...] = ()  # entries like "myid: python serve.py"
    candidate_cap: int = 5
    context_window: int = 2048
    global_filter_rule: str = "and"

    bpe_vocab_size: int = 4096
    lm_order: int = 5
    lm_discount: float = 0.4
    lm_trigger: str = "always"
    lm_cache_reuse: str = "timeout"
    beam_k: int = 5
    beam_threshold: float = -10.0
    beam_max_steps: int = 16
    time_budget_ms: int = 0

    workers: int = 1

    acceptance_threshold: float = 0.5
    acceptance_include_empty: bool = False
    ranking_mode: str = "fusion"
    gate: bool = True
    gbdt_trees: int = 100
    gbdt_depth: int = 6
    gbdt_learning_rate: float = 0.1
    gbdt_min_leaf: int = 20

    def validate(self) -> None:
        if abs(sum(self.split_ratios) - 1.0) > 1e-9:
            raise ConfigError("split_ratios must sum to 1")
        if not 1 <= self.candidate_cap <= 5:
            raise ConfigError("candidate_cap must be in 1..5")
        if not 0.0 <= self.acceptance_threshold <= 1.0:
            raise ConfigError("acceptance_threshold must lie in [0, 1]")
        if self.ranking_mode not in ("fusion", "normalized", "unranked"):
            raise ConfigError(f"unknown ranking_mode {self.ranking_mode!r}")
        if self.global_filter_rule not in ("and", "or"):
            raise ConfigError("global_filter_rule must be 'and' or 'or'")
        if self.lm_trigger not in ("always", "word_boundary"):
            raise ConfigError("lm_trigger must be 'always' or 'word_boundary'")
        if self.lm_cache_reuse not in ("timeout", "always", "off"):
            raise ConfigError("lm_cache_reuse must be timeout, always, or off")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.beam_k < 1 or self.beam_max_steps < 1:
            raise ConfigError("beam_k and beam_max_steps must be >= 1")
        for sid in self.strategies:
            if sid not in ("global", "local", "lm"):
                raise ConfigError(f"unknown built-in strategy {sid!r}")

    # Paths under the build directory.
    def files_dir(self) -> str:
        return os.path.join(self.build_dir, "files")

    def models_dir(self) -> str:
        return os.path.join(self.build_dir, "models")

    def samples_dir(self, split: str) -> str:
        return os.path.join(self.build_dir, "samples", split)

    def reports_dir(self) -> str:
        return os.path.join(self.build_dir, "reports")

    def manifest_path(self) -> str:
        return os.path.join(self.build_dir, "manifest.json")


_BOOL_NAMES = {"method_filtering", "gate", "acceptance_include_empty"}


def parse_value(name: str, raw: str, kind) -> object:
    raw = raw.strip()
    if name in _BOOL_NAMES:
        if raw.lower() in ("on", "true", "1", "yes"):
            return True
        if raw.lower() in ("off", "false", "0", "no"):
            return False
        raise ConfigError(f"{name}: expected on/off, got {raw!r}")
    if kind is int:
        return int(raw)
    if kind is float:
        return float(raw)
    if name == "split_ratios":
        parts = [float(p) for p in raw.split(",")]
        if len(parts) != 3:
            raise ConfigError("split_ratios needs three comma-separated fractions")
        return tuple(parts)
    if name in ("strategies", "external_strategies"):
        parts = [p.strip() for p in raw.split(",") if p.strip()]
        return tuple(parts)
    return raw


def load_config(path: str) -> RunConfig:
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    cfg = RunConfig()
    valid = {f.name: f.type for f in fields(RunConfig)}
    types = {f.name: type(getattr(cfg, f.name)) for f in fields(RunConfig)}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, _, raw = stripped.partition("=")
            key = key.strip()
            if key not in valid:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                setattr(cfg, key, parse_value(key, raw, types[key]))
            except (ValueError, ConfigError) as exc:
                raise ConfigError(f"{path}:{lineno}: {exc}") from exc
    cfg.validate()
    return cfg


def config_keys_help() -> str:
    cfg = RunConfig()
    lines = ["config keys (key = value, # comments):"]
    for f in fields(RunConfig):
        default = getattr(cfg, f.name)
        if isinstance(default, tuple):
            default = ",".join(str(x) for x in default)
        lines.append(f"  {f.name} (default: {default})")
    return "\n".join(lines)
