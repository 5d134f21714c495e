import json
import os

import pytest

from codefusion.config import ConfigError, RunConfig, load_config

from conftest import REPO_ROOT, last_json, run_cli


def test_unknown_config_key_rejected(tmp_path):
    conf = tmp_path / "bad.conf"
    conf.write_text("no_such_key = 1\n")
    with pytest.raises(ConfigError):
        load_config(str(conf))


def test_invalid_values_rejected(tmp_path):
    for line in (
        "split_ratios = 0.5,0.5,0.5",
        "candidate_cap = 9",
        "acceptance_threshold = 1.5",
        "ranking_mode = wild",
        "workers = 0",
    ):
        conf = tmp_path / "bad.conf"
        conf.write_text(line + "\n")
        with pytest.raises(ConfigError):
            load_config(str(conf))


def test_comments_and_defaults(tmp_path):
    conf = tmp_path / "ok.conf"
    conf.write_text("# comment\nseed = 13\nstrategies = global, local\n")
    cfg = load_config(str(conf))
    assert cfg.seed == 13
    assert cfg.strategies == ("global", "local")
    assert cfg.gate is True  # untouched default


def test_cli_exit_code_config_error(tmp_path):
    conf = tmp_path / "bad.conf"
    conf.write_text("candidate_cap = 9\n")
    proc = run_cli(["ingest", "-c", str(conf)], check=False)
    assert proc.returncode == 2


def test_cli_exit_code_missing_config():
    proc = run_cli(["ingest", "-c", "/nonexistent/path.conf"], check=False)
    assert proc.returncode == 2


def test_cli_exit_code_missing_artifact(tmp_path):
    conf = tmp_path / "c.conf"
    conf.write_text(f"build_dir = {tmp_path}/empty_build\n")
    proc = run_cli(["simulate", "-c", str(conf)], check=False)
    assert proc.returncode == 3
    assert "missing artifact" in proc.stderr


def test_help_documents_config_keys():
    proc = run_cli(["simulate", "--help"])
    for key in ("workers", "beam_k", "candidate_cap", "lm_cache_reuse"):
        assert key in proc.stdout


def test_complete_offset_zero_empty_file(toy_build, tmp_path):
    empty = tmp_path / "empty.java"
    empty.write_text("")
    proc = run_cli(["complete", "-c", toy_build["conf"], str(empty), "0"])
    payload = last_json(proc.stdout)
    assert payload["accepted"] is False
    assert payload["candidates"] == []


def test_complete_mid_identifier(toy_build, tmp_path):
    src = tmp_path / "demo.java"
    text = (
        "public class Demo {\n"
        "    private int recordCount;\n"
        "    public int getRecordCount() {\n"
        "        return rec"
    )
    src.write_text(text)
    proc = run_cli(["complete", "-c", toy_build["conf"], str(src), str(len(text))])
    payload = last_json(proc.stdout)
    assert payload["accepted"] is True
    assert payload["candidates"][0]["text"] == "ordCount"


def test_ingest_idempotent(toy_build):
    import hashlib

    manifest_path = os.path.join(toy_build["build"], "manifest.json")
    before = hashlib.sha256(open(manifest_path, "rb").read()).hexdigest()
    run_cli(["ingest", "-c", toy_build["conf"]])
    after = hashlib.sha256(open(manifest_path, "rb").read()).hexdigest()
    assert before == after


def test_simulate_rerun_same_digest(toy_build):
    first = toy_build["summaries"]["simulate"]
    proc = run_cli(["simulate", "-c", toy_build["conf"]])
    second = last_json(proc.stdout)
    assert second["simulation"]["digest"] == first["simulation"]["digest"]
    assert second["test"]["digest"] == first["test"]["digest"]


def test_eval_reports_exist(toy_build):
    reports = os.path.join(toy_build["build"], "reports")
    for name in ("summary.json", "ablation.csv", "characteristics.csv",
                 "feature_importance.json"):
        assert os.path.exists(os.path.join(reports, name)), name
    with open(os.path.join(reports, "summary.json")) as fh:
        summary = json.load(fh)
    assert set(summary["ablation"]) == {
        "normalized", "fusion", "acceptance+normalized", "acceptance+fusion",
    }
    spectra = os.listdir(os.path.join(reports, "spectra"))
    assert spectra, "per-file cost spectra missing"
