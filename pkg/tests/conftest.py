import json
import os
import subprocess
import sys

import pytest

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
TOYCORPUS = os.path.join(REPO_ROOT, "toycorpus")

CONF_TEMPLATE = """\
corpus_dir = {corpus}
build_dir = {build}
seed = 7
split_ratios = 0.72,0.14,0.14
bpe_vocab_size = 1024
lm_order = 5
beam_k = 5
beam_threshold = -9.0
beam_max_steps = 12
workers = {workers}
gbdt_trees = 80
"""


def run_cli(args, check=True):
    proc = subprocess.run(
        [sys.executable, "-m", "codefusion.cli", *args],
        capture_output=True,
        text=True,
        cwd=REPO_ROOT,
    )
    if check and proc.returncode != 0:
        raise AssertionError(
            f"cli {args} failed ({proc.returncode}):\n{proc.stdout}\n{proc.stderr}"
        )
    return proc


def last_json(stdout: str) -> dict:
    lines = [ln for ln in stdout.strip().splitlines() if ln.startswith("{")]
    return json.loads(lines[-1])


@pytest.fixture(scope="session")
def toy_build(tmp_path_factory):
    """The full pipeline run once on the bundled toy corpus: ingest,
    train-strategies, simulate (1 worker), fit, eval."""
    import time

    root = tmp_path_factory.mktemp("toy_build")
    conf = root / "toy.conf"
    build = root / "build"
    conf.write_text(CONF_TEMPLATE.format(corpus=TOYCORPUS, build=build, workers=1))
    summaries = {}
    timings = {}
    for command in ("ingest", "train-strategies", "simulate", "fit", "eval"):
        start = time.perf_counter()
        proc = run_cli([command, "-c", str(conf)])
        timings[command] = time.perf_counter() - start
        summaries[command] = last_json(proc.stdout)
    return {
        "conf": str(conf),
        "build": str(build),
        "summaries": summaries,
        "timings": timings,
    }


@pytest.fixture()
def train_texts(toy_build):
    from codefusion.config import load_config

    cfg = load_config(toy_build["conf"])
    with open(cfg.manifest_path()) as fh:
        manifest = json.load(fh)
    texts = {}
    for entry in manifest["files"]:
        with open(os.path.join(cfg.files_dir(), entry["path"])) as fh:
            texts[entry["path"]] = (entry["split"], fh.read())
    return texts
