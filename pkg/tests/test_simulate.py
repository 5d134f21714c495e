import random

import pytest

from codefusion.corpus import CodeFile
from codefusion.simulate import (
    SimulationConfig,
    SimulationSample,
    label_candidates,
    mark_critical,
    read_samples,
    run_parallel,
    simulate_file,
    write_samples,
)
from codefusion.strategies import Candidate, LocalFrequencyStrategy, Strategy


class PlantedStrategy(Strategy):
    """Returns scripted candidates at chosen positions."""

    strategy_id = "planted"
    primary_dimension = "planted_score"
    dimensions = ("planted_score",)

    def __init__(self, plants):
        self.plants = plants  # {pos: [text, ...]}

    def query(self, ctx, session):
        return [
            Candidate(text=t, scores={"planted_score": 1.0}, strategies=("planted",))
            for t in self.plants.get(ctx.position, [])
        ]


class FailingStrategy(Strategy):
    strategy_id = "failing"
    primary_dimension = "failing_score"

    def query(self, ctx, session):
        raise RuntimeError("boom")


def cand(text):
    return Candidate(text=text, scores={"planted_score": 1.0}, strategies=("planted",))


def test_label_exact_prefix_match():
    cands = [cand("DefaultEntries"), cand("foo"), cand("ab")]
    assert label_candidates(cands, "DefaultEntries;") == [1, 0, 0]
    assert label_candidates(cands, "bar") == [0, 0, 0]
    assert label_candidates(cands, "abc") == [0, 0, 1]  # partial-token prefix hit


def make_samples(n, hits_at):
    """hits_at: {pos: hit_length}"""
    samples = []
    for pos in range(n):
        s = SimulationSample(file_id="f", pos=pos)
        if pos in hits_at:
            s.candidates = [cand("x" * hits_at[pos])]
            s.hits = [1]
        samples.append(s)
    return samples


def test_mark_critical_no_hits_everything_critical():
    samples = mark_critical(make_samples(10, {}))
    assert all(s.critical for s in samples)


def test_mark_critical_skips_span_after_acceptance():
    # a length-10 hit at position 5 produces the next 9 characters, so
    # positions 6..14 are non-critical and 15 is critical again
    samples = mark_critical(make_samples(20, {5: 10}))
    flags = [s.critical for s in samples]
    assert flags[5] == 1
    assert flags[6:15] == [0] * 9
    assert flags[15] == 1


def test_mark_critical_ignores_hits_in_skipped_span():
    samples = mark_critical(make_samples(12, {2: 4, 3: 6}))
    flags = [s.critical for s in samples]
    assert flags[2] == 1
    assert flags[3:6] == [0, 0, 0]  # the hit at 3 sits inside the span
    assert flags[6] == 1


def test_mark_critical_idempotent_and_pure():
    samples = make_samples(30, {4: 5, 11: 3, 20: 2})
    once = [s.critical for s in mark_critical(samples)]
    twice = [s.critical for s in mark_critical(samples)]
    assert once == twice


def reference_critical(length, hit_lengths):
    """Independent scan: accept the longest hit at each critical stop."""
    flags = [0] * length
    pos = 0
    while pos < length:
        flags[pos] = 1
        jump = hit_lengths.get(pos, 0)
        pos += jump if jump > 1 else 1
    return flags


def test_planted_simulation_matches_reference_table():
    rng = random.Random(41)
    for trial in range(20):
        n = rng.randint(20, 60)
        text = "".join(rng.choice("abcdef ghij\n") for _ in range(n))
        plants = {}
        for pos in sorted(rng.sample(range(n), k=rng.randint(3, 8))):
            if rng.random() < 0.6:
                ln = rng.randint(1, min(8, n - pos))
                plants[pos] = [text[pos : pos + ln], "zzz-not-it"]
            else:
                plants[pos] = ["zzz-not-it"]
        code_file = CodeFile(path=f"t{trial}", text=text, project_id="p")
        samples = simulate_file(
            code_file, [PlantedStrategy(plants)], SimulationConfig(workers=1)
        )
        assert len(samples) == n
        # hit labels: exactly the planted true-prefix candidates
        for s in samples:
            for c, h in zip(s.candidates, s.hits):
                assert h == (1 if text[s.pos :].startswith(c.text) else 0)
        hit_lengths = {
            s.pos: s.longest_hit_length() for s in samples if s.has_hit
        }
        expected = reference_critical(n, hit_lengths)
        assert [s.critical for s in samples] == expected, f"trial {trial}"


def test_simulation_sample_count_equals_length():
    text = "x" * 120
    samples = simulate_file(
        CodeFile(path="f", text=text, project_id="p"), [], SimulationConfig()
    )
    assert len(samples) == 120


def test_empty_file_no_samples():
    samples = simulate_file(
        CodeFile(path="f", text="", project_id="p"), [], SimulationConfig()
    )
    assert samples == []


def test_failing_strategy_still_emits_samples():
    text = "abcabc"
    samples = simulate_file(
        CodeFile(path="f", text=text, project_id="p"),
        [FailingStrategy(), PlantedStrategy({2: [text[2:4]]})],
        SimulationConfig(),
    )
    assert len(samples) == len(text)
    assert samples[2].has_hit


def test_local_state_advances_with_cursor():
    text = "foo bar\nfoo baz\nfo"
    samples = simulate_file(
        CodeFile(path="f", text=text, project_id="p"),
        [LocalFrequencyStrategy()],
        SimulationConfig(),
    )
    last = samples[len(text) - 1]  # cursor after "f" on line 3
    assert any(
        c.text == "oo" and c.scores["local_count"] == 2.0 for c in last.candidates
    )  # "foo" completed from two earlier sightings


def test_no_lookahead_property():
    text = "alpha beta alpha gamma alpha"
    full = simulate_file(
        CodeFile(path="f", text=text, project_id="p"),
        [LocalFrequencyStrategy()],
        SimulationConfig(),
    )
    for p in (5, 11, 17, 26):
        truncated = simulate_file(
            CodeFile(path="f", text=text[:p], project_id="p"),
            [LocalFrequencyStrategy()],
            SimulationConfig(),
        )
        got = [(c.text, c.scores) for c in truncated[p - 1].candidates]
        want = [(c.text, c.scores) for c in full[p - 1].candidates]
        assert got == want, p


def test_store_roundtrip(tmp_path):
    text = "foo foo f"
    plants = {8: [text[8:9]]}
    samples = simulate_file(
        CodeFile(path="a/b.java", text=text, project_id="a"),
        [PlantedStrategy(plants)],
        SimulationConfig(),
    )
    write_samples(str(tmp_path), "a/b.java", samples, text)
    loaded = read_samples(str(tmp_path), "a/b.java")
    assert len(loaded) == len(samples)
    for s, l in zip(samples, loaded):
        assert (s.pos, s.critical, s.hits) == (l.pos, l.critical, l.hits)
        assert [(c.text, c.scores, c.strategies) for c in s.candidates] == [
            (c.text, c.scores, c.strategies) for c in l.candidates
        ]


def _loader_ok():
    return [LocalFrequencyStrategy()], None


def loader_ok():
    return _loader_ok()


def test_run_parallel_zero_workers_rejected(tmp_path):
    with pytest.raises(ValueError):
        run_parallel([], loader_ok, (), SimulationConfig(workers=0), str(tmp_path))


def test_run_parallel_serial_manifest(tmp_path):
    files = [
        CodeFile(path=f"p/f{i}.java", text="foo foo fo", project_id="p")
        for i in range(3)
    ]
    manifest = run_parallel(
        files, loader_ok, (), SimulationConfig(workers=1), str(tmp_path)
    )
    assert [e["status"] for e in manifest["files"]] == ["ok"] * 3
    assert manifest["total_samples"] == 30


class _PoisonStrategy(Strategy):
    strategy_id = "poison"

    def query(self, ctx, session):
        return []


def failing_loader():
    class Boom(Strategy):
        strategy_id = "boom"

        def query(self, ctx, session):
            return []

    def factory():
        raise RuntimeError("cannot build session")

    return [Boom()], factory


def test_run_parallel_marks_failed_files(tmp_path):
    files = [CodeFile(path="p/f.java", text="xy", project_id="p")]
    manifest = run_parallel(
        files, failing_loader, (), SimulationConfig(workers=1), str(tmp_path)
    )
    assert manifest["files"][0]["status"] == "failed"
