from collections import Counter

import pytest

from codefusion import corpus, lexer
from codefusion.corpus import (
    CodeFile,
    PreprocessConfig,
    count_literals,
    excise_filtered_methods,
    filter_file,
    filter_method,
    remove_non_english,
    replace_literals,
    split_corpus,
    strip_comments,
)
from codefusion.lexer import tokenize


@pytest.mark.parametrize(
    "name,keep",
    [
        ("FooTest.java", False),
        ("Main.java", True),
        ("latest_utils.java", False),  # substring rule, case-insensitive
        ("src/deep/TESTER.java", False),
        ("src/deep/Widget.java", True),
    ],
)
def test_filter_file(name, keep):
    assert filter_file(name, "class X {}") is keep


@pytest.mark.parametrize(
    "name,lines,keep",
    [
        ("toString", 3, False),
        ("process", 5, True),
        ("init", 21, False),
        ("equals", 1, False),
        ("finalize", 2, False),
        ("clone", 2, False),
        ("run", 20, True),
    ],
)
def test_filter_method(name, lines, keep):
    assert filter_method(name, lines) is keep


def test_remove_non_english():
    assert remove_non_english("int 变量 = 1;") == "int  = 1;"
    ascii_file = "public int x = 1;\n\tdone();\n"
    assert remove_non_english(ascii_file) == ascii_file
    assert remove_non_english("ok \U0001f600 fine") == "ok  fine"


SRC_WITH_COMMENTS = """\
// License header that should go away.
import java.util.List;

public class Widget {
    // Doc line kept: describes the method below.
    public int getCount() {
        // doc position comment kept
        int x = 1; // trailing comment removed
        return x;
    }

    /* stray block removed */
    private int count;
}
"""


def test_strip_comments_keeps_method_docs():
    out = strip_comments(SRC_WITH_COMMENTS)
    assert "License header" not in out
    assert "Doc line kept" in out
    assert "doc position comment kept" in out
    assert "trailing comment removed" not in out
    assert "stray block removed" not in out
    assert "int x = 1; \n" in out  # statement line survives, comment gone


def test_strip_comments_preserves_non_comment_bytes():
    out = strip_comments(SRC_WITH_COMMENTS)
    original = [
        t.text for t in tokenize(SRC_WITH_COMMENTS) if t.kind != lexer.COMMENT
    ]
    stripped = [t.text for t in tokenize(out) if t.kind != lexer.COMMENT]
    assert original == stripped


def test_strip_comments_identity_without_comments():
    src = "public int x() {\n    return 1;\n}\n"
    assert strip_comments(src) == src


def test_strip_comments_unterminated_block(caplog):
    src = "int a = 1;\n/* never closed\nint b = 2;"
    out = strip_comments(src)
    assert out == "int a = 1;\n"


def test_replace_literals_rules():
    cfg = PreprocessConfig(string_len_threshold=10, string_freq_threshold=3)
    counts = Counter({'"__main__"': 50, '"rare but long string"': 1})
    text = 's = "__main__"; r = "rare but long string"; n = 0;'
    out = replace_literals(text, cfg, counts)
    assert '"__main__"' in out  # frequent: kept despite length
    assert '"rare but long string"' not in out
    assert '"<STR>"' in out
    assert "n = 0;" in out  # short literal untouched


def test_replace_literals_preserves_token_count():
    cfg = PreprocessConfig(string_len_threshold=8, string_freq_threshold=2)
    text = 'a = "long unique literal value"; b = 123456789012; c = "ok";'
    counts = count_literals([text])  # every literal occurs once
    out = replace_literals(text, cfg, counts)
    assert len(tokenize(out)) == len(tokenize(text))


def test_preprocess_idempotent():
    cfg = PreprocessConfig(string_len_threshold=8, string_freq_threshold=2)
    text = SRC_WITH_COMMENTS + 's = "long unique literal wiped";\nint café = 1;\n'
    counts = count_literals([remove_non_english(text)])
    once = corpus.preprocess_text(text, cfg, counts)
    twice = corpus.preprocess_text(once, cfg, counts)
    assert once == twice


def test_placeholder_must_be_single_token():
    cfg = PreprocessConfig(placeholder_string="two tokens")
    with pytest.raises(ValueError):
        cfg.validate()


def make_files(n, projects=("p0", "p1", "p2")):
    return [
        CodeFile(path=f"{projects[i % len(projects)]}/f{i}.java", text="x",
                 project_id=projects[i % len(projects)])
        for i in range(n)
    ]


def test_split_exact_counts():
    files = split_corpus(make_files(100), (0.9, 0.02, 0.08), seed=7)
    counts = Counter(f.split for f in files)
    assert counts == {"train": 90, "simulation": 2, "test": 8}


def test_split_deterministic():
    a = {f.path: f.split for f in split_corpus(make_files(60), (0.7, 0.2, 0.1), seed=3)}
    b = {f.path: f.split for f in split_corpus(make_files(60), (0.7, 0.2, 0.1), seed=3)}
    assert a == b
    c = {f.path: f.split for f in split_corpus(make_files(60), (0.7, 0.2, 0.1), seed=4)}
    assert c != a  # different seed shuffles differently


def test_split_all_train():
    files = split_corpus(make_files(10), (1.0, 0.0, 0.0), seed=1)
    assert all(f.split == "train" for f in files)


def test_split_empty_rejected():
    with pytest.raises(ValueError):
        split_corpus([], (0.8, 0.1, 0.1), seed=1)


def test_split_stratified_by_project():
    files = split_corpus(make_files(90), (1 / 3, 1 / 3, 1 / 3), seed=11)
    per_project = {}
    for f in files:
        per_project.setdefault(f.project_id, Counter())[f.split] += 1
    for counts in per_project.values():
        assert set(counts.values()) == {10}  # 30 files/project, even thirds


def test_excise_filtered_methods():
    src = (
        "public class X {\n"
        "    public String toString() {\n        return \"x\";\n    }\n"
        "    public int keepMe() {\n        return 1;\n    }\n"
        "}\n"
    )
    out = excise_filtered_methods(src)
    assert "toString" not in out
    assert "keepMe" in out


def test_ingest_on_tree(tmp_path):
    (tmp_path / "projA").mkdir()
    (tmp_path / "projB").mkdir()
    (tmp_path / "projA" / "Main.java").write_text("public class Main {\n}\n")
    (tmp_path / "projA" / "MainTest.java").write_text("dropped")
    (tmp_path / "projB" / "Other.java").write_text("public class Other {\n}\n")
    files, manifest = corpus.ingest(str(tmp_path), (1.0, 0.0, 0.0), seed=1)
    paths = {f.path for f in files}
    assert paths == {"projA/Main.java", "projB/Other.java"}
    assert {e["project_id"] for e in manifest.files} == {"projA", "projB"}
    assert all(e["split"] == "train" for e in manifest.files)
