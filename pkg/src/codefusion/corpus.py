"""Corpus ingestion: dataset filters, text preprocessing, and splitting.

The pipeline runs remove_non_english -> strip_comments -> replace_literals
and is idempotent.  Literal occurrence counts are always taken from the
training split only.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import random
import re
import string
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from . import lexer
from .lexer import tokenize

log = logging.getLogger(__name__)

DROPPED_METHOD_NAMES = frozenset({"toString", "equals", "finalize", "clone"})
MAX_METHOD_LINES = 20

_KEEP_CHARS = frozenset(
    string.ascii_letters + string.digits + string.punctuation + " \t\n"
)

# Heuristic for "this line starts a method/function definition".
_SIGNATURE_RE = re.compile(
    r"""^(?:(?:public|private|protected|static|final|abstract|synchronized|
    native|default|strictfp)\s+)*            # modifiers
    [A-Za-z_][\w<>\[\],.\s$]*?               # return type / constructor name
    \b[A-Za-z_]\w*\s*\(                      # method name and open paren
    """,
    re.VERBOSE,
)
_DEF_RE = re.compile(r"^(?:async\s+)?def\s+\w+\s*\(")
_CONTROL_WORDS = frozenset(
    {"if", "for", "while", "switch", "catch", "return", "new", "else", "do", "try"}
)


@dataclass
class PreprocessConfig:
    string_len_threshold: int = 32
    string_freq_threshold: int = 10
    placeholder_string: str = '"<STR>"'
    placeholder_number: str = "0"

    def validate(self) -> None:
        if self.string_len_threshold <= 0 or self.string_freq_threshold <= 0:
            raise ValueError("literal thresholds must be positive")
        for placeholder in (self.placeholder_string, self.placeholder_number):
            if len(tokenize(placeholder)) != 1:
                raise ValueError(f"placeholder {placeholder!r} is not a single token")


@dataclass
class CodeFile:
    path: str
    text: str
    project_id: str
    split: str = ""


def filter_file(path: str, text: str) -> bool:
    """True to keep the file.  Files whose name contains "test" are dropped."""
    name = os.path.basename(path).lower()
    return "test" not in name


def filter_method(method_name: str, body_line_count: int) -> bool:
    """True to keep the method."""
    if method_name in DROPPED_METHOD_NAMES:
        return False
    return body_line_count <= MAX_METHOD_LINES


def remove_non_english(text: str) -> str:
    """Delete every character outside ASCII letters/digits/punctuation,
    space, tab, and newline."""
    return "".join(ch for ch in text if ch in _KEEP_CHARS)


def _looks_like_signature(line: str) -> bool:
    stripped = line.strip()
    if not stripped:
        return False
    if _DEF_RE.match(stripped):
        return True
    first_word = re.match(r"[A-Za-z_]\w*", stripped)
    if first_word and first_word.group(0) in _CONTROL_WORDS:
        return False
    return bool(_SIGNATURE_RE.match(stripped))


def strip_comments(text: str) -> str:
    """Remove comments except those documenting a method.

    Kept: comment lines (line or block) whose next code line starts a
    method/function signature, and the first comment directly inside a
    signature's body (the doc position).  Everything else goes; no
    non-comment byte is touched.
    """
    tokens = tokenize(text)
    lines = text.split("\n")

    def line_of(offset: int) -> int:
        return text.count("\n", 0, offset)

    keep: Dict[int, bool] = {}
    for idx, tok in enumerate(tokens):
        if tok.kind != lexer.COMMENT:
            continue
        if tok.text.startswith("/*") and not tok.text.endswith("*/"):
            log.warning("unterminated block comment at offset %d removed", tok.offset)
            keep[idx] = False
            continue
        keep[idx] = _precedes_signature(tokens, idx, lines, line_of) or _is_doc_position(
            tokens, idx, lines, line_of
        )

    out = []
    for idx, tok in enumerate(tokens):
        if tok.kind == lexer.COMMENT and not keep.get(idx, False):
            continue
        out.append(tok.text)
    return "".join(out)


def _precedes_signature(tokens, idx, lines, line_of) -> bool:
    # Only whole-line comments count as "before the definition": nothing but
    # whitespace may share the comment's starting line.
    tok = tokens[idx]
    for prev in reversed(tokens[:idx]):
        if prev.kind == lexer.NEWLINE:
            break
        if prev.kind != lexer.WHITESPACE:
            return False
    # Scan forward over whitespace/newlines/comments to the next code token.
    for nxt in tokens[idx + 1 :]:
        if nxt.kind in (lexer.WHITESPACE, lexer.NEWLINE, lexer.COMMENT):
            continue
        return _looks_like_signature(lines[line_of(nxt.offset)])
    return False


def _is_doc_position(tokens, idx, lines, line_of) -> bool:
    # First comment after the "{" that closes a signature line (or after the
    # ":" of a def line) is treated as the function's doc comment.
    for prev in reversed(tokens[:idx]):
        if prev.kind in (lexer.WHITESPACE, lexer.NEWLINE):
            continue
        if prev.kind == lexer.SYMBOL and prev.text in ("{", ":"):
            return _looks_like_signature(lines[line_of(prev.offset)])
        return False
    return False


def count_literals(texts: Iterable[str]) -> Counter:
    """Occurrence counts of string/number literal tokens."""
    counts: Counter = Counter()
    for text in texts:
        for tok in tokenize(text):
            if tok.kind in (lexer.STRING, lexer.NUMBER):
                counts[tok.text] += 1
    return counts


def replace_literals(text: str, cfg: PreprocessConfig, literal_counts: Counter) -> str:
    """Swap long, rare string/number literals for placeholders.

    A literal is replaced iff its character length exceeds
    ``string_len_threshold`` AND its training-split frequency is below
    ``string_freq_threshold``.
    """
    out = []
    for tok in tokenize(text):
        if tok.kind in (lexer.STRING, lexer.NUMBER):
            if (
                len(tok.text) > cfg.string_len_threshold
                and literal_counts.get(tok.text, 0) < cfg.string_freq_threshold
            ):
                out.append(
                    cfg.placeholder_string
                    if tok.kind == lexer.STRING
                    else cfg.placeholder_number
                )
                continue
        out.append(tok.text)
    return "".join(out)


def excise_filtered_methods(text: str) -> str:
    """Remove bodies of methods rejected by filter_method (opt-in path)."""
    lines = text.split("\n")
    offsets = []
    pos = 0
    for ln in lines:
        offsets.append(pos)
        pos += len(ln) + 1
    spans: List[Tuple[int, int]] = []
    for lineno, line in enumerate(lines):
        if not _looks_like_signature(line):
            continue
        m = re.search(r"\b([A-Za-z_]\w*)\s*\(", line)
        if not m:
            continue
        name = m.group(1)
        span = _method_span(text, offsets[lineno])
        if span is None:
            continue
        start, end = span
        line_count = text.count("\n", start, end) + 1
        if not filter_method(name, line_count):
            spans.append((start, end))
    if not spans:
        return text
    spans.sort()
    out = []
    cursor = 0
    for start, end in spans:
        if start < cursor:
            continue
        out.append(text[cursor:start])
        cursor = end
    out.append(text[cursor:])
    return "".join(out)


def _method_span(text: str, line_start: int) -> Tuple[int, int] | None:
    open_idx = text.find("{", line_start)
    newline_idx = text.find("\n", line_start)
    if open_idx < 0 or (0 <= newline_idx < open_idx):
        return None
    depth = 0
    for i, tok in enumerate(tokenize(text[open_idx:])):
        if tok.kind != lexer.SYMBOL:
            continue
        if tok.text == "{":
            depth += 1
        elif tok.text == "}":
            depth -= 1
            if depth == 0:
                return line_start, open_idx + tok.end
    return None


def split_corpus(
    files: List[CodeFile], ratios: Sequence[float], seed: int
) -> List[CodeFile]:
    """Assign train/simulation/test splits, stratified by project.

    Global split sizes are exact (largest remainder); files are dealt to
    the splits in a per-project round-robin order shuffled by ``seed``, so
    every project contributes proportionally and the result is
    deterministic.
    """
    if not files:
        raise ValueError("empty corpus")
    if abs(sum(ratios) - 1.0) > 1e-9 or len(ratios) != 3:
        raise ValueError("ratios must be three fractions summing to 1")
    n = len(files)
    targets = _largest_remainder(n, ratios)

    by_project: Dict[str, List[CodeFile]] = {}
    for f in files:
        by_project.setdefault(f.project_id, []).append(f)
    ordered: List[CodeFile] = []
    project_lists = []
    for project in sorted(by_project):
        bucket = sorted(by_project[project], key=lambda f: f.path)
        random.Random(f"{seed}:{project}").shuffle(bucket)
        project_lists.append(bucket)
    while any(project_lists):
        for bucket in project_lists:
            if bucket:
                ordered.append(bucket.pop(0))

    names = ("train", "simulation", "test")
    i = 0
    for name, count in zip(names, targets):
        for f in ordered[i : i + count]:
            f.split = name
        i += count
    return files


def _largest_remainder(n: int, ratios: Sequence[float]) -> List[int]:
    raw = [n * r for r in ratios]
    counts = [int(x) for x in raw]
    short = n - sum(counts)
    order = sorted(range(len(ratios)), key=lambda i: (-(raw[i] - counts[i]), i))
    for i in order[:short]:
        counts[i] += 1
    return counts


@dataclass
class CorpusManifest:
    files: List[dict] = field(default_factory=list)
    seed: int = 0
    method_filtering: str = "off"

    def to_json(self) -> str:
        return json.dumps(
            {
                "seed": self.seed,
                "method_filtering": self.method_filtering,
                "files": self.files,
            },
            indent=2,
            sort_keys=True,
        )


def ingest(
    corpus_dir: str,
    ratios: Sequence[float],
    seed: int,
    cfg: PreprocessConfig | None = None,
    method_filtering: bool = False,
) -> Tuple[List[CodeFile], CorpusManifest]:
    """Walk a directory tree, filter, preprocess, and split.

    The first path component under ``corpus_dir`` is the project id.
    """
    cfg = cfg or PreprocessConfig()
    cfg.validate()
    files: List[CodeFile] = []
    for root, dirs, names in os.walk(corpus_dir):
        dirs.sort()
        for name in sorted(names):
            full = os.path.join(root, name)
            rel = os.path.relpath(full, corpus_dir)
            try:
                with open(full, "r", encoding="utf-8", errors="strict") as fh:
                    text = fh.read()
            except (OSError, UnicodeDecodeError) as exc:
                log.warning("skipping unreadable file %s: %s", rel, exc)
                continue
            if not filter_file(rel, text):
                continue
            parts = rel.replace(os.sep, "/").split("/")
            project = parts[0] if len(parts) > 1 else "root"
            files.append(CodeFile(path=rel.replace(os.sep, "/"), text=text, project_id=project))
    if not files:
        raise ValueError(f"no usable files under {corpus_dir}")

    split_corpus(files, ratios, seed)

    # Stage 1 everywhere, then literal counts from the train split only.
    for f in files:
        f.text = strip_comments(remove_non_english(f.text))
        if method_filtering:
            f.text = excise_filtered_methods(f.text)
    counts = count_literals(f.text for f in files if f.split == "train")
    for f in files:
        f.text = replace_literals(f.text, cfg, counts)

    manifest = CorpusManifest(
        seed=seed, method_filtering="on" if method_filtering else "off"
    )
    for f in sorted(files, key=lambda f: f.path):
        manifest.files.append(
            {
                "path": f.path,
                "project_id": f.project_id,
                "split": f.split,
                "byte_length": len(f.text),
                "sha256": hashlib.sha256(f.text.encode("ascii")).hexdigest(),
            }
        )
    return files, manifest


def preprocess_text(text: str, cfg: PreprocessConfig, counts: Counter) -> str:
    """Single-file version of the full pipeline (counts supplied)."""
    return replace_literals(strip_comments(remove_non_english(text)), cfg, counts)
