"""Global Frequency strategy: a character trie over corpus sub-tokens.

Each stored sub-token carries three score dimensions: total occurrences,
number of distinct files, and number of distinct projects.  Sub-tokens
that appear in a single project and are shorter than five characters are
filtered out at build time (configurable to an OR rule).
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from typing import Dict, Iterable, List, Tuple

from .. import lexer
from .base import Candidate, QueryContext, Session, Strategy

MIN_KEPT_LENGTH = 5


class _Node:
    __slots__ = ("children", "payload")

    def __init__(self) -> None:
        self.children: Dict[str, _Node] = {}
        self.payload: Tuple[int, int, int] | None = None


class SubtokenTrie:
    def __init__(self) -> None:
        self.root = _Node()
        self.size = 0

    def insert(self, word: str, count: int, file_count: int, project_count: int) -> None:
        node = self.root
        for ch in word:
            node = node.children.setdefault(ch, _Node())
        if node.payload is None:
            self.size += 1
        node.payload = (count, file_count, project_count)

    def lookup(self, prefix: str) -> List[Tuple[str, Tuple[int, int, int]]]:
        """All stored words starting with ``prefix`` (prefix itself included)."""
        node = self.root
        for ch in prefix:
            node = node.children.get(ch)
            if node is None:
                return []
        found: List[Tuple[str, Tuple[int, int, int]]] = []
        stack = [(prefix, node)]
        while stack:
            word, cur = stack.pop()
            if cur.payload is not None:
                found.append((word, cur.payload))
            for ch in sorted(cur.children, reverse=True):
                stack.append((word + ch, cur.children[ch]))
        return found

    def words(self) -> List[Tuple[str, Tuple[int, int, int]]]:
        return self.lookup("")

    def save(self, path: str) -> None:
        payload = {w: list(p) for w, p in sorted(self.words())}
        with open(path, "w", encoding="ascii") as fh:
            json.dump({"words": payload}, fh, sort_keys=True)

    @classmethod
    def load(cls, path: str) -> "SubtokenTrie":
        with open(path, "r", encoding="ascii") as fh:
            data = json.load(fh)
        trie = cls()
        for word, (c, f, p) in data["words"].items():
            trie.insert(word, c, f, p)
        return trie


def build_subtoken_trie(
    files: Iterable[Tuple[str, str]], filter_rule: str = "and"
) -> SubtokenTrie:
    """Build the trie from (project_id, text) pairs.

    filter_rule "and" drops a sub-token only when it appears in one project
    AND is shorter than five characters; "or" drops it when either holds.
    """
    counts: Counter = Counter()
    file_sets: defaultdict = defaultdict(set)
    project_sets: defaultdict = defaultdict(set)
    for file_idx, (project, text) in enumerate(files):
        for tok in lexer.tokenize(text):
            if tok.kind != lexer.IDENTIFIER:
                continue
            for sub in lexer.subtokens(tok.text):
                counts[sub] += 1
                file_sets[sub].add(file_idx)
                project_sets[sub].add(project)
    trie = SubtokenTrie()
    for word, count in counts.items():
        single_project = len(project_sets[word]) == 1
        short = len(word) < MIN_KEPT_LENGTH
        dropped = (single_project and short) if filter_rule == "and" else (
            single_project or short
        )
        if dropped:
            continue
        trie.insert(word, count, len(file_sets[word]), len(project_sets[word]))
    return trie


def query_trie(trie: SubtokenTrie, prefix: str, k: int) -> List[Candidate]:
    """Top-k completions of ``prefix``: descending total count, ties by text."""
    if not prefix:
        return []
    matches = [
        (word, payload)
        for word, payload in trie.lookup(prefix)
        if len(word) > len(prefix)
    ]
    matches.sort(key=lambda wp: (-wp[1][0], wp[0]))
    out = []
    for word, (count, file_count, project_count) in matches[:k]:
        out.append(
            Candidate(
                text=word[len(prefix) :],
                scores={
                    "global_count": float(count),
                    "global_file_count": float(file_count),
                    "global_project_count": float(project_count),
                },
                strategies=("global",),
            )
        )
    return out


class GlobalFrequencyStrategy(Strategy):
    strategy_id = "global"
    primary_dimension = "global_count"
    dimensions = ("global_count", "global_file_count", "global_project_count")

    def __init__(self, trie: SubtokenTrie, cap: int = 5):
        self.trie = trie
        self.cap = cap

    def query(self, ctx: QueryContext, session: Session) -> List[Candidate]:
        if not ctx.sub_prefix:
            return []
        return query_trie(self.trie, ctx.sub_prefix, self.cap)
