"""Retrainable byte-pair-encoding codec over lexer tokens.

Merges are word-internal: the training corpus is the multiset of lexer
token texts, and encoding a text means lexing it and encoding each token.
Because lexing is lossless and every printable-ASCII character (plus tab
and newline) is a base symbol, decode(encode(x)) == x for any preprocessed
text, with no end-of-word marker needed.
"""

from __future__ import annotations

import string
from collections import Counter, defaultdict
from typing import Dict, Iterable, List, Sequence, Tuple

from .lexer import tokenize

# Closed base alphabet: one symbol per printable ASCII char, tab, newline.
BASE_ALPHABET: Tuple[str, ...] = tuple(
    sorted(set(string.printable) - {"\r", "\x0b", "\x0c"})
)

Pair = Tuple[str, str]


class BpeCodec:
    """Trained merge list + vocabulary, with encode/decode."""

    def __init__(self, merges: Sequence[Pair]):
        self.merges: List[Pair] = list(merges)
        self.vocab: Dict[str, int] = {}
        for sym in BASE_ALPHABET:
            self.vocab[sym] = len(self.vocab)
        for left, right in self.merges:
            if left not in self.vocab or right not in self.vocab:
                raise ValueError(f"merge ({left!r}, {right!r}) references unknown symbol")
            self.vocab.setdefault(left + right, len(self.vocab))
        self._ranks: Dict[Pair, int] = {}
        for rank, pair in enumerate(self.merges):
            self._ranks.setdefault(pair, rank)
        self._id_to_symbol = {i: s for s, i in self.vocab.items()}
        self._word_cache: Dict[str, Tuple[int, ...]] = {}

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    def encode_word(self, word: str) -> Tuple[int, ...]:
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        syms = list(word)
        for ch in syms:
            if ch not in self.vocab:
                raise ValueError(f"character {ch!r} outside the base alphabet")
        while len(syms) > 1:
            best_rank = None
            best_i = -1
            for i in range(len(syms) - 1):
                rank = self._ranks.get((syms[i], syms[i + 1]))
                if rank is not None and (best_rank is None or rank < best_rank):
                    best_rank, best_i = rank, i
            if best_rank is None:
                break
            syms[best_i : best_i + 2] = [syms[best_i] + syms[best_i + 1]]
        ids = tuple(self.vocab[s] for s in syms)
        if len(self._word_cache) < 200_000:
            self._word_cache[word] = ids
        return ids

    def encode(self, text: str) -> List[int]:
        ids: List[int] = []
        for token in tokenize(text):
            ids.extend(self.encode_word(token.text))
        return ids

    def decode(self, ids: Iterable[int]) -> str:
        out = []
        for i in ids:
            sym = self._id_to_symbol.get(i)
            if sym is None:
                raise ValueError(f"token id {i} out of vocabulary")
            out.append(sym)
        return "".join(out)

    def save(self, path: str) -> None:
        lines = [str(self.vocab_size)]
        for left, right in self.merges:
            lines.append(f"{_escape(left)} {_escape(right)}")
        with open(path, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path: str) -> "BpeCodec":
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
        if not lines:
            raise ValueError(f"{path}: empty codec file")
        declared = int(lines[0])
        merges = []
        for line in lines[1:]:
            if not line:
                continue
            left, sep, right = line.partition(" ")
            if not sep:
                raise ValueError(f"{path}: malformed merge line {line!r}")
            merges.append((_unescape(left), _unescape(right)))
        codec = cls(merges)
        if codec.vocab_size != declared:
            raise ValueError(
                f"{path}: header says {declared} symbols, rebuilt {codec.vocab_size}"
            )
        return codec


def train(texts: Iterable[str], vocab_size: int) -> BpeCodec:
    """Learn merges by repeatedly fusing the most frequent adjacent pair.

    Deterministic: ties are broken by lexicographic order of the pair.
    Training stops when the vocabulary reaches ``vocab_size`` or no
    adjacent pair is left, so the final size is min(requested, achievable).
    """
    if vocab_size < len(BASE_ALPHABET):
        raise ValueError(
            f"vocab_size {vocab_size} below base alphabet size {len(BASE_ALPHABET)}"
        )
    word_counts: Counter = Counter()
    any_text = False
    for text in texts:
        any_text = True
        for token in tokenize(text):
            word_counts[token.text] += 1
    if not any_text:
        raise ValueError("empty training corpus")

    word_syms: Dict[str, List[str]] = {w: list(w) for w in word_counts}
    pair_counts: Counter = Counter()
    pair_words: defaultdict = defaultdict(set)
    for word, syms in word_syms.items():
        freq = word_counts[word]
        for pair in zip(syms, syms[1:]):
            pair_counts[pair] += freq
            pair_words[pair].add(word)

    vocab = set(BASE_ALPHABET)
    merges: List[Pair] = []
    while len(vocab) < vocab_size and pair_counts:
        best = min(pair_counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]
        merges.append(best)
        vocab.add(best[0] + best[1])
        merged = best[0] + best[1]
        for word in list(pair_words[best]):
            syms = word_syms[word]
            freq = word_counts[word]
            for pair in zip(syms, syms[1:]):
                pair_counts[pair] -= freq
                if pair_counts[pair] <= 0:
                    del pair_counts[pair]
                pair_words[pair].discard(word)
            i = 0
            while i < len(syms) - 1:
                if syms[i] == best[0] and syms[i + 1] == best[1]:
                    syms[i : i + 2] = [merged]
                else:
                    i += 1
            for pair in zip(syms, syms[1:]):
                pair_counts[pair] += freq
                pair_words[pair].add(word)
    return BpeCodec(merges)


def _escape(sym: str) -> str:
    return (
        sym.replace("\\", "\\\\")
        .replace(" ", "\\s")
        .replace("\t", "\\t")
        .replace("\n", "\\n")
    )


def _unescape(sym: str) -> str:
    out = []
    i = 0
    while i < len(sym):
        if sym[i] == "\\" and i + 1 < len(sym):
            nxt = sym[i + 1]
            out.append({"\\": "\\", "s": " ", "t": "\t", "n": "\n"}.get(nxt, nxt))
            i += 2
        else:
            out.append(sym[i])
            i += 1
    return "".join(out)
