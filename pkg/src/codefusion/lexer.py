"""Lossless source tokenizer and identifier sub-token splitting.

The tokenizer partitions text exactly: concatenating the token texts in
order reproduces the input byte for byte.  That property is what lets the
preprocessing steps edit comments/literals without disturbing code, and
what lets the simulator reason about "tokens completed before the cursor".
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import List

IDENTIFIER = "identifier"
KEYWORD = "keyword"
NUMBER = "number"
STRING = "string"
SYMBOL = "symbol"
COMMENT = "comment"
WHITESPACE = "whitespace"
NEWLINE = "newline"

WORD_KINDS = (IDENTIFIER, KEYWORD)

# Java keyword set; the corpus is Java-flavoured but nothing downstream
# depends on keywords being exhaustive.
KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while var record""".split()
)

_IDENT_START = frozenset(string.ascii_letters + "_")
_IDENT_CHARS = frozenset(string.ascii_letters + string.digits + "_")
_DIGITS = frozenset(string.digits)
_HEX = frozenset(string.hexdigits)
_SPACE = frozenset(" \t\r\x0b\x0c")


@dataclass
class Token:
    text: str
    kind: str
    offset: int

    @property
    def end(self) -> int:
        return self.offset + len(self.text)

    @property
    def is_word(self) -> bool:
        return self.kind in WORD_KINDS


def tokenize(text: str) -> List[Token]:
    """Split ``text`` into a lossless token stream."""
    tokens: List[Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            tokens.append(Token("\n", NEWLINE, i))
            i += 1
        elif c in _SPACE:
            j = i + 1
            while j < n and text[j] in _SPACE:
                j += 1
            tokens.append(Token(text[i:j], WHITESPACE, i))
            i = j
        elif c == "/" and text.startswith("//", i):
            j = text.find("\n", i)
            j = n if j < 0 else j
            tokens.append(Token(text[i:j], COMMENT, i))
            i = j
        elif c == "/" and text.startswith("/*", i):
            j = text.find("*/", i + 2)
            j = n if j < 0 else j + 2  # unterminated: swallow to EOF
            tokens.append(Token(text[i:j], COMMENT, i))
            i = j
        elif c == "#":
            j = text.find("\n", i)
            j = n if j < 0 else j
            tokens.append(Token(text[i:j], COMMENT, i))
            i = j
        elif c in ("'", '"'):
            i = _scan_string(text, i, tokens)
        elif c in _DIGITS:
            i = _scan_number(text, i, tokens)
        elif c in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_CHARS:
                j += 1
            word = text[i:j]
            kind = KEYWORD if word in KEYWORDS else IDENTIFIER
            tokens.append(Token(word, kind, i))
            i = j
        else:
            tokens.append(Token(c, SYMBOL, i))
            i += 1
    return tokens


def _scan_string(text: str, i: int, tokens: List[Token]) -> int:
    quote = text[i]
    n = len(text)
    j = i + 1
    while j < n:
        c = text[j]
        if c == "\\" and j + 1 < n:
            j += 2
            continue
        if c == quote:
            j += 1
            break
        if c == "\n":  # unterminated string stops at end of line
            break
        j += 1
    tokens.append(Token(text[i:j], STRING, i))
    return j


def _scan_number(text: str, i: int, tokens: List[Token]) -> int:
    n = len(text)
    j = i + 1
    if text.startswith(("0x", "0X"), i):
        j = i + 2
        while j < n and text[j] in _HEX:
            j += 1
    else:
        while j < n and text[j] in _DIGITS:
            j += 1
        if j < n and text[j] == "." and j + 1 < n and text[j + 1] in _DIGITS:
            j += 1
            while j < n and text[j] in _DIGITS:
                j += 1
        if j < n and text[j] in "eE":
            k = j + 1
            if k < n and text[k] in "+-":
                k += 1
            if k < n and text[k] in _DIGITS:
                j = k + 1
                while j < n and text[j] in _DIGITS:
                    j += 1
    if j < n and text[j] in "lLfFdD":
        j += 1
    tokens.append(Token(text[i:j], NUMBER, i))
    return j


def subtokens(identifier: str) -> List[str]:
    """Split an identifier at underscores and camel-case boundaries.

    Underscores are dropped.  An uppercase run sticks together until a
    following lowercase letter starts a new segment: "HTTPServer" gives
    ["HTTP", "Server"], "AclEntry" gives ["Acl", "Entry"].
    """
    parts: List[str] = []
    for piece in identifier.split("_"):
        if not piece:
            continue
        start = 0
        for i in range(1, len(piece)):
            prev, cur = piece[i - 1], piece[i]
            if cur.isupper() and (prev.islower() or prev.isdigit()):
                parts.append(piece[start:i])
                start = i
            elif (
                cur.isupper()
                and prev.isupper()
                and i + 1 < len(piece)
                and piece[i + 1].islower()
            ):
                parts.append(piece[start:i])
                start = i
        parts.append(piece[start:])
    return parts


def identifier_prefix(prefix: str) -> str:
    """Trailing identifier fragment under the cursor, or "" if none.

    A fragment that starts with a digit is a number, not an identifier
    prefix, so it yields "".
    """
    i = len(prefix)
    while i > 0 and prefix[i - 1] in _IDENT_CHARS:
        i -= 1
    run = prefix[i:]
    if not run or run[0] in _DIGITS:
        return ""
    return run


def subtoken_prefix(prefix: str) -> str:
    """Trailing sub-token fragment of the identifier under the cursor."""
    ident = identifier_prefix(prefix)
    if not ident:
        return ""
    parts = subtokens(ident)
    if not parts:
        return ""
    # If the identifier ends with an underscore the next sub-token has not
    # started yet.
    if ident.endswith("_"):
        return ""
    return parts[-1]
