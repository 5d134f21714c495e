import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codefusion import lexer
from codefusion.lexer import identifier_prefix, subtoken_prefix, subtokens, tokenize


def texts_of(src):
    return [t.text for t in tokenize(src)]


def test_simple_statement():
    assert texts_of("int x = 0;") == ["int", " ", "x", " ", "=", " ", "0", ";"]


def test_call_chain():
    assert texts_of("a.b()") == ["a", ".", "b", "(", ")"]


def test_string_with_escaped_quote():
    tokens = tokenize('"x\\"y"')
    assert len(tokens) == 1
    assert tokens[0].kind == lexer.STRING
    assert tokens[0].text == '"x\\"y"'


def test_comment_kinds():
    tokens = tokenize("a // line\n/* block */ #hash\n")
    kinds = [(t.text, t.kind) for t in tokens if t.kind == lexer.COMMENT]
    assert kinds == [
        ("// line", lexer.COMMENT),
        ("/* block */", lexer.COMMENT),
        ("#hash", lexer.COMMENT),
    ]


def test_unterminated_block_comment_swallows_rest():
    tokens = tokenize("x /* never closed\nmore")
    assert tokens[-1].kind == lexer.COMMENT
    assert tokens[-1].text == "/* never closed\nmore"


def test_keyword_vs_identifier():
    tokens = {t.text: t.kind for t in tokenize("return retval")}
    assert tokens["return"] == lexer.KEYWORD
    assert tokens["retval"] == lexer.IDENTIFIER


def test_numbers():
    assert texts_of("3.14 0x1F 2e10 7L") == [
        "3.14", " ", "0x1F", " ", "2e10", " ", "7L",
    ]


def test_offsets_cover_input():
    src = 'void f() { s = "a b"; } // done\n'
    pos = 0
    for tok in tokenize(src):
        assert tok.offset == pos
        pos = tok.end
    assert pos == len(src)


@settings(max_examples=120)
@given(st.text(alphabet=string.printable, max_size=160))
def test_lossless_partition(src):
    assert "".join(texts_of(src)) == src


@pytest.mark.parametrize(
    "ident,expected",
    [
        ("camelCase", ["camel", "Case"]),
        ("snake_case", ["snake", "case"]),
        ("AclEntry", ["Acl", "Entry"]),
        ("HTTPServer", ["HTTP", "Server"]),
        ("getX2Value", ["get", "X2", "Value"]),
        ("_leading", ["leading"]),
        ("ALLCAPS", ["ALLCAPS"]),
        ("x", ["x"]),
    ],
)
def test_subtokens(ident, expected):
    assert subtokens(ident) == expected


@settings(max_examples=80)
@given(st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,24}", fullmatch=True))
def test_subtoken_concat_preserves_letters(ident):
    assert "".join(subtokens(ident)) == ident.replace("_", "")


def test_identifier_prefix():
    assert identifier_prefix("foo.ba") == "ba"
    assert identifier_prefix("x = ") == ""
    assert identifier_prefix("count12") == "count12"
    assert identifier_prefix("a 12") == ""  # numbers are not identifier prefixes
    assert identifier_prefix("") == ""


def test_subtoken_prefix():
    assert subtoken_prefix("int getFo") == "Fo"
    assert subtoken_prefix("int get") == "get"
    assert subtoken_prefix("int get_") == ""
    assert subtoken_prefix("x + ") == ""
