import hashlib
import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codefusion import bpe


def test_first_merge_on_repeated_pair():
    codec = bpe.train(["abab abab"], len(bpe.BASE_ALPHABET) + 1)
    assert codec.merges == [("a", "b")]


def test_word_encodes_to_two_ids_after_merge():
    codec = bpe.train(["abab abab"], len(bpe.BASE_ALPHABET) + 1)
    assert len(codec.encode_word("abab")) == 2


def test_vocab_size_at_base_means_no_merges():
    codec = bpe.train(["abab abab"], len(bpe.BASE_ALPHABET))
    assert codec.merges == []
    assert codec.vocab_size == len(bpe.BASE_ALPHABET)


def test_below_base_size_rejected():
    with pytest.raises(ValueError):
        bpe.train(["x"], len(bpe.BASE_ALPHABET) - 1)


def test_empty_corpus_rejected():
    with pytest.raises(ValueError):
        bpe.train([], 4096)


def test_training_is_deterministic():
    corpus = ["public int getCount() { return count; }\n" * 3, "count += 1;\n"]
    a = bpe.train(corpus, 300)
    b = bpe.train(corpus, 300)
    assert a.merges == b.merges
    assert a.vocab == b.vocab


def test_vocab_is_min_of_requested_and_achievable():
    corpus = ["ab ab ab"]
    small = bpe.train(corpus, len(bpe.BASE_ALPHABET) + 1)
    assert small.vocab_size == len(bpe.BASE_ALPHABET) + 1
    # requesting far more than the corpus can yield stops at exhaustion
    big = bpe.train(corpus, 10_000)
    assert big.vocab_size < 10_000
    exhausted = bpe.train(corpus, big.vocab_size)
    assert exhausted.merges == big.merges


def test_encode_empty():
    codec = bpe.train(["ab"], len(bpe.BASE_ALPHABET))
    assert codec.encode("") == []


def test_decode_unknown_id_raises():
    codec = bpe.train(["ab"], len(bpe.BASE_ALPHABET))
    with pytest.raises(ValueError):
        codec.decode([codec.vocab_size + 5])


@settings(max_examples=80)
@given(st.text(alphabet=string.printable.replace("\r", "").replace("\x0b", "").replace("\x0c", ""), max_size=120))
def test_roundtrip_identity(text):
    codec = bpe.train(["int value = 0;\nreturn value;\n"], 160)
    assert codec.decode(codec.encode(text)) == text


def test_save_load_roundtrip(tmp_path):
    codec = bpe.train(['s = "a b\tc";\n\n  indent()   \n' * 4, "a b a b"], 240)
    path = tmp_path / "codec.txt"
    codec.save(str(path))
    loaded = bpe.BpeCodec.load(str(path))
    assert loaded.merges == codec.merges
    assert loaded.vocab == codec.vocab
    sample = 's = "a b\tc";\n'
    assert loaded.encode(sample) == codec.encode(sample)


def test_merge_symbols_with_whitespace_survive_serialization(tmp_path):
    # four-space indents force merges whose symbols contain raw spaces
    codec = bpe.train(["    indented\n" * 6], len(bpe.BASE_ALPHABET) + 8)
    assert any(" " in left + right for left, right in codec.merges)
    path = tmp_path / "codec.txt"
    codec.save(str(path))
    assert bpe.BpeCodec.load(str(path)).merges == codec.merges


def test_fixed_corpus_digest_stable():
    corpus = [
        "public void addRecord(Record record) {\n"
        "    recordItems.append(record);\n"
        "    recordCount = recordCount + 1;\n"
        "}\n"
    ]
    codec = bpe.train(corpus, len(bpe.BASE_ALPHABET) + 32)
    digest = hashlib.sha256(
        "\n".join(f"{l} {r}" for l, r in codec.merges).encode()
    ).hexdigest()
    assert digest == "53b59826a89f38c24bdea5a23e2b044fd34f258cb56436d27fe4353118aa7360"
