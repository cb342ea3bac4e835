import itertools
import json

import numpy as np
import pytest

from subwords import (
    compose,
    eval_signature,
    iota,
    iota_from_signature,
    signature_of_word,
    zeta,
    zeta_from_signature,
)
from subwords.core import letter_mask as M
from subwords.signature import (
    Entry,
    Signature,
    SignatureFormatError,
    dumps,
    from_json,
    letter_signature,
    loads,
    to_json,
)
from subwords.testkit import gen_word, summary_oracle


def test_signature_examples():
    sig = signature_of_word(b"aabac")
    assert sig.e == b"abc"
    assert sig.entries == (Entry(1, 0), Entry(1, M(b"ac")), Entry(2, 0))
    assert signature_of_word(b"a") == Signature(b"a", (Entry(1, 0),))
    assert signature_of_word(b"cb") == Signature(b"cb", (Entry(1, 0), Entry(1, M(b"b"))))


def test_empty_word_has_no_signature():
    with pytest.raises(ValueError):
        signature_of_word(b"")


def test_letter_signature():
    assert letter_signature(b"q") == signature_of_word(b"q")
    assert letter_signature(ord("q")) == signature_of_word(b"q")


def test_eval_cases():
    sig = signature_of_word(b"aabac")
    assert eval_signature(sig, M(b"c")) == Entry(1, M(b"ac"))  # c.1
    assert eval_signature(sig, M(b"d")) == Entry(1, 0)  # c.2
    assert eval_signature(sig, M(b"bcd")) == Entry(1, M(b"abc"))  # c.3
    assert eval_signature(sig, M(b"abc")) is None
    assert eval_signature(sig, M(b"abcd")) is None


@pytest.mark.parametrize("u", [b"aabac", b"cb", b"abcabca", b"aaaa", b"dcbadcb", b"abacabad"])
def test_eval_matches_direct_summary(u):
    sig = signature_of_word(u)
    universe = b"abcde"
    for r in range(len(universe) + 1):
        for x in itertools.combinations(universe, r):
            x = bytes(x)
            got = eval_signature(sig, M(x))
            if set(u) <= set(x):
                assert got is None
            else:
                count, rest = summary_oracle(x, u)
                assert got == Entry(count, M(rest)), x


def test_compose_examples():
    sig = compose(signature_of_word(b"aabac"), signature_of_word(b"cb"))
    assert sig == Signature(b"abc", (Entry(1, M(b"bc")), Entry(2, 0), Entry(2, M(b"bc"))))
    assert sig == signature_of_word(b"aabaccb")

    assert compose(signature_of_word(b"a"), signature_of_word(b"a")) == Signature(
        b"a", (Entry(2, 0),)
    )

    sig = compose(signature_of_word(b"ab"), signature_of_word(b"cd"))
    assert sig.e == b"abcd"
    assert sig.entries[1] == Entry(1, M(b"d"))
    assert sig == signature_of_word(b"abcd")


def test_compose_is_associative():
    rng = np.random.default_rng(2)
    for _ in range(300):
        parts = [gen_word(rng.integers(1 << 62), 30, 4).text or b"a" for _ in range(3)]
        su, sv, sw = (signature_of_word(p) for p in parts)
        left = compose(compose(su, sv), sw)
        right = compose(su, compose(sv, sw))
        assert left == right == signature_of_word(b"".join(parts))


def test_indexes_from_signature_examples():
    assert iota_from_signature(signature_of_word(b"aabac")) == 1
    assert iota_from_signature(signature_of_word(b"a")) == 1
    assert iota_from_signature(signature_of_word(b"aabaccb")) == 1
    assert zeta_from_signature(signature_of_word(b"aabaccb")) == 2
    assert zeta_from_signature(signature_of_word(b"abcabc")) == 2
    assert zeta_from_signature(signature_of_word(b"aabb")) == 2
    assert signature_of_word(b"aabb").entries[1] == Entry(2, M(b"b"))


def test_indexes_from_signature_random():
    rng = np.random.default_rng(4)
    for _ in range(1000):
        u = gen_word(rng.integers(1 << 62), 40, int(rng.integers(1, 6)))
        if len(u) == 0:
            continue
        # signatures use A(u), not the generator's alphabet
        text = u.text
        sig = signature_of_word(text)
        assert iota_from_signature(sig) == iota(text)
        assert zeta_from_signature(sig) == zeta(text)


def test_signature_invariants():
    rng = np.random.default_rng(6)
    for _ in range(300):
        text = gen_word(rng.integers(1 << 62), 50, 5).text or b"e"
        sig = signature_of_word(text)
        full = M(text)
        assert sig.e == bytes(dict.fromkeys(text))
        for entry in sig.entries:
            assert entry.count >= 1
            assert entry.rest & ~full == 0 and entry.rest != full


def test_json_round_trip():
    sig = signature_of_word(b"aabaccb")
    obj = to_json(sig)
    assert obj == {
        "e": "abc",
        "entries": [
            {"suffix": "", "count": "1", "rest": "bc"},
            {"suffix": "c", "count": "2", "rest": ""},
            {"suffix": "bc", "count": "2", "rest": "bc"},
        ],
    }
    assert from_json(obj) == sig
    assert loads(dumps(sig)) == sig


def test_json_big_counts():
    sig = Signature(b"ab", (Entry(2**70, M(b"b")), Entry(2**70 + 1, M(b"b"))))
    text = dumps(sig)
    assert str(2**70) in json.loads(text)["entries"][0]["count"]
    assert loads(text) == sig


@pytest.mark.parametrize(
    "bad",
    [
        "not json",
        "[]",
        '{"e": "ab"}',
        '{"e": "ab", "entries": [{"suffix": "", "count": "1", "rest": ""}]}',
        '{"e": "ab", "entries": [{"suffix": "", "count": 1, "rest": ""},'
        ' {"suffix": "b", "count": "1", "rest": ""}]}',
        '{"e": "ab", "entries": [{"suffix": "", "count": "1", "rest": "ab"},'
        ' {"suffix": "b", "count": "1", "rest": ""}]}',
        '{"e": "ab", "entries": [{"suffix": "", "count": "0", "rest": ""},'
        ' {"suffix": "b", "count": "1", "rest": ""}]}',
        '{"e": "ab", "entries": [{"suffix": "", "count": "1", "rest": ""},'
        ' {"suffix": "a", "count": "1", "rest": ""}]}',
        '{"e": "aa", "entries": []}',
    ],
)
def test_json_rejects_malformed(bad):
    with pytest.raises(SignatureFormatError):
        loads(bad)
