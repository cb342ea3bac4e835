"""Subword universality signatures.

A signature summarises a word ``u`` by ``e(u)`` (its letters in order of
first occurrence) and, for every strict suffix ``x`` of ``e(u)``, the pair
``(arch count, rest letters)`` of the arch factorization of ``x u`` over
``A(x u)``. Signatures compose: ``compose(sig(u), sig(v)) == sig(u v)``,
which is what makes indexes of compressed words computable.

Letter sets are int bitmasks keyed by byte value (see
:func:`subwords.core.letter_mask`) so signatures of words over different
alphabets can be combined directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from .core import (
    Alphabet,
    WordLike,
    _as_bytes,
    as_word,
    first_occurrence_order,
    letter_mask,
    mask_letters,
)


class SignatureFormatError(ValueError):
    """Malformed serialized signature."""


class Entry(NamedTuple):
    count: int
    rest: int


@dataclass(frozen=True)
class Signature:
    """``e`` plus ``entries[k]`` for the suffix of ``e`` of length ``k``."""

    e: bytes
    entries: tuple

    @property
    def alphabet_mask(self) -> int:
        return letter_mask(self.e)

    def suffix(self, k: int) -> bytes:
        return self.e[len(self.e) - k :]

    def __len__(self):
        return len(self.entries)


def signature_of_word(u: WordLike) -> Signature:
    """Signature computed directly by arch-factorizing ``x u`` for each suffix ``x``."""
    if isinstance(u, (bytes, bytearray, str)) and not _as_bytes(u):
        raise ValueError("the empty word has no signature")
    u = as_word(u)
    if len(u) == 0:
        raise ValueError("the empty word has no signature")
    # reference alphabet is A(u), which may be smaller than u.alphabet
    u = u.over(Alphabet(first_occurrence_order(u).text))
    e = u.alphabet.symbols
    nsym = len(e)
    entries = []
    for k in range(nsym):
        prefix = u.letters[:0] if k == 0 else np.arange(nsym - k, nsym, dtype=np.uint8)
        xu = np.concatenate([prefix, u.letters])
        ends = _kernels.arch_ends(xu, nsym)
        rest_start = int(ends[-1]) if ends.shape[0] else 0
        rest_syms = np.unique(xu[rest_start:]).tolist()
        entries.append(Entry(int(ends.shape[0]), letter_mask(e[s] for s in rest_syms)))
    return Signature(e, tuple(entries))


def letter_signature(letter) -> Signature:
    """Signature of a one-letter word: a single arch, empty rest."""
    letter = _as_bytes(letter) if not isinstance(letter, int) else bytes([letter])
    if len(letter) != 1:
        raise ValueError(f"expected a single letter, got {letter!r}")
    return Signature(letter, (Entry(1, 0),))


def eval_signature(sig: Signature, letters: int) -> Optional[Entry]:
    """``S_u(x)`` for any ``x`` whose letter set is the mask ``letters``.

    Returns ``None`` when every letter of ``u`` already occurs in ``x``.
    """
    au = sig.alphabet_mask
    if au & ~letters == 0:
        return None
    k = 0
    for b in reversed(sig.e):
        if not letters >> b & 1:
            break
        k += 1
    n_y, b_y = sig.entries[k]
    if letters & ~au == 0 or n_y == 1:
        return sig.entries[k]
    return Entry(1, au)


def compose(sig_u: Signature, sig_v: Signature) -> Signature:
    """Signature of ``u v`` from the signatures of ``u`` and ``v``."""
    au = sig_u.alphabet_mask
    av = sig_v.alphabet_mask
    e = sig_u.e + bytes(b for b in sig_v.e if not au >> b & 1)
    entries = []
    x_mask = 0
    for k in range(len(e)):
        if k:
            x_mask |= 1 << e[len(e) - k]
        if av & ~(x_mask | au):
            entries.append(eval_signature(sig_v, x_mask | au))
            continue
        n, rest = eval_signature(sig_u, x_mask)
        if av | rest != x_mask | au:
            entries.append(Entry(n, av | rest))
            continue
        tail = eval_signature(sig_v, rest)
        if tail is None:
            # a rest is never rich, so v always has a letter outside it
            raise AssertionError("rest covers A(v); signature invariant broken")
        entries.append(Entry(n + tail.count, tail.rest))
    return Signature(e, tuple(entries))


def iota_from_signature(sig: Signature) -> int:
    return sig.entries[0].count


def zeta_from_signature(sig: Signature) -> int:
    m, rest = sig.entries[0]
    if rest == 0:
        return m
    x_mask = 0
    for k in range(1, len(sig.e)):
        x_mask |= 1 << sig.e[len(sig.e) - k]
        n_x, b_x = sig.entries[k]
        if n_x == m + 1 and x_mask & ~b_x == 0:
            return m + 1
    return m


def _text(b: bytes) -> str:
    return b.decode("latin-1")


def to_json(sig: Signature) -> dict:
    return {
        "e": _text(sig.e),
        "entries": [
            {
                "suffix": _text(sig.suffix(k)),
                "count": str(entry.count),
                "rest": _text(mask_letters(entry.rest)),
            }
            for k, entry in enumerate(sig.entries)
        ],
    }


def from_json(obj) -> Signature:
    """Parse and validate the dict produced by :func:`to_json`."""
    try:
        e = obj["e"].encode("latin-1")
        raw = obj["entries"]
        if not isinstance(raw, list):
            raise TypeError("entries must be a list")
        entries = []
        for k, item in enumerate(raw):
            if item["suffix"].encode("latin-1") != e[len(e) - k :]:
                raise SignatureFormatError(
                    f"entry {k}: suffix {item['suffix']!r} does not match e"
                )
            count = item["count"]
            if not isinstance(count, str) or not count.isdigit():
                raise SignatureFormatError(f"entry {k}: count must be a decimal string")
            entries.append(Entry(int(count), letter_mask(item["rest"].encode("latin-1"))))
    except SignatureFormatError:
        raise
    except (KeyError, TypeError, AttributeError, UnicodeEncodeError) as exc:
        raise SignatureFormatError(f"malformed signature: {exc}") from exc
    if not e or len(set(e)) != len(e):
        raise SignatureFormatError("e must be a non-empty word of distinct letters")
    if len(entries) != len(e):
        raise SignatureFormatError(f"expected {len(e)} entries, got {len(entries)}")
    au = letter_mask(e)
    for k, entry in enumerate(entries):
        if entry.count < 1:
            raise SignatureFormatError(f"entry {k}: count must be at least 1")
        if entry.rest & ~au or entry.rest == au:
            raise SignatureFormatError(f"entry {k}: rest must be a strict subset of e's letters")
    return Signature(e, tuple(entries))


def dumps(sig: Signature) -> str:
    return json.dumps(to_json(sig), ensure_ascii=False)


def loads(text: str) -> Signature:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SignatureFormatError(f"invalid JSON: {exc}") from exc
    return from_json(obj)
