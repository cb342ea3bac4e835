"""Brute-force oracles and random generators for differential testing.

The oracles work on plain byte strings straight from the definitions and
share no scanning code with the rest of the package. They are exponential
where the definition is; keep inputs small (|A| <= 4, |u| <= 24).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Optional

import numpy as np

from .core import Alphabet, Word
from .slp import Concat, Leaf, Slp

LETTERS = b"abcdefghijklmnopqrstuvwxyz"


def _raw(u) -> bytes:
    if isinstance(u, Word):
        return u.text
    if isinstance(u, str):
        return u.encode("utf-8")
    return bytes(u)


def _universe(u, alphabet) -> bytes:
    if alphabet is None:
        if isinstance(u, Word):
            return u.alphabet.symbols
        return bytes(sorted(set(_raw(u))))
    if isinstance(alphabet, Alphabet):
        return alphabet.symbols
    return _raw(alphabet)


def is_subword(x, w) -> bool:
    """True iff ``x`` can be obtained from ``w`` by deleting letters."""
    x, w = _raw(x), _raw(w)
    pos = 0
    for c in x:
        pos = w.find(bytes([c]), pos) + 1
        if pos == 0:
            return False
    return True


@lru_cache(maxsize=1 << 18)
def _iota_bf(u: bytes, universe: bytes) -> int:
    if not universe:
        raise ValueError("empty alphabet")
    k = 0
    while all(is_subword(bytes(x), u) for x in product(universe, repeat=k + 1)):
        k += 1
    return k


def iota_bruteforce(u, alphabet=None) -> int:
    """Largest ``k`` such that every word of length ``k`` over the alphabet is a subword."""
    return _iota_bf(_raw(u), _universe(u, alphabet))


def zeta_bruteforce(u, alphabet=None) -> int:
    """Maximum of :func:`iota_bruteforce` over every rotation of ``u``."""
    raw, universe = _raw(u), _universe(u, alphabet)
    if not raw:
        return _iota_bf(raw, universe)
    return max(_iota_bf(raw[i:] + raw[:i], universe) for i in range(len(raw)))


def naive_arch_factorization(u, alphabet=None):
    """``(arches, rest)``: repeatedly cut the shortest prefix containing every letter."""
    raw, universe = _raw(u), set(_universe(u, alphabet))
    arches = []
    while True:
        for j in range(1, len(raw) + 1):
            if set(raw[:j]) >= universe:
                arches.append(raw[:j])
                raw = raw[j:]
                break
        else:
            return arches, raw


def summary_oracle(x, u):
    """``(arch count, sorted rest letters)`` of ``x u`` over its own alphabet."""
    xu = _raw(x) + _raw(u)
    arches, rest = naive_arch_factorization(xu, bytes(sorted(set(xu))))
    return len(arches), bytes(sorted(set(rest)))


def _letters(alphabet_size: int) -> bytes:
    if not 1 <= alphabet_size <= len(LETTERS):
        raise ValueError(f"alphabet_size must be in 1..{len(LETTERS)}")
    return LETTERS[:alphabet_size]


def gen_word(seed, max_len: int, alphabet_size: int, *, exact: bool = False) -> Word:
    """Pseudorandom word over the first ``alphabet_size`` letters.

    The length is uniform in ``0..max_len`` (or exactly ``max_len`` with
    ``exact``); the word's alphabet is always the full letter range.
    """
    rng = np.random.default_rng(seed)
    alphabet = Alphabet(_letters(alphabet_size))
    n = max_len if exact else int(rng.integers(0, max_len + 1))
    return Word(rng.integers(0, alphabet_size, size=n, dtype=np.uint8), alphabet)


def gen_slp(
    seed,
    max_rules: int,
    alphabet_size: int,
    max_length: Optional[int] = 10**5,
    growth: float = 0.5,
) -> Slp:
    """Pseudorandom valid SLP.

    One leaf per letter, then concatenations. The first operand is drawn
    near the most recent rule; the second one too with probability
    ``growth`` (uniformly otherwise), so ``growth`` close to 1 makes the
    expansion roughly double per rule. Pairs whose expansion would exceed
    ``max_length`` are redrawn among shorter rules; the root is the last rule.
    """
    rng = np.random.default_rng(seed)
    letters = _letters(alphabet_size)
    order = rng.permutation(alphabet_size)
    rules = [Leaf(letters[k]) for k in order.tolist()]
    lengths = [1] * len(rules)
    while len(rules) < max(max_rules, 1):
        n = len(rules)
        for _ in range(8):
            left = n - 1 - min(int(rng.geometric(0.35)) - 1, n - 1)
            if rng.random() < growth:
                right = n - 1 - min(int(rng.geometric(0.35)) - 1, n - 1)
            else:
                right = int(rng.integers(0, n))
            if rng.random() < 0.5:
                left, right = right, left
            if max_length is None or lengths[left] + lengths[right] <= max_length:
                break
        else:
            short = [i for i in range(n) if 2 * lengths[i] <= (max_length or 0)]
            if not short:
                break
            left = short[int(rng.integers(0, len(short)))]
            right = short[int(rng.integers(0, len(short)))]
        rules.append(Concat(left, right))
        lengths.append(lengths[left] + lengths[right])
    names = tuple(f"X{i + 1}" for i in range(len(rules)))
    return Slp(tuple(rules), names)


def doubling_slp(base, doublings: int) -> Slp:
    """SLP whose expansion is ``base`` repeated ``2**doublings`` times."""
    base = _raw(base)
    if not base:
        raise ValueError("base must be non-empty")
    rules = []
    leaf = {}
    for c in base:
        if c not in leaf:
            leaf[c] = len(rules)
            rules.append(Leaf(c))
    top = leaf[base[0]]
    for c in base[1:]:
        rules.append(Concat(top, leaf[c]))
        top = len(rules) - 1
    for _ in range(doublings):
        rules.append(Concat(top, top))
        top = len(rules) - 1
    names = tuple(f"X{i + 1}" for i in range(len(rules)))
    return Slp(tuple(rules), names)
