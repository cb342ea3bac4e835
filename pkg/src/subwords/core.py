"""Alphabets, words, arch factorizations and the arch-jumping functions.

Words are byte strings re-encoded as arrays of symbol indices over an
:class:`Alphabet`. Everything here is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

import numpy as np

from . import _kernels

MAX_SYMBOLS = 64

WordLike = Union["Word", bytes, bytearray, str]


class AlphabetError(ValueError):
    """Raised for empty, oversized or duplicated alphabets."""


class ForeignLetterError(ValueError):
    """Raised when a word uses a letter missing from the supplied alphabet."""

    def __init__(self, letters: bytes, alphabet: "Alphabet"):
        self.letters = letters
        self.alphabet = alphabet
        super().__init__(
            f"letters {letters!r} are not in alphabet {alphabet.symbols!r}"
        )


def _as_bytes(data) -> bytes:
    if isinstance(data, str):
        return data.encode("utf-8")
    return bytes(data)


def letter_mask(data: Iterable[int]) -> int:
    """Set of byte values, as an int bitmask keyed by byte code."""
    m = 0
    for b in _as_bytes(data):
        m |= 1 << b
    return m


def mask_letters(mask: int) -> bytes:
    """Inverse of :func:`letter_mask`, letters in increasing byte order."""
    return bytes(b for b in range(256) if mask >> b & 1)


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of at most 64 distinct byte letters."""

    symbols: bytes
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = _as_bytes(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise AlphabetError("alphabet must not be empty")
        if len(symbols) > MAX_SYMBOLS:
            raise AlphabetError(
                f"alphabet has {len(symbols)} letters, at most {MAX_SYMBOLS} allowed"
            )
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f"alphabet {symbols!r} repeats a letter")
        object.__setattr__(self, "_index", {b: k for k, b in enumerate(symbols)})

    @classmethod
    def of(cls, data) -> "Alphabet":
        """Alphabet of the distinct letters in ``data``, sorted by byte value."""
        return cls(bytes(sorted(set(_as_bytes(data)))))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, letter) -> bool:
        if isinstance(letter, (bytes, str)):
            letter = _as_bytes(letter)
            return len(letter) == 1 and letter[0] in self._index
        return letter in self._index

    def index(self, letter: int) -> int:
        return self._index[letter]

    @property
    def mask(self) -> int:
        return letter_mask(self.symbols)

    def lookup_table(self) -> np.ndarray:
        # byte value -> symbol index, 255 for foreign bytes
        lut = np.full(256, 255, dtype=np.uint8)
        lut[np.frombuffer(self.symbols, dtype=np.uint8)] = np.arange(
            len(self.symbols), dtype=np.uint8
        )
        return lut


class Word:
    """A finite word over a reference alphabet.

    ``letters`` holds symbol indices into ``alphabet.symbols``. Build words
    with :meth:`from_bytes` (or :func:`as_word`); the alphabet defaults to
    the letters actually used.
    """

    __slots__ = ("letters", "alphabet")

    def __init__(self, letters: np.ndarray, alphabet: Alphabet):
        letters = np.ascontiguousarray(letters, dtype=np.uint8)
        if letters.ndim != 1:
            raise ValueError("letters must be one-dimensional")
        if letters.size and int(letters.max()) >= len(alphabet):
            raise ValueError("letter index out of range for alphabet")
        letters.setflags(write=False)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "alphabet", alphabet)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_bytes(cls, data, alphabet: Optional[Alphabet] = None) -> "Word":
        data = _as_bytes(data)
        if alphabet is None:
            if not data:
                raise AlphabetError(
                    "the empty word has no letters to infer an alphabet from"
                )
            alphabet = Alphabet.of(data)
        raw = np.frombuffer(data, dtype=np.uint8)
        letters = alphabet.lookup_table()[raw]
        if letters.size and (letters == 255).any():
            foreign = bytes(sorted(set(raw[letters == 255].tolist())))
            raise ForeignLetterError(foreign, alphabet)
        return cls(letters, alphabet)

    def over(self, alphabet: Alphabet) -> "Word":
        """The same letter sequence re-encoded over another alphabet."""
        if alphabet == self.alphabet:
            return self
        return Word.from_bytes(self.text, alphabet)

    @property
    def text(self) -> bytes:
        return np.frombuffer(self.alphabet.symbols, dtype=np.uint8)[
            self.letters
        ].tobytes()

    @property
    def cuts(self) -> range:
        """Split positions ``0..|u|``."""
        return range(len(self) + 1)

    @property
    def content_mask(self) -> int:
        """Letters occurring in the word, keyed by byte code."""
        used = np.unique(self.letters)
        return letter_mask(self.alphabet.symbols[k] for k in used.tolist())

    def is_rich(self) -> bool:
        return self.content_mask == self.alphabet.mask

    def factor(self, i: int, j: int) -> "Word":
        _check_cut(self, i)
        _check_cut(self, j)
        if i > j:
            raise ValueError(f"factor ({i}, {j}) is not defined")
        return Word(self.letters[i:j], self.alphabet)

    def __len__(self) -> int:
        return self.letters.shape[0]

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            return Word.from_bytes(self.text + other.text, self.alphabet)
        return Word(np.concatenate([self.letters, other.letters]), self.alphabet)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(
            self.letters, other.letters
        )

    def __hash__(self):
        return hash((self.alphabet.symbols, self.letters.tobytes()))

    def __repr__(self):
        text = self.text
        if len(text) > 40:
            text = text[:37] + b"..."
        return f"Word({text!r}, alphabet={self.alphabet.symbols!r})"

    def __str__(self):
        return self.text.decode("latin-1")


def as_word(u: WordLike, alphabet: Optional[Alphabet] = None) -> Word:
    """Coerce bytes/str/Word to a :class:`Word` over ``alphabet``.

    An empty byte string needs an explicit alphabet.
    """
    if isinstance(u, Word):
        return u if alphabet is None else u.over(alphabet)
    return Word.from_bytes(u, alphabet)


def _check_cut(u: Word, i: int):
    if not 0 <= i <= len(u):
        raise IndexError(f"cut {i} outside 0..{len(u)}")


@dataclass(frozen=True)
class ArchFactorization:
    """Cut positions of the arches of a word, and where its rest starts."""

    lambdas: tuple
    rest_start: int
    source_len: int

    @property
    def arch_count(self) -> int:
        return len(self.lambdas)

    @property
    def rest_is_empty(self) -> bool:
        return self.rest_start == self.source_len

    def arches(self, u: Word) -> list:
        cuts = (0,) + self.lambdas
        return [u.text[a:b] for a, b in zip(cuts, cuts[1:])]

    def rest(self, u: Word) -> bytes:
        return u.text[self.rest_start:]


@dataclass(frozen=True)
class CoarchFactorization:
    """``u = r' . s'_1 ... s'_m`` with ``starts[k]`` the cut where ``s'_{k+1}`` begins.

    ``starts[0]`` is also the end of the incomplete leading factor ``r'``
    (``source_len`` when there is no co-arch).
    """

    starts: tuple
    source_len: int

    @property
    def rest_end(self) -> int:
        return self.starts[0] if self.starts else self.source_len

    @property
    def arch_count(self) -> int:
        return len(self.starts)

    def coarches(self, u: Word) -> list:
        cuts = self.starts + (self.source_len,)
        return [u.text[a:b] for a, b in zip(cuts, cuts[1:])]

    def rest(self, u: Word) -> bytes:
        return u.text[: self.rest_end]


def _resolve(u: WordLike, alphabet: Optional[Alphabet]) -> Word:
    return as_word(u, alphabet)


def arch_factorize(u: WordLike, alphabet: Optional[Alphabet] = None) -> ArchFactorization:
    """Leftmost-greedy arch factorization of ``u``, in one pass."""
    u = _resolve(u, alphabet)
    ends = _kernels.arch_ends(u.letters, len(u.alphabet))
    lambdas = tuple(int(x) for x in ends)
    return ArchFactorization(lambdas, lambdas[-1] if lambdas else 0, len(u))


def coarch_factorize(u: WordLike, alphabet: Optional[Alphabet] = None) -> CoarchFactorization:
    u = _resolve(u, alphabet)
    n = len(u)
    fact = arch_factorize(mirror(u))
    return CoarchFactorization(tuple(n - lam for lam in reversed(fact.lambdas)), n)


def alpha(u: WordLike, i: int, alphabet: Optional[Alphabet] = None) -> Optional[int]:
    """Least cut ``j`` such that ``u(i, j)`` is rich, or ``None``."""
    u = _resolve(u, alphabet)
    _check_cut(u, i)
    need = len(u.alphabet)
    seen = set()
    for j, c in enumerate(u.letters[i:].tolist(), start=i + 1):
        seen.add(c)
        if len(seen) == need:
            return j
    return None


def beta(u: WordLike, j: int, alphabet: Optional[Alphabet] = None) -> Optional[int]:
    """Greatest cut ``i`` such that ``u(i, j)`` is rich, or ``None``."""
    u = _resolve(u, alphabet)
    _check_cut(u, j)
    need = len(u.alphabet)
    seen = set()
    for i in range(j - 1, -1, -1):
        seen.add(int(u.letters[i]))
        if len(seen) == need:
            return i
    return None


def alpha_iter(
    u: WordLike, i: int, n: int, alphabet: Optional[Alphabet] = None
) -> Optional[int]:
    """``alpha`` applied ``n`` times from ``i``; ``None`` once any jump fails."""
    if n < 0:
        raise ValueError("n must be non-negative")
    u = _resolve(u, alphabet)
    _check_cut(u, i)
    for _ in range(n):
        i = alpha(u, i)
        if i is None:
            return None
    return i


def alpha_table(u: WordLike, alphabet: Optional[Alphabet] = None) -> list:
    """``alpha`` at every cut ``0..|u|`` (``None`` where undefined), in O(|u|)."""
    u = _resolve(u, alphabet)
    table = _kernels.alpha_table(u.letters, len(u.alphabet))
    return [None if j < 0 else int(j) for j in table]


def beta_table(u: WordLike, alphabet: Optional[Alphabet] = None) -> list:
    u = _resolve(u, alphabet)
    n = len(u)
    mirrored = alpha_table(mirror(u))
    return [None if a is None else n - a for a in reversed(mirrored)]


def first_occurrence_order(u: WordLike) -> Word:
    """``e(u)``: distinct letters of ``u`` by first occurrence."""
    u = as_word(u)
    first = _kernels.first_occurrences(u.letters, len(u.alphabet))
    present = [k for k in range(len(first)) if first[k] >= 0]
    present.sort(key=lambda k: first[k])
    return Word(np.array(present, dtype=np.uint8), u.alphabet)


def last_occurrence_order(u: WordLike) -> Word:
    """``f(u)``: distinct letters of ``u`` by last occurrence."""
    return mirror(first_occurrence_order(mirror(as_word(u))))


def conjugate(u: WordLike, i: int) -> Word:
    """The rotation ``u(i, |u|) u(0, i)``."""
    u = as_word(u)
    _check_cut(u, i)
    return Word(np.concatenate([u.letters[i:], u.letters[:i]]), u.alphabet)


def mirror(u: WordLike) -> Word:
    u = as_word(u)
    return Word(u.letters[::-1], u.alphabet)
