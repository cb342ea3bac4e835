"""Subword universality index and circular universality index of explicit words."""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from . import _kernels
from .core import Alphabet, WordLike, _check_cut, as_word


def iota(u: WordLike, alphabet: Optional[Alphabet] = None) -> int:
    """Largest ``k`` such that every length-``k`` word is a subword of ``u``.

    This is the number of arches in the arch factorization.
    """
    u = as_word(u, alphabet)
    return int(_kernels.arch_ends(u.letters, len(u.alphabet)).shape[0])


def iota_conjugate(
    u: WordLike, d: int, alphabet: Optional[Alphabet] = None
) -> Tuple[int, bool]:
    """``iota`` of the rotation starting at cut ``d``, plus whether its rest is empty.

    The rotation is never materialised; the scan wraps around the end of ``u``.
    """
    u = as_word(u, alphabet)
    _check_cut(u, d)
    counts, empty = _kernels.scan_conjugates(
        u.letters, len(u.alphabet), np.array([d], dtype=np.int64), False
    )
    return int(counts[0]), bool(empty[0])


def candidate_cuts(u: WordLike, alphabet: Optional[Alphabet] = None) -> list:
    """Cuts right after the first occurrence of each letter, increasing.

    Some rotation starting at one of these cuts attains the circular index.
    """
    u = as_word(u, alphabet)
    first = _kernels.first_occurrences(u.letters, len(u.alphabet))
    return sorted(int(p) + 1 for p in first if p >= 0)


def zeta(
    u: WordLike, alphabet: Optional[Alphabet] = None, *, exhaustive: bool = False
) -> int:
    """Largest ``iota`` over all conjugates of ``u``.

    Only rotations at :func:`candidate_cuts` are scanned, smallest cut first.
    The search stops as soon as two different counts have been seen (they
    can differ by at most one) or a rotation with empty rest turns up (no
    rotation beats it). ``exhaustive=True`` scans every candidate instead,
    which is meant for differential testing.
    """
    u = as_word(u, alphabet)
    nsym = len(u.alphabet)
    starts = candidate_cuts(u)
    if len(starts) < nsym:
        # incomplete: no conjugate is rich
        return 0
    counts, _ = _kernels.scan_conjugates(
        u.letters, nsym, np.array(starts, dtype=np.int64), not exhaustive
    )
    return int(counts.max())
