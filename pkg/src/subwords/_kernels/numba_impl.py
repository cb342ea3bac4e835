"""Compiled scanning kernels.

Letters are symbol indices (uint8) in ``0..nsym-1``. Seen-sets are tracked
with a per-symbol stamp array holding the id of the arch that last touched
the symbol, so closing an arch costs nothing.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def arch_ends(letters, nsym):
    n = letters.shape[0]
    out = np.empty(n // nsym + 1, np.int64)
    stamp = np.full(nsym, -1, np.int64)
    m = 0
    seen = 0
    for p in range(n):
        c = letters[p]
        if stamp[c] != m:
            stamp[c] = m
            seen += 1
            if seen == nsym:
                out[m] = p + 1
                m += 1
                seen = 0
    return out[:m]


@njit(cache=True, nogil=True)
def first_occurrences(letters, nsym):
    first = np.full(nsym, -1, np.int64)
    missing = nsym
    for p in range(letters.shape[0]):
        c = letters[p]
        if first[c] < 0:
            first[c] = p
            missing -= 1
            if missing == 0:
                break
    return first


@njit(cache=True, nogil=True)
def _iota_from(letters, nsym, start, stamp):
    n = letters.shape[0]
    stamp[:] = -1
    m = 0
    seen = 0
    p = start
    for _ in range(n):
        c = letters[p]
        if stamp[c] != m:
            stamp[c] = m
            seen += 1
            if seen == nsym:
                m += 1
                seen = 0
        p += 1
        if p == n:
            p = 0
    return m, seen == 0


@njit(cache=True, nogil=True)
def scan_conjugates(letters, nsym, starts, stop_early):
    k = starts.shape[0]
    counts = np.zeros(k, np.int64)
    empty = np.zeros(k, np.bool_)
    stamp = np.empty(nsym, np.int64)
    n = letters.shape[0]
    done = 0
    for t in range(k):
        s = starts[t]
        if n > 0:
            s = s % n
        c, e = _iota_from(letters, nsym, s, stamp)
        counts[t] = c
        empty[t] = e
        done += 1
        if stop_early and (e or c != counts[0]):
            break
    return counts[:done], empty[:done]


@njit(cache=True, nogil=True)
def alpha_table(letters, nsym):
    # two-pointer window: alpha is monotone in its argument
    n = letters.shape[0]
    out = np.full(n + 1, -1, np.int64)
    count = np.zeros(nsym, np.int64)
    distinct = 0
    j = 0
    for i in range(n + 1):
        while distinct < nsym and j < n:
            c = letters[j]
            if count[c] == 0:
                distinct += 1
            count[c] += 1
            j += 1
        if distinct < nsym:
            break
        out[i] = j
        c = letters[i]
        count[c] -= 1
        if count[c] == 0:
            distinct -= 1
    return out
