"""Vectorised fallback kernels.

Instead of scanning letter by letter, these build the full arch-jumping
table ``alpha`` with one reverse ``minimum.accumulate`` per symbol and then
follow jumps. Only the jump chains run in interpreted Python.
"""

import numpy as np


def _jump_table(letters, nsym):
    # alpha[i] in 0..n, or n + 1 where no rich factor starts at i
    n = letters.shape[0]
    dtype = np.int32 if n < 2**31 - 2 else np.int64
    pos = np.arange(n, dtype=dtype)
    alpha = np.zeros(n + 1, dtype=dtype)
    nxt = np.empty(n + 1, dtype=dtype)
    for a in range(nsym):
        nxt[-1] = n
        np.copyto(nxt[:-1], np.where(letters == a, pos, dtype(n)))
        rev = nxt[::-1]
        np.minimum.accumulate(rev, out=rev)
        np.maximum(alpha, nxt, out=alpha)
    alpha += 1
    return alpha


def arch_ends(letters, nsym):
    letters = np.asarray(letters)
    n = letters.shape[0]
    alpha = _jump_table(letters, nsym)
    out = []
    i = 0
    while alpha[i] <= n:
        i = int(alpha[i])
        out.append(i)
    return np.array(out, dtype=np.int64)


def first_occurrences(letters, nsym):
    letters = np.asarray(letters)
    first = np.full(nsym, -1, np.int64)
    for a in range(nsym):
        hits = letters == a
        p = int(hits.argmax()) if letters.shape[0] else 0
        if letters.shape[0] and hits[p]:
            first[a] = p
    return first


def scan_conjugates(letters, nsym, starts, stop_early):
    letters = np.asarray(letters)
    n = letters.shape[0]
    starts = np.asarray(starts, dtype=np.int64)
    if n == 0:
        k = starts.shape[0]
        if stop_early and k:
            k = 1
        return np.zeros(k, np.int64), np.ones(k, np.bool_)
    alpha = _jump_table(np.concatenate([letters, letters]), nsym)
    counts = []
    empty = []
    for s in starts.tolist():
        d = s % n
        end = d + n
        i = d
        m = 0
        while alpha[i] <= end:
            i = int(alpha[i])
            m += 1
        counts.append(m)
        empty.append(i == end)
        if stop_early and (empty[-1] or m != counts[0]):
            break
    return np.array(counts, dtype=np.int64), np.array(empty, dtype=np.bool_)


def alpha_table(letters, nsym):
    letters = np.asarray(letters)
    n = letters.shape[0]
    alpha = _jump_table(letters, nsym).astype(np.int64)
    alpha[alpha > n] = -1
    return alpha
