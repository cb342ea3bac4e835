"""Hot scanning kernels with two interchangeable backends.

The backend is chosen once at import time from ``SUBWORDS_BACKEND``
(``numba`` or ``numpy``). Without the variable, numba is used when it
imports cleanly. Both backends are always importable by name so they can
be compared against each other.

Kernel contracts (``letters`` is a uint8 array of symbol indices,
``nsym`` the size of the reference alphabet):

``arch_ends(letters, nsym)``
    int64 array of the cumulative arch ends of the arch factorization.
``first_occurrences(letters, nsym)``
    int64 array, position of the first occurrence of each symbol or -1.
``scan_conjugates(letters, nsym, starts, stop_early)``
    For each start ``d`` in order, the arch count of the conjugate starting
    at ``d`` and whether its rest is empty. With ``stop_early`` the scan
    halts after the first empty rest or the first count that differs from
    the first one; only evaluated entries are returned.
``alpha_table(letters, nsym)``
    int64 array over all cuts, least ``j`` with a rich factor ``(i, j)``,
    -1 where undefined.
"""

import os

from . import numpy_impl

BACKENDS = {"numpy": numpy_impl}

try:
    from . import numba_impl
except ImportError:  # pragma: no cover - numba is a hard dependency
    numba_impl = None
else:
    BACKENDS["numba"] = numba_impl


def _select():
    name = os.environ.get("SUBWORDS_BACKEND", "").strip().lower()
    if not name:
        name = "numba" if "numba" in BACKENDS else "numpy"
    if name not in BACKENDS:
        raise ImportError(
            f"SUBWORDS_BACKEND={name!r} is not available; choose from {sorted(BACKENDS)}"
        )
    return name


BACKEND = _select()
_impl = BACKENDS[BACKEND]

arch_ends = _impl.arch_ends
first_occurrences = _impl.first_occurrences
scan_conjugates = _impl.scan_conjugates
alpha_table = _impl.alpha_table

__all__ = [
    "BACKEND",
    "BACKENDS",
    "alpha_table",
    "arch_ends",
    "first_occurrences",
    "scan_conjugates",
]
