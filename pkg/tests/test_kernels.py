"""The two kernel backends must agree bit for bit."""

import numpy as np
import pytest

from subwords import _kernels
from subwords._kernels import numpy_impl

numba_impl = _kernels.BACKENDS.get("numba")
pytestmark = pytest.mark.skipif(numba_impl is None, reason="numba unavailable")


def random_cases(seed, count, max_len, max_sym):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        nsym = int(rng.integers(1, max_sym + 1))
        n = int(rng.integers(0, max_len + 1))
        yield rng.integers(0, nsym, size=n, dtype=np.uint8), nsym


def test_arch_ends_agree():
    for letters, nsym in random_cases(0, 500, 200, 6):
        np.testing.assert_array_equal(
            numba_impl.arch_ends(letters, nsym), numpy_impl.arch_ends(letters, nsym)
        )


def test_first_occurrences_agree():
    for letters, nsym in random_cases(1, 500, 50, 8):
        np.testing.assert_array_equal(
            numba_impl.first_occurrences(letters, nsym),
            numpy_impl.first_occurrences(letters, nsym),
        )


def test_alpha_table_agree():
    for letters, nsym in random_cases(2, 500, 60, 4):
        np.testing.assert_array_equal(
            numba_impl.alpha_table(letters, nsym), numpy_impl.alpha_table(letters, nsym)
        )


@pytest.mark.parametrize("stop_early", [False, True])
def test_scan_conjugates_agree(stop_early):
    rng = np.random.default_rng(3)
    for letters, nsym in random_cases(4, 500, 80, 5):
        n = letters.shape[0]
        starts = rng.integers(0, n + 1, size=int(rng.integers(1, 6))).astype(np.int64)
        a = numba_impl.scan_conjugates(letters, nsym, starts, stop_early)
        b = numpy_impl.scan_conjugates(letters, nsym, starts, stop_early)
        np.testing.assert_array_equal(a[0], b[0])
        np.testing.assert_array_equal(a[1], b[1])


def test_scan_stops_early():
    # aabaccb: rotation at 1 has an empty rest, so nothing after it is scanned
    letters = np.array([0, 0, 1, 0, 2, 2, 1], dtype=np.uint8)
    starts = np.array([1, 3, 5], dtype=np.int64)
    for impl in (numba_impl, numpy_impl):
        counts, empty = impl.scan_conjugates(letters, 3, starts, True)
        assert counts.tolist() == [2] and empty.tolist() == [True]
        counts, empty = impl.scan_conjugates(letters, 3, starts, False)
        assert counts.tolist() == [2, 1, 2]
        # two distinct counts end the search
        counts, _ = impl.scan_conjugates(letters, 3, np.array([3, 5, 1], np.int64), True)
        assert counts.tolist() == [1, 2]


def test_backend_selection_env(monkeypatch):
    monkeypatch.setenv("SUBWORDS_BACKEND", "numpy")
    assert _kernels._select() == "numpy"
    monkeypatch.setenv("SUBWORDS_BACKEND", "fortran")
    with pytest.raises(ImportError):
        _kernels._select()
    monkeypatch.delenv("SUBWORDS_BACKEND")
    assert _kernels._select() == "numba"
