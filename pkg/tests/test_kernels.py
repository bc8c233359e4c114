"""Both kernel backends must agree on every input."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wordperm import Word, kernels_numba, kernels_numpy
from wordperm.perms import shift_keys

BACKENDS = [kernels_numpy, kernels_numba]


@pytest.fixture(scope="module")
def tm():
    return np.ascontiguousarray(Word("thue-morse").prefix(1 << 15))


@pytest.mark.parametrize("impl", BACKENDS, ids=["numpy", "numba"])
def test_first_mismatch(impl, tm):
    assert impl.first_mismatch(tm, 0, 12, 256) >= 8
    assert impl.first_mismatch(tm, 0, 12, 4) == -1
    assert impl.first_mismatch(tm, 1, 2, 10) == 1  # 1101.. vs 101..


@given(st.integers(0, 20000), st.integers(0, 20000), st.integers(1, 300))
@settings(max_examples=200, deadline=None)
def test_first_mismatch_parity(a, b, cap):
    arr = np.ascontiguousarray(Word("period-doubling").prefix(21000))
    assert kernels_numpy.first_mismatch(arr, a, b, cap) == kernels_numba.first_mismatch(arr, a, b, cap)


@given(st.sampled_from(["fibonacci", "thue-morse", "period-doubling"]),
       st.integers(0, 5000), st.integers(1, 40), st.integers(1, 200))
@settings(max_examples=200, deadline=None)
def test_window_ranks_parity(name, a, n, cap):
    arr = np.ascontiguousarray(Word(name).prefix(a + n + cap + 1))
    r1, ok1 = kernels_numpy.window_ranks(arr, a, n, cap)
    r2, ok2 = kernels_numba.window_ranks(arr, a, n, cap)
    assert bool(ok1) == bool(ok2)
    if ok1:
        assert np.array_equal(r1, r2)


@pytest.mark.parametrize("name", ["fibonacci", "thue-morse", "double(thue-morse)"])
def test_refine_and_batch_parity(name):
    w = Word(name)
    n_max, H = 24, 4096
    keys = shift_keys(w, H + n_max, n_max + 1)
    for n in (1, 5, 17, 23):
        assert np.array_equal(kernels_numpy.refine_counts(keys, n, H),
                              kernels_numba.refine_counts(keys, n, H))
    starts = np.arange(0, H, 13, dtype=np.int64)
    assert np.array_equal(kernels_numpy.window_ranks_batch(keys, starts, 20),
                          kernels_numba.window_ranks_batch(keys, starts, 20))


def _backend_with(flag):
    env = dict(os.environ, WORDPERM_KERNELS=flag)
    code = "import wordperm.kernels as k; print(k.BACKEND)"
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)


def test_environment_flag_selects_backend():
    assert _backend_with("numpy").stdout.strip() == "numpy"
    assert _backend_with("numba").stdout.strip() == "numba"
    assert _backend_with("fortran").returncode != 0


def test_numpy_backend_reproduces_results():
    env = dict(os.environ, WORDPERM_KERNELS="numpy")
    code = ("from wordperm import tau, extract_subperm, Word;"
            "print(tau('thue-morse', 12, 4096).tau, extract_subperm(Word('thue-morse'), 12, 9))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "36 (5 9 7 2 6 1 3 8 4)"
