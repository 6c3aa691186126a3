"""Shared generators for randomized tests.

Everything takes an explicit numpy Generator so every test is seeded and
reproducible; no test reads global RNG state.
"""

import numpy as np
import pytest

from hlcd4 import linalg
from hlcd4.code import LinearCode


def random_full_rank(rng, k: int, n: int) -> np.ndarray:
    """A uniform k x n matrix over the field, redrawn until full rank."""
    while True:
        m = rng.integers(0, 4, size=(k, n), dtype=np.uint8)
        if linalg.rank(m) == k:
            return m


def random_code(rng, n: int, k: int) -> LinearCode:
    return LinearCode(random_full_rank(rng, k, n))


def random_standard(rng, n: int, k: int) -> LinearCode:
    a = rng.integers(0, 4, size=(k, n - k), dtype=np.uint8)
    return LinearCode(np.hstack([linalg.identity(k), a]))


def scramble(rng, gen: np.ndarray) -> np.ndarray:
    """Hull-preserving disguise: row mix, column permutation, column scaling.

    Left-multiplying by an invertible matrix keeps the code itself; column
    permutations and nonzero column scalings are monomial maps, which
    preserve all Hermitian inner products (a * conj(a) = 1 for nonzero a),
    hence the hull dimension.
    """
    k, n = gen.shape
    mix = random_full_rank(rng, k, k)
    out = linalg.multiply(mix, gen)
    perm = rng.permutation(n)
    out = out[:, perm]
    from hlcd4.gf4 import MUL

    scales = rng.integers(1, 4, size=n, dtype=np.uint8)
    return MUL[out, scales[None, :]]


def code_with_hull(rng, k: int, h: int, extra: int = 0) -> LinearCode:
    """A standard-form [2k + extra, k] code with hull dimension exactly h.

    Start from (I_k | D | 0) where D is diagonal with h ones: the Gram
    matrix is diagonal with h zeros, so the hull dimension is h.  Scramble
    with hull-preserving moves and re-standardize.
    """
    assert 0 <= h <= k
    n = 2 * k + extra
    d = np.zeros((k, n - k), dtype=np.uint8)
    for i in range(h):
        d[i, i] = 1
    gen = np.hstack([linalg.identity(k), d])
    gen = scramble(rng, gen)
    code = LinearCode(linalg.standard_form(gen).matrix)
    assert code.hull_dim() == h
    return code


def random_lcd_standard(rng, n: int, k: int, tries: int = 10000) -> LinearCode:
    for _ in range(tries):
        c = random_standard(rng, n, k)
        if c.is_lcd():
            return c
    raise AssertionError(f"no LCD draw at (n={n}, k={k})")


def random_lcd_with_margin(rng, n: int, k: int) -> LinearCode:
    """An LCD code with minimum weight >= 2 and dual minimum weight >= 2."""
    assert 1 <= k <= n - 1
    while True:
        c = random_lcd_standard(rng, n, k)
        if c.min_weight() < 2:
            continue
        if c.hermitian_dual().min_weight() < 2:
            continue
        return c


@pytest.fixture
def rng():
    return np.random.default_rng(20260814)
