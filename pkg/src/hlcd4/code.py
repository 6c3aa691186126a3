"""Linear codes over the four-element field: duals, hulls, minimum weight.

A code is held as a full-row-rank generator matrix; the reduced row echelon
form is the canonical representative used for equality.  The zero code
(k = 0) is permitted as the result of puncturing or shortening and is
treated as trivially LCD (its hull is the zero space).

Minimum weight is computed by enumerating one representative per projective
message class: scalar multiples of a codeword share its weight, so only
messages whose first nonzero symbol is 1 are visited, (4^k - 1)/3 classes in
total.  Codewords are packed into two bit planes per machine word and
updated incrementally along a binary reflected Gray walk of the message
suffix, one table lookup and two XORs per class.  An independent oracle
recomputes every codeword from scratch for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import linalg
from .errors import BudgetExceededError, RankDeficientError, TooLargeError
from .gf4 import MUL, from_symbols, to_symbols


@dataclass(frozen=True)
class CodeSummary:
    """Report record for a single code.

    ``d_exact``/``d_dual_exact`` are False when the corresponding weight is
    only an upper bound because an enumeration budget ran out.
    """

    n: int
    k: int
    d: int
    d_dual: int
    hull_dim: int
    is_lcd: bool
    is_even: bool
    d_exact: bool = True
    d_dual_exact: bool = True

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_dual": self.d_dual,
            "hull_dim": self.hull_dim,
            "is_lcd": self.is_lcd,
            "is_even": self.is_even,
        }
        # Exactness flags appear only when a budget truncated the search, so
        # the common all-exact record stays minimal.
        if not self.d_exact:
            out["d_exact"] = False
        if not self.d_dual_exact:
            out["d_dual_exact"] = False
        return out


class LinearCode:
    """An [n, k] code over the four-element field, immutable once built."""

    def __init__(self, gen: np.ndarray):
        gen = np.asarray(gen, dtype=np.uint8)
        if gen.ndim != 2:
            raise ValueError("generator matrix must be 2-d")
        if gen.shape[1] < 1:
            raise ValueError("code length must be at least 1")
        if gen.size and gen.max() > 3:
            raise ValueError("entries must be in 0..3")
        k, n = gen.shape
        if k > 0:
            R, pivots = linalg.rref(gen)
            if len(pivots) != k:
                raise RankDeficientError(
                    f"generator matrix has rank {len(pivots)}, expected {k}"
                )
            self._canonical = R
        else:
            self._canonical = gen.copy()
        self._gen = gen.copy()
        self._gen.setflags(write=False)
        self._canonical.setflags(write=False)
        self._gram: Optional[np.ndarray] = None

    @classmethod
    def from_symbols(cls, text: str) -> "LinearCode":
        """Build a code from newline-separated symbol rows like ``"10\\n01"``."""
        rows = [from_symbols(line) for line in text.strip().splitlines() if line.strip()]
        if not rows:
            raise ValueError("no rows given")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("rows have unequal lengths")
        return cls(np.vstack(rows))

    @property
    def n(self) -> int:
        return self._gen.shape[1]

    @property
    def k(self) -> int:
        return self._gen.shape[0]

    @property
    def gen(self) -> np.ndarray:
        return self._gen

    @property
    def canonical(self) -> np.ndarray:
        """Reduced row echelon form of the generator matrix."""
        return self._canonical

    @property
    def gram(self) -> np.ndarray:
        """G * conj(G)^T, cached."""
        if self._gram is None:
            g = linalg.gram(self._gen)
            g.setflags(write=False)
            self._gram = g
        return self._gram

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.canonical, other.canonical)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.canonical.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"

    def __str__(self) -> str:
        return "\n".join(to_symbols(row) for row in self._gen) if self.k else "(zero code)"

    def hermitian_dual(self) -> "LinearCode":
        """The [n, n-k] code of vectors Hermitian-orthogonal to every codeword.

        A vector x satisfies (x, y)_h = 0 for all rows y of G exactly when
        conj(G) x^T = 0, so the dual is the kernel of the conjugated
        generator matrix.
        """
        n, k = self.n, self.k
        if k == 0:
            return LinearCode(linalg.identity(n))
        if k == n:
            return LinearCode(np.zeros((0, n), dtype=np.uint8))
        return LinearCode(linalg.kernel(linalg.conj_transpose(self._gen).T))

    def hull_dim(self) -> int:
        """Dimension of the intersection with the Hermitian dual.

        Computed as k - rank(G * conj(G)^T); no dual basis is materialized.
        """
        return self.k - linalg.rank(np.asarray(self.gram))

    def is_lcd(self) -> bool:
        """True when the Hermitian hull is trivial (G * conj(G)^T nonsingular)."""
        return self.hull_dim() == 0

    def is_even(self) -> bool:
        """True when every codeword has even weight.

        Equivalent to Hermitian self-orthogonality, i.e. a vanishing Gram
        matrix: the diagonal entries are the row-weight parities and the
        off-diagonal entries are the pairwise inner products.
        """
        return not np.asarray(self.gram).any()

    def min_weight(self, budget: Optional[int] = None) -> int:
        """Exact minimum weight over all nonzero codewords.

        Args:
            budget: maximum number of projective classes to enumerate.

        Raises:
            BudgetExceededError: carrying the best upper bound found, when
                the budget ran out before the enumeration completed.
        """
        if self.k < 1:
            raise ValueError("minimum weight requires k >= 1")
        best, exact, tried = _scan_min_weight(self._gen, budget=budget)
        if not exact:
            raise BudgetExceededError(
                f"enumerated {tried} classes without completing; best weight seen {best}",
                upper_bound=best,
            )
        return best

    def summarize(self, budget: Optional[int] = None) -> CodeSummary:
        """Fill every summary field; budget truncation maps to non-exact flags.

        A zero code (the code itself with k = 0, or the dual of a full code)
        has no nonzero codewords; its weight is reported as 0.
        """
        d_exact = d_dual_exact = True
        if self.k == 0:
            d = 0
        else:
            try:
                d = self.min_weight(budget=budget)
            except BudgetExceededError as e:
                d, d_exact = e.upper_bound, False
        dual = self.hermitian_dual()
        if dual.k == 0:
            d_dual = 0
        else:
            try:
                d_dual = dual.min_weight(budget=budget)
            except BudgetExceededError as e:
                d_dual, d_dual_exact = e.upper_bound, False
        return CodeSummary(
            n=self.n,
            k=self.k,
            d=d,
            d_dual=d_dual,
            hull_dim=self.hull_dim(),
            is_lcd=self.is_lcd(),
            is_even=self.is_even(),
            d_exact=d_exact,
            d_dual_exact=d_dual_exact,
        )


def hull_dim_oracle(c: LinearCode) -> int:
    """Hull dimension computed directly from the definition.

    dim(C ∩ D) = dim C + dim D - dim(C + D) with D the Hermitian dual; the
    sum's dimension is the rank of the stacked generator matrices.  Exact
    but slower than the Gram-rank path; intended for cross-checking.
    """
    dual = c.hermitian_dual()
    stacked = np.vstack([c.gen, dual.gen])
    return c.k + (c.n - c.k) - linalg.rank(stacked)


def min_weight_oracle(c: LinearCode) -> int:
    """Minimum weight by materializing every nonzero codeword from scratch.

    No incremental updates and no projective reduction; each codeword is an
    independent message-times-matrix product.  Raises TooLargeError for
    k > 10.
    """
    k, n = c.k, c.n
    if k < 1:
        raise ValueError("minimum weight requires k >= 1")
    if k > 10:
        raise TooLargeError(f"oracle enumerates 4^k codewords; k={k} > 10")
    gen = c.gen
    total = 4**k
    best = n + 1
    chunk = 1 << 14
    shifts = 2 * np.arange(k, dtype=np.uint64)
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        msgs = ((idx[:, None] >> shifts[None, :]) & 3).astype(np.uint8)
        cw = np.zeros((len(idx), n), dtype=np.uint8)
        for i in range(k):
            cw ^= MUL[msgs[:, i, None], gen[i][None, :]]
        w = int(np.count_nonzero(cw, axis=1).min())
        if w < best:
            best = w
    return best


# ---------------------------------------------------------------------------
# Packed projective-class enumeration (the hot path).
#
# A codeword splits into two bit planes (low bit, high bit).  Multiplying a
# packed word (p0, p1) by a scalar permutes/mixes the planes:
#   1 * (p0, p1) = (p0, p1)
#   w * (p0, p1) = (p1, p0 ^ p1)
#   w^2 * (p0, p1) = (p0 ^ p1, p0)
# Weight is the popcount of p0 | p1.


_CHUNK = 1 << 16


def _pack_planes(gen: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = gen.shape[1]
    bits = (np.uint64(1) << np.arange(n, dtype=np.uint64))[None, :]
    p0 = ((gen & 1).astype(np.uint64) * bits).sum(axis=1, dtype=np.uint64)
    p1 = ((gen >> 1).astype(np.uint64) * bits).sum(axis=1, dtype=np.uint64)
    return p0, p1


_TRIPLE_CACHE: dict = {}


def _light_min_weight(gen: np.ndarray) -> int:
    """Minimum weight over codewords whose message has weight at most 3.

    Requires a standard-form generator (I_k | A) with n <= 64.  There
    wt(mG) >= wt(m), so every codeword of weight below 4 comes from a
    message of weight at most 3: the returned value decides d >= t exactly
    for any threshold t <= 4, and is an upper bound on d in general.
    """
    k, n = gen.shape
    p0, p1 = _pack_planes(gen)
    # Scalar multiples of each row: low/high planes for factors 1, w, w^2.
    s0 = np.stack([p0, p1, p0 ^ p1])
    s1 = np.stack([p1, p0 ^ p1, p0])
    best = int(np.bitwise_count(p0 | p1).min())
    if k >= 2:
        iu, ju = np.triu_indices(k, 1)
        c0 = p0[iu][:, None] ^ s0[:, ju].T
        c1 = p1[iu][:, None] ^ s1[:, ju].T
        best = min(best, int(np.bitwise_count(c0 | c1).min()))
    if k >= 3:
        if k not in _TRIPLE_CACHE:
            from itertools import combinations

            _TRIPLE_CACHE[k] = np.array(list(combinations(range(k), 3)))
        tri = _TRIPLE_CACHE[k]
        i3, j3, l3 = tri[:, 0], tri[:, 1], tri[:, 2]
        c0 = p0[i3][:, None, None] ^ s0[:, j3].T[:, :, None] ^ s0[:, l3].T[:, None, :]
        c1 = p1[i3][:, None, None] ^ s1[:, j3].T[:, :, None] ^ s1[:, l3].T[:, None, :]
        best = min(best, int(np.bitwise_count(c0 | c1).min()))
    return best


@dataclass
class _ScanState:
    best: int
    tried: int = 0


def _scan_min_weight(
    gen: np.ndarray,
    cutoff: Optional[int] = None,
    budget: Optional[int] = None,
) -> tuple[int, bool, int]:
    """Enumerate one codeword per projective message class.

    Returns (best_weight, exact, classes_tried).  ``exact`` is False when a
    budget ran out, or when ``cutoff`` is set and a weight below it was
    found (the scan stops early: the caller only wanted to know whether the
    minimum clears the cutoff).  Orders classes by the leading nonzero
    message position, then by a Gray walk of the suffix, so budgets are
    reproducible.
    """
    k, n = gen.shape
    if n <= 64:
        return _scan_packed(gen, cutoff, budget)
    return _scan_bigint(gen, cutoff, budget)


def _scan_packed(gen, cutoff, budget):
    k, n = gen.shape
    p0, p1 = _pack_planes(gen)
    state = _ScanState(best=n + 1)

    for lead in range(k):
        suffix = k - 1 - lead
        start0, start1 = p0[lead], p1[lead]
        # Delta planes for toggling bit b of the suffix counter: even bits add
        # the row itself, odd bits add w times the row.
        rows = np.arange(lead + 1, k)
        d0 = np.empty(2 * suffix, dtype=np.uint64)
        d1 = np.empty(2 * suffix, dtype=np.uint64)
        d0[0::2] = p0[rows]
        d1[0::2] = p1[rows]
        d0[1::2] = p1[rows]
        d1[1::2] = p0[rows] ^ p1[rows]

        done = _walk_gray(start0, start1, d0, d1, 4**suffix, state, cutoff, budget)
        if done:
            return state.best, False, state.tried
        if budget is not None and state.tried >= budget and lead < k - 1:
            return state.best, False, state.tried

    return state.best, True, state.tried


def _walk_gray(start0, start1, d0, d1, count, state, cutoff, budget):
    """Visit ``count`` codewords starting at (start0, start1); returns True to abort."""
    carry0, carry1 = start0, start1
    w0 = int(np.bitwise_count(carry0 | carry1))
    state.tried += 1
    if w0 < state.best:
        state.best = w0
    if cutoff is not None and state.best < cutoff:
        return True
    if budget is not None and state.tried >= budget and count > 1:
        return True

    t = 1
    while t < count:
        stop = min(t + _CHUNK, count)
        if budget is not None:
            stop = min(stop, t + (budget - state.tried))
        ts = np.arange(t, stop, dtype=np.uint64)
        low = ts & (~ts + np.uint64(1))
        bit = np.log2(low.astype(np.float64)).astype(np.intp)
        c0 = np.bitwise_xor.accumulate(d0[bit])
        c1 = np.bitwise_xor.accumulate(d1[bit])
        c0 ^= carry0
        c1 ^= carry1
        weights = np.bitwise_count(c0 | c1)
        chunk_min = int(weights.min())
        state.tried += len(ts)
        if chunk_min < state.best:
            state.best = chunk_min
        carry0, carry1 = c0[-1], c1[-1]
        t = stop
        if cutoff is not None and state.best < cutoff:
            return True
        if budget is not None and state.tried >= budget and t < count:
            return True
    return False


def _scan_bigint(gen, cutoff, budget):
    # Arbitrary-length fallback: Python ints as bit planes, same class order.
    k, n = gen.shape
    rows0 = []
    rows1 = []
    for i in range(k):
        r0 = r1 = 0
        for j in range(n):
            r0 |= (int(gen[i, j]) & 1) << j
            r1 |= (int(gen[i, j]) >> 1) << j
        rows0.append(r0)
        rows1.append(r1)

    best = n + 1
    tried = 0
    for lead in range(k):
        suffix = k - 1 - lead
        deltas = []
        for i in range(lead + 1, k):
            deltas.append((rows0[i], rows1[i]))
            deltas.append((rows1[i], rows0[i] ^ rows1[i]))
        c0, c1 = rows0[lead], rows1[lead]
        count = 4**suffix
        for t in range(count):
            if t:
                b = (t & -t).bit_length() - 1
                d = deltas[b]
                c0 ^= d[0]
                c1 ^= d[1]
            w = (c0 | c1).bit_count()
            tried += 1
            if w < best:
                best = w
                if cutoff is not None and best < cutoff:
                    return best, False, tried
            if budget is not None and tried >= budget:
                if lead == k - 1 and t == count - 1:
                    return best, True, tried
                return best, False, tried
    return best, True, tried
