"""Seeded randomized search for LCD codes and bounds verification.

Three strategies:

RANDOM draws standard-form generator matrices (I_k | A) with uniform A and
keeps the first candidate that is LCD with minimum weight at or above the
target.  Each candidate index seeds its own generator stream, so the result
is a pure function of (seed, index): workers can evaluate disjoint index
blocks in any order and the first-found selection (lowest index) is
reproducible regardless of thread count.

AXY_NEIGHBORHOOD hill-climbs from an LCD base code using the two-vector
update: sample an isotropic pair, apply the update, accept moves that
improve or tie the minimum weight (ties up to a plateau cap).  The update
preserves the Gram matrix, so every visited code is LCD; this is asserted
at each step.

PUNCTURE_SHORTEN walks the coordinates of a longer base code and collects
the one-coordinate derivatives (punctured and shortened) that are LCD,
keeping the first that matches the requested parameters.

Minimum-weight checks during search run with a cutoff at the target weight:
enumeration aborts as soon as any codeword falls below it, which rejects
typical random candidates after a tiny fraction of the scan.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from . import linalg
from .code import CodeSummary, LinearCode, _light_min_weight, _scan_min_weight
from .errors import ExhaustedRetriesError, NoPairExistsError, PreconditionError
from .gf4 import hermitian_inner, weight
from .tables import BoundsTable
from .transform import IsotropicPair, axy_construct, puncture, shorten

_RETRY_CAP = 10000
_BLOCK = 64


class Strategy(Enum):
    RANDOM = "random"
    AXY_NEIGHBORHOOD = "axy"
    PUNCTURE_SHORTEN = "puncture-shorten"


@dataclass(frozen=True)
class SearchConfig:
    n: int
    k: int
    target_d: int
    seed: int
    budget: int = 100000
    strategy: Strategy = Strategy.RANDOM
    base: Optional[LinearCode] = None
    threads: int = 1
    plateau_cap: int = 100

    def __post_init__(self):
        if self.target_d < 1:
            raise ValueError("target_d must be at least 1")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")


@dataclass(frozen=True)
class SearchResult:
    found: Optional[LinearCode]
    summary: Optional[CodeSummary]
    candidates_tried: int
    elapsed: float


def _candidate_rng(seed: int, index: int) -> np.random.Generator:
    # One independent stream per candidate; the pair (seed, index) is the
    # only input, so thread scheduling cannot perturb the draw.
    return np.random.default_rng([seed, index])


def random_lcd(n: int, k: int, rng, max_retries: int = _RETRY_CAP) -> LinearCode:
    """Draw an LCD [n, k] code: uniform A in (I_k | A), retried until LCD.

    ``rng`` is a numpy Generator or an integer seed.

    Raises:
        ExhaustedRetriesError: after ``max_retries`` non-LCD draws.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    for _ in range(max_retries):
        a = rng.integers(0, 4, size=(k, n - k), dtype=np.uint8)
        code = LinearCode(np.hstack([linalg.identity(k), a]))
        if code.is_lcd():
            return code
    raise ExhaustedRetriesError(
        f"no LCD code found in {max_retries} draws at (n={n}, k={k})"
    )


def elliptic_quadric_code() -> LinearCode:
    """The [17, 13, 4] code checked by an elliptic quadric cap in PG(3, 4).

    The quadric x0*x1 + x2^2 + x2*x3 + w*x3^2 = 0 has 17 projective points,
    no three of them collinear, so every 3 columns of the 4 x 17 check
    matrix built from the points are independent and the kernel code has
    minimum weight 4.  Serves as a deterministic base for PUNCTURE_SHORTEN
    derivations: strong short codes sit a few shortenings below it.
    """
    from .gf4 import MUL, OMEGA

    points = []
    for value in range(1, 4**4):
        digits = [(value >> (2 * i)) & 3 for i in (3, 2, 1, 0)]
        lead = next(d for d in digits if d)
        if lead != 1:
            continue
        x0, x1, x2, x3 = digits
        q = MUL[x0, x1] ^ MUL[x2, x2] ^ MUL[x2, x3] ^ MUL[OMEGA, MUL[x3, x3]]
        if q == 0:
            points.append(digits)
    check = np.array(points, dtype=np.uint8).T
    return LinearCode(linalg.kernel(check))


def sample_isotropic_pair(length: int, rng) -> IsotropicPair:
    """Sample a valid isotropic pair of the given length.

    Rejection sampling: draw x until it is nonzero with even weight (which
    makes it self-isotropic); draw y from the Hermitian-orthogonal
    complement of x by rejection until nonzero with even weight.

    Raises:
        NoPairExistsError: for length < 2 (a nonzero length-1 vector has
            (x,x)_h = 1).
    """
    if length < 2:
        raise NoPairExistsError(f"no isotropic pair exists at length {length}")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    for _ in range(_RETRY_CAP):
        x = rng.integers(0, 4, size=length, dtype=np.uint8)
        if x.any() and weight(x) % 2 == 0:
            break
    else:
        raise ExhaustedRetriesError("could not sample x")
    for _ in range(_RETRY_CAP):
        y = rng.integers(0, 4, size=length, dtype=np.uint8)
        if y.any() and weight(y) % 2 == 0 and hermitian_inner(x, y) == 0:
            return IsotropicPair(x, y)
    raise ExhaustedRetriesError("could not sample y orthogonal to x")


def _exact_weight_at_least(code: LinearCode, target: int) -> Optional[int]:
    """Exact minimum weight if it is >= target, else None (early abort)."""
    best, exact, _ = _scan_min_weight(code.gen, cutoff=target)
    if exact and best >= target:
        return best
    return None


def _weight_reaches(gen: np.ndarray, target: int) -> bool:
    """True iff the standard-form generator's code has min weight >= target.

    Tries the weight-3-message shortcut first: it rejects most random
    candidates with a few hundred packed words and fully decides the
    question when target <= 4; otherwise falls back to the class scan with
    a cutoff.
    """
    k, n = gen.shape
    if n <= 64:
        if _light_min_weight(gen) < target:
            return False
        if target <= 4:
            return True
    best, exact, _ = _scan_min_weight(gen, cutoff=target)
    return exact and best >= target


def _search_random(config: SearchConfig) -> tuple[Optional[LinearCode], int]:
    def evaluate(index: int) -> Optional[LinearCode]:
        rng = _candidate_rng(config.seed, index)
        a = rng.integers(0, 4, size=(config.k, config.n - config.k), dtype=np.uint8)
        gen = np.hstack([linalg.identity(config.k), a])
        if not _weight_reaches(gen, config.target_d):
            return None
        code = LinearCode(gen)
        if not code.is_lcd():
            return None
        return code

    start = 0
    while start < config.budget:
        block = range(start, min(start + _BLOCK, config.budget))
        if config.threads > 1:
            with ThreadPoolExecutor(max_workers=config.threads) as ex:
                hits = list(ex.map(evaluate, block))
        else:
            hits = [evaluate(i) for i in block]
        for offset, code in enumerate(hits):
            if code is not None:
                return code, block[offset] + 1
        start += _BLOCK
    return None, config.budget


def _search_axy(config: SearchConfig) -> tuple[Optional[LinearCode], int]:
    if config.k >= config.n:
        raise PreconditionError("the update needs k < n")
    if config.base is not None:
        base = config.base
        if (base.n, base.k) != (config.n, config.k):
            raise PreconditionError(
                f"base is [{base.n},{base.k}], expected [{config.n},{config.k}]"
            )
        if not base.is_lcd():
            raise PreconditionError("base code is not LCD")
        start = LinearCode(linalg.standard_form(base.gen).matrix)
    else:
        start = None

    def fresh(index: int) -> LinearCode:
        if start is not None:
            return start
        return random_lcd(config.n, config.k, _candidate_rng(config.seed, index))

    current = fresh(0)
    hull = current.hull_dim()
    current_d = current.min_weight()
    plateau = 0
    tried = 0
    index = 0
    while index < config.budget:
        if current_d >= config.target_d:
            return current, tried
        index += 1
        rng = _candidate_rng(config.seed, index)
        pair = sample_isotropic_pair(config.n - config.k, rng)
        candidate = axy_construct(current, pair)
        tried += 1
        if candidate.hull_dim() != hull:
            raise AssertionError("two-vector update changed the hull dimension")
        if candidate.n <= 64 and _light_min_weight(candidate.gen) < current_d:
            d = None
        else:
            d = _exact_weight_at_least(candidate, current_d)
        if d is not None and d > current_d:
            current, current_d, plateau = candidate, d, 0
        elif d is not None:
            # Sideways move: wander the plateau, up to the cap, then
            # restart the climb from a fresh draw (budget permitting).
            plateau += 1
            current = candidate
        if plateau > config.plateau_cap:
            index += 1
            current = fresh(index)
            current_d = current.min_weight()
            plateau = 0
            tried += 1
    if current_d >= config.target_d:
        return current, tried
    return None, tried


def _search_puncture_shorten(config: SearchConfig) -> tuple[Optional[LinearCode], int]:
    base = config.base
    if base is None:
        raise PreconditionError("PUNCTURE_SHORTEN requires a base code")
    if base.n != config.n + 1:
        raise PreconditionError(
            f"base length must be {config.n + 1}, got {base.n}"
        )
    tried = 0
    for coord in range(1, base.n + 1):
        if tried >= config.budget:
            break
        for derive in (puncture, shorten):
            candidate = derive(base, coord)
            tried += 1
            if (candidate.n, candidate.k) != (config.n, config.k):
                continue
            if not candidate.is_lcd():
                continue
            if _exact_weight_at_least(candidate, config.target_d) is not None:
                return candidate, tried
            if tried >= config.budget:
                break
    return None, tried


def search(config: SearchConfig) -> SearchResult:
    """Run the configured strategy; deterministic given the seed.

    When the budget runs out before the target is met, the result carries
    ``found = None`` and the number of candidates examined; no exception is
    raised.
    """
    start = time.perf_counter()
    if config.strategy is Strategy.RANDOM:
        found, tried = _search_random(config)
    elif config.strategy is Strategy.AXY_NEIGHBORHOOD:
        found, tried = _search_axy(config)
    else:
        found, tried = _search_puncture_shorten(config)
    elapsed = time.perf_counter() - start
    summary = found.summarize() if found is not None else None
    if summary is not None:
        if not summary.is_lcd or summary.d < config.target_d:
            raise AssertionError("search produced a non-conforming code")
    return SearchResult(found=found, summary=summary, candidates_tried=tried, elapsed=elapsed)


class VerifyStatus(Enum):
    REPRODUCED_LOWER = "reproduced-lower"
    BELOW_LOWER = "below-lower"
    CONTRADICTION = "contradiction"
    NOT_LCD = "not-lcd"
    NOT_EXACT = "not-exact"


@dataclass(frozen=True)
class VerifyRecord:
    n: int
    k: int
    d: int
    lower: int
    upper: int
    status: VerifyStatus


def verify_bounds(results: Iterable[CodeSummary], table: BoundsTable) -> list:
    """Check summaries against the bounds table, one record per summary.

    REPRODUCED_LOWER: an exact LCD summary with d at or above the table's
    lower bound.  CONTRADICTION: d above the upper bound, which signals a
    bug here, not a discovery, since upper bounds come from the literature.

    Raises:
        UnknownEntryError: for a summary outside table coverage.
    """
    out = []
    for s in results:
        entry = table.entry(s.n, s.k)
        if not s.is_lcd:
            status = VerifyStatus.NOT_LCD
        elif not s.d_exact:
            status = VerifyStatus.NOT_EXACT
        elif s.d > entry.upper:
            status = VerifyStatus.CONTRADICTION
        elif s.d >= entry.lower:
            status = VerifyStatus.REPRODUCED_LOWER
        else:
            status = VerifyStatus.BELOW_LOWER
        out.append(
            VerifyRecord(
                n=s.n, k=s.k, d=s.d, lower=entry.lower, upper=entry.upper, status=status
            )
        )
    return out
