"""Quaternary Hermitian LCD codes: construction, transforms, search.

Linear codes over GF(4) are held as generator matrices with entries in
{0, 1, w, W} (W = w^2).  The package centers on codes with trivial
Hermitian hull (LCD codes): predicates and duals in :class:`LinearCode`,
the hull-preserving two-vector update and the puncture/shorten machinery
in :mod:`hlcd4.transform`, a published bounds table with catalog update
vectors in :mod:`hlcd4.tables`, and a seeded, reproducible search harness
in :mod:`hlcd4.search`.  The ``hlcd4`` command line exposes the same
operations on generator-matrix files.
"""

from . import errors, gf4, linalg
from .code import CodeSummary, LinearCode, hull_dim_oracle, min_weight_oracle
from .errors import Hlcd4Error
from .search import (
    SearchConfig,
    SearchResult,
    Strategy,
    VerifyRecord,
    VerifyStatus,
    elliptic_quadric_code,
    random_lcd,
    sample_isotropic_pair,
    search,
    verify_bounds,
)
from .tables import BoundsEntry, BoundsTable, CatalogPair, Flag, catalog_pairs
from .transform import (
    CoordinateParity,
    Derivative,
    IsotropicPair,
    IsotropyReport,
    axy_construct,
    check_isotropic,
    lcd_column_parity,
    lcd_exactly_one,
    orthonormalize,
    puncture,
    shorten,
)

__version__ = "1.0.0"

__all__ = [
    "BoundsEntry",
    "BoundsTable",
    "CatalogPair",
    "CodeSummary",
    "CoordinateParity",
    "Derivative",
    "Flag",
    "Hlcd4Error",
    "IsotropicPair",
    "IsotropyReport",
    "LinearCode",
    "SearchConfig",
    "SearchResult",
    "Strategy",
    "VerifyRecord",
    "VerifyStatus",
    "axy_construct",
    "catalog_pairs",
    "check_isotropic",
    "elliptic_quadric_code",
    "errors",
    "gf4",
    "hull_dim_oracle",
    "lcd_column_parity",
    "lcd_exactly_one",
    "linalg",
    "min_weight_oracle",
    "orthonormalize",
    "puncture",
    "random_lcd",
    "sample_isotropic_pair",
    "search",
    "shorten",
    "verify_bounds",
    "__version__",
]
