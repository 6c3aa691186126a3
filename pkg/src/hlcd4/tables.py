"""Shipped data: the minimum-weight bounds table and the pair catalog.

The bounds table records, for every 12 <= n <= 30 and 4 <= k <= n - 4, the
best known lower and upper bound on the largest minimum weight of a
Hermitian LCD [n, k] code over the four-element field.  Flags annotate
provenance: BOLD marks lower bounds attained by an explicitly constructed
code, STAR marks the eight entries produced by the two-vector update
construction.  Upper bounds are literature data and nothing in this package
recomputes them.

The pair catalog holds the eight published (x, y) isotropic pairs, one per
starred entry, together with the seed-code parameters they apply to.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Iterator, Optional

from .errors import UnknownEntryError
from .transform import IsotropicPair

N_RANGE = range(12, 31)


def _k_range(n: int) -> range:
    return range(4, n - 3)


class Flag(Enum):
    BOLD = "B"
    STAR = "S"


@dataclass(frozen=True)
class BoundsEntry:
    n: int
    k: int
    lower: int
    upper: int
    flags: frozenset

    @property
    def bold(self) -> bool:
        return Flag.BOLD in self.flags

    @property
    def star(self) -> bool:
        return Flag.STAR in self.flags

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


class BoundsTable:
    """Map (n, k) -> BoundsEntry with validated coverage."""

    def __init__(self, entries: dict):
        for (n, k), e in entries.items():
            if e.lower > e.upper:
                raise ValueError(f"entry ({n},{k}): lower {e.lower} > upper {e.upper}")
        for n in N_RANGE:
            for k in _k_range(n):
                if (n, k) not in entries:
                    raise ValueError(f"missing entry ({n},{k})")
        for n, k in entries:
            if n not in N_RANGE or k not in _k_range(n):
                raise ValueError(f"entry ({n},{k}) outside the covered range")
        self._entries = dict(entries)

    @classmethod
    def from_csv_text(cls, text: str) -> "BoundsTable":
        entries = {}
        reader = csv.DictReader(text.splitlines())
        for row in reader:
            n, k = int(row["n"]), int(row["k"])
            flags = frozenset(Flag(c) for c in row["flags"].strip())
            entries[(n, k)] = BoundsEntry(
                n=n,
                k=k,
                lower=int(row["lower"]),
                upper=int(row["upper"]),
                flags=flags,
            )
        return cls(entries)

    @classmethod
    def load(cls, path: Optional[str] = None) -> "BoundsTable":
        """Load the packaged table, or a CSV at ``path`` if given."""
        if path is not None:
            with open(path, "r", encoding="utf-8") as fh:
                return cls.from_csv_text(fh.read())
        text = resources.files("hlcd4").joinpath("data/d4_bounds.csv").read_text()
        return cls.from_csv_text(text)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, nk) -> bool:
        return tuple(nk) in self._entries

    def __iter__(self) -> Iterator[BoundsEntry]:
        return iter(sorted(self._entries.values(), key=lambda e: (e.n, e.k)))

    def entry(self, n: int, k: int) -> BoundsEntry:
        try:
            return self._entries[(n, k)]
        except KeyError:
            raise UnknownEntryError(f"no bounds entry for ({n},{k})") from None

    def lower(self, n: int, k: int) -> int:
        return self.entry(n, k).lower

    def upper(self, n: int, k: int) -> int:
        return self.entry(n, k).upper


@dataclass(frozen=True)
class CatalogPair:
    """A published isotropic pair and the seed-code parameters it targets.

    Applying the two-vector update with this pair to a suitable LCD
    [n, k, d] seed code (supplied externally) yields an LCD [n, k, d + 1]
    code.
    """

    n: int
    k: int
    d: int
    pair: IsotropicPair


def catalog_pairs() -> list:
    """The eight packaged pairs, in table order.

    Each pair's isotropy is re-validated on load by the IsotropicPair
    constructor.
    """
    text = resources.files("hlcd4").joinpath("data/isotropic_pairs.csv").read_text()
    out = []
    for row in csv.DictReader(text.splitlines()):
        out.append(
            CatalogPair(
                n=int(row["n"]),
                k=int(row["k"]),
                d=int(row["d"]),
                pair=IsotropicPair.from_symbols(row["x"], row["y"]),
            )
        )
    return out
