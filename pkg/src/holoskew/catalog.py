"""Named groups used for sweeps and for naming circle groups."""

from __future__ import annotations

from functools import lru_cache

from .groups import FiniteGroup, invariants, is_isomorphic, make_group

# Every group of order <= 12, one spec per isomorphism type.
SMALL = (
    "c1", "c2", "c3",
    "c4", "ab2x2",
    "c5",
    "c6", "d3",
    "c7",
    "c8", "ab2x4", "ab2x2x2", "d4", "q8",
    "c9", "ab3x3",
    "c10", "d5",
    "c11",
    "c12", "ab2x6", "d6", "sd(c3,c4,inv)", "a4",
)

# Complete lists for a few larger orders met by the constructions.
LARGER = (
    "c18", "ab3x6", "d9", "dp(c3,d3)", "sd(ab3x3,c2,inv)",
    "c27", "ab3x9", "ab3x3x3", "heis3", "modext(3,2)",
    "c63", "ab3x21", "sd(c7,c9,pow2)", "dp(c3,sd(c7,c3,pow2))",
    "c125", "ab5x25", "ab5x5x5", "heis5", "modext(5,2)",
)

NAMED = SMALL + LARGER


@lru_cache(maxsize=None)
def catalog_group(spec: str) -> FiniteGroup:
    return make_group(spec)


def small_groups(max_order: int = 12) -> list[FiniteGroup]:
    return [catalog_group(s) for s in SMALL if catalog_group(s).order <= max_order]


def groups_of_order(n: int) -> list[FiniteGroup]:
    """Catalog representatives of order n (complete for n <= 12)."""
    return [catalog_group(s) for s in NAMED if _order_of(s) == n]


@lru_cache(maxsize=None)
def _order_of(spec: str) -> int:
    return catalog_group(spec).order


@lru_cache(maxsize=None)
def _invariants(spec: str):
    return invariants(catalog_group(spec))


def identify(G: FiniteGroup) -> str | None:
    """Catalog name of a group isomorphic to G, or None."""
    inv = invariants(G)
    for spec in NAMED:
        if _order_of(spec) != G.order or _invariants(spec) != inv:
            continue
        if is_isomorphic(G, catalog_group(spec)) is not None:
            return spec
    return None
