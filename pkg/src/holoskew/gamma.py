"""Gamma functions, circle operations and the correspondence between them.

A gamma function is stored as an ``n x n`` image array: ``maps[y]`` is
the automorphism gamma(y) with ``x^gamma(y) = maps[y, x]``.  The circle
operation is ``x o y = x^gamma(y) . y``.
"""

from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import HypothesisError, InvariantError
from .groups import FiniteGroup, Subgroup, is_normal, whole
from .holomorph import (RegularSubgroup, build_holomorph, enumerate_regular_subgroups,
                        HolElement)
from .perms import inner, is_automorphism, perm_inverse


class GammaError(HypothesisError):
    """A map fails to be a gamma function; ``row`` names the failing property."""

    def __init__(self, message, witness=None, row=None):
        super().__init__(message, witness)
        self.row = row


@dataclass(frozen=True, eq=False)
class GammaFunction:
    group: FiniteGroup
    maps: np.ndarray

    def __post_init__(self):
        maps = np.array(self.maps, dtype=np.int64)
        n = self.group.order
        if maps.shape != (n, n):
            raise HypothesisError(f"gamma needs shape {(n, n)}, got {maps.shape}")
        maps.setflags(write=False)
        object.__setattr__(self, "maps", maps)

    def __call__(self, y: int) -> np.ndarray:
        return self.maps[y]

    def __eq__(self, other):
        return (isinstance(other, GammaFunction) and other.group is self.group
                and np.array_equal(other.maps, self.maps))

    def __hash__(self):
        return hash((id(self.group), self.key()))

    def key(self) -> bytes:
        return self.maps.tobytes()

    def validate(self) -> "GammaFunction":
        """Raise :class:`GammaError` unless this is a gamma function."""
        G = self.group
        for y in range(G.order):
            if not is_automorphism(G, self.maps[y]):
                raise GammaError(f"gamma({y}) is not an automorphism", witness=(y,),
                                 row="gamma(g) in Aut(G)")
        bad = _kernels.gfe_violation(G.table, self.maps)
        if bad is not None:
            raise GammaError(f"gamma functional equation fails at (x, y) = {bad}",
                             witness=bad, row="GFE")
        return self

    @cached_property
    def circle(self) -> np.ndarray:
        G = self.group
        return G.table[self.maps.T, np.arange(G.order)[None, :]]

    def kernel(self) -> list[int]:
        ident = np.arange(self.group.order)
        return [y for y in range(self.group.order) if np.array_equal(self.maps[y], ident)]


@dataclass(frozen=True, eq=False)
class RelativeGammaFunction:
    """gamma' defined on a subgroup A; ``values[a]`` for a in A."""

    group: FiniteGroup
    domain: Subgroup
    values: dict = field(default_factory=dict)

    def __call__(self, a: int) -> np.ndarray:
        return self.values[int(a)]


@dataclass(frozen=True, eq=False)
class SkewBrace:
    additive: FiniteGroup
    circle: FiniteGroup
    gamma: GammaFunction


def trivial_gamma(G: FiniteGroup) -> GammaFunction:
    n = G.order
    return GammaFunction(G, np.tile(np.arange(n), (n, 1)))


def opposite_brace_gamma(G: FiniteGroup) -> GammaFunction:
    """gamma(y) = inner(y^-1), giving x o y = y x."""
    return GammaFunction(G, np.array([inner(G, G.inv(y)) for y in range(G.order)]))


def circle_from_gamma(gamma: GammaFunction) -> SkewBrace:
    gamma.validate()
    G = gamma.group
    circ = FiniteGroup(gamma.circle, name="circle")
    bad = _kernels.brace_violation(G.table, G.inverse, circ.table)
    if bad is not None:
        raise InvariantError(f"brace axiom fails at {bad} for a validated gamma")
    return SkewBrace(G, circ, gamma)


def gamma_from_circle(G: FiniteGroup, circle_table) -> GammaFunction:
    """x^gamma(y) = (x o y) y^-1; rejects if the result is not a GF."""
    circle_table = np.asarray(circle_table, dtype=np.int64)
    try:
        FiniteGroup(circle_table)
    except HypothesisError as exc:
        raise GammaError(f"circle table is not a group: {exc}", row="circle group") from None
    maps = G.table[circle_table, G.inverse[None, :]].T
    return GammaFunction(G, maps).validate()


def regular_from_gamma(gamma: GammaFunction) -> RegularSubgroup:
    hol = build_holomorph(gamma.group)
    alpha = np.array([hol.aut.index(row) for row in gamma.maps], dtype=np.int64)
    if (alpha < 0).any():
        y = int(np.flatnonzero(alpha < 0)[0])
        raise GammaError(f"gamma({y}) is not an automorphism", witness=(y,))
    N = RegularSubgroup(hol, alpha)
    if not N.is_regular():
        raise GammaError("{gamma(y) rho(y)} is not a subgroup of Hol(G)", row="GFE")
    return N


def gamma_from_regular(N: RegularSubgroup) -> GammaFunction:
    return GammaFunction(N.group, N.hol.aut.maps[N.alpha])


@dataclass
class Table1Report:
    endomorphism: bool  # gamma(g) in End(G)  <=> brace axiom
    gfe: bool  # GFE  <=> o associative (given row 1)
    bijective: bool  # gamma(g) bijective => o has inverses
    brace_axiom: bool
    associative: bool
    inverses: bool
    witnesses: dict
    caveats: tuple = (
        "row 1: both sides are equivalent",
        "row 2: equivalent under the assumption that row 1 holds",
        "row 3: right implies left; left implies right assuming row 2",
    )

    @property
    def all_pass(self) -> bool:
        return all((self.endomorphism, self.gfe, self.bijective,
                    self.brace_axiom, self.associative, self.inverses))


def validate_table1(G: FiniteGroup, maps) -> Table1Report:
    """Evaluate each row of the correspondence on both sides separately.

    ``maps`` may be any n x n array of maps G -> G.
    """
    maps = np.asarray(maps, dtype=np.int64)
    n = G.order
    t = G.table
    wit = {}
    endo = True
    for y in range(n):
        bad = _kernels.hom_violation(t, t, maps[y])
        if bad is not None:
            endo = False
            wit["endomorphism"] = (y,) + bad
            break
    gfe_bad = _kernels.gfe_violation(t, maps)
    if gfe_bad is not None:
        wit["gfe"] = gfe_bad
    bij = all(len(set(row.tolist())) == n for row in maps)
    circ = t[maps.T, np.arange(n)[None, :]]
    ax_bad = _kernels.brace_violation(t, G.inverse, circ)
    if ax_bad is not None:
        wit["brace_axiom"] = ax_bad
    as_bad = _kernels.assoc_violation(circ)
    if as_bad is not None:
        wit["associative"] = as_bad
    # o admits inverses: identity 0 on both sides and every row/column is solvable
    ar = np.arange(n)
    has_identity = np.array_equal(circ[0], ar) and np.array_equal(circ[:, 0], ar)
    left_inv = (circ == 0).any(axis=1).all() and (circ == 0).any(axis=0).all()
    inverses = bool(has_identity and left_inv)
    return Table1Report(endo, gfe_bad is None, bij, ax_bad is None, as_bad is None,
                        inverses, wit)


def validate_rgf(G: FiniteGroup, A: Subgroup, values) -> tuple[bool, tuple | None]:
    """(is an RGF on A, witness).  ``values`` maps a in A to an image array."""
    t = G.table
    for a in A:
        if not is_automorphism(G, values[a]):
            return False, ("not an automorphism", a)
    for a in A:
        img = values[a][np.array(A.members)]
        if not np.isin(img, A.members).all():
            return False, ("A not invariant", a)
    for x in A:
        for y in A:
            w = int(t[values[y][x], y])
            lhs = values[w]
            rhs = values[y][values[x]]
            if not np.array_equal(lhs, rhs):
                return False, ("GFE", x, y)
    return True, None


def kernel_gamma(gamma: GammaFunction) -> list[int]:
    """ker(gamma); asserts it is normal in (G, o) and a subgroup of (G, .)."""
    ker = gamma.kernel()
    G = gamma.group
    Subgroup(G, tuple(ker))  # closed in (G, .)
    circ = FiniteGroup(gamma.circle)
    if not is_normal(circ, Subgroup(circ, tuple(ker))):
        raise InvariantError("ker(gamma) is not normal in the circle group")
    return ker


def opposite_gamma(gamma: GammaFunction, check: bool = True) -> GammaFunction:
    """The gamma of N^inv: y -> gamma(y^-1) then inner(y^-1).

    With ``check`` the result is compared with inv N inv inside Hol(G),
    which needs Aut(G).
    """
    G = gamma.group
    n = G.order
    maps = np.empty((n, n), dtype=np.int64)
    for y in range(n):
        yi = G.inv(y)
        maps[y] = inner(G, yi)[gamma.maps[yi]]
    bar = GammaFunction(G, maps)
    if not check:
        return bar
    # oracle: regular subgroup of bar equals inv N inv as a permutation set
    N = regular_from_gamma(gamma)
    inv = np.array(G.inverse)
    conj = inv[N.perms[:, inv]]
    expected = {row.tobytes() for row in conj}
    got = {row.tobytes() for row in regular_from_gamma(bar).perms}
    if expected != got:
        raise InvariantError("opposite gamma does not match N^inv")
    return bar


_GAMMA_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, list]" = weakref.WeakKeyDictionary()


def enumerate_gammas(G: FiniteGroup) -> list[GammaFunction]:
    cached = _GAMMA_CACHE.get(G)
    if cached is None:
        cached = [gamma_from_regular(N) for N in enumerate_regular_subgroups(G)]
        _GAMMA_CACHE[G] = cached
    return list(cached)


# ---------------------------------------------------------------------------
# independent oracle: every group table on the same points, filtered by the axiom


ORACLE_BOUND = 8


def labeled_group_tables(representatives, n: int) -> np.ndarray:
    """All group tables on 0..n-1 with identity 0.

    ``representatives`` must contain one group of each isomorphism type of
    order n; every relabelling fixing 0 is applied and duplicates dropped.
    """
    seen = {}
    for H in representatives:
        if H.order != n:
            raise HypothesisError("representative of the wrong order")
        T = H.table
        for rest in itertools.permutations(range(1, n)):
            sigma = np.array((0,) + rest)
            new = np.empty_like(T)
            new[np.ix_(sigma, sigma)] = sigma[T]
            seen.setdefault(new.tobytes(), new)
    return np.array(list(seen.values()), dtype=np.int64).reshape(-1, n, n)


def circle_table_oracle(G: FiniteGroup, representatives) -> set[bytes]:
    """Circle tables of all skew braces on G, by brute force over group tables."""
    n = G.order
    if n > ORACLE_BOUND:
        raise HypothesisError(f"circle-table oracle is limited to order <= {ORACLE_BOUND}")
    out = set()
    for circ in labeled_group_tables(representatives, n):
        if _kernels.brace_violation(G.table, G.inverse, circ) is None:
            out.add(circ.tobytes())
    return out
