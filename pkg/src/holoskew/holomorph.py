"""The holomorph Aut(G) rho(G) and its regular subgroups.

A holomorph element ``(alpha, g)`` acts as ``x -> x^alpha . g`` where
``alpha`` indexes :class:`~holoskew.perms.AutGroup`.  A regular subgroup
is stored by its gamma index array: ``alpha[g]`` is the automorphism part
of the unique element sending 0 to ``g``.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import HypothesisError, InvariantError
from .groups import FiniteGroup, is_isomorphic
from .perms import AutGroup, automorphism_group


class HolElement(NamedTuple):
    alpha: int
    g: int


class HolGroup:
    def __init__(self, group: FiniteGroup, aut: AutGroup):
        self.group = group
        self.aut = aut

    def __repr__(self):
        return f"HolGroup({self.group.name or '?'}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.aut) * self.group.order

    def elements(self):
        for a in range(len(self.aut)):
            for g in range(self.group.order):
                yield HolElement(a, g)

    def mul(self, x: HolElement, y: HolElement) -> HolElement:
        """(a, g)(b, h) = (ab, g^b h)."""
        t, maps = self.group.table, self.aut.maps
        return HolElement(int(self.aut.comp[x.alpha, y.alpha]), int(t[maps[y.alpha, x.g], y.g]))

    def inv(self, x: HolElement) -> HolElement:
        ai = int(self.aut.inverse[x.alpha])
        ginv = self.group.inverse[x.g]
        return HolElement(ai, int(self.aut.maps[ai, ginv]))

    def perm(self, x: HolElement) -> np.ndarray:
        return self.group.table[self.aut.maps[x.alpha], x.g]

    def from_perm(self, p) -> HolElement | None:
        """The holomorph element acting as ``p``, or None if there is none."""
        p = np.asarray(p, dtype=np.int64)
        g = int(p[0])
        alpha = self.group.table[p, self.group.inverse[g]]
        a = self.aut.index(alpha)
        return None if a < 0 else HolElement(a, g)

    def rho(self, g: int) -> HolElement:
        return HolElement(0, int(g))

    def beta(self, a: int) -> HolElement:
        return HolElement(int(a), 0)

    def generators(self) -> list[HolElement]:
        return ([self.beta(a) for a in self.aut.generators]
                + [self.rho(g) for g in self.group.generators])

    @cached_property
    def all_perms(self) -> np.ndarray:
        """Every element as a permutation row, ordered like :meth:`elements`."""
        t = self.group.table
        return t[self.aut.maps[:, :, None], np.arange(self.group.order)[None, None, :]] \
            .transpose(0, 2, 1).reshape(-1, self.group.order)


_HOL_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, HolGroup]" = weakref.WeakKeyDictionary()


def build_holomorph(G: FiniteGroup) -> HolGroup:
    hol = _HOL_CACHE.get(G)
    if hol is None:
        hol = HolGroup(G, automorphism_group(G))
        _HOL_CACHE[G] = hol
    return hol


@dataclass(frozen=True, eq=False)
class RegularSubgroup:
    hol: HolGroup
    alpha: np.ndarray

    def __post_init__(self):
        alpha = np.array(self.alpha, dtype=np.int64)
        alpha.setflags(write=False)
        object.__setattr__(self, "alpha", alpha)

    @property
    def group(self) -> FiniteGroup:
        return self.hol.group

    def nu(self, g: int) -> HolElement:
        return HolElement(int(self.alpha[g]), int(g))

    @property
    def elements(self) -> list[HolElement]:
        return [self.nu(g) for g in range(len(self.alpha))]

    def __contains__(self, x: HolElement) -> bool:
        return int(self.alpha[x.g]) == x.alpha

    def key(self) -> bytes:
        return self.alpha.tobytes()

    def __eq__(self, other):
        return (isinstance(other, RegularSubgroup) and other.hol is self.hol
                and np.array_equal(other.alpha, self.alpha))

    def __hash__(self):
        return hash((id(self.hol), self.key()))

    @cached_property
    def perms(self) -> np.ndarray:
        """Row g is nu(g) as a permutation."""
        t = self.group.table
        return t[self.hol.aut.maps[self.alpha], np.arange(self.group.order)[:, None]]

    def is_regular(self) -> bool:
        """Closure and regularity, checked from the permutations."""
        P = self.perms
        n = len(P)
        if not (P[:, 0] == np.arange(n)).all():
            return False
        # comp[x, y] is nu(x) then nu(y); it must be the row sending 0 where it does
        comp = P[np.arange(n)[None, :, None], P[:, None, :]]
        return bool((P[comp[:, :, 0]] == comp).all())

    def circle_table(self) -> np.ndarray:
        """x o y = x^{nu(y)}."""
        return self.perms.T.copy()

    def conjugate_by(self, h: HolElement) -> "RegularSubgroup":
        """h^-1 N h as a regular subgroup."""
        P = self.perms
        ph = self.hol.perm(h)
        phinv = np.argsort(ph)
        conj = ph[P[:, phinv]]
        order = np.argsort(conj[:, 0])
        conj = conj[order]
        hol = self.hol
        G = hol.group
        alpha_rows = G.table[conj, G.inverse[np.arange(G.order)][:, None]]
        alpha = np.array([hol.aut.index(r) for r in alpha_rows], dtype=np.int64)
        if (alpha < 0).any():
            raise InvariantError("conjugate left the holomorph")
        return RegularSubgroup(hol, alpha)


def _normalizes(N: RegularSubgroup, ph: np.ndarray) -> bool:
    P = N.perms
    phinv = np.argsort(ph)
    conj = ph[P[:, phinv]]
    return bool((P[conj[:, 0]] == conj).all())


def normalized_by(N: RegularSubgroup, elements) -> bool:
    return all(_normalizes(N, N.hol.perm(h)) for h in elements)


def is_normalized_by_rho(N: RegularSubgroup) -> bool:
    hol = N.hol
    return normalized_by(N, [hol.rho(g) for g in N.group.generators])


def is_normalized_by_aut(N: RegularSubgroup) -> bool:
    hol = N.hol
    return normalized_by(N, [hol.beta(a) for a in hol.aut.generators])


def is_normal_in_hol(N: RegularSubgroup) -> bool:
    return is_normalized_by_rho(N) and is_normalized_by_aut(N)


def normalizer_in_hol(N: RegularSubgroup):
    """(elements of N_Hol(N), index in Hol)."""
    hol = N.hol
    P = N.perms
    members = []
    for idx, ph in enumerate(hol.all_perms):
        phinv = np.argsort(ph)
        conj = ph[P[:, phinv]]
        if (P[conj[:, 0]] == conj).all():
            members.append(HolElement(*divmod(idx, N.group.order)))
    if hol.order % len(members):
        raise InvariantError("normalizer order does not divide |Hol|")
    return members, hol.order // len(members)


def normalizer_index(N: RegularSubgroup) -> int:
    """|Hol : N_Hol(N)|, as the size of the conjugacy class of N."""
    gens = N.hol.generators()
    seen = {N.key(): N}
    todo = [N]
    while todo:
        M = todo.pop()
        for h in gens:
            C = M.conjugate_by(h)
            if C.key() not in seen:
                seen[C.key()] = C
                todo.append(C)
    return len(seen)


_REG_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, list]" = weakref.WeakKeyDictionary()


def enumerate_regular_subgroups(G: FiniteGroup) -> list[RegularSubgroup]:
    """All regular subgroups of Hol(G), sorted by their gamma index arrays."""
    cached = _REG_CACHE.get(G)
    if cached is None:
        hol = build_holomorph(G)
        found = _kernels.search_regular(G.table, hol.aut.maps, hol.aut.comp)
        if len(found):
            found = found[np.lexsort(found.T[::-1])]
        cached = [RegularSubgroup(hol, row) for row in found]
        _REG_CACHE[G] = cached
    return list(cached)


def rho_subgroup(G: FiniteGroup) -> RegularSubgroup:
    return RegularSubgroup(build_holomorph(G), np.zeros(G.order, dtype=np.int64))


def circle_group(N: RegularSubgroup) -> FiniteGroup:
    return FiniteGroup(N.circle_table(), name="circle")


@dataclass
class TGResult:
    order_direct: int | None
    order_miller: int | None
    members: list  # the regular subgroups making up H(G)

    @property
    def agree(self) -> bool | None:
        if self.order_direct is None or self.order_miller is None:
            return None
        return self.order_direct == self.order_miller


DIRECT_BOUND = 8


def tg_direct(G: FiniteGroup) -> int:
    """|N_S(G)(Hol(G)) / Hol(G)| by scanning all of S(G)."""
    n = G.order
    if n > DIRECT_BOUND:
        raise HypothesisError(f"direct T(G) method is limited to |G| <= {DIRECT_BOUND}")
    hol = build_holomorph(G)
    keys = np.sort(_kernels.perm_keys(hol.all_perms))
    gens = np.array([hol.perm(h) for h in hol.generators()] or [np.arange(n)], dtype=np.int64)
    count = _kernels.normalizer_count(n, gens, keys)
    if count % hol.order:
        raise InvariantError("normalizer order is not a multiple of |Hol(G)|")
    return count // hol.order


def miller_set(G: FiniteGroup) -> list[RegularSubgroup]:
    """Regular N <= Hol(G) with N isomorphic to G and N normal in Hol(G)."""
    out = []
    for N in enumerate_regular_subgroups(G):
        if is_normal_in_hol(N) and is_isomorphic(circle_group(N), G) is not None:
            out.append(N)
    return out


def multiple_holomorph_T(G: FiniteGroup, method: str = "both") -> TGResult:
    if method not in ("direct", "miller", "both"):
        raise HypothesisError(f"unknown T(G) method {method!r}")
    direct = tg_direct(G) if method in ("direct", "both") else None
    members = miller_set(G) if method in ("miller", "both") else []
    miller = len(members) if method in ("miller", "both") else None
    res = TGResult(direct, miller, members)
    if res.agree is False:
        raise InvariantError(f"|T(G)| direct={direct} but miller={miller}")
    return res
