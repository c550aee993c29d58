"""Permutations of the element set and the automorphism group.

A permutation is an int array ``p`` with ``x^p = p[x]``.  Permutations act
on the right, so ``compose(p, q)`` means "p, then q".
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import HypothesisError
from .groups import FiniteGroup, homomorphism_search


def identity_perm(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.int64)


def compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    if len(p) != len(q):
        raise HypothesisError(f"degree mismatch: {len(p)} vs {len(q)}")
    return q[p]


def apply(p: np.ndarray, x: int) -> int:
    return int(p[x])


def perm_inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p))
    return inv


def conjugate_perm(p: np.ndarray, by: np.ndarray) -> np.ndarray:
    """by^-1 p by."""
    return by[p[perm_inverse(by)]]


def is_permutation(p) -> bool:
    p = np.asarray(p)
    return p.ndim == 1 and np.array_equal(np.sort(p), np.arange(len(p)))


def rho(G: FiniteGroup, g: int) -> np.ndarray:
    """x -> x g."""
    return G.table[:, g].copy()


def lambda_rep(G: FiniteGroup, g: int) -> np.ndarray:
    """x -> g^-1 x, a homomorphism under left-to-right composition."""
    return G.table[G.inverse[g], :].copy()


def inv_map(G: FiniteGroup) -> np.ndarray:
    return np.array(G.inverse, dtype=np.int64)


def inner(G: FiniteGroup, y: int) -> np.ndarray:
    """x -> y^-1 x y."""
    return G.table[G.table[G.inverse[y], :], y].copy()


def is_endomorphism(G: FiniteGroup, images) -> bool:
    images = np.asarray(images, dtype=np.int64)
    return _kernels.hom_violation(G.table, G.table, images) is None


def is_automorphism(G: FiniteGroup, images) -> bool:
    images = np.asarray(images, dtype=np.int64)
    if images.shape != (G.order,) or not is_permutation(images) or images[0] != 0:
        return False
    return is_endomorphism(G, images)


class AutGroup:
    """All automorphisms of a group, sorted lexicographically by images.

    The identity is always row 0 of :attr:`maps`.
    """

    def __init__(self, group: FiniteGroup, maps: np.ndarray):
        order = np.lexsort(maps.T[::-1])
        maps = np.ascontiguousarray(maps[order], dtype=np.int64)
        maps.setflags(write=False)
        self.group = group
        self.maps = maps
        self._index = {row.tobytes(): i for i, row in enumerate(maps)}

    def __len__(self):
        return len(self.maps)

    def __repr__(self):
        return f"AutGroup({self.group.name or '?'}, order={len(self)})"

    def index(self, images) -> int:
        """Index of an automorphism, or -1 if ``images`` is not one."""
        return self._index.get(np.asarray(images, dtype=np.int64).tobytes(), -1)

    def __contains__(self, images) -> bool:
        return self.index(images) >= 0

    @cached_property
    def comp(self) -> np.ndarray:
        """``comp[a, b]`` is the index of "a, then b"."""
        m, n = self.maps.shape
        if m > 4096:
            raise HypothesisError(f"|Aut| = {m} is too large for a composition table")
        gens = list(self.group.generators)
        # an automorphism is fixed by its images of the generators
        weights = n ** np.arange(len(gens), dtype=np.int64)
        keys = self.maps[:, gens] @ weights
        sorter = np.argsort(keys)
        out = np.empty((m, m), dtype=np.int64)
        for b in range(m):
            imgs = self.maps[b][self.maps[:, gens]]  # a then b, on generators
            k = imgs @ weights
            out[:, b] = sorter[np.searchsorted(keys, k, sorter=sorter)]
        out.setflags(write=False)
        return out

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.array([self.index(perm_inverse(p)) for p in self.maps], dtype=np.int64)
        inv.setflags(write=False)
        return inv

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set (greedy closure growth)."""
        m = len(self)
        if m == 1:
            return ()
        gens: list[int] = []
        reached = {0}
        while len(reached) < m:
            best, best_set = None, reached
            for a in range(m):
                if a in reached:
                    continue
                cand = self._close(gens + [a])
                if len(cand) > len(best_set):
                    best, best_set = a, cand
                    if len(cand) == m:
                        break
            gens.append(best)
            reached = best_set
        return tuple(gens)

    def _close(self, gens):
        seen = {0}
        frontier = [0]
        comp = self.comp
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = int(comp[a, g])
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen

    def inner_indices(self) -> np.ndarray:
        G = self.group
        return np.array([self.index(inner(G, y)) for y in range(G.order)], dtype=np.int64)


_AUT_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, AutGroup]" = weakref.WeakKeyDictionary()


def automorphism_group(G: FiniteGroup) -> AutGroup:
    """The full automorphism group, computed once per group object."""
    cached = _AUT_CACHE.get(G)
    if cached is None:
        maps = np.array(list(homomorphism_search(G, G)), dtype=np.int64).reshape(-1, G.order)
        cached = AutGroup(G, maps)
        _AUT_CACHE[G] = cached
    return cached
