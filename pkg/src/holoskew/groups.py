"""Finite groups as Cayley tables.

Elements are the indices ``0..n-1`` with 0 the identity.  Constructors
attach hashable labels (tuples for products, ints for cyclic groups) so
that callers can find named elements with :meth:`FiniteGroup.index_of`.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import HypothesisError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    name: str = ""
    labels: tuple | None = None
    parts: dict = field(default_factory=dict)

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.size == 0:
            raise HypothesisError(f"group table must be a non-empty square array, got shape {table.shape}")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise HypothesisError("group table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
            raise HypothesisError("index 0 is not a two-sided identity")
        rows_ok = (np.sort(table, axis=1) == ar).all()
        cols_ok = (np.sort(table, axis=0) == ar[:, None]).all()
        if not (rows_ok and cols_ok):
            raise HypothesisError("group table is not a Latin square")
        bad = _kernels.assoc_violation(table)
        if bad is not None:
            raise HypothesisError(f"group table is not associative at {bad}", witness=bad)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        if self.labels is not None and len(self.labels) != n:
            raise HypothesisError("label count does not match the order")

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1)
        inv.setflags(write=False)
        return inv

    def product(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def conjugate(self, x: int, y: int) -> int:
        """x^y = y^-1 x y."""
        return int(self.table[self.table[self.inverse[y], x], y])

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        t, inv = self.table, self.inverse
        return int(t[t[inv[x], inv[y]], t[x, y]])

    def power(self, x: int, k: int) -> int:
        k %= self.element_orders[x]
        acc = 0
        for _ in range(k):
            acc = self.table[acc, x]
        return int(acc)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.ones(n, dtype=np.int64)
        cur = np.arange(n)
        alive = cur != 0
        k = 1
        while alive.any():
            k += 1
            cur = self.table[cur, np.arange(n)]
            hit = alive & (cur == 0)
            orders[hit] = k
            alive &= ~hit
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def exponent(self) -> int:
        return int(reduce(math.lcm, self.element_orders.tolist(), 1))

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels or ())}

    def index_of(self, label) -> int:
        return self._label_index[label]

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, picked greedily by largest closure."""
        gens: list[int] = []
        current = closure_members(self, [])
        by_order = sorted(range(self.order), key=lambda g: (-self.element_orders[g], g))
        while len(current) < self.order:
            best, best_set = None, current
            for g in by_order:
                if g in current:
                    continue
                cand = closure_members(self, list(current) + [g])
                if len(cand) > len(best_set):
                    best, best_set = g, cand
            gens.append(best)
            current = best_set
        return tuple(gens)

    @cached_property
    def order_profile(self) -> tuple:
        values, counts = np.unique(self.element_orders, return_counts=True)
        return tuple(zip(values.tolist(), counts.tolist()))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        object.__setattr__(self, "members", members)
        if not members or members[0] != 0:
            raise HypothesisError("subgroup must contain the identity")
        arr = np.array(members)
        prods = self.parent.table[np.ix_(arr, arr)]
        if not np.isin(prods, arr).all():
            raise HypothesisError("subset is not closed under the group operation")

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return int(x) in self._set

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _set(self):
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)


# ---------------------------------------------------------------------------
# subgroup machinery


def closure_members(G: FiniteGroup, seed: Iterable[int]) -> frozenset:
    current = np.unique(np.append(np.asarray(list(seed), dtype=np.int64), 0))
    while True:
        grown = np.unique(G.table[np.ix_(current, current)])
        if len(grown) == len(current):
            return frozenset(current.tolist())
        current = grown


def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(closure_members(G, seed)))


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    arr = np.array(S.members)
    conj = G.table[G.table[G.inverse[:, None], arr[None, :]], np.arange(G.order)[:, None]]
    return bool(np.isin(conj, arr).all())


def center(G: FiniteGroup) -> Subgroup:
    mask = (G.table == G.table.T).all(axis=1)
    return Subgroup(G, tuple(np.flatnonzero(mask).tolist()))


def commutator_table(G: FiniteGroup) -> np.ndarray:
    t, inv = G.table, G.inverse
    return t[t[inv[:, None], inv[None, :]], t]


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    return subgroup_closure(G, np.unique(commutator_table(G)).tolist())


def centralizer(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    elems = np.asarray(list(elements), dtype=np.int64)
    mask = (G.table[:, elems] == G.table[elems, :].T).all(axis=1)
    return Subgroup(G, tuple(np.flatnonzero(mask).tolist()))


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, by repeatedly joining cyclic subgroups."""
    cyclic = {closure_members(G, [g]) for g in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for S in frontier:
            for C in cyclic:
                if C <= S:
                    continue
                J = closure_members(G, S | C)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    return [Subgroup(G, tuple(s)) for s in sorted(found, key=lambda s: (len(s), sorted(s)))]


def maximal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    proper = [S for S in all_subgroups(G) if S.order < G.order]
    sets = [S._set for S in proper]
    return [S for S, s in zip(proper, sets)
            if not any(s < t for t in sets)]


def frattini(G: FiniteGroup) -> Subgroup:
    maxes = maximal_subgroups(G)
    if not maxes:
        return trivial(G)
    common = reduce(lambda a, b: a & b, (S._set for S in maxes))
    return Subgroup(G, tuple(common))


def factorizes(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """True when every element of G is a product h k."""
    prods = G.table[np.ix_(np.array(H.members), np.array(K.members))]
    return len(np.unique(prods)) == G.order


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return Subgroup(A.parent, tuple(A._set & B._set))


@dataclass(frozen=True, eq=False)
class Quotient:
    group: FiniteGroup
    projection: np.ndarray
    representatives: np.ndarray


def quotient(G: FiniteGroup, N: Subgroup) -> Quotient:
    """G/N with cosets numbered by their smallest element."""
    if not is_normal(G, N):
        raise HypothesisError("quotient requires a normal subgroup")
    arr = np.array(N.members)
    coset_min = G.table[:, arr].min(axis=1)
    reps = np.unique(coset_min)
    proj = np.searchsorted(reps, coset_min)
    qtable = proj[G.table[np.ix_(reps, reps)]]
    Q = FiniteGroup(qtable, name=f"{G.name}/N" if G.name else "")
    return Quotient(Q, proj, reps)


# ---------------------------------------------------------------------------
# homomorphism search (isomorphisms and automorphisms)


def _word_tree(G: FiniteGroup, gens: Sequence[int]):
    """BFS spanning tree of <gens>: list of (element, parent, gen position)."""
    seen = {0}
    order = [(0, -1, -1)]
    i = 0
    while i < len(order):
        x = order[i][0]
        for pos, g in enumerate(gens):
            y = int(G.table[x, g])
            if y not in seen:
                seen.add(y)
                order.append((y, x, pos))
        i += 1
    return order


def _extend(G: FiniteGroup, H: FiniteGroup, tree, gen_images):
    img = {0: 0}
    for y, parent, pos in tree[1:]:
        img[y] = int(H.table[img[parent], gen_images[pos]])
    return img


def _partial_ok(G, H, tree, img) -> bool:
    elems = np.array([t[0] for t in tree])
    lut = np.full(G.order, -1, dtype=np.int64)
    lut[elems] = [img[e] for e in elems]
    src = lut[G.table[np.ix_(elems, elems)]]
    dst = H.table[np.ix_(lut[elems], lut[elems])]
    if not (src == dst).all():
        return False
    return len(set(lut[elems].tolist())) == len(elems)


def homomorphism_search(G: FiniteGroup, H: FiniteGroup, first_only=False):
    """Yield bijective homomorphisms G -> H as image arrays.

    Backtracks over images of ``G.generators``, matching element orders
    and verifying the partial map on each prefix subgroup.
    """
    if G.order != H.order:
        return
    gens = list(G.generators)
    trees = [_word_tree(G, gens[: k + 1]) for k in range(len(gens))]
    by_order: dict[int, list[int]] = {}
    for h in range(H.order):
        by_order.setdefault(int(H.element_orders[h]), []).append(h)
    candidates = [by_order.get(int(G.element_orders[g]), []) for g in gens]

    def rec(k, chosen):
        if k == len(gens):
            img = _extend(G, H, trees[-1], chosen)
            yield np.array([img[x] for x in range(G.order)], dtype=np.int64)
            return
        for c in candidates[k]:
            trial = chosen + [c]
            img = _extend(G, H, trees[k], trial)
            if _partial_ok(G, H, trees[k], img):
                yield from rec(k + 1, trial)

    if G.order == 1:
        yield np.zeros(1, dtype=np.int64)
        return
    for images in rec(0, []):
        yield images
        if first_only:
            return


def invariants(G: FiniteGroup) -> tuple:
    return (G.order, G.is_abelian, G.order_profile, center(G).order,
            derived_subgroup(G).order)


def is_isomorphic(G1: FiniteGroup, G2: FiniteGroup) -> np.ndarray | None:
    """An isomorphism G1 -> G2 as an image array, or None."""
    if invariants(G1) != invariants(G2):
        return None
    return next(homomorphism_search(G1, G2, first_only=True), None)


# ---------------------------------------------------------------------------
# constructors


@dataclass(frozen=True)
class GroupSpec:
    """A constructor descriptor; ``args`` are ints, lists, or nested specs."""

    kind: str
    args: tuple = ()
    text: str = ""

    def __str__(self):
        return self.text or f"{self.kind}{self.args}"


def from_elements(elements: Sequence, mul, name="", parts=None) -> FiniteGroup:
    """Build a group from labels (identity first) and a product function."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[mul(a, b)]
    return FiniteGroup(table, name=name, labels=tuple(elements), parts=parts or {})


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise HypothesisError("cyclic group needs n >= 1")
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, name=f"c{n}", labels=tuple(range(n)))


def abelian(factors: Sequence[int]) -> FiniteGroup:
    factors = [int(f) for f in factors]
    if not factors or min(factors) < 1:
        raise HypothesisError("abelian group needs positive invariant factors")
    elements = list(itertools.product(*[range(f) for f in factors]))
    G = from_elements(elements,
                      lambda a, b: tuple((x + y) % f for x, y, f in zip(a, b, factors)),
                      name="ab" + "x".join(map(str, factors)))
    return G


def dihedral(n: int) -> FiniteGroup:
    """Order 2n; label (i, j) is r^i s^j."""
    if n < 1:
        raise HypothesisError("dihedral group needs n >= 1")
    elements = [(i, j) for j in range(2) for i in range(n)]

    def mul(a, b):
        (i1, j1), (i2, j2) = a, b
        return ((i1 + (-i2 if j1 else i2)) % n, (j1 + j2) % 2)

    G = from_elements(elements, mul, name=f"d{n}")
    return G


def quaternion(order: int) -> FiniteGroup:
    """Generalized quaternion of order 2^k (k >= 3); label (i, j) is a^i b^j."""
    k = order.bit_length() - 1
    if order != 1 << k or k < 3:
        raise HypothesisError("quaternion group order must be 2^k with k >= 3")
    m = order // 2  # order of a
    elements = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        if j1 == 0:
            return ((i1 + i2) % m, j2)
        # b a^i2 = a^-i2 b, and b^2 = a^(m/2)
        i = (i1 - i2) % m
        if j2 == 0:
            return (i, 1)
        return ((i + m // 2) % m, 0)

    return from_elements(elements, mul, name=f"q{order}")


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/p; label (a, b, c)."""
    if p < 2:
        raise HypothesisError("heisenberg(p) needs p >= 2")
    elements = list(itertools.product(range(p), repeat=3))

    def mul(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    return from_elements(elements, mul, name=f"heis{p}")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def modular_ext(p: int, n: int) -> FiniteGroup:
    """<K, b : b^p = a_{n-1}, b^-1 a b = a^beta> with K elementary abelian p^n.

    beta sends a_i to a_i a_{i+1}.  Labels are (v, f) for a^v b^f with v the
    exponent vector of a_0..a_{n-1}.  ``parts`` holds K and H = <b>.
    """
    if not (_is_prime(p) and p > n >= 2):
        raise HypothesisError("modular_ext(p, n) requires p prime and p > n >= 2")
    # b a b^-1 = beta^-1(a); beta = 1 + shift, so beta^-1 = sum (-shift)^k
    shift = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        shift[i, i + 1] = 1  # row vector v -> v @ M sends a_i to a_{i+1}
    beta = (np.eye(n, dtype=np.int64) + shift) % p
    beta_inv = np.eye(n, dtype=np.int64)
    term = np.eye(n, dtype=np.int64)
    for _ in range(1, n):
        term = (-term @ shift) % p
        beta_inv = (beta_inv + term) % p
    assert ((beta @ beta_inv) % p == np.eye(n)).all()
    powers = [np.eye(n, dtype=np.int64)]
    for _ in range(1, p):
        powers.append((powers[-1] @ beta_inv) % p)
    top = np.zeros(n, dtype=np.int64)
    top[n - 1] = 1

    elements = [(v, f) for f in range(p) for v in itertools.product(range(p), repeat=n)]

    def mul(x, y):
        (v, f), (w, g) = x, y
        moved = (np.array(w) @ powers[f]) % p
        total = (np.array(v) + moved) % p
        e = f + g
        if e >= p:
            total = (total + top) % p
            e -= p
        return (tuple(int(t) for t in total), e)

    G = from_elements(elements, mul, name=f"modext({p},{n})")
    zero = tuple([0] * n)
    K = tuple(G.index_of((v, 0)) for v in itertools.product(range(p), repeat=n))
    b = G.index_of((zero, 1))
    H = tuple(sorted(closure_members(G, [b])))
    object.__setattr__(G, "parts", {"K": K, "H": H, "b": b})
    return G


def _compose_maps(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return b[a]


def semidirect(K: FiniteGroup, H: FiniteGroup, action: dict) -> FiniteGroup:
    """K semidirect H with h^-1 k h = k^{action(h)}.

    ``action`` maps each generator of H (an index) to an image array of an
    automorphism of K.  Labels are (h, k) for the product h k with h, k
    indices into H and K.  ``parts`` holds K, H as index tuples.
    """
    from .perms import is_automorphism

    for h, a in action.items():
        if not is_automorphism(K, np.asarray(a)):
            raise HypothesisError(f"action image of H-element {h} is not an automorphism of K")
    gens = list(action)
    if closure_members(H, gens) != frozenset(range(H.order)):
        raise HypothesisError("action must be given on a generating set of H")
    # extend to a right action phi: H -> Aut(K) via a word tree
    tree = _word_tree(H, gens)
    phi = {0: np.arange(K.order)}
    for y, parent, pos in tree[1:]:
        phi[y] = _compose_maps(phi[parent], np.asarray(action[gens[pos]]))
    for x in range(H.order):
        for y in range(H.order):
            if not np.array_equal(phi[int(H.table[x, y])], _compose_maps(phi[x], phi[y])):
                raise HypothesisError("action is not a homomorphism H -> Aut(K) "
                                      "(order mismatch)", witness=(x, y))
    elements = [(h, k) for h in range(H.order) for k in range(K.order)]

    def mul(x, y):
        (h1, k1), (h2, k2) = x, y
        # h1 k1 h2 k2 = h1 h2 (k1)^{h2} k2
        return (int(H.table[h1, h2]), int(K.table[phi[h2][k1], k2]))

    G = from_elements(elements, mul)
    parts = {
        "K": tuple(G.index_of((0, k)) for k in range(K.order)),
        "H": tuple(G.index_of((h, 0)) for h in range(H.order)),
    }
    object.__setattr__(G, "parts", parts)
    return G


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    elements = [(a, b) for a in range(A.order) for b in range(B.order)]
    G = from_elements(elements, lambda x, y: (int(A.table[x[0], y[0]]), int(B.table[x[1], y[1]])))
    object.__setattr__(G, "parts", {
        "A": tuple(G.index_of((a, 0)) for a in range(A.order)),
        "B": tuple(G.index_of((0, b)) for b in range(B.order)),
    })
    return G


def power_automorphism(K: FiniteGroup, r: int) -> np.ndarray:
    """x -> x^r; an automorphism when K is abelian and gcd(r, exp K) = 1."""
    return np.array([K.power(x, r) for x in range(K.order)], dtype=np.int64)


def alternating4() -> FiniteGroup:
    V = abelian([2, 2])
    # cycle the three involutions (1,0) -> (0,1) -> (1,1) -> (1,0)
    img = {(0, 0): (0, 0), (1, 0): (0, 1), (0, 1): (1, 1), (1, 1): (1, 0)}
    act = np.array([V.index_of(img[lab]) for lab in V.labels])
    return semidirect(V, cyclic(3), {1: act})


def read_group_file(path) -> FiniteGroup:
    """Parse the raw table format: n, then n rows of n indices."""
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise HypothesisError(f"{path}: empty group file")
    try:
        n = int(lines[0].split()[0])
    except ValueError:
        raise HypothesisError(f"{path}: line 1: expected the order n") from None
    if len(lines) != n + 1:
        raise HypothesisError(f"{path}: expected {n} table rows, found {len(lines) - 1}")
    table = np.empty((n, n), dtype=np.int64)
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != n:
            raise HypothesisError(f"{path}: line {i + 2}: expected {n} entries, found {len(parts)}")
        for j, tok in enumerate(parts):
            try:
                val = int(tok)
            except ValueError:
                raise HypothesisError(f"{path}: line {i + 2}, column {j + 1}: not an integer: {tok!r}") from None
            if not 0 <= val < n:
                raise HypothesisError(f"{path}: line {i + 2}, column {j + 1}: index {val} out of range")
            table[i, j] = val
    ar = np.arange(n)
    for i in range(n):
        if table[0, i] != i:
            raise HypothesisError(f"{path}: line 2, column {i + 1}: row of 0 is not the identity row")
        if table[i, 0] != i:
            raise HypothesisError(f"{path}: line {i + 2}, column 1: column of 0 is not the identity column")
    for i in range(n):
        if not np.array_equal(np.sort(table[i]), ar):
            raise HypothesisError(f"{path}: line {i + 2}: row is not a permutation")
    for j in range(n):
        if not np.array_equal(np.sort(table[:, j]), ar):
            raise HypothesisError(f"{path}: column {j + 1}: column is not a permutation")
    bad = _kernels.assoc_violation(table)
    if bad is not None:
        i, j, k = bad
        raise HypothesisError(f"{path}: not associative: ({i}*{j})*{k} != {i}*({j}*{k}); "
                              f"see line {i + 2}, column {j + 1}", witness=bad)
    return FiniteGroup(table, name=f"file:{path}")


def write_group_file(G: FiniteGroup, path) -> None:
    rows = [str(G.order)] + [" ".join(map(str, row)) for row in G.table.tolist()]
    Path(path).write_text("\n".join(rows) + "\n")


# ---------------------------------------------------------------------------
# spec strings


def parse_spec(text: str) -> GroupSpec:
    """Parse compact strings such as ``c4``, ``ab2x2``, ``sd(c9,c2,inv)``."""
    text = text.strip()
    if text.startswith("file:"):
        return GroupSpec("raw", (text[5:],), text)
    pos = 0

    def parse_item():
        nonlocal pos
        m = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+)").match(text, pos)
        if not m:
            raise HypothesisError(f"bad group spec {text!r} at position {pos}")
        word = m.group(1)
        pos = m.end()
        if pos < len(text) and text[pos] == "(":
            pos += 1
            args = []
            while True:
                args.append(parse_item())
                while pos < len(text) and text[pos] == " ":
                    pos += 1
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                    continue
                if pos < len(text) and text[pos] == ")":
                    pos += 1
                    break
                raise HypothesisError(f"bad group spec {text!r}: expected ',' or ')' at {pos}")
            return (word, args)
        return word

    item = parse_item()
    if pos != len(text.rstrip()):
        raise HypothesisError(f"bad group spec {text!r}: trailing input at {pos}")
    return _to_spec(item, text)


def _ints(word, args, count) -> tuple:
    if len(args) != count or not all(isinstance(a, str) and a.isdigit() for a in args):
        raise HypothesisError(f"{word}(...) takes {count} integer argument(s), got {args!r}")
    return tuple(int(a) for a in args)


def _to_spec(item, text="") -> GroupSpec:
    if isinstance(item, tuple):
        word, args = item
        if word in ("sd", "semidirect"):
            if len(args) != 3:
                raise HypothesisError("sd(K,H,action) takes three arguments")
            return GroupSpec("semidirect", (_to_spec(args[0]), _to_spec(args[1]), args[2]), text)
        if word in ("dp", "direct"):
            return GroupSpec("direct", tuple(_to_spec(a) for a in args), text)
        if word in ("modext", "modular_ext"):
            return GroupSpec("modular_ext", _ints(word, args, 2), text)
        if word in ("heisenberg", "heis"):
            return GroupSpec("heisenberg", _ints(word, args, 1), text)
        if word in ("cyclic", "dihedral", "quaternion"):
            return GroupSpec(word, _ints(word, args, 1), text)
        if word in ("abelian",):
            return GroupSpec("abelian", (_ints(word, args, len(args)),), text)
        raise HypothesisError(f"unknown group constructor {word!r}")
    word = item
    text = text or word
    for pattern, kind in ((r"c(\d+)", "cyclic"), (r"d(\d+)", "dihedral"),
                          (r"q(\d+)", "quaternion"), (r"heis(\d+)", "heisenberg")):
        m = re.fullmatch(pattern, word)
        if m:
            return GroupSpec(kind, (int(m.group(1)),), text)
    m = re.fullmatch(r"ab(\d+(?:x\d+)*)", word)
    if m:
        return GroupSpec("abelian", (tuple(int(f) for f in m.group(1).split("x")),), text)
    if word == "a4":
        return GroupSpec("a4", (), text)
    raise HypothesisError(f"unknown group spec {word!r}")


def _action_for(K: FiniteGroup, H: FiniteGroup, act) -> dict:
    if isinstance(act, dict):
        return act
    if not isinstance(act, str):
        raise HypothesisError(f"unsupported semidirect action {act!r}")
    if len(H.generators) != 1:
        raise HypothesisError("named actions need a cyclic H")
    gen = H.generators[0]
    if H.labels is not None and 1 in H._label_index:
        gen = H.index_of(1)
    if act == "inv":
        if not K.is_abelian:
            raise HypothesisError("inversion is an automorphism only of abelian K")
        img = K.inverse.copy()
    else:
        m = re.fullmatch(r"pow(\d+)", act)
        if not m:
            raise HypothesisError(f"unknown action {act!r}; use inv or pow<r>")
        r = int(m.group(1))
        if not K.is_abelian or math.gcd(r, K.exponent) != 1:
            raise HypothesisError(f"x -> x^{r} is not an automorphism of {K.name}")
        img = power_automorphism(K, r)
    return {gen: img}


def make_group(spec) -> FiniteGroup:
    """Build a group from a :class:`GroupSpec` or a spec string."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kind, args = spec.kind, spec.args
    if kind == "cyclic":
        G = cyclic(*args)
    elif kind == "abelian":
        G = abelian(args[0])
    elif kind == "dihedral":
        G = dihedral(*args)
    elif kind == "quaternion":
        G = quaternion(*args)
    elif kind == "heisenberg":
        G = heisenberg(*args)
    elif kind == "modular_ext":
        G = modular_ext(*args)
    elif kind == "semidirect":
        K, H = make_group(args[0]), make_group(args[1])
        G = semidirect(K, H, _action_for(K, H, args[2]))
    elif kind == "direct":
        G = reduce(direct_product, [make_group(a) for a in args])
    elif kind == "a4":
        G = alternating4()
    elif kind == "raw":
        G = read_group_file(args[0])
    else:
        raise HypothesisError(f"unknown group kind {kind!r}")
    if spec.text:
        object.__setattr__(G, "name", spec.text)
    return G
