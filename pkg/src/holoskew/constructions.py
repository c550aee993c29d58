"""Constructions of bi-skew braces.

Constructors take an optional ``log`` list and append one line per
hypothesis they check, so a report can show exactly what was verified.
Hypothesis failures raise :class:`~holoskew.errors.HypothesisError` with
a witness.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .biskew import (anti_hom_witness, biskew_report, two_of_three_abelian)
from .errors import HypothesisError, InvariantError
from .gamma import (GammaFunction, RelativeGammaFunction, opposite_gamma,
                    trivial_gamma, validate_rgf)
from .groups import (FiniteGroup, Quotient, Subgroup, center, closure_members,
                     derived_subgroup, factorizes, intersection, is_normal, quotient,
                     subgroup_closure)
from .perms import automorphism_group, inner, is_automorphism, perm_inverse


def _note(log, text):
    if log is not None:
        log.append(text)


def _require(cond, message, log=None, witness=None):
    if not cond:
        _note(log, f"FAIL {message}")
        raise HypothesisError(message, witness=witness)
    _note(log, f"ok   {message}")


def _as_subgroup(G, S) -> Subgroup:
    if isinstance(S, Subgroup):
        return S
    return subgroup_closure(G, S)


# --- lifting --------------------------------------------------------------------


def _lift(G: FiniteGroup, H: Subgroup, K: Subgroup, value_of, log=None) -> np.ndarray:
    """gamma(h k) = value_of(h), checked over every factorization h k."""
    n = G.order
    maps = np.full((n, n), -1, dtype=np.int64)
    source = np.full(n, -1, dtype=np.int64)
    kset = K._set
    for h in H:
        val = np.asarray(value_of(h), dtype=np.int64)
        hinv = G.inverse[h]
        for g in range(n):
            if int(G.table[hinv, g]) not in kset:
                continue
            if source[g] < 0:
                maps[g] = val
                source[g] = h
            elif not np.array_equal(maps[g], val):
                _require(False, "gamma(hk) is well defined over all factorizations",
                         log, witness=(g, int(source[g]), h))
    _require((source >= 0).all(), "every element factors as h k", log)
    _note(log, "ok   gamma(hk) is well defined over all factorizations")
    return maps


def lift_rgf(G: FiniteGroup, H, K, gamma_h: RelativeGammaFunction | dict,
             log=None) -> GammaFunction:
    """gamma(h k) = gamma'(h) for an RGF gamma' on H.

    Needs G = HK, gamma' trivial on H n K, and K invariant under every
    gamma'(h) iota(h).
    """
    H, K = _as_subgroup(G, H), _as_subgroup(G, K)
    values = gamma_h.values if isinstance(gamma_h, RelativeGammaFunction) else gamma_h
    values = {int(h): np.asarray(v, dtype=np.int64) for h, v in values.items()}
    _require(set(values) == set(H.members), "gamma' is defined exactly on H", log)
    _require(factorizes(G, H, K), "G = H K", log)
    ok, wit = validate_rgf(G, H, values)
    _require(ok, "gamma' is a relative gamma function on H", log, witness=wit)
    ident = np.arange(G.order)
    HK = intersection(H, K)
    bad = [h for h in HK if not np.array_equal(values[h], ident)]
    _require(not bad, "gamma'(H n K) = 1", log, witness=tuple(bad[:1]))
    karr = np.array(K.members)
    for h in H:
        composite = inner(G, h)[values[h]]  # gamma'(h) then iota(h)
        if not np.isin(composite[karr], karr).all():
            _require(False, "K is invariant under gamma'(h) iota(h)", log, witness=(h,))
    _note(log, "ok   K is invariant under gamma'(h) iota(h)")
    maps = _lift(G, H, K, values.__getitem__, log)
    gamma = GammaFunction(G, maps).validate()
    _note(log, "ok   lifted map is a gamma function")
    ker_h = [h for h in H if np.array_equal(values[h], ident)]
    expected = closure_members(G, ker_h + list(K.members))
    if set(gamma.kernel()) != set(expected):
        raise InvariantError("ker(gamma) != ker(gamma') K")
    _note(log, "ok   ker(gamma) = ker(gamma') K")
    return gamma


def _check_semidirect(G, K, H, log):
    _require(is_normal(G, K), "K is normal in G", log)
    _require(factorizes(G, H, K), "G = H K", log)
    _require(intersection(H, K).order == 1, "H n K = 1", log)


def childs_gamma(G: FiniteGroup, K, H, log=None) -> GammaFunction:
    """h k -> iota(h^-1) on a semidirect product of K by H."""
    K, H = _as_subgroup(G, K), _as_subgroup(G, H)
    _check_semidirect(G, K, H, log)
    maps = _lift(G, H, K, lambda h: inner(G, G.inv(h)), log)
    gamma = GammaFunction(G, maps).validate()
    _note(log, "ok   result is a gamma function")
    return gamma


class CentralResult(NamedTuple):
    gamma: GammaFunction
    bar_is_bi_gf: bool
    h_normal: bool
    bar_kernel_normal: bool  # ker(bar gamma) = H (K n Z(G)) is normal in G


def central_gamma(G: FiniteGroup, K, H, log=None, full_reports: bool | None = None):
    """gamma(h k) = iota(h^-1) when H n K is central.

    Returns a ``CentralResult``.  The kernel of bar(gamma) is always
    H (K n Z(G)), and bar(gamma) is a bi-GF exactly when that subgroup is
    normal; both facts are checked here.  ``h_normal`` is reported as is and
    can differ from ``bar_is_bi_gf`` when K n Z(G) is not inside H (d4 with
    K = <r>, H = <s> is the smallest case).

    ``full_reports`` runs every bi-skew criterion; otherwise only the
    anti-homomorphism criterion is used.  By default the full reports run
    for |G| <= 64.
    """
    K, H = _as_subgroup(G, K), _as_subgroup(G, H)
    if full_reports is None:
        full_reports = G.order <= 64
    _require(is_normal(G, K), "K is normal in G", log)
    _require(factorizes(G, H, K), "G = H K", log)
    Z = center(G)
    HK = intersection(H, K)
    _require(all(x in Z for x in HK), "H n K <= Z(G)", log)
    maps = _lift(G, H, K, lambda h: inner(G, G.inv(h)), log)
    gamma = GammaFunction(G, maps).validate()
    _note(log, "ok   result is a gamma function")
    bar = opposite_gamma(gamma, check=full_reports)
    if full_reports:
        bi = biskew_report(gamma).is_biskew
        bar_bi = biskew_report(bar).is_biskew
    else:
        bi = anti_hom_witness(G, gamma.maps) is None
        bar_bi = anti_hom_witness(G, bar.maps) is None
    if not bi:
        raise InvariantError("central construction did not give a bi-GF")
    _note(log, "ok   result is a bi-GF")
    hz = subgroup_closure(G, list(H.members) + [x for x in K if x in Z])
    if set(bar.kernel()) != set(hz.members):
        raise InvariantError("ker(bar gamma) differs from H (K n Z(G))")
    h_normal = is_normal(G, H)
    hz_normal = is_normal(G, hz)
    _note(log, f"info bar(gamma) is a bi-GF: {bar_bi}; H normal in G: {h_normal}; "
               f"H (K n Z(G)) normal in G: {hz_normal}")
    if bar_bi != hz_normal:
        raise InvariantError("bar(gamma) bi-GF <=> ker(bar gamma) normal failed")
    return CentralResult(gamma, bar_bi, h_normal, hz_normal)


# --- compatible pairs -------------------------------------------------------


@dataclass
class CompatiblePairGroup:
    group: FiniteGroup
    K: Subgroup
    H: Subgroup
    members: list  # indices into Aut(G)
    tags: list  # (d, a) restrictions as dicts h -> h^d, k -> k^a

    def __len__(self):
        return len(self.members)

    def contains(self, images) -> bool:
        idx = automorphism_group(self.group).index(images)
        return idx in set(self.members)


def _restricted_inner(G, h, K):
    """iota(h) on K as a dict k -> h^-1 k h."""
    img = inner(G, h)
    return {k: int(img[k]) for k in K}


def compatible_pair_group(G: FiniteGroup, K, H) -> CompatiblePairGroup:
    """Automorphisms of G leaving H and K invariant, tagged by (d, a)."""
    K, H = _as_subgroup(G, K), _as_subgroup(G, H)
    _check_semidirect(G, K, H, None)
    aut = automorphism_group(G)
    harr, karr = np.array(H.members), np.array(K.members)
    members, tags = [], []
    for idx, beta in enumerate(aut.maps):
        if not (np.isin(beta[harr], harr).all() and np.isin(beta[karr], karr).all()):
            continue
        d = {int(h): int(beta[h]) for h in harr}
        a = {int(k): int(beta[k]) for k in karr}
        a_inv = {v: k for k, v in a.items()}
        for h in harr:
            # iota(h)^a = a^-1 iota(h) a must equal iota(h^d), both on K
            ih = _restricted_inner(G, int(h), K)
            ihd = _restricted_inner(G, d[int(h)], K)
            if any(a[ih[a_inv[k]]] != ihd[k] for k in karr.tolist()):
                raise InvariantError("an H,K-invariant automorphism violates iota(h)^a = iota(h^d)")
        members.append(idx)
        tags.append((d, a))
    mset = set(members)
    for i in members:
        for j in members:
            if int(aut.comp[i, j]) not in mset:
                raise InvariantError("compatible pairs are not closed under composition")
    return CompatiblePairGroup(G, K, H, members, tags)


def pair_automorphism(G: FiniteGroup, K, H, d, a) -> np.ndarray:
    """The map h k -> h^d k^a, given d on H and a on K (dicts or callables)."""
    K, H = _as_subgroup(G, K), _as_subgroup(G, H)
    d = d if callable(d) else d.__getitem__
    a = a if callable(a) else a.__getitem__
    images = np.full(G.order, -1, dtype=np.int64)
    for h in H:
        for k in K:
            images[G.table[h, k]] = G.table[d(h), a(k)]
    if not is_automorphism(G, images):
        raise HypothesisError("h k -> h^d k^a is not an automorphism of G")
    return images


def semi_gamma(G: FiniteGroup, K, H, gamma_h: dict, log=None) -> GammaFunction:
    """gamma(h k) = gamma'(h) for an anti-homomorphic RGF gamma' : H -> P."""
    K, H = _as_subgroup(G, K), _as_subgroup(G, H)
    _check_semidirect(G, K, H, log)
    values = {int(h): np.asarray(v, dtype=np.int64) for h, v in gamma_h.items()}
    P = compatible_pair_group(G, K, H)
    outside = [h for h, v in values.items() if not P.contains(v)]
    _require(not outside, "gamma'(H) lies in the compatible-pair subgroup P", log,
             witness=tuple(outside[:1]))
    for h1 in H:
        for h2 in H:
            lhs = values[int(G.table[h1, h2])]
            rhs = values[h1][values[h2]]  # gamma'(h2) then gamma'(h1)
            if not np.array_equal(lhs, rhs):
                _require(False, "gamma'(h1 h2) = gamma'(h2) gamma'(h1)", log, witness=(h1, h2))
    _note(log, "ok   gamma'(h1 h2) = gamma'(h2) gamma'(h1)")
    gamma = lift_rgf(G, H, K, values, log)
    if not biskew_report(gamma).is_biskew:
        raise InvariantError("semidirect construction did not give a bi-GF")
    _note(log, "ok   result is a bi-GF")
    return gamma


def power_pair_rgf(G: FiniteGroup, K, H, h: int, s: int, t: int, r: int) -> dict:
    """gamma'(h^i) = (iota(h)^-s on K, psi^t on H)^i with psi: x -> x^r on cyclic H."""
    K, H = _as_subgroup(G, K), _as_subgroup(G, H)
    conj = inner(G, h)
    conj_inv = perm_inverse(conj)
    a_img = np.arange(G.order)
    base = conj_inv if s >= 0 else conj
    for _ in range(abs(s)):
        a_img = base[a_img]
    d_img = np.arange(G.order)
    for _ in range(t):
        d_img = np.array([G.power(int(d_img[x]), r) for x in range(G.order)])
    step = pair_automorphism(G, K, H, lambda x: int(d_img[x]), lambda k: int(a_img[k]))
    values = {}
    cur = np.arange(G.order)
    x = 0
    for _ in range(G.element_orders[h]):
        values[x] = cur
        cur = step[cur]
        x = int(G.table[x, h])
    if set(values) != set(H.members):
        raise HypothesisError("h must generate H")
    return values


# --- bi-homomorphisms into the centre -------------------------------------------


@dataclass(frozen=True, eq=False)
class BiHom:
    group: FiniteGroup
    K: Subgroup
    quotient: Quotient
    table: np.ndarray  # [q1, q2] -> element of K (as an index of G)

    def value(self, x: int, y: int) -> int:
        p = self.quotient.projection
        return int(self.table[p[x], p[y]])


def validate_bihom(delta: BiHom) -> None:
    G, K = delta.group, delta.K
    Z = center(G)
    if not all(k in Z for k in K):
        raise HypothesisError("K is not central")
    T = delta.table
    if not np.isin(T, K.members).all():
        raise HypothesisError("Delta takes a value outside K")
    Q = delta.quotient.group.table
    lhs1 = T[Q]  # [q1, q2, q] -> Delta(q1 q2, q)
    rhs1 = G.table[T[:, None, :], T[None, :, :]]
    bad = np.argwhere(~(lhs1 == rhs1))
    if len(bad):
        raise HypothesisError("Delta is not a homomorphism in the first variable",
                              witness=tuple(int(v) for v in bad[0]))
    lhs2 = T[:, Q]  # [q, q1, q2] -> Delta(q, q1 q2)
    rhs2 = G.table[T[:, :, None], T[:, None, :]]
    bad = np.argwhere(~(lhs2 == rhs2))
    if len(bad):
        raise HypothesisError("Delta is not a homomorphism in the second variable",
                              witness=tuple(int(v) for v in bad[0]))


def delta_gamma(G: FiniteGroup, delta: BiHom, log=None) -> GammaFunction:
    """x^gamma(y) = Delta(xK, yK) x."""
    validate_bihom(delta)
    _note(log, "ok   Delta is a bi-homomorphism G/K x G/K -> K <= Z(G)")
    p = delta.quotient.projection
    vals = delta.table[p[None, :], p[:, None]]  # [y, x] -> Delta(xK, yK)
    maps = G.table[vals, np.arange(G.order)[None, :]]
    gamma = GammaFunction(G, maps).validate()
    _note(log, "ok   result is a gamma function")
    three = two_of_three_abelian(gamma)
    if three.count != 3:
        raise InvariantError(f"Delta gamma misses a two-of-three condition: {three.flags}")
    _note(log, "ok   homomorphism, abelian image and anti-homomorphism all hold")
    return gamma


def abelian_basis(A: FiniteGroup) -> list[int]:
    """Independent generators g_i with A = <g_1> x ... x <g_r>."""
    if not A.is_abelian:
        raise HypothesisError("abelian_basis needs an abelian group")
    order = sorted(range(1, A.order), key=lambda g: (-A.element_orders[g], g))

    def rec(chosen, span):
        if len(span) == A.order:
            return chosen
        for g in order:
            if g in span:
                continue
            new = closure_members(A, list(span) + [g])
            if len(new) == len(span) * A.element_orders[g]:
                res = rec(chosen + [g], new)
                if res is not None:
                    return res
        return None

    return rec([], frozenset([0])) or []


def _vectors(orders):
    return itertools.product(*[range(o) for o in orders])


def bilinear_delta(G: FiniteGroup, K, form, gens=None) -> BiHom:
    """Extend a form on generators of G/G'K bilinearly to Delta on G/K.

    ``form[i][j]`` is an element of K (an index of G).  ``gens`` are
    elements of G whose images generate G/G'K; by default a basis is used.
    """
    K = _as_subgroup(G, K)
    Z = center(G)
    if not all(k in Z for k in K):
        raise HypothesisError("K must lie in the centre")
    D = derived_subgroup(G)
    M = subgroup_closure(G, list(D.members) + list(K.members))
    ab = quotient(G, M)
    A = ab.group
    if gens is None:
        basis = abelian_basis(A)
        gens = [int(ab.representatives[b]) for b in basis]
    gq = [int(ab.projection[g]) for g in gens]
    orders = [int(A.element_orders[q]) for q in gq]
    form = np.asarray(form, dtype=np.int64).reshape(len(gens), len(gens))
    for i, j in itertools.product(range(len(gens)), repeat=2):
        if form[i, j] not in K:
            raise HypothesisError(f"form[{i}][{j}] is not in K")
        if math.gcd(orders[i], orders[j]) % G.element_orders[form[i, j]]:
            raise HypothesisError(f"form[{i}][{j}] has order not dividing gcd of generator orders "
                                  "(exponent mismatch)", witness=(i, j))

    def word(vec):
        acc = 0
        for q, e in zip(gq, vec):
            acc = int(A.table[acc, A.power(q, e)])
        return acc

    vecs = list(_vectors(orders))
    where = {}
    for v in vecs:
        where.setdefault(word(v), []).append(v)
    if len(where) != A.order:
        raise HypothesisError("gens do not generate G/G'K")
    small = np.full((A.order, A.order), -1, dtype=np.int64)
    for q1, vs1 in where.items():
        for q2, vs2 in where.items():
            for v1 in vs1:
                for v2 in vs2:
                    acc = 0
                    for i, j in itertools.product(range(len(gens)), repeat=2):
                        e = v1[i] * v2[j]
                        if e:
                            acc = int(G.table[acc, G.power(int(form[i, j]), e)])
                    if small[q1, q2] < 0:
                        small[q1, q2] = acc
                    elif small[q1, q2] != acc:
                        raise HypothesisError("form is not well defined on G/G'K "
                                              "(exponent mismatch)", witness=(q1, q2))
    Qk = quotient(G, K)
    # G/K -> G/G'K via representatives
    to_ab = ab.projection[Qk.representatives]
    table = small[to_ab[:, None], to_ab[None, :]]
    delta = BiHom(G, K, Qk, table)
    validate_bihom(delta)
    return delta


def trivial_delta(G: FiniteGroup, K) -> BiHom:
    K = _as_subgroup(G, K)
    Qk = quotient(G, K)
    m = Qk.group.order
    return BiHom(G, K, Qk, np.zeros((m, m), dtype=np.int64))


def nilpotency_class_at_most_two(G: FiniteGroup) -> bool:
    Z = center(G)
    return all(d in Z for d in derived_subgroup(G))


def ault_watters_gamma(G: FiniteGroup, log=None):
    """Delta(xK, yK) = [x, y]^(-1/2) with K = Z(G), for odd order class <= 2.

    Returns ``(gamma, circle_is_abelian)``.
    """
    _require(G.order % 2 == 1, "|G| is odd (square roots in Z(G) are unique)", log)
    _require(nilpotency_class_at_most_two(G), "G has nilpotency class <= 2", log)
    K = center(G)
    e = max(int(G.element_orders[k]) for k in K)
    m = (e - 1) // 2  # k^m is the inverse square root: 2m = -1 mod e
    Qk = quotient(G, K)
    reps = Qk.representatives
    comm = np.array([[G.power(G.commutator(int(x), int(y)), m) for y in reps] for x in reps],
                    dtype=np.int64)
    delta = BiHom(G, K, Qk, comm)
    gamma = delta_gamma(G, delta, log)
    circ = gamma.circle
    abelian = bool((circ == circ.T).all())
    if not abelian:
        raise InvariantError("Ault-Watters circle operation is not commutative")
    _note(log, "ok   x o y = y o x for all x, y")
    return gamma, abelian


# --- radical rings ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RadicalRing:
    additive: FiniteGroup
    star: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "star", np.asarray(self.star, dtype=np.int64))


def ring_axiom_failure(R: RadicalRing) -> str | None:
    A, S = R.additive, R.star
    n = A.order
    if not A.is_abelian:
        return "additive group is not abelian"
    if S.shape != (n, n):
        return "star table has the wrong shape"
    if not (S == S.T).all():
        return "star is not commutative"
    if not (S[S] == S[np.arange(n)[:, None, None], S[None, :, :]]).all():
        return "star is not associative"
    # x * (y + z) = x*y + x*z (left follows by commutativity)
    lhs = S[np.arange(n)[:, None, None], A.table[None, :, :]]
    rhs = A.table[S[:, :, None], S[:, None, :]]
    if not (lhs == rhs).all():
        return "star does not distribute over +"
    circ = A.table[A.table, S]  # x + y + x*y
    try:
        FiniteGroup(circ)
    except HypothesisError:
        return "x o y = x + y + x*y is not a group (not radical)"
    return None


def validate_ring(R: RadicalRing) -> RadicalRing:
    err = ring_axiom_failure(R)
    if err:
        raise HypothesisError(err)
    return R


def ring_to_gamma(R: RadicalRing) -> GammaFunction:
    """x^gamma(y) = x + x*y."""
    validate_ring(R)
    A = R.additive
    maps = A.table[np.arange(A.order)[None, :], R.star.T]  # [y, x]
    gamma = GammaFunction(A, maps).validate()
    circ = gamma.circle
    if not (circ == circ.T).all():
        raise InvariantError("ring circle group is not abelian")
    return gamma


def cube_condition(R: RadicalRing) -> bool:
    """G * G * G = {0}."""
    S = R.star
    return bool((S[S] == 0).all())


def cyclic_ring(n: int, c: int) -> RadicalRing:
    """Z/n with x * y = c x y."""
    from .groups import cyclic

    A = cyclic(n)
    ar = np.arange(n)
    return validate_ring(RadicalRing(A, (c * ar[:, None] * ar[None, :]) % n))


def enumerate_radical_rings(A: FiniteGroup) -> list[RadicalRing]:
    """All commutative radical ring structures on the abelian group A."""
    basis = abelian_basis(A)
    r = len(basis)
    orders = [int(A.element_orders[b]) for b in basis]
    coords = {}
    for vec in _vectors(orders):
        acc = 0
        for b, e in zip(basis, vec):
            acc = int(A.table[acc, A.power(b, e)])
        coords[acc] = vec
    pairs = [(i, j) for i in range(r) for j in range(i, r)]
    options = []
    for i, j in pairs:
        g = math.gcd(orders[i], orders[j])
        options.append([x for x in range(A.order) if g % A.element_orders[x] == 0])
    out = []
    n = A.order
    for choice in itertools.product(*options):
        c = {}
        for (i, j), val in zip(pairs, choice):
            c[i, j] = c[j, i] = val
        star = np.zeros((n, n), dtype=np.int64)
        for x in range(n):
            for y in range(n):
                acc = 0
                vx, vy = coords[x], coords[y]
                for i in range(r):
                    for j in range(r):
                        e = vx[i] * vy[j]
                        if e:
                            acc = int(A.table[acc, A.power(c[i, j], e)])
                star[x, y] = acc
        R = RadicalRing(A, star)
        if ring_axiom_failure(R) is None:
            out.append(R)
    return out


# --- the p^2 q example --------------------------------------------------------


def p2q_group(p: int, q: int) -> FiniteGroup:
    """Non-trivial semidirect product of C_{p^2} by C_q (q | p - 1)."""
    from .groups import cyclic, power_automorphism, semidirect

    if (p - 1) % q:
        raise HypothesisError("need q | p - 1")
    n = p * p
    r = next(x for x in range(2, n) if math.gcd(x, n) == 1 and pow(x, q, n) == 1)
    K = cyclic(n)
    G = semidirect(K, cyclic(q), {1: power_automorphism(K, r)})
    object.__setattr__(G, "name", f"sd(c{n},c{q},pow{r})")
    return G


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    n = G.order
    pk = 1
    while n % (pk * p) == 0:
        pk *= p
    # in the groups used here the Sylow p-subgroup is normal
    elems = [g for g in range(n) if pk % G.element_orders[g] == 0]
    S = subgroup_closure(G, elems)
    if S.order != pk:
        raise HypothesisError(f"Sylow {p}-subgroup is not normal")
    return S


def cyclic_quotient_hom_gammas(G: FiniteGroup, P) -> list[GammaFunction]:
    """Gamma functions that are homomorphisms G -> Aut(G) with kernel exactly P.

    G/P must be cyclic.  Built directly from automorphisms of the right
    order, so Hol(G) is never enumerated.
    """
    P = _as_subgroup(G, P)
    Q = quotient(G, P)
    q = Q.group.order
    gen = next((x for x in range(q) if Q.group.element_orders[x] == q), None)
    if gen is None:
        raise HypothesisError("G/P is not cyclic")
    # exponent of each element's coset with respect to the generator
    expo = np.empty(q, dtype=np.int64)
    cur = 0
    for i in range(q):
        expo[cur] = i
        cur = int(Q.group.table[cur, gen])
    e_of = expo[Q.projection]
    aut = automorphism_group(G)
    out = []
    ident = np.arange(G.order)
    for alpha in aut.maps:
        powers = [ident]
        for _ in range(q):
            powers.append(alpha[powers[-1]])
        first = next(d for d in range(1, q + 2) if d > q or np.array_equal(powers[d], ident))
        if first != q:
            continue  # alpha must have order exactly q
        maps = np.array([powers[e] for e in e_of])
        try:
            out.append(GammaFunction(G, maps).validate())
        except HypothesisError:
            continue
    return out


def p2q_example_gammas(G: FiniteGroup, p: int) -> list[GammaFunction]:
    """Homomorphism gamma functions on G with the Sylow p-subgroup as kernel."""
    return cyclic_quotient_hom_gammas(G, sylow_subgroup(G, p))
