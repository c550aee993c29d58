"""Bi-skewness criteria and Aut(G)-orbits of skew braces.

Each flag of :class:`BiskewReport` and :class:`BetaReport` is computed
from its own defining identity.  No flag reuses another, so agreement of
the flags is a genuine check rather than a tautology.
"""

from __future__ import annotations

import weakref
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import HypothesisError, InvariantError
from .gamma import (GammaError, GammaFunction, enumerate_gammas, gamma_from_circle,
                    opposite_gamma, regular_from_gamma)
from .groups import FiniteGroup, closure_members
from .holomorph import is_normalized_by_aut, is_normal_in_hol
from .perms import automorphism_group

BISKEW_FLAGS = ("swap_is_brace", "rho_normalizes", "anti_homomorphism",
                "gamma_equivariant", "function_pair", "bar_commutator_kernel",
                "commutator_word")
BETA_FLAGS = ("aut_preserved", "unique_iso_type", "n_normal_in_hol",
              "n_normalized_by_aut", "beta_equivariant", "function_pair_beta")


def _then(a, b):
    """Image array of "a, then b"."""
    return b[a]


def _inv(p):
    out = np.empty_like(p)
    out[p] = np.arange(len(p))
    return out


def _conj(u, v):
    """u^v = v^-1 u v, left to right."""
    return v[u[_inv(v)]]


def _first_bad(mask):
    bad = np.argwhere(~mask)
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


# --- raw identities on an Aut-valued function --------------------------------


def anti_hom_witness(G: FiniteGroup, maps):
    """First (x, y) with gamma(xy) != gamma(y) gamma(x)."""
    maps = np.asarray(maps)
    for x in range(G.order):
        lhs = maps[G.table[x]]  # [y, z]
        rhs = maps[x][maps]  # gamma(y) then gamma(x)
        bad = _first_bad((lhs == rhs).all(axis=1))
        if bad is not None:
            return (x, bad[0])
    return None


def hom_witness(G: FiniteGroup, maps):
    """First (x, y) with gamma(xy) != gamma(x) gamma(y)."""
    maps = np.asarray(maps)
    for x in range(G.order):
        lhs = maps[G.table[x]]
        rhs = maps[:, maps[x]]  # gamma(x) then gamma(y)
        bad = _first_bad((lhs == rhs).all(axis=1))
        if bad is not None:
            return (x, bad[0])
    return None


def equivariance_witness(G: FiniteGroup, maps):
    """First (x, y) with gamma(x^gamma(y)) != gamma(x)^gamma(y)."""
    n = G.order
    inv = np.argsort(maps, axis=1)
    for y in range(n):
        gy, gyi = maps[y], inv[y]
        lhs = maps[gy]  # row x: gamma(x^gamma(y))
        rhs = gy[maps[:, gyi]]  # gamma(y)^-1 gamma(x) gamma(y)
        bad = _first_bad((lhs == rhs).all(axis=1))
        if bad is not None:
            return (bad[0], y)
    return None


def gfe_witness(G: FiniteGroup, maps):
    n = G.order
    w = G.table[maps.T, np.arange(n)[None, :]]
    lhs = maps[w]
    rhs = maps[np.arange(n)[None, :, None], maps[:, None, :]]
    return _first_bad((lhs == rhs).all(axis=2))


def beta_equivariance_witness(G: FiniteGroup, maps, aut_maps):
    """First (x, beta) with gamma(x^beta) != gamma(x)^beta."""
    for b, beta in enumerate(aut_maps):
        binv = _inv(beta)
        lhs = maps[beta]
        rhs = beta[maps[:, binv]]
        bad = _first_bad((lhs == rhs).all(axis=1))
        if bad is not None:
            return (bad[0], b)
    return None


# --- bi-skew report -----------------------------------------------------------


@dataclass
class BiskewReport:
    swap_is_brace: bool
    rho_normalizes: bool
    anti_homomorphism: bool
    gamma_equivariant: bool
    function_pair: bool
    bar_commutator_kernel: bool
    commutator_word: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def flags(self) -> dict:
        return {k: getattr(self, k) for k in BISKEW_FLAGS}

    @property
    def agreement(self) -> bool:
        return len(set(self.flags.values())) == 1

    @property
    def is_biskew(self) -> bool:
        return self.agreement and self.swap_is_brace

    def to_dict(self) -> dict:
        d = dict(self.flags)
        d["agreement"] = self.agreement
        d["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return d


def swapped_gamma(gamma: GammaFunction) -> GammaFunction:
    """gamma' of (G, o, .), i.e. gamma_from_circle with the roles swapped."""
    G = gamma.group
    circ = FiniteGroup(gamma.circle, name="circle")
    return gamma_from_circle(circ, G.table)


def _rho_normalizes(G: FiniteGroup, maps) -> bool:
    """N = {x -> x^gamma(y) y} is normalised by rho(g) for generators g."""
    t = G.table
    n = G.order
    P = t[maps, np.arange(n)[:, None]]  # row y: nu(y)
    for g in G.generators:
        ph = t[:, g]
        conj = ph[P[:, _inv(ph)]]
        if not (P[conj[:, 0]] == conj).all():
            return False
    return True


ORACLE_ORDER = 64


def biskew_report(gamma: GammaFunction, check_agreement: bool = True) -> BiskewReport:
    """All seven criteria.  None of them needs Aut(G); for |G| <= 64 the
    opposite gamma is also cross-checked inside Hol(G)."""
    gamma.validate()
    G = gamma.group
    maps = gamma.maps
    n = G.order
    t, inv = G.table, G.inverse
    ident = np.arange(n)
    wit = {}

    # 1: (G, o, .) is a skew brace
    try:
        swapped_gamma(gamma)
        swap = True
    except GammaError as exc:
        swap = False
        wit["swap_is_brace"] = tuple(exc.witness or ())

    # 2: N normalised by rho(G)
    rho_norm = _rho_normalizes(G, maps)

    # 3
    w3 = anti_hom_witness(G, maps)
    if w3 is not None:
        wit["anti_homomorphism"] = w3
    # 4
    w4 = equivariance_witness(G, maps)
    if w4 is not None:
        wit["gamma_equivariant"] = w4
    # 5: both identities on the raw function
    w5a, w5b = anti_hom_witness(G, maps), equivariance_witness(G, maps)
    pair = w5a is None and w5b is None
    if not pair:
        wit["function_pair"] = w5a if w5a is not None else w5b

    # 6: gamma trivial on [G, bar(G)]
    bar = opposite_gamma(gamma, check=n <= ORACLE_ORDER)
    comms = t[inv[:, None], bar.maps.T]  # [x, y] -> x^-1 x^bar(y)
    sub = sorted(closure_members(G, np.unique(comms).tolist()))
    bad6 = [k for k in sub if not np.array_equal(maps[k], ident)]
    if bad6:
        wit["bar_commutator_kernel"] = (bad6[0],)

    # 7: gamma(x^-1 y^-1 x^gamma(y) y) = 1
    word = t[t[inv[:, None], inv[None, :]], t[maps.T, ident[None, :]]]  # [x, y]
    ok7 = (maps[word] == ident).all(axis=2)
    w7 = _first_bad(ok7)
    if w7 is not None:
        wit["commutator_word"] = w7

    rep = BiskewReport(swap, rho_norm, w3 is None, w4 is None, pair, not bad6,
                       w7 is None, wit)
    if check_agreement and not rep.agreement:
        raise InvariantError(f"bi-skew criteria disagree: {rep.flags}")
    return rep


def is_bi_gf(gamma: GammaFunction) -> bool:
    return biskew_report(gamma).is_biskew


# --- two-of-three checks ---------------------------------------------------


@dataclass
class TwoOfThree:
    flags: dict

    @property
    def count(self) -> int:
        return sum(self.flags.values())


def two_of_three_gf(G: FiniteGroup, maps) -> TwoOfThree:
    """GF / anti-homomorphism / equivariance on a raw Aut-valued function."""
    maps = np.asarray(maps, dtype=np.int64)
    res = TwoOfThree({
        "gf": gfe_witness(G, maps) is None,
        "anti_homomorphism": anti_hom_witness(G, maps) is None,
        "equivariant": equivariance_witness(G, maps) is None,
    })
    if res.count == 2:
        raise InvariantError(f"exactly two of three hold: {res.flags}")
    return res


def two_of_three_abelian(gamma: GammaFunction) -> TwoOfThree:
    """homomorphism / abelian image / anti-homomorphism for a valid GF."""
    G, maps = gamma.group, gamma.maps
    image = np.unique(maps, axis=0)
    k = len(image)
    ab = all(np.array_equal(image[j][image[i]], image[i][image[j]])
             for i in range(k) for j in range(i + 1, k))
    res = TwoOfThree({
        "homomorphism": hom_witness(G, maps) is None,
        "abelian_image": ab,
        "anti_homomorphism": anti_hom_witness(G, maps) is None,
    })
    if res.count == 2:
        raise InvariantError(f"exactly two of three hold: {res.flags}")
    return res


# --- Aut(G)-orbits ------------------------------------------------------------


@dataclass
class BraceClasses:
    gammas: list
    orbit_of: np.ndarray  # orbit id per gamma, ids numbered by first member
    orbits: list  # list of lists of gamma indices

    def orbit_size(self, i: int) -> int:
        return len(self.orbits[self.orbit_of[i]])


_CLASS_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, BraceClasses]" = weakref.WeakKeyDictionary()


def act_on_gamma_indices(aut, alpha: np.ndarray, b: int) -> np.ndarray:
    """Index array of N^beta: gamma^beta(x^beta) = gamma(x)^beta."""
    comp, ainv, maps = aut.comp, aut.inverse, aut.maps
    conj = comp[comp[ainv[b], :], b]  # a -> beta^-1 a beta
    out = np.empty_like(alpha)
    out[maps[b]] = conj[alpha]
    return out


def brace_iso_classes(G: FiniteGroup) -> BraceClasses:
    """Partition the gammas on G into Aut(G)-orbits of regular subgroups."""
    cached = _CLASS_CACHE.get(G)
    if cached is not None:
        return cached
    gammas = enumerate_gammas(G)
    aut = automorphism_group(G)
    alphas = [regular_from_gamma(g).alpha for g in gammas]
    index = {a.tobytes(): i for i, a in enumerate(alphas)}
    parent = list(range(len(gammas)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, alpha in enumerate(alphas):
        for b in aut.generators:
            j = index.get(act_on_gamma_indices(aut, alpha, b).tobytes())
            if j is None:
                raise InvariantError("Aut(G) image of a regular subgroup is missing")
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    roots = [find(i) for i in range(len(gammas))]
    ids: dict[int, int] = {}
    orbit_of = np.empty(len(gammas), dtype=np.int64)
    orbits: list[list[int]] = []
    for i, r in enumerate(roots):
        if r not in ids:
            ids[r] = len(orbits)
            orbits.append([])
        orbit_of[i] = ids[r]
        orbits[ids[r]].append(i)
    res = BraceClasses(gammas, orbit_of, orbits)
    _CLASS_CACHE[G] = res
    return res


# --- the normal-in-holomorph report -----------------------------------------


@dataclass
class BetaReport:
    aut_preserved: bool
    unique_iso_type: bool
    n_normal_in_hol: bool
    n_normalized_by_aut: bool
    beta_equivariant: bool
    function_pair_beta: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def flags(self) -> dict:
        return {k: getattr(self, k) for k in BETA_FLAGS}

    @property
    def agreement(self) -> bool:
        return len(set(self.flags.values())) == 1

    def to_dict(self) -> dict:
        d = dict(self.flags)
        d["agreement"] = self.agreement
        d["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return d


def beta_report(gamma: GammaFunction, check_agreement: bool = True) -> BetaReport:
    gamma.validate()
    G = gamma.group
    aut = automorphism_group(G)
    maps = gamma.maps
    circ = gamma.circle
    wit = {}

    # 1: every beta in Aut(G, .) is an automorphism of (G, o)
    A = aut.maps
    lhs = A[:, circ]  # [b, x, y] -> (x o y)^beta
    rhs = circ[A[:, :, None], A[:, None, :]]
    ok = (lhs == rhs).all(axis=(1, 2))
    aut_ok = bool(ok.all())
    if not aut_ok:
        wit["aut_preserved"] = (int(np.flatnonzero(~ok)[0]),)

    # 2: orbit of size one among all skew braces on G
    classes = brace_iso_classes(G)
    key = gamma.key()
    pos = next(i for i, g in enumerate(classes.gammas) if g.key() == key)
    unique = classes.orbit_size(pos) == 1

    N = regular_from_gamma(gamma)
    normal = is_normal_in_hol(N)
    by_aut = is_normalized_by_aut(N)

    w5 = beta_equivariance_witness(G, maps, A)
    if w5 is not None:
        wit["beta_equivariant"] = w5
    w6a = anti_hom_witness(G, maps)
    pair = w6a is None and w5 is None
    if not pair:
        wit["function_pair_beta"] = w6a if w6a is not None else w5

    rep = BetaReport(aut_ok, unique, normal, by_aut, w5 is None, pair, wit)
    if check_agreement:
        if not rep.agreement:
            raise InvariantError(f"normal-in-holomorph criteria disagree: {rep.flags}")
        if rep.aut_preserved and not biskew_report(gamma).is_biskew:
            raise InvariantError("a brace normal in Hol(G) is not bi-skew")
    return rep
