"""Inner loops over Cayley tables.

Every kernel exists twice: a loop version compiled with numba, and a
numpy (or, for the two searches, plain-Python) version.  The loop
versions are used when numba imports and ``HOLOSKEW_NUMBA`` is not set
to ``0``; the public wrappers below pick the path once at import time.

All kernels take int64 arrays and report violations as index tuples,
``None`` meaning "no violation".
"""

from __future__ import annotations

import itertools
import os

import numpy as np


def _numba_requested() -> bool:
    flag = os.environ.get("HOLOSKEW_NUMBA", "1").strip().lower()
    if flag in ("0", "false", "no", "off"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USE_NUMBA = _numba_requested()

if USE_NUMBA:
    from numba import njit
else:  # pragma: no cover - exercised only with HOLOSKEW_NUMBA=0

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


# ---------------------------------------------------------------------------
# loop versions


@njit(cache=True)
def _assoc_loop(table):
    n = table.shape[0]
    out = np.full(3, -1, np.int64)
    for i in range(n):
        for j in range(n):
            ij = table[i, j]
            for k in range(n):
                if table[ij, k] != table[i, table[j, k]]:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    return out
    return out


@njit(cache=True)
def _brace_loop(add, inv, circ):
    # (x.y) o z == (x o z) . z^-1 . (y o z)
    n = add.shape[0]
    out = np.full(3, -1, np.int64)
    for z in range(n):
        zi = inv[z]
        for x in range(n):
            left_part = add[circ[x, z], zi]
            for y in range(n):
                if circ[add[x, y], z] != add[left_part, circ[y, z]]:
                    out[0] = x
                    out[1] = y
                    out[2] = z
                    return out
    return out


@njit(cache=True)
def _gfe_loop(table, maps):
    # gamma(x^gamma(y) . y) == gamma(x) gamma(y), composition left to right
    n = table.shape[0]
    out = np.full(2, -1, np.int64)
    for x in range(n):
        for y in range(n):
            w = table[maps[y, x], y]
            for z in range(n):
                if maps[w, z] != maps[y, maps[x, z]]:
                    out[0] = x
                    out[1] = y
                    return out
    return out


@njit(cache=True)
def _hom_loop(src, dst, images):
    n = src.shape[0]
    out = np.full(2, -1, np.int64)
    for i in range(n):
        for j in range(n):
            if images[src[i, j]] != dst[images[i], images[j]]:
                out[0] = i
                out[1] = j
                return out
    return out


@njit(cache=True)
def _close(table, amaps, acomp, gam, pts, count, ngens, gen_a, gen_g):
    # Right-multiply every element by every generator until closed.
    # Elements are (gam[p], p); a second element over the same point
    # means the subgroup is not semiregular.  Returns the new count or -1.
    i = 0
    while i < count:
        p = pts[i]
        pa = gam[p]
        for j in range(ngens):
            ga = gen_a[j]
            q = table[amaps[ga, p], gen_g[j]]
            qa = acomp[pa, ga]
            if gam[q] == -1:
                gam[q] = qa
                pts[count] = q
                count += 1
            elif gam[q] != qa:
                return -1
        i += 1
    return count


@njit(cache=True)
def _search_regular_loop(table, amaps, acomp):
    n = table.shape[0]
    m = amaps.shape[0]
    cap = 16
    found = np.empty((cap, n), np.int64)
    nfound = 0
    if n == 1:
        found[0, 0] = 0
        return found[:1].copy()
    levels = n + 1
    gam = np.full((levels, n), -1, np.int64)
    pts = np.zeros((levels, n), np.int64)
    npts = np.zeros(levels, np.int64)
    gen_a = np.zeros(levels, np.int64)
    gen_g = np.zeros(levels, np.int64)
    cand = np.zeros(levels, np.int64)
    target = np.zeros(levels, np.int64)
    gam[0, 0] = 0  # identity automorphism has index 0
    npts[0] = 1
    target[0] = 1
    depth = 0
    while depth >= 0:
        if cand[depth] >= m:
            depth -= 1
            if depth >= 0:
                cand[depth] += 1
            continue
        nxt = depth + 1
        for t in range(n):
            gam[nxt, t] = gam[depth, t]
            pts[nxt, t] = pts[depth, t]
        gen_a[depth] = cand[depth]
        gen_g[depth] = target[depth]
        c = _close(table, amaps, acomp, gam[nxt], pts[nxt], npts[depth],
                   nxt, gen_a, gen_g)
        if c < 0:
            cand[depth] += 1
            continue
        if c == n:
            if nfound == cap:
                grown = np.empty((2 * cap, n), np.int64)
                grown[:cap] = found
                found = grown
                cap *= 2
            found[nfound] = gam[nxt]
            nfound += 1
            cand[depth] += 1
            continue
        npts[nxt] = c
        first = 0
        while gam[nxt, first] != -1:
            first += 1
        target[nxt] = first
        cand[nxt] = 0
        depth = nxt
    return found[:nfound].copy()


@njit(cache=True)
def _perm_key(p, n):
    key = 0
    for x in range(n - 1, -1, -1):
        key = key * n + p[x]
    return key


@njit(cache=True)
def _normalizer_loop(n, gens, sorted_keys):
    # Walk S(n) in lexicographic order; count sigma with
    # sigma^-1 h sigma in the target group for every generator h.
    sigma = np.arange(n)
    sinv = np.empty(n, np.int64)
    conj = np.empty(n, np.int64)
    count = 0
    while True:
        for x in range(n):
            sinv[sigma[x]] = x
        ok = True
        for g in range(gens.shape[0]):
            for x in range(n):
                conj[x] = sigma[gens[g, sinv[x]]]
            key = _perm_key(conj, n)
            pos = np.searchsorted(sorted_keys, key)
            if pos >= sorted_keys.shape[0] or sorted_keys[pos] != key:
                ok = False
                break
        if ok:
            count += 1
        i = n - 2
        while i >= 0 and sigma[i] >= sigma[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while sigma[j] <= sigma[i]:
            j -= 1
        sigma[i], sigma[j] = sigma[j], sigma[i]
        sigma[i + 1:] = sigma[i + 1:][::-1].copy()
    return count


# ---------------------------------------------------------------------------
# numpy versions


def _first(mask):
    bad = np.argwhere(~mask)
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


def _assoc_numpy(table):
    left = table[table]
    right = table[np.arange(len(table))[:, None, None], table[None, :, :]]
    return _first(left == right)


def _brace_numpy(add, inv, circ):
    n = len(add)
    left = circ[add][:, :, np.arange(n)]  # [x, y, z] -> circ[add[x, y], z]
    part = add[circ, inv[None, :]]  # [x, z] -> (x o z) . z^-1
    right = add[part[:, None, :], circ[None, :, :]]
    return _first(left == right)


def _gfe_numpy(table, maps):
    n = len(table)
    w = table[maps.T, np.arange(n)[None, :]]  # [x, y] -> x^gamma(y) . y
    left = maps[w]
    right = maps[np.arange(n)[None, :, None], maps[:, None, :]]
    bad = np.argwhere(~(left == right).all(axis=2))
    return None if len(bad) == 0 else (int(bad[0][0]), int(bad[0][1]))


def _hom_numpy(src, dst, images):
    return _first(images[src] == dst[images[:, None], images[None, :]])


def _search_regular_python(table, amaps, acomp):
    # Same algorithm as the compiled loop, without compilation.
    return _search_regular_loop(table, amaps, acomp)


def _normalizer_python(n, gens, sorted_keys):
    weights = n ** np.arange(n, dtype=np.int64)
    count = 0
    for sigma in itertools.permutations(range(n)):
        sigma = np.asarray(sigma)
        sinv = np.argsort(sigma)
        conj = sigma[gens[:, sinv]]
        keys = conj @ weights
        pos = np.searchsorted(sorted_keys, keys)
        pos = np.minimum(pos, len(sorted_keys) - 1)
        if np.all(sorted_keys[pos] == keys):
            count += 1
    return count


# ---------------------------------------------------------------------------
# dispatch


def _as_violation(arr):
    if arr[0] < 0:
        return None
    return tuple(int(v) for v in arr)


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def assoc_violation(table):
    """First (i, j, k) with (ij)k != i(jk), or None."""
    table = _i64(table)
    if USE_NUMBA:
        return _as_violation(_assoc_loop(table))
    return _assoc_numpy(table)


def brace_violation(add, inv, circ):
    """First (x, y, z) violating the skew brace axiom, or None."""
    add, inv, circ = _i64(add), _i64(inv), _i64(circ)
    if USE_NUMBA:
        return _as_violation(_brace_loop(add, inv, circ))
    return _brace_numpy(add, inv, circ)


def gfe_violation(table, maps):
    """First (x, y) violating the gamma functional equation, or None."""
    table, maps = _i64(table), _i64(maps)
    if USE_NUMBA:
        return _as_violation(_gfe_loop(table, maps))
    return _gfe_numpy(table, maps)


def hom_violation(src, dst, images):
    """First (i, j) where ``images`` fails to be a homomorphism, or None."""
    src, dst, images = _i64(src), _i64(dst), _i64(images)
    if USE_NUMBA:
        return _as_violation(_hom_loop(src, dst, images))
    return _hom_numpy(src, dst, images)


def search_regular(table, amaps, acomp):
    """All gamma functions as arrays of automorphism indices.

    ``amaps`` lists automorphism images with the identity at row 0;
    ``acomp[a, b]`` is the index of "a then b".
    """
    args = (_i64(table), _i64(amaps), _i64(acomp))
    if USE_NUMBA:
        return _search_regular_loop(*args)
    return _search_regular_python(*args)


def normalizer_count(n, gens, sorted_keys):
    """Number of sigma in S(n) conjugating every row of ``gens`` into the
    permutation set whose base-n keys are ``sorted_keys``."""
    gens, sorted_keys = _i64(gens), _i64(sorted_keys)
    if USE_NUMBA:
        return int(_normalizer_loop(n, gens, sorted_keys))
    return _normalizer_python(n, gens, sorted_keys)


def perm_keys(perms):
    """Base-n integer keys of the rows of ``perms`` (n <= 12)."""
    perms = _i64(perms)
    n = perms.shape[1]
    return perms @ (n ** np.arange(n, dtype=np.int64))
