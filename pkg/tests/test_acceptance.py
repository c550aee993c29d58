"""Acceptance criteria 1 to 10.

Each criterion test records ``(passed, detail)`` in ``RESULTS`` and prints
one line; conftest repeats the lines at the end of the pytest run.  Two
criteria contain a claim that is false for the stated instance.  Their
tests assert the claim as written and are marked strict xfail, so they
report FAIL here; the parts that do hold are asserted by separate tests.

Run on its own with ``python tests/test_acceptance.py``.
"""

import time

import numpy as np
import pytest

from holoskew import _kernels
from holoskew.biskew import anti_hom_witness, beta_report, biskew_report
from holoskew.catalog import SMALL, catalog_group, identify
from holoskew.constructions import (ault_watters_gamma, central_gamma, cube_condition,
                                    cyclic_ring, enumerate_radical_rings, p2q_example_gammas,
                                    p2q_group, power_pair_rgf, ring_to_gamma, semi_gamma,
                                    sylow_subgroup)
from holoskew.gamma import circle_table_oracle, enumerate_gammas, regular_from_gamma
from holoskew.groups import (FiniteGroup, all_subgroups, center, dihedral, factorizes,
                             intersection, is_isomorphic, is_normal)
from holoskew.holomorph import (build_holomorph, circle_group, enumerate_regular_subgroups,
                                is_normal_in_hol, multiple_holomorph_T, normalizer_index)
from holoskew.perms import compose

RESULTS = {}

SWEEP = list(SMALL) + ["heis3", "modext(3,2)"]
RING_GROUPS = ["c4", "c8", "c9", "ab2x2", "ab3x3"]
CENTRAL_SPECS = ["d3", "d4", "q8", "d6", "sd(c3,c4,inv)", "a4", "ab2x4", "heis3", "modext(3,2)"]


def record(criterion, ok, detail):
    RESULTS[criterion] = (bool(ok), detail)
    print(f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


def sweep_gammas():
    for spec in SWEEP:
        for gamma in enumerate_gammas(catalog_group(spec)):
            yield spec, gamma


def test_criterion_1_seven_way_agreement():
    t0 = time.perf_counter()
    total = bad = biskew = 0
    for spec, gamma in sweep_gammas():
        rep = biskew_report(gamma, check_agreement=False)
        total += 1
        bad += not rep.agreement
        biskew += rep.is_biskew
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 300
    record(1, ok, f"{total} gammas, {biskew} bi-skew, {bad} disagreements, {elapsed:.1f}s")
    assert ok


def test_criterion_2_dual_oracle():
    specs = [s for s in SMALL if catalog_group(s).order <= 8]
    mismatches, total = [], 0
    for spec in specs:
        G = catalog_group(spec)
        reps = [catalog_group(s) for s in SMALL if catalog_group(s).order == G.order]
        ours = {g.circle.astype(np.int64).tobytes() for g in enumerate_gammas(G)}
        oracle = circle_table_oracle(G, reps)
        total += len(ours)
        if ours != oracle:
            mismatches.append(spec)
    ok = not mismatches
    record(2, ok, f"{len(specs)} groups, {total} braces, mismatches {mismatches}")
    assert ok


def test_criterion_3_miller_consistency():
    t0 = time.perf_counter()
    specs = [s for s in SMALL if catalog_group(s).order <= 7]
    values = {}
    for spec in specs:
        res = multiple_holomorph_T(catalog_group(spec), "both")
        values[spec] = (res.order_direct, res.order_miller)
    elapsed = time.perf_counter() - t0
    ok = all(a == b for a, b in values.values()) and elapsed < 120
    shown = ", ".join(f"{s}={a}" for s, (a, _) in values.items())
    record(3, ok, f"T(G): {shown}; {elapsed:.1f}s")
    assert ok


def _hol_as_group(hol):
    P = hol.all_perms
    keys = {row.tobytes(): i for i, row in enumerate(P)}
    table = np.array([[keys[compose(a, b).tobytes()] for b in P] for a in P])
    ident = keys[np.arange(hol.group.order).tobytes()]
    order = [ident] + [i for i in range(len(P)) if i != ident]
    pos = np.argsort(order)
    return FiniteGroup(pos[table[np.ix_(order, order)]])


def test_criterion_4_c4_instance():
    G = catalog_group("c4")
    hol_is_d4 = is_isomorphic(_hol_as_group(build_holomorph(G)), dihedral(4)) is not None
    klein = [N for N in enumerate_regular_subgroups(G)
             if is_normal_in_hol(N) and identify(circle_group(N)) != "c4"]
    T = multiple_holomorph_T(G, "both")
    R = cyclic_ring(4, 2)
    ring_N = regular_from_gamma(ring_to_gamma(R))
    reproduces = len(klein) == 1 and ring_N.key() == klein[0].key()
    ok = (hol_is_d4 and len(klein) == 1 and T.order_direct == T.order_miller == 1
          and cube_condition(R) and reproduces)
    record(4, ok, f"Hol(C4)~D4 {hol_is_d4}, non-cyclic normal regular {len(klein)}, "
                  f"T={T.order_direct}, cube {cube_condition(R)}, ring gives it {reproduces}")
    assert ok


def order_18_facts():
    G = p2q_group(3, 2)
    gammas = p2q_example_gammas(G, 3)
    P = set(sylow_subgroup(G, 3).members)
    bi = all(biskew_report(g).is_biskew for g in gammas)
    kernels = all(set(g.kernel()) == P for g in gammas)
    indices = sorted({normalizer_index(regular_from_gamma(g)) for g in gammas})
    circles = sorted({identify(FiniteGroup(g.circle)) for g in gammas})
    iso = all(is_isomorphic(FiniteGroup(g.circle), G) is not None for g in gammas)
    return dict(G=identify(G), count=len(gammas), bi=bi, kernels=kernels, indices=indices,
                circles=circles, iso=iso)


@pytest.mark.xfail(strict=True, reason="every such circle group at (p, q) = (3, 2) is c18, "
                   "not d9; see the order-147 test for an instance where the claim holds")
def test_criterion_5_order_18():
    f = order_18_facts()
    ok = f["bi"] and f["kernels"] and f["count"] > 0 and f["indices"] == [9] and f["iso"]
    record(5, ok, f"G={f['G']}, {f['count']} hom-gammas, bi-GF {f['bi']}, "
                  f"index {f['indices']}, circle {f['circles']}, circle~G {f['iso']}")
    assert ok


def test_criterion_5_parts_that_hold():
    f = order_18_facts()
    assert f["G"] == "d9" and f["count"] == 9
    assert f["bi"] and f["kernels"] and f["indices"] == [9]
    # an involutory automorphism of d9 inverts the rotations, which makes o abelian
    assert f["circles"] == ["c18"] and not f["iso"]


@pytest.mark.slow
def test_criterion_5_claim_holds_at_order_147():
    G = p2q_group(7, 3)
    gammas = p2q_example_gammas(G, 7)
    iso = [g for g in gammas if is_isomorphic(FiniteGroup(g.circle), G) is not None]
    assert len(gammas) == 98 and len(iso) == 49
    for g in iso[:3]:
        assert anti_hom_witness(G, g.maps) is None
        assert normalizer_index(regular_from_gamma(g)) == 49


def test_criterion_6_order_63():
    G = catalog_group("sd(c7,c9,pow2)")
    K, H = G.parts["K"], G.parts["H"]
    h = next(x for x in H if G.element_orders[x] == 9)
    rows, ok = [], True
    for s in range(3):
        for t in range(3):
            gamma = semi_gamma(G, K, H, power_pair_rgf(G, K, H, h, s, t, 4))
            C = FiniteGroup(gamma.circle)
            seen = "c63" if identify(C) == "c63" else "G" if is_isomorphic(C, G) is not None else "?"
            ok &= seen == ("c63" if s % 3 == 1 else "G") and biskew_report(gamma).is_biskew
            rows.append(f"{s}{t}:{seen}")
    record(6, ok, f"9 admissible (s,t), {' '.join(rows)}")
    assert ok


def central_sweep():
    both, exceptions, total = set(), [], 0
    for spec in CENTRAL_SPECS:
        G = catalog_group(spec)
        Z = center(G)
        subs = all_subgroups(G)
        for K in subs:
            if not is_normal(G, K):
                continue
            for H in subs:
                if factorizes(G, H, K) and all(x in Z for x in intersection(H, K)):
                    res = central_gamma(G, K, H)
                    total += 1
                    both.add(res.bar_is_bi_gf)
                    if res.bar_is_bi_gf != res.h_normal:
                        exceptions.append(spec)
    return both, exceptions, total


@pytest.mark.xfail(strict=True, reason="H = <b> is normal in modext(3,2), and the "
                   "biconditional with H fails when K n Z(G) is not inside H")
def test_criterion_7_modext():
    G = catalog_group("modext(3,2)")
    log = []
    res = central_gamma(G, G.parts["K"], G.parts["H"], log)
    hyps = all(line.startswith(("ok", "info")) for line in log)
    abelian = bool((res.gamma.circle == res.gamma.circle.T).all())
    bi = biskew_report(res.gamma).is_biskew
    both, exceptions, total = central_sweep()
    ok = (hyps and bi and abelian and not res.bar_is_bi_gf and not res.h_normal
          and both == {True, False} and not exceptions)
    record(7, ok, f"hypotheses {hyps}, bi-GF {bi}, abelian {abelian}, "
                  f"bar bi-GF {res.bar_is_bi_gf}, H normal {res.h_normal}; "
                  f"{len(exceptions)}/{total} catalog triples break bar<=>H normal")
    assert ok


def test_criterion_7_parts_that_hold():
    G = catalog_group("modext(3,2)")
    res = central_gamma(G, G.parts["K"], G.parts["H"])
    assert biskew_report(res.gamma).is_biskew
    assert identify(FiniteGroup(res.gamma.circle)) == "ab3x9"
    assert res.h_normal and res.bar_is_bi_gf
    both, exceptions, total = central_sweep()
    assert both == {True, False}
    # central_gamma itself checks bar <=> H (K n Z(G)) normal on every triple
    assert 0 < len(exceptions) < total
    assert set(exceptions) == {"d4", "heis3", "modext(3,2)"}


@pytest.mark.slow
def test_criterion_7_claim_holds_at_modext_5_3():
    from holoskew.groups import modular_ext

    G = modular_ext(5, 3)
    res = central_gamma(G, G.parts["K"], G.parts["H"])
    assert not res.h_normal and not res.bar_is_bi_gf
    assert (res.gamma.circle == res.gamma.circle.T).all()


def test_criterion_8_ault_watters():
    t0 = time.perf_counter()
    details, ok = [], True
    for spec in ("heis3", "heis5"):
        G = catalog_group(spec)
        gamma, _ = ault_watters_gamma(G)
        circ = gamma.circle
        commutative = bool((circ == circ.T).all())
        bi = biskew_report(gamma).is_biskew
        circ_inv = np.argmax(circ == 0, axis=1)
        swapped = _kernels.brace_violation(circ, circ_inv, G.table) is None
        ok &= commutative and bi and swapped
        details.append(f"{spec}: bi-GF {bi}, o commutative {commutative}, swap brace {swapped}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 60
    record(8, ok, "; ".join(details) + f"; {elapsed:.1f}s")
    assert ok


def test_criterion_9_ring_sweep():
    counts, bad = {}, 0
    for spec in RING_GROUPS:
        rings = enumerate_radical_rings(catalog_group(spec))
        counts[spec] = len(rings)
        for R in rings:
            bad += biskew_report(ring_to_gamma(R)).is_biskew != cube_condition(R)
    ok = bad == 0 and all(counts.values())
    record(9, ok, f"rings {counts}, exceptions {bad}")
    assert ok


def test_criterion_10_beta_agreement():
    total = bad = implication = beta_true = 0
    for spec, gamma in sweep_gammas():
        rep = beta_report(gamma, check_agreement=False)
        total += 1
        bad += not rep.agreement
        if rep.aut_preserved:
            beta_true += 1
            implication += not biskew_report(gamma).is_biskew
    ok = bad == 0 and implication == 0
    record(10, ok, f"{total} gammas, {beta_true} with all six true, {bad} disagreements, "
                   f"{implication} not bi-skew")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
