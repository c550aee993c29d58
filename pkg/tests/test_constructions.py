import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from holoskew.biskew import anti_hom_witness, biskew_report, hom_witness, two_of_three_abelian
from holoskew.catalog import catalog_group, identify
from holoskew.constructions import (BiHom, RadicalRing, abelian_basis, ault_watters_gamma,
                                    bilinear_delta, central_gamma, childs_gamma,
                                    compatible_pair_group, cube_condition, cyclic_ring,
                                    delta_gamma, enumerate_radical_rings, lift_rgf,
                                    p2q_example_gammas, p2q_group, pair_automorphism,
                                    power_pair_rgf, ring_to_gamma, semi_gamma, sylow_subgroup,
                                    trivial_delta, validate_bihom)
from holoskew.errors import HypothesisError
from holoskew.gamma import enumerate_gammas, regular_from_gamma
from holoskew.groups import (FiniteGroup, all_subgroups, center, factorizes, intersection,
                             is_isomorphic, is_normal, modular_ext, quotient, subgroup_closure)
from holoskew.holomorph import normalizer_in_hol, normalizer_index
from holoskew.perms import automorphism_group, inner


def d3_parts():
    G = catalog_group("d3")
    return G, subgroup_closure(G, [G.index_of((1, 0))]), subgroup_closure(G, [G.index_of((0, 1))])


def test_childs_on_d3():
    G, K, H = d3_parts()
    log = []
    gamma = childs_gamma(G, K, H, log)
    assert all(line.startswith("ok") for line in log)
    assert identify(FiniteGroup(gamma.circle)) == "c6"
    assert biskew_report(gamma).is_biskew
    assert gamma.kernel() == list(K.members)


def test_lift_reproduces_childs_with_kernel_k():
    G, K, H = d3_parts()
    values = {h: inner(G, G.inv(h)) for h in H}
    gamma = lift_rgf(G, H, K, values)
    assert gamma == childs_gamma(G, K, H)
    assert gamma.kernel() == list(K.members)


def test_lift_rejects_nontrivial_on_intersection():
    G = catalog_group("d4")
    r, s = G.index_of((1, 0)), G.index_of((0, 1))
    K = subgroup_closure(G, [r])
    H = subgroup_closure(G, [s, G.power(r, 2)])
    # iota of a non-central element on H n K = <r^2> is trivial, so force a bad value
    values = {h: inner(G, G.inv(h)) for h in H}
    values[G.power(r, 2)] = inner(G, s)
    with pytest.raises(HypothesisError):
        lift_rgf(G, H, K, values)


def test_lift_rejects_non_invariant_k():
    G = catalog_group("ab2x2")
    K = subgroup_closure(G, [1])
    H = subgroup_closure(G, [2])
    swap = next(m for m in automorphism_group(G).maps if m[1] != 1)  # moves K
    values = {0: np.arange(4), 2: swap}
    with pytest.raises(HypothesisError):
        lift_rgf(G, H, K, values)


def central_cases():
    q8 = catalog_group("q8")
    fours = [x for x in range(8) if q8.element_orders[x] == 4]
    i = fours[0]
    j = next(x for x in fours if q8.table[i, x] != q8.table[x, i])
    d4 = catalog_group("d4")
    r, s = d4.index_of((1, 0)), d4.index_of((0, 1))
    G3, K3, H3 = d3_parts()
    # (G, K, H, bar is a bi-GF, H normal)
    return [
        (q8, subgroup_closure(q8, [j]), subgroup_closure(q8, [i]), True, True),
        (d4, subgroup_closure(d4, [r]), subgroup_closure(d4, [s, d4.power(r, 2)]), True, True),
        (G3, K3, H3, False, False),
        # K n Z(G) = <r^2> is not inside H, and H <r^2> is normal
        (d4, subgroup_closure(d4, [r]), subgroup_closure(d4, [s]), True, False),
    ]


@pytest.mark.parametrize("case", range(4))
def test_central_examples(case):
    G, K, H, bar_bi, h_normal = central_cases()[case]
    res = central_gamma(G, K, H)
    assert biskew_report(res.gamma).is_biskew
    assert (res.bar_is_bi_gf, res.h_normal) == (bar_bi, h_normal)
    assert res.bar_kernel_normal == bar_bi


def admissible_triples(spec):
    G = catalog_group(spec)
    subs = all_subgroups(G)
    Z = center(G)
    for K in subs:
        if not is_normal(G, K):
            continue
        for H in subs:
            if factorizes(G, H, K) and all(x in Z for x in intersection(H, K)):
                yield G, K, H


CENTRAL_SPECS = ["d4", "q8", "d6", "sd(c3,c4,inv)", "a4", "ab2x4", "heis3", "modext(3,2)"]


@pytest.mark.parametrize("spec", CENTRAL_SPECS)
def test_central_kernel_biconditional_over_all_subgroup_pairs(spec):
    seen = set()
    for G, K, H in admissible_triples(spec):
        res = central_gamma(G, K, H)  # raises if bi-GF <=> ker(bar) normal fails
        Z = center(G)
        if all(x in H for x in K if x in Z):
            assert res.bar_is_bi_gf == res.h_normal
        seen.add(res.bar_is_bi_gf)
    assert seen


def h_normal_exceptions():
    return [(spec, K.order, H.order) for spec in CENTRAL_SPECS
            for G, K, H in admissible_triples(spec)
            if (lambda r: r.bar_is_bi_gf != r.h_normal)(central_gamma(G, K, H))]


@pytest.mark.xfail(strict=True, reason="d4, heis3 and modext(3,2) have triples where H is not "
                   "normal but H (K n Z(G)) is, and bar(gamma) is a bi-GF")
def test_central_h_normal_biconditional_claim():
    assert h_normal_exceptions() == []


def test_central_h_normal_exceptions_are_the_kernel_gap():
    bad = h_normal_exceptions()
    assert {spec for spec, _, _ in bad} == {"d4", "heis3", "modext(3,2)"}


def test_central_both_truth_values_seen():
    assert {c[3] for c in central_cases()} == {True, False}


def test_central_modext_3_2():
    G = catalog_group("modext(3,2)")
    log = []
    res = central_gamma(G, G.parts["K"], G.parts["H"], log)
    assert biskew_report(res.gamma).is_biskew
    assert (res.gamma.circle == res.gamma.circle.T).all()
    assert identify(FiniteGroup(res.gamma.circle)) == "ab3x9"
    # [K, b] = <a_1> = <b^3> lies in H when n = 2, so H is normal here
    assert res.h_normal and res.bar_is_bi_gf


@pytest.mark.slow
def test_central_modext_5_3_has_non_normal_h():
    G = modular_ext(5, 3)
    res = central_gamma(G, G.parts["K"], G.parts["H"])
    assert not res.h_normal and not res.bar_is_bi_gf
    assert (res.gamma.circle == res.gamma.circle.T).all()


def test_compatible_pairs_filter():
    G, K, H = d3_parts()
    P = compatible_pair_group(G, K, H)
    harr = np.array(H.members)
    brute = [i for i, m in enumerate(automorphism_group(G).maps)
             if set(m[harr].tolist()) == set(H.members)]
    assert P.members == brute and len(P) == 2


def test_compatible_pairs_direct_product():
    G = catalog_group("ab2x6")
    A = automorphism_group(G)
    K = subgroup_closure(G, [x for x in range(12) if G.element_orders[x] == 3])
    H = subgroup_closure(G, [x for x in range(12) if G.element_orders[x] == 2])
    P = compatible_pair_group(G, K, H)
    kk, hh = np.array(K.members), np.array(H.members)
    brute = [i for i, m in enumerate(A.maps)
             if np.isin(m[kk], kk).all() and np.isin(m[hh], hh).all()]
    assert P.members == brute


def test_pair_automorphism_rejects_bad_pair():
    G, K, H = d3_parts()
    r = G.index_of((1, 0))
    with pytest.raises(HypothesisError):
        pair_automorphism(G, K, H, lambda h: h, lambda k: 0 if k == 0 else r)


def test_semi_special_case_is_childs():
    G, K, H = d3_parts()
    values = {h: inner(G, G.inv(h)) for h in H}
    assert semi_gamma(G, K, H, values) == childs_gamma(G, K, H)


def test_semi_rejects_non_anti_homomorphism():
    G = catalog_group("sd(c7,c9,pow2)")
    K, H = G.parts["K"], G.parts["H"]
    h = next(x for x in H if G.element_orders[x] == 9)
    values = power_pair_rgf(G, K, H, h, 1, 1, 4)
    # swap two values to break the anti-homomorphism property
    a, b = h, G.table[h, h]
    values[a], values[b] = values[b], values[a]
    with pytest.raises(HypothesisError):
        semi_gamma(G, K, H, values)


@pytest.mark.parametrize("s", range(3))
@pytest.mark.parametrize("t", range(3))
def test_order_63_semi(s, t):
    G = catalog_group("sd(c7,c9,pow2)")
    K, H = G.parts["K"], G.parts["H"]
    h = next(x for x in H if G.element_orders[x] == 9)
    gamma = semi_gamma(G, K, H, power_pair_rgf(G, K, H, h, s, t, 4))
    C = FiniteGroup(gamma.circle)
    if s % 3 == 1:
        assert identify(C) == "c63"
    else:
        assert is_isomorphic(C, G) is not None


def test_trivial_delta_is_identity():
    G = catalog_group("heis3")
    gamma = delta_gamma(G, trivial_delta(G, center(G)))
    assert np.array_equal(gamma.maps, np.tile(np.arange(27), (27, 1)))


def test_delta_on_abelian_with_k_equal_g():
    G = catalog_group("ab3x3")
    delta = bilinear_delta(G, subgroup_closure(G, range(9)), [])
    assert delta.table.shape == (1, 1)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_heisenberg_forms_give_bi_gfs(entries):
    G = catalog_group("heis3")
    Z = center(G)
    z = next(x for x in Z if x)
    form = [[G.power(z, e) for e in entries[:2]], [G.power(z, e) for e in entries[2:]]]
    gamma = delta_gamma(G, bilinear_delta(G, Z, form))
    rep = biskew_report(gamma)
    assert rep.is_biskew
    assert two_of_three_abelian(gamma).count == 3
    assert (len(gamma.kernel()) == 27) == (entries == [0, 0, 0, 0])


def test_bilinear_delta_exponent_mismatch():
    G = catalog_group("c12")
    K = subgroup_closure(G, [4])  # order 3, quotient C4
    with pytest.raises(HypothesisError, match="exponent"):
        bilinear_delta(G, K, [[4]])


def test_bilinear_delta_inconsistent_generators():
    G = catalog_group("heis3")
    Z = center(G)
    z = next(x for x in Z if x)
    basis_reps = [g for g in G.generators]
    x = basis_reps[0]
    gens = [x, x] + basis_reps[1:]
    n = len(gens)
    form = [[0] * n for _ in range(n)]
    form[0][0] = z  # x paired with itself gives z through one copy, 1 through the other
    with pytest.raises(HypothesisError):
        bilinear_delta(G, Z, form, gens=gens)


def test_validate_bihom_names_variable():
    G = catalog_group("heis3")
    Z = center(G)
    Q = quotient(G, Z)
    z = next(x for x in Z if x)
    table = np.zeros((9, 9), dtype=np.int64)
    table[1, 0] = z  # nonzero against the identity breaks the first variable
    with pytest.raises(HypothesisError, match="variable"):
        validate_bihom(BiHom(G, Z, Q, table))


@pytest.mark.parametrize("spec,circle", [("heis3", "ab3x3x3"), ("heis5", "ab5x5x5")])
def test_ault_watters(spec, circle):
    G = catalog_group(spec)
    gamma, abelian = ault_watters_gamma(G)
    assert abelian
    assert identify(FiniteGroup(gamma.circle)) == circle
    assert anti_hom_witness(G, gamma.maps) is None


def test_ault_watters_on_abelian_is_trivial():
    gamma, _ = ault_watters_gamma(catalog_group("ab3x3"))
    assert np.array_equal(gamma.maps, np.tile(np.arange(9), (9, 1)))


@pytest.mark.parametrize("spec", ["d4", "sd(c7,c3,pow2)"])
def test_ault_watters_rejects(spec):
    with pytest.raises(HypothesisError):
        ault_watters_gamma(catalog_group(spec))


def test_ring_2xy_on_c4():
    R = cyclic_ring(4, 2)
    gamma = ring_to_gamma(R)
    assert cube_condition(R)
    assert identify(FiniteGroup(gamma.circle)) == "ab2x2"
    assert biskew_report(gamma).is_biskew


def test_ring_2xy_on_c8():
    R = cyclic_ring(8, 2)
    assert R.star[R.star[1, 1], 1] == 4
    assert not cube_condition(R)
    assert not biskew_report(ring_to_gamma(R)).is_biskew


def test_zero_ring_is_trivial():
    R = cyclic_ring(6, 0)
    assert cube_condition(R)
    assert np.array_equal(ring_to_gamma(R).maps, np.tile(np.arange(6), (6, 1)))


def test_non_radical_ring_rejected():
    with pytest.raises(HypothesisError, match="radical"):
        cyclic_ring(4, 1)
    with pytest.raises(HypothesisError, match="commutative"):
        ring_to_gamma(RadicalRing(catalog_group("c4"), np.array([[0, 0, 0, 0], [0, 0, 2, 0],
                                                                   [0, 0, 0, 0], [0, 0, 0, 0]])))


@pytest.mark.parametrize("spec,count", [("c4", 2), ("c8", 4), ("c9", 3), ("ab2x2", 4),
                                        ("ab3x3", 9)])
def test_ring_enumeration_and_equivalence(spec, count):
    rings = enumerate_radical_rings(catalog_group(spec))
    assert len(rings) == count
    for R in rings:
        assert biskew_report(ring_to_gamma(R)).is_biskew == cube_condition(R)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 16), st.integers(0, 15))
def test_cyclic_rings_equivalence(n, c):
    try:
        R = cyclic_ring(n, c % n)
    except HypothesisError:
        return
    assert biskew_report(ring_to_gamma(R)).is_biskew == cube_condition(R)


def test_abelian_basis():
    for spec, orders in [("ab2x4", [4, 2]), ("ab3x3x3", [3, 3, 3]), ("c8", [8]), ("ab2x6", [6, 2])]:
        G = catalog_group(spec)
        assert sorted((G.element_orders[b] for b in abelian_basis(G)), reverse=True) == orders


def test_order_18_example():
    G = p2q_group(3, 2)
    assert identify(G) == "d9"
    P = set(sylow_subgroup(G, 3).members)
    gammas = p2q_example_gammas(G, 3)
    filtered = [g for g in enumerate_gammas(G)
                if set(g.kernel()) == P and hom_witness(G, g.maps) is None]
    assert {g.key() for g in gammas} == {g.key() for g in filtered}
    assert len(gammas) == 9
    for g in gammas:
        assert biskew_report(g).is_biskew
        N = regular_from_gamma(g)
        assert normalizer_in_hol(N)[1] == 9 == normalizer_index(N)
        # every involutory automorphism inverts the cyclic part, so the circle group is abelian
        assert identify(FiniteGroup(g.circle)) == "c18"


def test_order_18_example_lifts():
    G = p2q_group(3, 2)
    K = sylow_subgroup(G, 3)
    invols = [x for x in range(18) if G.element_orders[x] == 2]
    for g in p2q_example_gammas(G, 3):
        # H = <h> must be invariant under gamma(h)
        h = next(x for x in invols if g.maps[x][x] == x)
        H = subgroup_closure(G, [h])
        assert lift_rgf(G, H, K, {x: g.maps[x] for x in H}) == g


@pytest.mark.slow
def test_order_147_example():
    G = p2q_group(7, 3)
    gammas = p2q_example_gammas(G, 7)
    iso = [g for g in gammas if is_isomorphic(FiniteGroup(g.circle), G) is not None]
    assert iso
    for g in iso[:5]:
        assert anti_hom_witness(G, g.maps) is None
        assert normalizer_index(regular_from_gamma(g)) == 49
