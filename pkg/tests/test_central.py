"""Central automorphism enumeration against independent searches."""

import numpy as np
import pytest

from centaut.central import (
    adney_yen_check,
    all_automorphisms,
    central_automorphism_count,
    is_central_automorphism,
    is_minimal_bruteforce,
    iter_central_automorphisms,
    stability_count,
)
from centaut.errors import (
    AbelianGroup,
    CenterNotCyclic,
    EnumerationCapExceeded,
    NotCentral,
    NotContained,
    NotPrimePower,
)
from centaut.families import (
    cyclic,
    dihedral,
    elementary,
    extraspecial,
    heisenberg,
    modular,
    quaternion,
)
from centaut.groups import direct_product, group_from_permutations
from centaut.structure import center, closure, derived_subgroup, frattini_subgroup

import oracles


@pytest.mark.parametrize(
    "G,hom,aut,zinn,minimal",
    [
        (quaternion(8), 4, 4, 4, True),
        (dihedral(8), 4, 4, 4, True),
        (dihedral(16), 4, 4, 2, False),
        (cyclic(4), 4, 2, 1, False),
    ],
)
def test_known_counts(G, hom, aut, zinn, minimal):
    rep = central_automorphism_count(G)
    assert rep.hom_candidates == hom
    assert rep.aut_count == aut
    assert rep.z_inn_order == zinn
    assert rep.minimal is minimal
    assert is_minimal_bruteforce(G) is minimal


def test_enumerated_maps_are_central_automorphisms():
    G = dihedral(16)
    maps = [tuple(int(v) for v in s) for s in iter_central_automorphisms(G)]
    assert len(maps) == len(set(maps)) == 4
    t = G.table.tolist()
    for sigma in maps:
        assert oracles.ref_is_hom(t, t, sigma)
        assert sorted(sigma) == list(range(16))
        assert is_central_automorphism(G, np.asarray(sigma))
    assert tuple(range(16)) in maps  # identity comes from the zero map


def test_is_central_automorphism_rejects_outer_shift():
    G = dihedral(16)
    # conjugation by a non-second-center element moves some x by a
    # non-central factor
    z2 = [x for x in range(16) if all(center(G).mask[G.commutator(x, g)] for g in range(16))]
    g = next(x for x in range(16) if x not in z2)
    sigma = np.array([G.conjugate(x, g) for x in range(16)])
    assert not is_central_automorphism(G, sigma)


def test_cap_checked_before_enumeration():
    G = extraspecial(2, 32, "+")  # Hom(C2^4, C2): 16 candidate maps
    with pytest.raises(EnumerationCapExceeded):
        central_automorphism_count(G, hom_cap=15)
    rep = central_automorphism_count(G, hom_cap=16)
    assert rep.hom_candidates == 16


def test_rejects_non_prime_power_order():
    S3 = group_from_permutations(3, [[1, 2, 0], [1, 0, 2]])
    with pytest.raises(NotPrimePower):
        central_automorphism_count(S3)


@pytest.mark.parametrize(
    "G,count",
    [
        (quaternion(8), 24),
        (dihedral(8), 8),
        (cyclic(8), 4),
        (elementary(2, 2), 6),
        (elementary(2, 3), 168),
    ],
)
def test_all_automorphisms_counts(G, count):
    auts = all_automorphisms(G)
    assert len(auts) == count
    seen = {tuple(int(v) for v in a) for a in auts}
    assert len(seen) == count
    # sorted lexicographically, identity first
    assert [a.tolist() for a in auts] == sorted(a.tolist() for a in auts)
    assert auts[0].tolist() == list(range(G.order))


def test_all_automorphisms_matches_permutation_scan():
    for G in (quaternion(8), dihedral(8), cyclic(8), elementary(2, 2)):
        got = {tuple(int(v) for v in a) for a in all_automorphisms(G)}
        assert got == set(oracles.ref_automorphisms(G.table.tolist()))


def test_all_automorphisms_order_limit():
    with pytest.raises(ValueError):
        all_automorphisms(dihedral(32), order_limit=16)


def test_stability_count_dihedral8():
    G = dihedral(8)
    phi = frattini_subgroup(G)
    assert phi.order == 2
    assert stability_count(G, phi, phi) == (4, 4)


def test_stability_count_whole_group_is_trivial():
    G = dihedral(8)
    top = closure(G, range(8))
    Z = center(G)
    assert stability_count(G, top, Z) == (1, 1)


def test_stability_count_validates_subgroups():
    G = dihedral(16)
    Z = center(G)
    der = derived_subgroup(G)
    refl = next(
        x for x in range(16) if G.element_orders[x] == 2 and not der.contains(x)
    )
    noncentral = closure(G, [refl])
    with pytest.raises(NotContained):
        stability_count(G, Z, der)  # derived subgroup not inside the center
    with pytest.raises(NotCentral):
        stability_count(G, closure(G, [refl, der.elements[1]]), noncentral)
    H = dihedral(8)
    with pytest.raises(ValueError, match="different parent"):
        stability_count(G, center(H), center(H))


def test_adney_yen_counts():
    aut, hom, equal = adney_yen_check(dihedral(16))
    assert (aut, hom, equal) == (4, 4, True)
    aut, hom, equal = adney_yen_check(quaternion(8))
    assert (aut, hom, equal) == (4, 4, True)


def test_adney_yen_rejections():
    with pytest.raises(AbelianGroup):
        adney_yen_check(cyclic(8))
    with pytest.raises(CenterNotCyclic):
        adney_yen_check(direct_product(dihedral(8), cyclic(2)))


def test_extraspecial32_types_are_distinct_and_both_minimal():
    # involution census tells the two order-32 types apart
    plus, minus = extraspecial(2, 32, "+"), extraspecial(2, 32, "-")
    assert int((plus.element_orders == 2).sum()) == 19
    assert int((minus.element_orders == 2).sum()) == 11
    assert plus.exponent == minus.exponent == 4
    assert is_minimal_bruteforce(plus) and is_minimal_bruteforce(minus)


def test_extraspecial_odd_types_differ_by_exponent():
    assert extraspecial(3, 27, "+").exponent == 3
    assert extraspecial(3, 27, "-").exponent == 9
    assert is_minimal_bruteforce(extraspecial(3, 27, "+"))
    assert is_minimal_bruteforce(modular(3, 27))


def test_heisenberg_mod4_minimal():
    G = heisenberg(2, 2)
    rep = central_automorphism_count(G)
    assert rep.minimal
    assert rep.z_inn_order == rep.aut_count
