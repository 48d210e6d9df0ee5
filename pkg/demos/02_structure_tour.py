#!/usr/bin/env python3
"""
Structure of a p-group in one report
=====================================

Center, derived subgroup, upper central series, and the abelian invariants
that the minimality rules consume.
"""

from centaut import (
    abelian_invariants,
    abelianization,
    builtin,
    center,
    central_series,
    derived_subgroup,
    frattini_subgroup,
    minimal_generator_count,
    parse_group_spec,
    quotient,
    structure_report,
)

D16 = builtin("dihedral", 16)

Z = center(D16)
G1 = derived_subgroup(D16)
print("dihedral(16):  |Z| =", Z.order, " |G'| =", G1.order)
print("Z inside G':", set(Z.elements) <= set(G1.elements))

upper = central_series(D16, kind="upper")
lower = central_series(D16, kind="lower")
print("upper series orders:", [s.order for s in upper])
print("lower series orders:", [s.order for s in lower])

# Quotients come back as groups with the projection map.
Q, proj = quotient(D16, Z)
print("G/Z has order", Q.order, "and is abelian:", Q.is_abelian)

Gab, _ = abelianization(D16)
print("G^ab invariants:", abelian_invariants(Gab).exponents)
print("Frattini subgroup order:", frattini_subgroup(D16).order)
print("minimal generators d(G) =", minimal_generator_count(D16))

# structure_report bundles everything the classifier needs.
for name in ("dihedral(16)", "heisenberg(3,1)", "extraspecial(2,32,+)"):
    rep = structure_report(parse_group_spec(name))
    print(
        f"\n{name}: order {rep.order} = {rep.prime}^{rep.order_exp}, "
        f"class {rep.nilpotency_class}, coclass {rep.coclass}"
    )
    print(f"  alpha (G^ab) = {rep.abelianization.exponents}")
    print(f"  gamma (Z)    = {rep.center.exponents}")
    print(f"  beta (Z2/Z)  = {rep.inner_center.exponents}")
    print(f"  Z <= G': {rep.center_in_derived}   d, d(Z), d(Z2/Z) =",
          (rep.d, rep.d_center, rep.d_inner_center))
