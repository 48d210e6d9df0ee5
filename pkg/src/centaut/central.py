"""Brute-force enumeration of central automorphisms and related counts.

A central automorphism is x -> x*f(x') where f ranges over homomorphisms
from the abelianization into the center and x' is the coset of x.  Every
such map is an endomorphism fixing the center's image conditions; it is an
automorphism exactly when it is a bijection, which a single pass over the
image array decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import abelian, structure
from .abelian import AbelianInvariants, abelian_basis, hom_invariants
from .errors import (
    AbelianGroup,
    CenterNotCyclic,
    EnumerationCapExceeded,
    NotCentral,
    NotContained,
    NotPrimePower,
)
from .groups import Group
from .structure import Subgroup

DEFAULT_HOM_CAP = 2**20


@dataclass(frozen=True)
class CentralAutReport:
    """What the enumeration found.

    hom_candidates counts all homomorphisms abelianization -> center;
    aut_count counts the bijective ones; z_inn_order = |Z_2(G)/Z(G)| is the
    unconditional lower bound, and minimal means the two orders agree.
    """

    hom_candidates: int
    aut_count: int
    z_inn_order: int
    minimal: bool


def _bijective(images: np.ndarray, scratch: np.ndarray) -> bool:
    scratch[:] = False
    scratch[images] = True
    return bool(scratch.all())


def central_automorphism_count(
    G: Group, hom_cap: int = DEFAULT_HOM_CAP
) -> CentralAutReport:
    """Count central automorphisms by enumerating the candidate maps.

    The candidate count is computed arithmetically first and checked against
    hom_cap before any enumeration happens.
    """
    if G.prime is None:
        raise NotPrimePower(f"order {G.order} is not a prime power")
    n = G.order
    z = structure.center(G)
    qab, proj = structure.abelianization(G)
    basis = abelian_basis(qab, prime=G.prime)
    total = abelian.hom_count_by_targets(basis, G, z.elements)
    if total > hom_cap:
        raise EnumerationCapExceeded(
            f"{total} candidate maps exceed the cap {hom_cap}"
        )
    idx = np.arange(n)
    scratch = np.zeros(n, dtype=bool)
    count = 0
    for f in abelian.iter_homomorphisms(basis, G, z.elements):
        sigma = G.table[idx, f[proj]]
        if _bijective(sigma, scratch):
            count += 1
    comm = structure.commutator_table(G)
    z2_size = int(z.mask[comm].all(axis=1).sum())
    z_inn = z2_size // z.order
    return CentralAutReport(
        hom_candidates=total,
        aut_count=count,
        z_inn_order=z_inn,
        minimal=count == z_inn,
    )


def is_minimal_bruteforce(G: Group, hom_cap: int = DEFAULT_HOM_CAP) -> bool:
    return central_automorphism_count(G, hom_cap=hom_cap).minimal


def iter_central_automorphisms(G: Group, hom_cap: int = DEFAULT_HOM_CAP):
    """Yield the bijective candidate maps as image arrays."""
    if G.prime is None:
        raise NotPrimePower(f"order {G.order} is not a prime power")
    n = G.order
    z = structure.center(G)
    qab, proj = structure.abelianization(G)
    basis = abelian_basis(qab, prime=G.prime)
    total = abelian.hom_count_by_targets(basis, G, z.elements)
    if total > hom_cap:
        raise EnumerationCapExceeded(
            f"{total} candidate maps exceed the cap {hom_cap}"
        )
    idx = np.arange(n)
    scratch = np.zeros(n, dtype=bool)
    for f in abelian.iter_homomorphisms(basis, G, z.elements):
        sigma = G.table[idx, f[proj]]
        if _bijective(sigma, scratch):
            yield sigma


def stability_count(
    G: Group,
    X: Subgroup,
    Y: Subgroup,
    hom_cap: int = DEFAULT_HOM_CAP,
) -> tuple[int, int]:
    """Distinct maps x -> x*f(xX) for f: (G/X)^ab -> Y, and the hom count.

    Y must be a central subgroup contained in X; X must be normal (checked
    by the quotient).  Every produced map fixes X and G/X elementwise; the
    first return value counts the distinct ones, the second is |Hom| from
    the invariant formula.
    """
    if X.parent is not G or Y.parent is not G:
        raise ValueError("subgroups belong to a different parent group")
    if not Y.issubset(X):
        raise NotContained("second subgroup must lie inside the first")
    zmask = structure.center(G).mask
    if not zmask[list(Y.elements)].all():
        raise NotCentral("image subgroup must be central")
    Q, proj = structure.quotient(G, X)
    qab, proj2 = structure.abelianization(Q)
    basis = abelian_basis(qab, prime=G.prime)
    total = abelian.hom_count_by_targets(basis, G, Y.elements)
    if total > hom_cap:
        raise EnumerationCapExceeded(
            f"{total} candidate maps exceed the cap {hom_cap}"
        )
    comp = proj2[proj]
    idx = np.arange(G.order)
    scratch = np.zeros(G.order, dtype=bool)
    seen: set[bytes] = set()
    for f in abelian.iter_homomorphisms(basis, G, Y.elements):
        sigma = G.table[idx, f[comp]]
        assert _bijective(sigma, scratch)
        seen.add(sigma.astype(np.int32).tobytes())
    hom_order = hom_invariants(
        basis.invariants,
        abelian.abelian_invariants(Y.as_group(), prime=G.prime),
    ).order
    return len(seen), hom_order


def adney_yen_check(
    G: Group, hom_cap: int = DEFAULT_HOM_CAP
) -> tuple[int, int, bool]:
    """For nonabelian G with cyclic center: |central auts| vs |Hom(G^ab, Z)|.

    Returns (aut_count, hom_order, equal); the two agree exactly when no
    candidate map degenerates, which is the cyclic-center count identity.
    """
    if G.is_abelian:
        raise AbelianGroup("count identity is posed for nonabelian groups")
    z = structure.center(G)
    gamma = abelian.abelian_invariants(z.as_group(), prime=G.prime)
    if gamma.rank != 1:
        raise CenterNotCyclic(f"center invariants {list(gamma.exponents)}")
    rep = central_automorphism_count(G, hom_cap=hom_cap)
    qab, _ = structure.abelianization(G)
    alpha = abelian.abelian_invariants(qab, prime=G.prime)
    hom_order = hom_invariants(alpha, gamma).order
    return rep.aut_count, hom_order, rep.aut_count == hom_order


def all_automorphisms(G: Group, order_limit: int = 256) -> list[np.ndarray]:
    """Every automorphism, by generator-image search with closure propagation.

    Independent of the central-map enumeration: picks a generating sequence,
    tries all same-order images, and extends each assignment through the
    multiplication table, rejecting on the first conflict.  Exponential in
    general, hence the small order_limit.
    """
    n = G.order
    if n > order_limit:
        raise ValueError(f"order {n} exceeds the search limit {order_limit}")
    gens: list[int] = []
    span = structure.closure(G, [])
    while span.order < n:
        g = int(np.argmin(span.mask))  # smallest element outside the span
        gens.append(g)
        span = structure.closure(G, gens)
    orders = G.element_orders
    table = G.table
    results: list[np.ndarray] = []

    def extend(assign: np.ndarray, known: list[int], g: int, image: int) -> bool:
        """Set assign[g]=image and close under products; False on conflict."""
        if assign[g] == image:
            return True
        if assign[g] != -1 or orders[g] != orders[image]:
            return False
        assign[g] = image
        queue = [g]
        known.append(g)
        while queue:
            a = queue.pop()
            for b in list(known):
                for x, y in ((a, b), (b, a)):
                    prod = table[x, y]
                    img = table[assign[x], assign[y]]
                    if assign[prod] == -1:
                        if orders[prod] != orders[img]:
                            return False
                        assign[prod] = img
                        known.append(prod)
                        queue.append(prod)
                    elif assign[prod] != img:
                        return False
        return True

    def search(i: int, assign: np.ndarray, known: list[int]) -> None:
        if i == len(gens):
            if (assign != -1).all() and _bijective(
                assign, np.zeros(n, dtype=bool)
            ):
                results.append(assign.copy())
            return
        g = gens[i]
        if assign[g] != -1:
            search(i + 1, assign, known)
            return
        for image in np.flatnonzero(orders == orders[g]):
            trial = assign.copy()
            kn = list(known)
            if extend(trial, kn, g, int(image)):
                search(i + 1, trial, kn)

    seed = np.full(n, -1, dtype=np.int64)
    seed[0] = 0
    search(0, seed, [0])
    results.sort(key=lambda a: a.tolist())
    return results


def is_central_automorphism(G: Group, sigma: np.ndarray) -> bool:
    """Whether x^-1 * sigma(x) is central for every x (sigma a bijection)."""
    zmask = structure.center(G).mask
    shifts = G.table[G.inverse, np.asarray(sigma, dtype=np.int64)]
    return bool(zmask[shifts].all())
