"""Invariants, bases and homomorphism counts for abelian p-groups.

An abelian p-group is determined by its invariant list (a_1 >= ... >= a_m),
meaning C_{p^a_1} x ... x C_{p^a_m}.  Invariants are read off layer counts
(sizes of the subgroups of exponent dividing p^j), a basis is extracted by
depth-first search with backtracking, and hom/embedding questions reduce to
arithmetic on the invariant lists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import NotAbelian, NotPrimePower, PrimeMismatch
from .groups import Group


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class AbelianInvariants:
    """Exponent list (descending) of a direct decomposition, with its prime."""

    prime: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if not _is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 1 for e in self.exponents):
            raise ValueError(f"exponents must be >= 1, got {self.exponents}")
        if list(self.exponents) != sorted(self.exponents, reverse=True):
            raise ValueError(f"exponents must be descending, got {self.exponents}")

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def order(self) -> int:
        return self.prime ** sum(self.exponents)

    @property
    def exponent_log(self) -> int:
        """log_p of the group exponent (0 for the trivial group)."""
        return self.exponents[0] if self.exponents else 0

    @property
    def is_cyclic(self) -> bool:
        return len(self.exponents) <= 1

    def __str__(self) -> str:
        return f"p={self.prime} {list(self.exponents)}"


def abelian_invariants(A: Group, prime: Optional[int] = None) -> AbelianInvariants:
    """Invariant list of an abelian prime-power group.

    The trivial group carries no prime of its own, so `prime` must be
    supplied for it; otherwise the prime is inferred and checked.
    """
    if not A.is_abelian:
        raise NotAbelian(f"group of order {A.order} is not abelian")
    if A.order == 1:
        if prime is None:
            raise NotPrimePower("trivial group: supply the prime explicitly")
        return AbelianInvariants(prime, ())
    if A.prime is None:
        raise NotPrimePower(f"order {A.order} is not a prime power")
    if prime is not None and prime != A.prime:
        raise PrimeMismatch(f"group prime {A.prime} != requested {prime}")
    p = A.prime
    orders = A.element_orders
    # layer[j] = log_p #{x : x^(p^j) == 1}; rank of layer j is layer[j]-layer[j-1]
    ranks = []
    bound = 1
    prev = 0
    while bound < A.exponent:
        bound *= p
        count = int((orders <= bound).sum())
        lg = 0
        while count > 1:
            count //= p
            lg += 1
        ranks.append(lg - prev)
        prev = lg
    exps = []
    for j in range(len(ranks)):
        nxt = ranks[j + 1] if j + 1 < len(ranks) else 0
        exps.extend([j + 1] * (ranks[j] - nxt))
    return AbelianInvariants(p, tuple(sorted(exps, reverse=True)))


def _span(A: Group, gens: Sequence[int]) -> np.ndarray:
    """Sorted element set of the subgroup generated inside an abelian group."""
    span = np.array([0], dtype=np.int64)
    for g in gens:
        k = int(A.element_orders[g])
        powers = [0]
        for _ in range(k - 1):
            powers.append(int(A.table[powers[-1], g]))
        span = np.unique(A.table[np.ix_(span, np.asarray(powers))])
    return span


@dataclass(frozen=True)
class AbelianBasis:
    """Independent generators realizing the invariant list.

    coordinates[x] gives the exponent tuple of x along `elements`, so
    x == prod_i elements[i] ** coordinates[x, i] and the map is a bijection.
    """

    group: Group
    invariants: AbelianInvariants
    elements: tuple[int, ...]
    coordinates: np.ndarray


def abelian_basis(A: Group, prime: Optional[int] = None) -> AbelianBasis:
    """Pick basis elements of the invariant orders, smallest indices first.

    Each candidate must meet the current span trivially, which for cyclic
    p-groups is one membership test on its order-p power.  Backtracks when
    a prefix admits no extension (rare, but cheap to support).
    """
    inv = abelian_invariants(A, prime=prime)
    p = inv.prime
    orders = A.element_orders
    targets = inv.exponents
    chosen: list[int] = []
    spans: list[np.ndarray] = [np.array([0], dtype=np.int64)]
    cand_stacks: list[list[int]] = []

    def candidates(i: int) -> list[int]:
        want = p ** targets[i]
        span_mask = np.zeros(A.order, dtype=bool)
        span_mask[spans[-1]] = True
        out = []
        for x in np.flatnonzero(orders == want):
            x = int(x)
            if not span_mask[A.pow(x, want // p)]:
                out.append(x)
        return out

    while len(chosen) < len(targets):
        if len(cand_stacks) == len(chosen):
            cand_stacks.append(candidates(len(chosen)))
        stack = cand_stacks[-1]
        if not stack:
            cand_stacks.pop()
            if not chosen:
                raise RuntimeError("basis search failed; group is not as declared")
            chosen.pop()
            spans.pop()
            continue
        x = stack.pop(0)
        chosen.append(x)
        spans.append(_span(A, chosen))

    if not targets:
        return AbelianBasis(A, inv, (), np.zeros((A.order, 0), dtype=np.int32))
    coords = np.full((A.order, len(targets)), -1, dtype=np.int32)
    radices = [p ** e for e in targets]
    filled = 0
    for combo in itertools.product(*(range(r) for r in radices)):
        x = 0
        for g, c in zip(chosen, combo):
            x = int(A.table[x, A.pow(g, c)])
        if (coords[x] != -1).any():
            raise RuntimeError("basis does not span freely")
        coords[x] = combo
        filled += 1
    if filled != A.order:
        raise RuntimeError("basis does not span the group")
    coords.setflags(write=False)
    return AbelianBasis(A, inv, tuple(chosen), coords)


def hom_count_by_targets(
    basis: AbelianBasis, ambient: Group, targets: Sequence[int]
) -> int:
    """|Hom| into the subgroup given by `targets`, without enumerating."""
    p = basis.invariants.prime
    orders = ambient.element_orders
    tgt = np.asarray(targets)
    total = 1
    for e in basis.invariants.exponents:
        total *= int((orders[tgt] <= p**e).sum())
    return total


def iter_homomorphisms(
    basis: AbelianBasis, ambient: Group, targets: Sequence[int]
) -> Iterator[np.ndarray]:
    """All homomorphisms from the based group into <targets> <= ambient.

    `targets` must be closed under the ambient product and commute with each
    other (a central or abelian subgroup).  Yields arrays f of length
    |basis.group| with f[x] = ambient index of the image of x, in
    lexicographic order of the basis image tuples.
    """
    p = basis.invariants.prime
    exps = basis.invariants.exponents
    orders = ambient.element_orders
    tgt = sorted(int(t) for t in targets)
    cand = [[t for t in tgt if orders[t] <= p**e] for e in exps]
    A = basis.group
    coords = basis.coordinates
    if not exps:
        yield np.zeros(A.order, dtype=np.int64)
        return
    for images in itertools.product(*cand):
        f = np.zeros(A.order, dtype=np.int64)
        for i, y in enumerate(images):
            powers = np.empty(p ** exps[i], dtype=np.int64)
            powers[0] = 0
            for c in range(1, len(powers)):
                powers[c] = ambient.table[powers[c - 1], y]
            f = ambient.table[f, powers[coords[:, i]]]
        yield f


def hom_invariants(a: AbelianInvariants, b: AbelianInvariants) -> AbelianInvariants:
    """Invariants of Hom(A, B): one C_{p^min(ai,bj)} per pair of invariants."""
    if a.prime != b.prime:
        raise PrimeMismatch(f"primes differ: {a.prime} vs {b.prime}")
    mins = [min(ai, bj) for ai in a.exponents for bj in b.exponents]
    return AbelianInvariants(a.prime, tuple(sorted(mins, reverse=True)))


def embeds_invariants(b: AbelianInvariants, c: AbelianInvariants) -> bool:
    """Whether B embeds in C.

    For every height j, C must have at least as many cyclic factors of
    exponent >= p^j as B does (conjugate-partition dominance); summing layer
    sizes instead would wrongly admit C_4 -> C_2 x C_2.
    """
    if b.prime != c.prime:
        raise PrimeMismatch(f"primes differ: {b.prime} vs {c.prime}")
    top = max([0, *b.exponents])
    for j in range(1, top + 1):
        if sum(e >= j for e in b.exponents) > sum(e >= j for e in c.exponents):
            return False
    return True


def embeds_bruteforce(A: Group, B: Group) -> bool:
    """Injective-homomorphism search, independent of the layer criterion.

    Walks A's basis and tries images of exactly matching order whose cyclic
    span meets the current image subgroup trivially; backtracks on dead ends.
    Exponential in principle, intended for small orders (tests use <= 64).
    """
    if not (A.is_abelian and B.is_abelian):
        raise NotAbelian("embedding search is for abelian groups")
    if A.order == 1:
        return True
    if B.order > 1 and A.prime != B.prime:
        raise PrimeMismatch(f"primes differ: {A.prime} vs {B.prime}")
    if B.order % A.order != 0:
        return False
    basis = abelian_basis(A)
    p = A.prime
    exps = basis.invariants.exponents
    orders = B.element_orders

    def extend(i: int, span: np.ndarray) -> bool:
        if i == len(exps):
            return True
        want = p ** exps[i]
        span_mask = np.zeros(B.order, dtype=bool)
        span_mask[span] = True
        for y in np.flatnonzero(orders == want):
            y = int(y)
            if span_mask[B.pow(y, want // p)]:
                continue
            powers = [0]
            for _ in range(want - 1):
                powers.append(int(B.table[powers[-1], y]))
            nxt = np.unique(B.table[np.ix_(span, np.asarray(powers))])
            if extend(i + 1, nxt):
                return True
        return False

    return extend(0, np.array([0], dtype=np.int64))
