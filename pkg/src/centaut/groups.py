"""Finite groups as validated Cayley tables.

A group of order n lives on indices 0..n-1 with the identity fixed at 0.
The table is an n x n numpy array, table[a, b] = index of a*b.  Construction
from an untrusted table checks the Latin-square property, the identity row
and column, and full associativity, naming the first violation found.
"""

from __future__ import annotations

from functools import cached_property
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ActionNotAutomorphism,
    ActionNotHomomorphism,
    ClosureExceedsCap,
    IndexOutOfRange,
    InvalidPermutation,
    NoIdentityAtZero,
    NotAssociative,
    NotLatinSquare,
)

DEFAULT_ORDER_CAP = 4096


class Permutation:
    """A bijection on range(degree), stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(i) for i in images)
        n = len(imgs)
        if sorted(imgs) != list(range(n)):
            raise InvalidPermutation(f"images {imgs} are not a bijection on range({n})")
        self.images = imgs

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        if other.degree != self.degree:
            raise InvalidPermutation(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def _prime_power(n: int) -> Optional[tuple[int, int]]:
    """(p, k) with n == p**k, or None if n is not a prime power. n >= 1."""
    if n == 1:
        return None
    p = None
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            p = d
            while m % d == 0:
                m //= d
            if m != 1:
                return None
            break
        d += 1
    if p is None:
        p = m  # n itself prime
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


class Group:
    """Immutable finite group on indices 0..order-1 with identity 0.

    Do not mutate `table` after construction; it is set read-only.  Cached
    derived data (element orders, abelian flag) assumes the table is fixed.
    """

    def __init__(
        self,
        table: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        _validated: bool = False,
    ):
        if not _validated:
            _validate_table(table)
        table = np.ascontiguousarray(table, dtype=np.int32)
        table.setflags(write=False)
        self.table = table
        self.order = int(table.shape[0])
        # inverse[a]: the unique b with a*b == 0 (Latin square guarantees it)
        inv = np.argmax(table == 0, axis=1).astype(np.int32)
        inv.setflags(write=False)
        self.inverse = inv
        pp = _prime_power(self.order)
        self.prime = pp[0] if pp else None
        self.order_exp = pp[1] if pp else None
        if labels is not None:
            if len(labels) != self.order:
                raise ValueError(f"got {len(labels)} labels for order {self.order}")
            labels = tuple(str(s) for s in labels)
        self.labels = labels

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def pow(self, g: int, k: int) -> int:
        """g**k by square-and-multiply; negative k goes through the inverse."""
        if not 0 <= g < self.order:
            raise IndexOutOfRange(f"element {g} outside range({self.order})")
        if k < 0:
            g, k = self.inv(g), -k
        acc = 0
        base = g
        while k:
            if k & 1:
                acc = int(self.table[acc, base])
            base = int(self.table[base, base])
            k >>= 1
        return acc

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        t = self.table
        return int(t[t[t[self.inv(a), self.inv(b)], a], b])

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        t = self.table
        return int(t[t[self.inv(g), x], g])

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def element_orders(self) -> np.ndarray:
        """orders[g] = multiplicative order of g; read-only array."""
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        acc = np.arange(n)  # acc[g] = g**k
        k = 1
        while (orders == 0).any():
            k += 1
            acc = self.table[acc, np.arange(n)]
            hit = (acc == 0) & (orders == 0)
            orders[hit] = k
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        out = 1
        for o in map(int, np.unique(self.element_orders)):
            out = out * o // gcd(out, o)
        return out

    def label(self, g: int) -> str:
        if self.labels is not None:
            return self.labels[g]
        return str(g)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        if self.prime is not None:
            return f"Group(order={self.order}={self.prime}^{self.order_exp})"
        return f"Group(order={self.order})"


def _check_index(G: Group, g: int) -> None:
    if not 0 <= g < G.order:
        raise IndexOutOfRange(f"element {g} outside range({G.order})")


def _validate_table(table: np.ndarray) -> None:
    table = np.asarray(table)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotLatinSquare(f"table shape {table.shape} is not square")
    n = table.shape[0]
    if n == 0:
        raise NotLatinSquare("empty table")
    if not np.issubdtype(table.dtype, np.integer):
        raise NotLatinSquare(f"table dtype {table.dtype} is not integral")
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise NotLatinSquare(f"entry at {tuple(int(i) for i in bad)} outside range({n})")
    ident = np.arange(n)
    for axis, kind in ((1, "row"), (0, "column")):
        ranked = np.sort(table, axis=axis)
        ok = (ranked == (ident[None, :] if axis == 1 else ident[:, None])).all(axis=axis)
        if not ok.all():
            i = int(np.argmin(ok))
            raise NotLatinSquare(f"{kind} {i} is not a permutation of range({n})")
    if not (table[0] == ident).all():
        a = int(np.argmin(table[0] == ident))
        raise NoIdentityAtZero(f"0*{a} == {int(table[0, a])}, expected {a}")
    if not (table[:, 0] == ident).all():
        a = int(np.argmin(table[:, 0] == ident))
        raise NoIdentityAtZero(f"{a}*0 == {int(table[a, 0])}, expected {a}")
    # (a*b)*c vs a*(b*c), one row of a at a time to bound memory
    for a in range(n):
        left = table[table[a], :]          # [b, c] -> (a*b)*c
        right = table[a, table]            # [b, c] -> a*(b*c)
        if not (left == right).all():
            b, c = (int(i) for i in np.argwhere(left != right)[0])
            raise NotAssociative(f"(({a}*{b})*{c}) != ({a}*({b}*{c}))")


def group_from_cayley_table(
    table: Sequence[Sequence[int]] | np.ndarray,
    labels: Optional[Sequence[str]] = None,
) -> Group:
    """Validate an untrusted square table and wrap it as a Group."""
    arr = np.asarray(table, dtype=object)
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (ValueError, TypeError) as e:
        raise NotLatinSquare(f"table is not a rectangular integer array: {e}") from None
    _validate_table(arr)
    return Group(arr, labels=labels, _validated=True)


def group_from_permutations(
    degree: int,
    generators: Sequence[Permutation | Sequence[int]],
    cap: int = DEFAULT_ORDER_CAP,
) -> Group:
    """Close generators under composition (BFS order) and build the table.

    Element 0 is the identity; elements are numbered in BFS discovery order,
    which makes the construction deterministic for a fixed generator list.
    """
    gens: list[Permutation] = []
    for g in generators:
        p = g if isinstance(g, Permutation) else Permutation(g)
        if p.degree != degree:
            raise InvalidPermutation(f"generator degree {p.degree} != {degree}")
        gens.append(p)
    ident = Permutation(range(degree))
    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt: list[Permutation] = []
        for q in frontier:
            for g in gens:
                r = q * g
                if r not in index:
                    if len(elements) >= cap:
                        raise ClosureExceedsCap(
                            f"closure exceeds cap {cap} (degree {degree})"
                        )
                    index[r] = len(elements)
                    elements.append(r)
                    nxt.append(r)
        frontier = nxt
    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[a * b]
    # associative and Latin by construction; identity is element 0
    return Group(table, _validated=True)


def element_order(G: Group, g: int) -> int:
    _check_index(G, g)
    return int(G.element_orders[g])


def direct_product(G: Group, H: Group, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Componentwise product on pairs (g, h) -> g*|H| + h (lexicographic)."""
    n, m = G.order, H.order
    if n * m > cap:
        raise ClosureExceedsCap(f"product order {n * m} exceeds cap {cap}")
    gt = G.table.astype(np.int64)
    ht = H.table.astype(np.int64)
    # table[(g1,h1),(g2,h2)] = (g1*g2)*m + h1*h2
    block = gt[:, None, :, None] * m + ht[None, :, None, :]
    table = block.reshape(n * m, n * m)
    labels = None
    if G.labels is not None and H.labels is not None:
        labels = [f"({a},{b})" for a in G.labels for b in H.labels]
    return Group(table.astype(np.int32), labels=labels, _validated=True)


def semidirect_product(
    N: Group,
    H: Group,
    action: Sequence[Permutation | Sequence[int]],
    cap: int = DEFAULT_ORDER_CAP,
) -> Group:
    """Split extension of N by H along action[h] in Aut(N).

    action[h] gives the image array of the automorphism by which h acts.
    Pairs are numbered (x, h) -> x*|H| + h.  The assembled table is fully
    re-validated, so an inconsistent action cannot slip through.
    """
    n, s = N.order, H.order
    if len(action) != s:
        raise ActionNotAutomorphism(f"got {len(action)} maps for |H| == {s}")
    maps = np.empty((s, n), dtype=np.int64)
    for h, a in enumerate(action):
        imgs = a.images if isinstance(a, Permutation) else tuple(int(i) for i in a)
        if len(imgs) != n:
            raise ActionNotAutomorphism(f"action[{h}] has degree {len(imgs)}, want {n}")
        if sorted(imgs) != list(range(n)):
            raise ActionNotAutomorphism(f"action[{h}] is not a bijection")
        maps[h] = imgs
    for h in range(s):
        phi = maps[h]
        if not (phi[N.table] == N.table[np.ix_(phi, phi)]).all():
            bad = np.argwhere(phi[N.table] != N.table[np.ix_(phi, phi)])[0]
            a, b = (int(i) for i in bad)
            raise ActionNotAutomorphism(
                f"action[{h}] breaks the product at ({a},{b})"
            )
    for h1 in range(s):
        for h2 in range(s):
            h12 = int(H.table[h1, h2])
            if not (maps[h12] == maps[h1][maps[h2]]).all():
                raise ActionNotHomomorphism(
                    f"action[{h1}*{h2}] != action[{h1}] o action[{h2}]"
                )
    if n * s > cap:
        raise ClosureExceedsCap(f"product order {n * s} exceeds cap {cap}")
    # (x1,h1)(x2,h2) = (x1 * phi_{h1}(x2), h1*h2)
    nt = N.table.astype(np.int64)
    xpart = nt[np.arange(n)[:, None, None], maps[None, :, :]]  # [x1,h1,x2]
    table = xpart[:, :, :, None] * s + H.table.astype(np.int64)[None, :, None, :]
    table = table.reshape(n * s, n * s)
    return group_from_cayley_table(table)


def trivial_group() -> Group:
    return Group(np.zeros((1, 1), dtype=np.int32), _validated=True)
