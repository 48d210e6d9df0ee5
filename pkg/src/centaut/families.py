"""Builders for the standard p-group families, plus a small source grammar.

Sources name groups as builder expressions like "dihedral(16)" or products
"dihedral(16) x cyclic(2)"; the CLI's builtin: prefix also accepts the
colon form "dihedral:16".  Tables produced from closed formulas go through
full validation so a bad parameter set cannot yield a non-group.
"""

from __future__ import annotations

import re
from typing import Callable, Sequence

import numpy as np

from .abelian import _is_prime
from .errors import BadParameters, ClosureExceedsCap, UnknownBuiltin
from .groups import (
    DEFAULT_ORDER_CAP,
    Group,
    direct_product,
    group_from_cayley_table,
    semidirect_product,
)
from .structure import center, closure, quotient


def cyclic(m: int) -> Group:
    if m < 1:
        raise BadParameters(f"cyclic order must be >= 1, got {m}")
    table = (np.arange(m)[:, None] + np.arange(m)[None, :]) % m
    return Group(table.astype(np.int32), _validated=True)


def abelian_group(p: int, exponents: Sequence[int], cap: int = DEFAULT_ORDER_CAP) -> Group:
    if not _is_prime(p):
        raise BadParameters(f"{p} is not prime")
    exps = [int(e) for e in exponents]
    if not exps or any(e < 1 for e in exps):
        raise BadParameters(f"exponents must be nonempty and >= 1, got {exps}")
    G = cyclic(p ** exps[0])
    for e in exps[1:]:
        G = direct_product(G, cyclic(p**e), cap=cap)
    return G

def elementary(p: int, k: int) -> Group:
    return abelian_group(p, [1] * k)


def _power_of(n: int, p: int) -> int:
    """log_p n, or -1 when n is not a power of p."""
    k = 0
    while n > 1 and n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else -1


def metacyclic(m: int, s: int, t: int, w: int = 0) -> Group:
    """<a, b | a^m = 1, b^s = a^w, b a b^-1 = a^t> on pairs a^i b^j.

    Requires t^s == 1 (mod m) and w*(t-1) == 0 (mod m) so the relations are
    consistent; the assembled table is fully validated regardless.
    """
    if m < 1 or s < 1:
        raise BadParameters(f"need m, s >= 1, got m={m} s={s}")
    if not 0 <= t < m or not 0 <= w < m:
        raise BadParameters(f"need 0 <= t, w < m, got t={t} w={w}")
    if pow(t, s, m) != 1 % m:
        raise BadParameters(f"t^s = {pow(t, s, m)} != 1 (mod {m})")
    if (w * (t - 1)) % m != 0:
        raise BadParameters(f"w*(t-1) = {w * (t - 1)} != 0 (mod {m})")
    tp = [pow(t, j, m) for j in range(s)]
    i1 = np.arange(m)[:, None, None, None]
    j1 = np.arange(s)[None, :, None, None]
    i2 = np.arange(m)[None, None, :, None]
    j2 = np.arange(s)[None, None, None, :]
    tpow = np.asarray(tp)[j1]
    carry = (j1 + j2) // s  # b^s folds back to a^w
    ii = (i1 + tpow * i2 + w * carry) % m
    jj = (j1 + j2) % s
    table = (ii * s + jj).reshape(m * s, m * s)
    return group_from_cayley_table(table)


def dihedral(order: int) -> Group:
    m = order // 2
    if order < 8 or _power_of(order, 2) < 0:
        raise BadParameters(f"dihedral order must be 2^k >= 8, got {order}")
    return metacyclic(m, 2, m - 1, 0)


def quaternion(order: int) -> Group:
    m = order // 2
    if order < 8 or _power_of(order, 2) < 0:
        raise BadParameters(f"quaternion order must be 2^k >= 8, got {order}")
    return metacyclic(m, 2, m - 1, m // 2)


def semidihedral(order: int) -> Group:
    m = order // 2
    if order < 16 or _power_of(order, 2) < 0:
        raise BadParameters(f"semidihedral order must be 2^k >= 16, got {order}")
    return metacyclic(m, 2, m // 2 - 1, 0)


def modular(p: int, order: int) -> Group:
    """M_{p^k}: cyclic C_{p^(k-1)} extended by the power-(1+p^(k-2)) map."""
    if not _is_prime(p):
        raise BadParameters(f"{p} is not prime")
    k = _power_of(order, p)
    if k < 3:
        raise BadParameters(f"modular order must be p^k >= p^3, got {order}")
    m = order // p
    return metacyclic(m, p, 1 + m // p, 0)


def heisenberg(p: int, k: int = 1) -> Group:
    """Upper unitriangular 3x3 matrices over Z/p^k; order p^(3k), class 2."""
    if not _is_prime(p):
        raise BadParameters(f"{p} is not prime")
    if k < 1:
        raise BadParameters(f"need k >= 1, got {k}")
    q = p**k
    n = q**3
    digits = np.stack(np.unravel_index(np.arange(n), (q, q, q)), axis=1)  # (x, y, z)
    a = digits[:, None, :]
    b = digits[None, :, :]
    x = (a[..., 0] + b[..., 0]) % q
    y = (a[..., 1] + b[..., 1]) % q
    z = (a[..., 2] + b[..., 2] + a[..., 0] * b[..., 1]) % q
    table = np.ravel_multi_index((x, y, z), (q, q, q))
    return group_from_cayley_table(table)


def unitriangular4(p: int) -> Group:
    """Upper unitriangular 4x4 matrices over Z/p; order p^6, class 3."""
    if not _is_prime(p):
        raise BadParameters(f"{p} is not prime")
    n = p**6
    digits = np.stack(
        np.unravel_index(np.arange(n), (p,) * 6), axis=1
    )  # (a12, a13, a14, a23, a24, a34)
    a = digits[:, None, :]
    b = digits[None, :, :]
    c12 = (a[..., 0] + b[..., 0]) % p
    c13 = (a[..., 1] + b[..., 1] + a[..., 0] * b[..., 3]) % p
    c14 = (a[..., 2] + b[..., 2] + a[..., 0] * b[..., 4] + a[..., 1] * b[..., 5]) % p
    c23 = (a[..., 3] + b[..., 3]) % p
    c24 = (a[..., 4] + b[..., 4] + a[..., 3] * b[..., 5]) % p
    c34 = (a[..., 5] + b[..., 5]) % p
    table = np.ravel_multi_index(
        (c12, c13, c14, c23, c24, c34), (p,) * 6
    )
    return group_from_cayley_table(table)


def central_product(A: Group, B: Group) -> Group:
    """Glue A and B along their centers, both of which must be order p."""
    za = center(A)
    zb = center(B)
    if za.order != zb.order or not _is_prime(za.order):
        raise BadParameters(
            f"central product needs matching prime-order centers, "
            f"got {za.order} and {zb.order}"
        )
    D = direct_product(A, B)
    ident = closure(D, [za.elements[1] * B.order + B.inv(zb.elements[1])])
    Q, _ = quotient(D, ident)
    return Q


def extraspecial(p: int, order: int, sign: str = "+") -> Group:
    """Extraspecial group of order p^(2r+1); sign picks the isomorphism type.

    "+" is the central product of r copies of the basic class-2 group
    (exponent p for odd p); "-" swaps one factor for the other basic type.
    """
    if not _is_prime(p):
        raise BadParameters(f"{p} is not prime")
    if sign not in ("+", "-"):
        raise BadParameters(f"sign must be '+' or '-', got {sign!r}")
    k = _power_of(order, p)
    if k < 3 or k % 2 == 0:
        raise BadParameters(f"order must be p^(2r+1) >= p^3, got {order}")
    r = (k - 1) // 2
    if p == 2:
        plus, minus = dihedral(8), quaternion(8)
    else:
        plus, minus = heisenberg(p, 1), modular(p, p**3)
    factors = [plus] * r if sign == "+" else [minus] + [plus] * (r - 1)
    G = factors[0]
    for F in factors[1:]:
        G = central_product(G, F)
    return G


def cyclic_wreath(p: int, m: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """C_p wr C_m: the cyclic shift acting on m coordinates mod p."""
    if not _is_prime(p):
        raise BadParameters(f"{p} is not prime")
    if m < 1:
        raise BadParameters(f"need m >= 1, got {m}")
    base = elementary(p, m)
    n = p**m
    coords = np.stack(np.unravel_index(np.arange(n), (p,) * m), axis=1)
    action = []
    for j in range(m):
        rolled = np.roll(coords, j, axis=1)
        action.append(np.ravel_multi_index(tuple(rolled.T), (p,) * m))
    return semidirect_product(base, cyclic(m), action, cap=cap)


def wreath(p: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    return cyclic_wreath(p, p, cap=cap)


_BUILTINS: dict[str, tuple[Callable[..., Group], str, str]] = {
    "cyclic": (cyclic, "cyclic(m)", "cyclic group of order m"),
    "abelian": (
        lambda p, *e: abelian_group(p, e),
        "abelian(p,e1,e2,...)",
        "product of C_{p^ei}",
    ),
    "elementary": (elementary, "elementary(p,k)", "C_p^k"),
    "dihedral": (dihedral, "dihedral(2^k)", "dihedral group, order >= 8"),
    "quaternion": (quaternion, "quaternion(2^k)", "generalized quaternion, order >= 8"),
    "semidihedral": (semidihedral, "semidihedral(2^k)", "semidihedral, order >= 16"),
    "modular": (modular, "modular(p,p^k)", "modular maximal-cyclic, order >= p^3"),
    "heisenberg": (heisenberg, "heisenberg(p,k)", "unitriangular 3x3 over Z/p^k"),
    "unitriangular4": (unitriangular4, "unitriangular4(p)", "unitriangular 4x4 over Z/p"),
    "extraspecial": (
        extraspecial,
        "extraspecial(p,p^(2r+1),+|-)",
        "extraspecial group of either type",
    ),
    "metacyclic": (
        metacyclic,
        "metacyclic(m,s,t[,w])",
        "<a,b | a^m, b^s=a^w, bab^-1=a^t>",
    ),
    "cwreath": (cyclic_wreath, "cwreath(p,m)", "C_p wr C_m (cyclic shift)"),
    "wreath": (wreath, "wreath(p)", "C_p wr C_p"),
}


def list_builtins() -> list[tuple[str, str, str]]:
    """(name, signature, description) rows, alphabetical."""
    return sorted((n, sig, desc) for n, (_, sig, desc) in _BUILTINS.items())


def builtin(name: str, params: int | str | Sequence[int | str] = ()) -> Group:
    if name not in _BUILTINS:
        known = ", ".join(sorted(_BUILTINS))
        raise UnknownBuiltin(f"no builtin {name!r}; known: {known}")
    if isinstance(params, (int, str)):
        params = (params,)
    fn = _BUILTINS[name][0]
    try:
        return fn(*params)
    except TypeError as e:
        raise BadParameters(f"{name}{tuple(params)}: {e}") from None


_TERM = re.compile(r"^\s*([a-z][a-z0-9_]*)\s*(?:\(([^()]*)\)|:(.*))?\s*$")


def _parse_params(text: str) -> list[int | str]:
    out: list[int | str] = []
    for tok in re.split(r"[\s,:]+", text.strip()):
        if not tok:
            continue
        if tok in ("+", "-"):
            out.append(tok)
        elif re.fullmatch(r"-?\d+", tok):
            out.append(int(tok))
        else:
            raise BadParameters(f"bad parameter token {tok!r}")
    return out


def parse_group_spec(spec: str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Build from "name(p1,p2)" terms joined by " x " for direct products."""
    parts = re.split(r"\s+x\s+", spec.strip())
    groups = []
    for part in parts:
        m = _TERM.match(part)
        if not m:
            raise BadParameters(f"cannot parse group term {part!r}")
        name = m.group(1)
        raw = m.group(2) if m.group(2) is not None else m.group(3)
        params = _parse_params(raw) if raw else []
        groups.append(builtin(name, params))
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H, cap=cap)
    if G.order > cap:
        raise ClosureExceedsCap(f"order {G.order} exceeds cap {cap}")
    return G
