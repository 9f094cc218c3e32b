"""Constructors for named group families and complete isomorphism-class
lists for orders pqr (distinct primes), p^2 q, and p^3.

Builders return validated :class:`~cent_atlas.core.Group` values with
systematic labels.  Classification lists are built from the standard
cyclic/metacyclic/semidirect parameterizations; tests confirm the lists are
pairwise non-isomorphic and, at small orders, match an independent
exhaustive enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .core import (
    ActionSpec,
    Group,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    semidirect_product,
)
from .errors import BadParameters, NoInstanceAvailable
from .invariants import center, is_prime

__all__ = [
    "FamilySpec",
    "abelian",
    "alternating",
    "build",
    "catalog_by_order",
    "catalog_up_to",
    "central_quotient_examples",
    "covered_orders",
    "cyclic",
    "dicyclic",
    "dihedral",
    "elementary",
    "groups_of_covered_order",
    "groups_of_order_p2q",
    "groups_of_order_p3",
    "groups_of_order_pqr",
    "heisenberg",
    "heisenberg_cover",
    "metacyclic",
    "prime_square_pairs",
    "prime_triples",
    "modular_p3",
    "sl23",
    "symmetric",
    "unit_of_order",
    "witness_h",
]


def _require_prime(value: int, name: str) -> None:
    if not is_prime(value):
        raise BadParameters(f"{name} = {value} must be prime")


def _order_mod(a: int, n: int) -> int:
    """Multiplicative order of a modulo n (a coprime to n)."""
    k, cur = 1, a % n
    while cur != 1:
        cur = cur * a % n
        k += 1
    return k


def unit_of_order(d: int, n: int) -> int:
    """Smallest unit of multiplicative order exactly d modulo n."""
    for a in range(2, n):
        if gcd(a, n) == 1 and pow(a, d, n) == 1 and _order_mod(a, n) == d:
            return a
    raise BadParameters(f"no unit of order {d} modulo {n}")


def cyclic(n: int, order_cap: int | None = None) -> Group:
    if n < 1:
        raise BadParameters(f"cyclic order must be positive, got {n}")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return from_cayley_table(table, label=f"C{n}", order_cap=order_cap)


def abelian(factors: tuple[int, ...], order_cap: int | None = None) -> Group:
    """Direct product of cyclic groups of the given orders."""
    if not factors:
        return cyclic(1, order_cap=order_cap)
    g = cyclic(factors[0], order_cap=order_cap)
    for n in factors[1:]:
        g = direct_product(g, cyclic(n), order_cap=order_cap)
    return g


def elementary(p: int, k: int, order_cap: int | None = None) -> Group:
    _require_prime(p, "p")
    if k < 1:
        raise BadParameters(f"rank must be positive, got {k}")
    n = p ** k
    idx = np.arange(n)
    digits = [(idx // p ** j) % p for j in range(k)]
    table = np.zeros((n, n), dtype=np.int64)
    for j in range(k):
        table += ((digits[j][:, None] + digits[j][None, :]) % p) * p ** j
    return from_cayley_table(table, label=f"C{p}^{k}", order_cap=order_cap)


def dihedral(order: int, order_cap: int | None = None) -> Group:
    """Dihedral group of the given (even) order: rotations and reflections."""
    if order < 2 or order % 2:
        raise BadParameters(f"dihedral order must be even and >= 2, got {order}")
    m = order // 2
    k = np.arange(m)
    e = np.arange(2)
    # (k1,e1)(k2,e2) = (k1 + (-1)^e1 k2 mod m, e1 xor e2), index k + m*e
    e1, k1, e2, k2 = [a.reshape(s) for a, s in [
        (e, (2, 1, 1, 1)), (k, (1, m, 1, 1)), (e, (1, 1, 2, 1)), (k, (1, 1, 1, m)),
    ]]
    sign = np.where(e1 == 0, 1, -1)
    table = ((k1 + sign * k2) % m + m * (e1 ^ e2)).reshape(order, order)
    return from_cayley_table(table, label=f"D{order}", order_cap=order_cap)


def dicyclic(order: int, order_cap: int | None = None) -> Group:
    """Dicyclic group of the given order (divisible by 4); the generalized
    quaternion group when the order is a power of 2."""
    if order < 8 or order % 4:
        raise BadParameters(f"dicyclic order must be a multiple of 4 and >= 8, got {order}")
    m = order // 2
    k = np.arange(m)
    e = np.arange(2)
    # presentation <a, b | a^(2m')=1, b^2=a^m', b^-1 a b = a^-1> with m = 2m'
    e1, k1, e2, k2 = [a.reshape(s) for a, s in [
        (e, (2, 1, 1, 1)), (k, (1, m, 1, 1)), (e, (1, 1, 2, 1)), (k, (1, 1, 1, m)),
    ]]
    sign = np.where(e1 == 0, 1, -1)
    rot = (k1 + sign * k2 + (m // 2) * (e1 & e2)) % m
    table = (rot + m * (e1 ^ e2)).reshape(order, order)
    label = f"Q{order}" if order & (order - 1) == 0 else f"Dic{order}"
    return from_cayley_table(table, label=label, order_cap=order_cap)


def symmetric(n: int, order_cap: int | None = None) -> Group:
    if n < 1:
        raise BadParameters(f"degree must be positive, got {n}")
    if n == 1:
        return cyclic(1, order_cap=order_cap).relabeled("S1")
    cycle = tuple(range(1, n)) + (0,)
    swap = (1, 0) + tuple(range(2, n))
    g = from_permutation_generators([swap, cycle], label=f"S{n}", order_cap=order_cap)
    return g


def alternating(n: int, order_cap: int | None = None) -> Group:
    if n < 3:
        raise BadParameters(f"degree must be at least 3, got {n}")
    three = (1, 2, 0) + tuple(range(3, n))
    if n % 2:
        big = tuple(range(1, n)) + (0,)
    else:
        big = (0,) + tuple(range(2, n)) + (1,)
    gens = [three] if n == 3 else [three, big]
    return from_permutation_generators(gens, label=f"A{n}", order_cap=order_cap)


def metacyclic(m: int, n: int, k: int, order_cap: int | None = None,
               label: str | None = None) -> Group:
    """Group <a, b | a^m = b^n = 1, b^-1 a b = a^k>; needs k^n = 1 (mod m)."""
    if m < 1 or n < 1:
        raise BadParameters(f"orders must be positive, got m={m}, n={n}")
    if gcd(k, m) != 1:
        raise BadParameters(f"k = {k} must be coprime to m = {m}")
    if pow(k, n, m) != 1 % m:
        raise BadParameters(f"k^n = 1 (mod m) fails: {k}^{n} != 1 (mod {m})")
    # b a b^-1 = a^t with t = k^-1, so a^x b^y * a^u b^v = a^(x + u t^y) b^(y+v)
    t = pow(k, -1, m)
    tp = np.ones(n, dtype=np.int64)
    for y in range(1, n):
        tp[y] = tp[y - 1] * t % m
    x = np.arange(m)
    y = np.arange(n)
    y1, x1, y2, x2 = [a.reshape(s) for a, s in [
        (y, (n, 1, 1, 1)), (x, (1, m, 1, 1)), (y, (1, 1, n, 1)), (x, (1, 1, 1, m)),
    ]]
    table = ((x1 + x2 * tp[y1]) % m + m * ((y1 + y2) % n)).reshape(m * n, m * n)
    return from_cayley_table(table, label=label or f"C{m}:C{n}({k})",
                             order_cap=order_cap)


def heisenberg(p: int, order_cap: int | None = None) -> Group:
    """Unitriangular 3x3 group over the p-element field; exponent p for odd p."""
    _require_prime(p, "p")
    n = p ** 3
    idx = np.arange(n)
    a, b, c = idx // p ** 2, (idx // p) % p, idx % p
    a1, b1, c1 = [v[:, None] for v in (a, b, c)]
    a2, b2, c2 = [v[None, :] for v in (a, b, c)]
    table = ((a1 + a2 + b1 * c2) % p) * p ** 2 + ((b1 + b2) % p) * p + (c1 + c2) % p
    return from_cayley_table(table, label=f"Heis({p})", order_cap=order_cap)


def modular_p3(p: int, order_cap: int | None = None) -> Group:
    """Nonabelian group of order p^3 and exponent p^2, for odd p."""
    _require_prime(p, "p")
    if p == 2:
        raise BadParameters("p must be odd (the order-8 relatives are D8 and Q8)")
    return metacyclic(p * p, p, 1 + p, order_cap=order_cap, label=f"M{p ** 3}")


def sl23(order_cap: int | None = None) -> Group:
    """SL(2,3): the 2x2 matrices over the 3-element field of determinant 1."""
    mats = [(1, 0, 0, 1)]
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1 and (a, b, c, d) != (1, 0, 0, 1):
                        mats.append((a, b, c, d))
    index = {m: i for i, m in enumerate(mats)}
    n = len(mats)
    table = np.zeros((n, n), dtype=np.int64)
    for i, (a, b, c, d) in enumerate(mats):
        for j, (e, f, g, h) in enumerate(mats):
            prod = ((a * e + b * g) % 3, (a * f + b * h) % 3,
                    (c * e + d * g) % 3, (c * f + d * h) % 3)
            table[i, j] = index[prod]
    return from_cayley_table(table, label="SL(2,3)", order_cap=order_cap)


def witness_h(p: int, q: int, i: int, order_cap: int | None = None) -> Group:
    """Group of order p^3 q whose central quotient is C_p x (C_q : C_p).

    Realized as (C_p x C_p x C_q) : C_p where the acting generator fixes a,
    sends b to ab, and raises d to the i-th power.
    """
    _require_prime(p, "p")
    _require_prime(q, "q")
    if q % p != 1:
        raise BadParameters(f"q = 1 (mod p) fails: {q} != 1 (mod {p})")
    if pow(i, p, q) != 1:
        raise BadParameters(f"i^p = 1 (mod q) fails: {i}^{p} != 1 (mod {q})")
    if i % q == 1:
        raise BadParameters(f"i = {i} must not be 1 (mod q)")
    base = direct_product(direct_product(cyclic(p), cyclic(p)), cyclic(q),
                          order_cap=order_cap)
    idx = np.arange(base.order)
    x, y, z = idx // (p * q), (idx // q) % p, idx % q
    img = ((x + y) % p) * p * q + y * q + (i * z) % q
    act = ActionSpec.from_pairs([(1, img.tolist())])
    g = semidirect_product(base, cyclic(p), act, order_cap=order_cap)
    return g.relabeled(f"H({p},{q},{i})")


def heisenberg_cover(p: int, order_cap: int | None = None) -> Group:
    """Group of order p^4 (odd p) whose central quotient is Heis(p).

    A single-Jordan-block action of C_p on C_p x C_p x C_p.
    """
    _require_prime(p, "p")
    if p == 2:
        raise BadParameters("p must be odd (use D16 for covers of D8)")
    base = elementary(p, 3, order_cap=order_cap)
    idx = np.arange(base.order)
    # elementary() indexes digits little-endian: idx = x + y*p + z*p^2
    x, y, z = idx % p, (idx // p) % p, idx // p ** 2
    img = (x + y) % p + ((y + z) % p) * p + z * p ** 2
    act = ActionSpec.from_pairs([(1, img.tolist())])
    g = semidirect_product(base, cyclic(p), act, order_cap=order_cap)
    return g.relabeled(f"W({p})")


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for a named group; see :func:`build`.

    Leaf families use the integer parameters; "direct" combines the two
    specs in ``parts``; "semidirect" combines ``parts`` (normal factor
    first) under ``action``.
    """

    family: str
    n: int | None = None
    m: int | None = None
    k: int | None = None
    p: int | None = None
    q: int | None = None
    r: int | None = None
    i: int | None = None
    parts: tuple["FamilySpec", ...] = field(default=())
    action: ActionSpec | None = None


def _need(spec: FamilySpec, *names: str) -> list[int]:
    vals = []
    for name in names:
        v = getattr(spec, name)
        if v is None:
            raise BadParameters(f"family {spec.family!r} needs --{name}")
        vals.append(v)
    return vals


def build(spec: FamilySpec, order_cap: int | None = None) -> Group:
    fam = spec.family
    if fam == "cyclic":
        return cyclic(*_need(spec, "n"), order_cap=order_cap)
    if fam == "dihedral":
        return dihedral(*_need(spec, "n"), order_cap=order_cap)
    if fam == "dicyclic":
        return dicyclic(*_need(spec, "n"), order_cap=order_cap)
    if fam == "symmetric":
        return symmetric(*_need(spec, "n"), order_cap=order_cap)
    if fam == "alternating":
        return alternating(*_need(spec, "n"), order_cap=order_cap)
    if fam == "metacyclic":
        m, n, k = _need(spec, "m", "n", "k")
        return metacyclic(m, n, k, order_cap=order_cap)
    if fam == "heisenberg":
        return heisenberg(*_need(spec, "p"), order_cap=order_cap)
    if fam == "modular-p3":
        return modular_p3(*_need(spec, "p"), order_cap=order_cap)
    if fam == "elementary":
        p, k = _need(spec, "p", "k")
        return elementary(p, k, order_cap=order_cap)
    if fam == "witness-h":
        p, q, i = _need(spec, "p", "q", "i")
        return witness_h(p, q, i, order_cap=order_cap)
    if fam == "sl23":
        return sl23(order_cap=order_cap)
    if fam == "direct":
        if len(spec.parts) != 2:
            raise BadParameters("direct needs exactly two part specs")
        a, b = (build(s, order_cap=order_cap) for s in spec.parts)
        return direct_product(a, b, order_cap=order_cap)
    if fam == "semidirect":
        if len(spec.parts) != 2 or spec.action is None:
            raise BadParameters("semidirect needs two part specs and an action")
        a, b = (build(s, order_cap=order_cap) for s in spec.parts)
        return semidirect_product(a, b, spec.action, order_cap=order_cap)
    raise BadParameters(f"unknown family {fam!r}")


def _crt(a1: int, m1: int, a2: int, m2: int) -> int:
    u = pow(m1, -1, m2)
    return (a1 + (a2 - a1) * u % m2 * m1) % (m1 * m2)


def groups_of_order_pqr(p: int, q: int, r: int,
                        order_cap: int | None = None) -> list[Group]:
    """One representative per isomorphism class of order pqr, p < q < r."""
    for v, name in ((p, "p"), (q, "q"), (r, "r")):
        _require_prime(v, name)
    if not p < q < r:
        raise BadParameters(f"need p < q < r, got {p}, {q}, {r}")
    out = [cyclic(p * q * r, order_cap=order_cap)]
    if q % p == 1:
        out.append(metacyclic(q, p * r, unit_of_order(p, q), order_cap=order_cap))
    if r % p == 1:
        out.append(metacyclic(r, p * q, unit_of_order(p, r), order_cap=order_cap))
    if r % q == 1:
        out.append(metacyclic(r, p * q, unit_of_order(q, r), order_cap=order_cap))
    if r % (p * q) == 1:
        out.append(metacyclic(r, p * q, unit_of_order(p * q, r), order_cap=order_cap))
    if q % p == 1 and r % p == 1:
        u = unit_of_order(p, q)
        v = unit_of_order(p, r)
        # one class per power pairing (u, v^j); normalizing the q-component
        # to u leaves no further identification
        for j in range(1, p):
            c = _crt(u, q, pow(v, j, r), r)
            out.append(metacyclic(q * r, p, c, order_cap=order_cap))
    return out


def groups_of_order_p2q(p: int, q: int,
                        order_cap: int | None = None) -> list[Group]:
    """One representative per isomorphism class of order p^2 q.

    p is the squared prime; q is the other prime (either may be larger).
    """
    _require_prime(p, "p")
    _require_prime(q, "q")
    if p == q:
        raise BadParameters(f"p and q must be distinct, got {p} twice")
    out = [
        cyclic(p * p * q, order_cap=order_cap),
        direct_product(cyclic(p), cyclic(p * q), order_cap=order_cap),
    ]
    if q % p == 1:
        kp = unit_of_order(p, q)
        out.append(metacyclic(q, p * p, kp, order_cap=order_cap))
        out.append(direct_product(cyclic(p), metacyclic(q, p, kp),
                                  order_cap=order_cap))
    if q % (p * p) == 1:
        out.append(metacyclic(q, p * p, unit_of_order(p * p, q),
                              order_cap=order_cap))
    if p % q == 1:
        out.append(metacyclic(p * p, q, unit_of_order(q, p * p),
                              order_cap=order_cap))
        lam = unit_of_order(q, p)
        # diagonal actions diag(lam, lam^b); swapping coordinates identifies
        # exponent b with its inverse mod q
        reps = sorted({0, 1} | {min(b, pow(b, -1, q)) for b in range(2, q)})
        for b in reps:
            out.append(_diagonal_p2q(p, q, lam, b, order_cap=order_cap))
    if q % 2 == 1 and (p + 1) % q == 0 and (p - 1) % q != 0:
        out.append(_irreducible_p2q(p, q, order_cap=order_cap))
    return out


def _diagonal_p2q(p: int, q: int, lam: int, b: int,
                  order_cap: int | None = None) -> Group:
    base = elementary(p, 2, order_cap=order_cap)
    idx = np.arange(base.order)
    x, y = idx % p, idx // p
    mult = pow(lam, b, p)
    img = (lam * x) % p + ((mult * y) % p) * p
    act = ActionSpec.from_pairs([(1, img.tolist())])
    g = semidirect_product(base, cyclic(q), act, order_cap=order_cap)
    return g.relabeled(f"(C{p}xC{p}):C{q}[{b}]")


def _irreducible_p2q(p: int, q: int, order_cap: int | None = None) -> Group:
    for t in range(p):
        # companion matrix [[0,-1],[1,t]]: (x, y) -> (-y, x + t y)
        a, b, c, d = 0, (-1) % p, 1, t
        e, f, g, h = 1, 0, 0, 1
        order = 0
        for step in range(1, 4 * q + 1):
            e, f, g, h = ((a * e + b * g) % p, (a * f + b * h) % p,
                          (c * e + d * g) % p, (c * f + d * h) % p)
            if (e, f, g, h) == (1, 0, 0, 1):
                order = step
                break
        if order == q:
            break
    else:
        raise BadParameters(f"no order-{q} companion matrix over F_{p}")
    base = elementary(p, 2, order_cap=order_cap)
    idx = np.arange(base.order)
    x, y = idx % p, idx // p
    img = (-y) % p + ((x + t * y) % p) * p
    act = ActionSpec.from_pairs([(1, img.tolist())])
    grp = semidirect_product(base, cyclic(q), act, order_cap=order_cap)
    return grp.relabeled(f"(C{p}xC{p}):C{q}")


def groups_of_order_p3(p: int, order_cap: int | None = None) -> list[Group]:
    """The five isomorphism classes of order p^3."""
    _require_prime(p, "p")
    out = [
        cyclic(p ** 3, order_cap=order_cap),
        direct_product(cyclic(p * p), cyclic(p), order_cap=order_cap),
        elementary(p, 3, order_cap=order_cap),
    ]
    if p == 2:
        out.append(dihedral(8, order_cap=order_cap))
        out.append(dicyclic(8, order_cap=order_cap))
    else:
        out.append(heisenberg(p, order_cap=order_cap))
        out.append(modular_p3(p, order_cap=order_cap))
    return out


_SHAPE_ARITY = {"pqr": 3, "p2q": 2, "pq2": 2, "p3": 1}


def _shape_order(kind: str, primes: tuple[int, ...]) -> int:
    if kind == "pqr":
        p, q, r = primes
        return p * q * r
    if kind == "p2q":
        p, q = primes
        return p * p * q
    if kind == "pq2":
        p, q = primes
        return p * q * q
    return primes[0] ** 3


def central_quotient_examples(kind: str, primes: tuple[int, ...],
                              order_cap: int | None = None) -> list[Group]:
    """Curated groups G whose central quotient has the requested order shape.

    Trivial-center groups of the target order stand as their own instances;
    doubling by C2 and the named covers supply instances with nontrivial
    center.  Every instance is checked against the shape before it is
    returned.
    """
    if kind not in _SHAPE_ARITY:
        raise BadParameters(f"unknown shape kind {kind!r}")
    if len(primes) != _SHAPE_ARITY[kind]:
        raise BadParameters(
            f"shape {kind!r} needs {_SHAPE_ARITY[kind]} primes, got {len(primes)}")
    for v in primes:
        _require_prime(v, "prime")
    if kind in ("pqr", "p2q") and sorted(set(primes)) != sorted(primes):
        raise BadParameters(f"shape {kind!r} needs distinct primes, got {primes}")

    out: list[Group] = []
    if kind == "pqr":
        members = groups_of_order_pqr(*sorted(primes), order_cap=order_cap)
    elif kind == "p2q":
        members = groups_of_order_p2q(primes[0], primes[1], order_cap=order_cap)
    elif kind == "pq2":
        members = groups_of_order_p2q(primes[1], primes[0], order_cap=order_cap)
    else:
        members = []

    for g in members:
        if len(center(g)) == 1:
            out.append(g)
            out.append(direct_product(cyclic(2), g, order_cap=order_cap))

    if kind == "p2q":
        p, q = primes
        if q % p == 1:
            for i in _witness_exponents(p, q):
                out.append(witness_h(p, q, i, order_cap=order_cap))
        if p == 2:
            out.append(dihedral(8 * q, order_cap=order_cap))
            out.append(dicyclic(8 * q, order_cap=order_cap))
        if (p, q) == (2, 3):
            out.append(sl23(order_cap=order_cap))
    elif kind == "pq2":
        p, q = primes
        if p == 2:
            out.append(dihedral(4 * q * q, order_cap=order_cap))
    elif kind == "p3":
        p = primes[0]
        if p == 2:
            out.append(dihedral(16, order_cap=order_cap))
            out.append(metacyclic(8, 2, 3, order_cap=order_cap, label="SD16"))
            out.append(dicyclic(16, order_cap=order_cap))
        else:
            out.append(heisenberg_cover(p, order_cap=order_cap))

    if not out:
        raise NoInstanceAvailable(
            f"no curated group has central quotient of shape {kind} {primes}")
    target = _shape_order(kind, primes)
    for g in out:
        got = g.order // len(center(g))
        if got != target:
            raise BadParameters(
                f"curated instance {g.label} has central quotient of order "
                f"{got}, expected {target}")
    return out


def _witness_exponents(p: int, q: int) -> list[int]:
    return [i for i in range(2, q) if pow(i, p, q) == 1]


def prime_triples(max_order: int) -> list[tuple[int, int, int]]:
    primes = [v for v in range(2, max_order // 6 + 1) if is_prime(v)]
    out = []
    for a in range(len(primes)):
        for b in range(a + 1, len(primes)):
            for c in range(b + 1, len(primes)):
                n = primes[a] * primes[b] * primes[c]
                if n <= max_order:
                    out.append((primes[a], primes[b], primes[c]))
    return sorted(out, key=lambda t: t[0] * t[1] * t[2])


def prime_square_pairs(max_order: int) -> list[tuple[int, int]]:
    """Pairs (p, q), p squared, with p^2 q <= max_order."""
    out = []
    p = 2
    while p * p * 2 <= max_order:
        if is_prime(p):
            for q in range(2, max_order // (p * p) + 1):
                if q != p and is_prime(q):
                    out.append((p, q))
        p += 1
    return sorted(out, key=lambda t: t[0] * t[0] * t[1])


def covered_orders(max_order: int) -> dict[int, tuple[str, tuple[int, ...]]]:
    """Orders up to max_order that the classification lists cover."""
    out: dict[int, tuple[str, tuple[int, ...]]] = {}
    for p, q, r in prime_triples(max_order):
        out[p * q * r] = ("pqr", (p, q, r))
    for p, q in prime_square_pairs(max_order):
        out[p * p * q] = ("p2q", (p, q))
    p = 2
    while p ** 3 <= max_order:
        if is_prime(p):
            out[p ** 3] = ("p3", (p,))
        p += 1
    return dict(sorted(out.items()))


def groups_of_covered_order(n: int, order_cap: int | None = None) -> list[Group]:
    shapes = covered_orders(n)
    if n not in shapes:
        raise BadParameters(f"order {n} is not of shape pqr, p^2 q, or p^3")
    kind, primes = shapes[n]
    if kind == "pqr":
        return groups_of_order_pqr(*primes, order_cap=order_cap)
    if kind == "p2q":
        return groups_of_order_p2q(*primes, order_cap=order_cap)
    return groups_of_order_p3(*primes, order_cap=order_cap)


def _named_extras(order_cap: int | None = None) -> list[Group]:
    return [
        dihedral(16, order_cap=order_cap),
        metacyclic(8, 2, 3, order_cap=order_cap, label="SD16"),
        dicyclic(16, order_cap=order_cap),
        metacyclic(8, 2, 5, order_cap=order_cap, label="M16"),
        sl23(order_cap=order_cap),
        dihedral(24, order_cap=order_cap),
        dicyclic(24, order_cap=order_cap),
        direct_product(cyclic(2), alternating(4), order_cap=order_cap),
        witness_h(2, 3, 2, order_cap=order_cap),
        witness_h(2, 5, 4, order_cap=order_cap),
        witness_h(2, 7, 6, order_cap=order_cap),
        witness_h(2, 11, 10, order_cap=order_cap),
        direct_product(cyclic(2), metacyclic(5, 4, 2), order_cap=order_cap),
        heisenberg_cover(3, order_cap=order_cap),
        direct_product(cyclic(2), metacyclic(7, 6, 3), order_cap=order_cap),
    ]


def catalog_by_order(max_order: int,
                     order_cap: int | None = None) -> dict[int, list[Group]]:
    """All classification-list groups plus named extras, keyed by order.

    Extras live at orders outside the covered shapes, so no deduplication
    is needed between the two sources.
    """
    out: dict[int, list[Group]] = {}
    for n in covered_orders(max_order):
        out[n] = groups_of_covered_order(n, order_cap=order_cap)
    for g in _named_extras(order_cap=order_cap):
        if g.order <= max_order:
            out.setdefault(g.order, []).append(g)
    return dict(sorted(out.items()))


def catalog_up_to(max_order: int, order_cap: int | None = None) -> list[Group]:
    out: list[Group] = []
    for _, groups in catalog_by_order(max_order, order_cap=order_cap).items():
        out.extend(groups)
    return out
