"""Structural invariants: centralizers, Sylow data, Frobenius structure,
the non-commuting clique number, and isomorphism testing.

Everything here works on validated :class:`~cent_atlas.core.Group` values and
returns plain data; nothing mutates the group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Group, SubsetMask, quotient, subgroup_generated
from .errors import BadParameters, NotPrime, OrderCapExceeded

__all__ = [
    "AbelianProfile",
    "CentStructure",
    "FrobeniusStructure",
    "SylowData",
    "abelian_profile",
    "cent_structure",
    "center",
    "centralizer",
    "conjugacy_classes",
    "derived_subgroup",
    "find_isomorphism",
    "frobenius_structure",
    "is_isomorphic",
    "is_prime",
    "normalizer",
    "omega",
    "sylow",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _commuting_matrix(g: Group) -> np.ndarray:
    return np.equal(g.table, g.table.T)


def center(g: Group) -> SubsetMask:
    """Mask of elements commuting with everything."""
    return SubsetMask.from_bool(_commuting_matrix(g).all(axis=1))


def centralizer(g: Group, x: int) -> SubsetMask:
    """Mask of elements commuting with x."""
    g.check_index(x)
    return SubsetMask.from_bool(np.equal(g.table[x], g.table[:, x]))


@dataclass(frozen=True)
class CentStructure:
    """All distinct centralizers of a group.

    ``centralizers`` lists every distinct Cent(x) once, sorted ascending by
    bitmask value; the whole group (centralizer of a central element) is
    always present.  ``proper_indices`` is the sorted multiset of [G : C]
    over the proper members.  ``is_ca`` says the group is nonabelian with
    every proper centralizer abelian; only then does count = omega + 1.
    """

    order: int
    center: SubsetMask
    centralizers: tuple[SubsetMask, ...]
    proper_indices: tuple[int, ...]
    is_ca: bool

    @property
    def count(self) -> int:
        return len(self.centralizers)

    def proper(self) -> list[SubsetMask]:
        full = (1 << self.order) - 1
        return [m for m in self.centralizers if m.bits != full]


def cent_structure(g: Group) -> CentStructure:
    m = _commuting_matrix(g)
    packed = np.packbits(m, axis=1, bitorder="little")
    masks: dict[bytes, int] = {}
    for row in packed:
        key = row.tobytes()
        if key not in masks:
            masks[key] = int.from_bytes(key, "little")
    bits_sorted = sorted(masks.values())
    full = (1 << g.order) - 1
    cents = tuple(SubsetMask(b, g.order) for b in bits_sorted)
    proper_idx = []
    ca = True
    for cm in cents:
        if cm.bits == full:
            continue
        proper_idx.append(g.order // len(cm))
        idx = np.flatnonzero(cm.as_bool())
        if ca and not m[np.ix_(idx, idx)].all():
            ca = False
    zmask = SubsetMask.from_bool(m.all(axis=1))
    return CentStructure(
        order=g.order,
        center=zmask,
        centralizers=cents,
        proper_indices=tuple(sorted(proper_idx)),
        is_ca=bool(proper_idx) and ca,
    )


def derived_subgroup(g: Group) -> SubsetMask:
    """Mask of the subgroup generated by all commutators x^-1 y^-1 x y."""
    p = g.table[np.ix_(g.inverse, g.inverse)]
    comms = g.table[p, g.table]
    return subgroup_generated(g, np.unique(comms).tolist())


def conjugacy_classes(g: Group) -> list[list[int]]:
    """Conjugacy classes, each sorted, ordered by smallest member."""
    conj = g.table[g.table, g.inverse[:, None]]
    reps = conj.min(axis=0)
    out: dict[int, list[int]] = {}
    for x in range(g.order):
        out.setdefault(int(reps[x]), []).append(x)
    return [out[r] for r in sorted(out)]


def normalizer(g: Group, mask: SubsetMask) -> SubsetMask:
    """Mask of elements x with x * S * x^-1 = S."""
    members = np.array(mask.elements(), dtype=np.int32)
    flags = mask.as_bool()
    keep = np.zeros(g.order, dtype=bool)
    for x in range(g.order):
        conj = g.table[g.table[x, members], g.inverse[x]]
        keep[x] = flags[conj].all()
    return SubsetMask.from_bool(keep)


@dataclass(frozen=True)
class SylowData:
    prime: int
    count: int
    subgroup: SubsetMask


def sylow(g: Group, l: int) -> SylowData:
    """Sylow l-subgroup representative and the number of conjugates.

    The representative starts from a cyclic subgroup on an element of
    maximal l-power order and grows through normalizers until it reaches
    full l-part size.
    """
    if not is_prime(l):
        raise NotPrime(f"{l} is not prime")
    pk = 1
    n = g.order
    while n % l == 0:
        pk *= l
        n //= l
    if pk == 1:
        raise BadParameters(f"{l} does not divide the group order {g.order}")
    orders = g.element_orders
    lpow = orders[np.isin(orders, [l ** i for i in range(1, 32) if l ** i <= g.order])]
    best = int(lpow.max())
    x = int(np.flatnonzero(orders == best)[0])
    s = subgroup_generated(g, [x])
    while len(s) < pk:
        norm = normalizer(g, s)
        grown = False
        for y in norm.elements():
            if y not in s and g.power(y, l) in s:
                s = subgroup_generated(g, [*s.elements(), y])
                grown = True
                break
        if not grown:
            raise BadParameters("normalizer growth stalled; table is corrupt")
    members = np.array(s.elements(), dtype=np.int32)
    seen = set()
    for x in range(g.order):
        conj = g.table[g.table[x, members], g.inverse[x]]
        flags = np.zeros(g.order, dtype=bool)
        flags[conj] = True
        seen.add(SubsetMask.from_bool(flags).bits)
    return SylowData(prime=l, count=len(seen), subgroup=s)


@dataclass(frozen=True)
class AbelianProfile:
    """Classification of the abelian structure.

    kind is one of "nonabelian", "cyclic", "elementary_abelian",
    "other_abelian".  For abelian groups ``invariant_factors`` lists the
    cyclic factor orders largest first, each dividing the previous;
    ``prime`` is set only for the elementary abelian kind.
    """

    kind: str
    prime: int | None
    invariant_factors: tuple[int, ...]


def abelian_profile(g: Group) -> AbelianProfile:
    if not g.is_abelian():
        return AbelianProfile("nonabelian", None, ())
    factors: list[int] = []
    cur = g
    while cur.order > 1:
        e = int(cur.element_orders.max())
        x = int(np.flatnonzero(cur.element_orders == e)[0])
        factors.append(e)
        cur = quotient(cur, subgroup_generated(cur, [x]))
    if len(factors) <= 1:
        return AbelianProfile("cyclic", None, tuple(factors))
    if len(set(factors)) == 1 and is_prime(factors[0]):
        return AbelianProfile("elementary_abelian", factors[0], tuple(factors))
    return AbelianProfile("other_abelian", None, tuple(factors))


@dataclass(frozen=True)
class FrobeniusStructure:
    kernel: SubsetMask
    complement: SubsetMask
    complement_is_cyclic: bool


def _saturated_kernel_candidates(g: Group, m: np.ndarray) -> list[SubsetMask]:
    """Minimal normal, centralizer-closed subgroups containing each class."""
    out: dict[int, SubsetMask] = {}
    for cls in conjugacy_classes(g):
        if cls == [0]:
            continue
        seed = list(cls)
        while True:
            mask = subgroup_generated(g, seed)
            if len(mask) == g.order:
                mask = None
                break
            members = [x for x in mask.elements() if x != 0]
            need = np.zeros(g.order, dtype=bool)
            for x in members:
                need |= m[x]
            need[mask.elements()] = True
            if int(need.sum()) == len(mask):
                break
            seed = np.flatnonzero(need).tolist()
        if mask is not None and mask.bits not in out:
            out[mask.bits] = mask
    return sorted(out.values(), key=lambda s: (len(s), s.bits))


def _complement_search(g: Group, kernel: SubsetMask, m_target: int) -> SubsetMask | None:
    kflags = kernel.as_bool()
    orders = g.element_orders

    def trivial_meet(mask: SubsetMask) -> bool:
        inter = mask.as_bool() & kflags
        return int(inter.sum()) == 1

    cyclic_subs: dict[int, SubsetMask] = {}
    for y in range(1, g.order):
        if kflags[y] or m_target % int(orders[y]) != 0:
            continue
        sub = subgroup_generated(g, [y])
        if trivial_meet(sub):
            cyclic_subs.setdefault(sub.bits, sub)
    for sub in sorted(cyclic_subs.values(), key=lambda s: (-len(s), s.bits)):
        if len(sub) == m_target:
            return sub
    pool = sorted(cyclic_subs.values(), key=lambda s: (-len(s), s.bits))
    for i, s1 in enumerate(pool):
        for s2 in pool[i + 1:]:
            joined = subgroup_generated(g, [*s1.elements(), *s2.elements()])
            if len(joined) == m_target and trivial_meet(joined):
                return joined
    return None


def frobenius_structure(g: Group) -> FrobeniusStructure | None:
    """Detect a Frobenius decomposition.

    Looks for the smallest proper normal subgroup K that swallows the
    centralizer of each of its non-identity elements, then for a complement
    of matching order meeting K trivially.  Groups with nontrivial center
    never qualify.
    """
    if g.order == 1 or g.is_abelian():
        return None
    m = _commuting_matrix(g)
    if int(m.all(axis=1).sum()) > 1:
        return None
    for cand in _saturated_kernel_candidates(g, m):
        members = [x for x in cand.elements() if x != 0]
        flags = cand.as_bool()
        ok = all(not (m[x] & ~flags).any() for x in members)
        if not ok:
            continue
        comp = _complement_search(g, cand, g.order // len(cand))
        if comp is not None:
            sub = np.array(comp.elements(), dtype=np.int32)
            orders_in = g.element_orders[sub]
            cyclic = bool((orders_in == len(comp)).any())
            return FrobeniusStructure(kernel=cand, complement=comp,
                                      complement_is_cyclic=cyclic)
    return None


def _distinct_proper_centralizer_reps(g: Group, m: np.ndarray) -> tuple[list[int], list[np.ndarray]]:
    reps: list[int] = []
    rows: list[np.ndarray] = []
    seen: set[bytes] = set()
    for x in range(g.order):
        if m[x].all():
            continue
        key = np.packbits(m[x]).tobytes()
        if key not in seen:
            seen.add(key)
            reps.append(x)
            rows.append(m[x])
    return reps, rows


def omega(g: Group) -> int:
    """Largest set of pairwise non-commuting elements (1 for abelian groups).

    Elements sharing a centralizer commute, so it suffices to search one
    representative per distinct proper centralizer; the answer is the max
    clique of the non-commuting graph on those representatives.
    """
    if g.is_abelian():
        return 1
    m = _commuting_matrix(g)
    reps, rows = _distinct_proper_centralizer_reps(g, m)
    k = len(reps)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if not rows[i][reps[j]]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    # order vertices by descending degree for better early bounds
    by_degree = sorted(range(k), key=lambda v: -adj[v].bit_count())
    pos = {v: i for i, v in enumerate(by_degree)}
    radj = [0] * k
    for v in range(k):
        nb = adj[v]
        acc = 0
        while nb:
            low = nb & -nb
            acc |= 1 << pos[low.bit_length() - 1]
            nb ^= low
        radj[pos[v]] = acc
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & radj[v])
            cand &= cand - 1

    expand(0, (1 << k) - 1)
    return best


def _order_histogram(g: Group) -> tuple[tuple[int, int], ...]:
    vals, counts = np.unique(g.element_orders, return_counts=True)
    return tuple((int(v), int(c)) for v, c in zip(vals, counts))


def _iso_prefilter(g: Group, h: Group) -> bool:
    if g.order != h.order:
        return False
    if _order_histogram(g) != _order_histogram(h):
        return False
    ga, ha = g.is_abelian(), h.is_abelian()
    if ga != ha:
        return False
    if ga:
        return abelian_profile(g).invariant_factors == abelian_profile(h).invariant_factors
    mg, mh = _commuting_matrix(g), _commuting_matrix(h)
    if sorted(mg.sum(axis=1).tolist()) != sorted(mh.sum(axis=1).tolist()):
        return False
    if len(derived_subgroup(g)) != len(derived_subgroup(h)):
        return False
    return True


def _generating_tuple(g: Group) -> list[int]:
    gens: list[int] = []
    closed = subgroup_generated(g, gens)
    while len(closed) < g.order:
        flags = closed.as_bool()
        outside = np.flatnonzero(~flags)
        orders = g.element_orders[outside]
        pick = int(outside[int(np.argmax(orders))])
        gens.append(pick)
        closed = subgroup_generated(g, gens)
    return gens


def _power_index(g: Group, base: int, target: int) -> int | None:
    """Return e with base^e == target, if target lies in <base>."""
    cur = 0
    for e in range(int(g.element_orders[base])):
        if cur == target:
            return e
        cur = int(g.table[cur, base])
    return None


_DEFAULT_ISO_BUDGET = 500_000


def find_isomorphism(g: Group, h: Group, max_nodes: int = _DEFAULT_ISO_BUDGET) -> list[int] | None:
    """Explicit isomorphism g -> h as an image list, or None.

    Backtracks over images of a small generating tuple, pruning by element
    order, centralizer size, class size, and exact power relations among
    generators.  The first generator's image only ranges over conjugacy
    class representatives of h, since conjugate tuples extend identically.
    """
    if not _iso_prefilter(g, h):
        return None
    n = g.order
    if n == 1:
        return [0]
    gens = _generating_tuple(g)
    k = len(gens)
    mg, mh = _commuting_matrix(g), _commuting_matrix(h)
    g_cent = mg.sum(axis=1)
    h_cent = mh.sum(axis=1)
    conj_h = h.table[h.table, h.inverse[:, None]]
    h_class_rep = conj_h.min(axis=0)
    conj_g = g.table[g.table, g.inverse[:, None]]
    g_class_rep = conj_g.min(axis=0)
    g_class_size = np.bincount(g_class_rep, minlength=n)[g_class_rep]
    h_class_size = np.bincount(h_class_rep, minlength=n)[h_class_rep]

    def sig_g(x: int) -> tuple[int, int, int]:
        return (int(g.element_orders[x]), int(g_cent[x]), int(g_class_size[x]))

    h_sigs = {}
    for y in range(n):
        h_sigs.setdefault(
            (int(h.element_orders[y]), int(h_cent[y]), int(h_class_size[y])), []
        ).append(y)

    gen_sigs = [sig_g(x) for x in gens]
    for s in gen_sigs:
        if s not in h_sigs:
            return None

    # power-relation constraints among generators, both directions
    relations: list[tuple[int, int, int]] = []  # (i, j, e): gens[j]^-1 gens[i] gens[j] == gens[i]^e
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            conj = int(g.table[g.table[g.inverse[gens[j]], gens[i]], gens[j]])
            e = _power_index(g, gens[i], conj)
            if e is not None:
                relations.append((i, j, e))

    prod_orders = {}
    for i in range(k):
        for j in range(k):
            prod_orders[(i, j)] = int(g.element_orders[g.table[gens[i], gens[j]]])

    nodes = 0
    images: list[int] = []

    def h_power(base: int, e: int) -> int:
        cur = 0
        for _ in range(e):
            cur = int(h.table[cur, base])
        return cur

    def consistent(pos: int, cand: int) -> bool:
        for j in range(pos):
            cj = images[j]
            if int(h.element_orders[h.table[cand, cj]]) != prod_orders[(pos, j)]:
                return False
            if int(h.element_orders[h.table[cj, cand]]) != prod_orders[(j, pos)]:
                return False
        for (i, j, e) in relations:
            if i > pos or j > pos or (i != pos and j != pos):
                continue
            hi = cand if i == pos else images[i]
            hj = cand if j == pos else images[j]
            lhs = int(h.table[h.table[h.inverse[hj], hi], hj])
            if lhs != h_power(hi, e):
                return False
        return True

    def extend_full() -> list[int] | None:
        phi = np.full(n, -1, dtype=np.int64)
        phi[0] = 0
        queue = [0]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for gi, hi in zip(gens, images):
                y = int(g.table[x, gi])
                if phi[y] < 0:
                    phi[y] = h.table[phi[x], hi]
                    queue.append(y)
        if (phi < 0).any():
            return None
        if np.bincount(phi, minlength=n).max() > 1:
            return None
        if not np.array_equal(phi[g.table], h.table[phi][:, phi]):
            return None
        return [int(v) for v in phi]

    def dfs(pos: int) -> list[int] | None:
        nonlocal nodes
        if pos == k:
            return extend_full()
        cands = h_sigs[gen_sigs[pos]]
        for cand in cands:
            if pos == 0 and h_class_rep[cand] != cand:
                continue
            if cand in images:
                continue
            nodes += 1
            if nodes > max_nodes:
                raise OrderCapExceeded(
                    f"isomorphism search exceeded budget of {max_nodes} nodes"
                )
            if not consistent(pos, cand):
                continue
            images.append(cand)
            got = dfs(pos + 1)
            if got is not None:
                return got
            images.pop()
        return None

    return dfs(0)


def is_isomorphic(g: Group, h: Group, max_nodes: int = _DEFAULT_ISO_BUDGET) -> bool:
    return find_isomorphism(g, h, max_nodes=max_nodes) is not None
