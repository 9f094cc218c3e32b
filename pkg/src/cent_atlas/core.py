"""Finite groups as validated Cayley tables.

Elements of a group of order n are the integers 0..n-1 and 0 is always the
identity.  Every constructor funnels through the same axiom validation, so a
``Group`` in hand is always a genuine group, whatever recipe produced it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadParameters,
    IndexOutOfRange,
    NoIdentityAtZero,
    NoInverse,
    NotAssociative,
    NotAutomorphism,
    NotHomomorphism,
    NotLatinSquare,
    NotNormal,
    NotSubgroup,
    OrderCapExceeded,
)

__all__ = [
    "DEFAULT_ORDER_CAP",
    "ORDER_CAP_ENV",
    "ActionSpec",
    "Group",
    "SubsetMask",
    "check_subgroup",
    "direct_product",
    "from_cayley_table",
    "from_permutation_generators",
    "quotient",
    "quotient_with_cosets",
    "resolve_order_cap",
    "semidirect_product",
    "subgroup_as_group",
    "subgroup_generated",
]

DEFAULT_ORDER_CAP = 2048
ORDER_CAP_ENV = "CENT_ATLAS_ORDER_CAP"

# Below this order the O(n^3) triple scan is cheap enough to run outright on
# top of the generator-based test.
_FULL_TRIPLE_SCAN_LIMIT = 256


def resolve_order_cap(explicit: int | None = None) -> int:
    """Return the effective order cap: explicit arg, else env var, else default."""
    if explicit is not None:
        if explicit < 1:
            raise BadParameters(f"order cap must be positive, got {explicit}")
        return explicit
    env = os.environ.get(ORDER_CAP_ENV)
    if env:
        try:
            cap = int(env)
        except ValueError as exc:
            raise BadParameters(f"{ORDER_CAP_ENV} must be an integer, got {env!r}") from exc
        if cap < 1:
            raise BadParameters(f"{ORDER_CAP_ENV} must be positive, got {cap}")
        return cap
    return DEFAULT_ORDER_CAP


def _bits_from_bool(flags: np.ndarray) -> int:
    packed = np.packbits(flags.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _bool_from_bits(bits: int, n: int) -> np.ndarray:
    raw = bits.to_bytes((n + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, np.uint8), count=n, bitorder="little").astype(bool)


@dataclass(frozen=True)
class SubsetMask:
    """Subset of a group's elements, stored as a bitmask.

    ``bits`` has bit i set iff element i belongs to the subset; ``order`` is
    the order of the owning group, so masks from different groups never
    compare equal by accident.
    """

    bits: int
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise BadParameters(f"mask owner order must be positive, got {self.order}")
        if self.bits < 0 or self.bits >> self.order:
            raise IndexOutOfRange(f"mask bits out of range for order {self.order}")

    @classmethod
    def from_elements(cls, elements: Iterable[int], order: int) -> "SubsetMask":
        bits = 0
        for e in elements:
            if not 0 <= e < order:
                raise IndexOutOfRange(f"element {e} out of range for order {order}")
            bits |= 1 << e
        return cls(bits, order)

    @classmethod
    def from_bool(cls, flags: np.ndarray) -> "SubsetMask":
        return cls(_bits_from_bool(flags), len(flags))

    def elements(self) -> list[int]:
        return [i for i in range(self.order) if self.bits >> i & 1]

    def as_bool(self) -> np.ndarray:
        return _bool_from_bits(self.bits, self.order)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.order and bool(self.bits >> i & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.elements())


class Group:
    """Immutable finite group given by its Cayley table.

    Do not call directly; use :func:`from_cayley_table` or one of the other
    constructors, which validate the axioms.
    """

    __slots__ = ("order", "table", "inverse", "element_orders", "label")

    def __init__(self, table: np.ndarray, inverse: np.ndarray, element_orders: np.ndarray,
                 label: str | None):
        object.__setattr__(self, "order", int(table.shape[0]))
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "inverse", inverse)
        object.__setattr__(self, "element_orders", element_orders)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("Group is immutable")

    def __repr__(self) -> str:
        name = self.label or "Group"
        return f"<{name} of order {self.order}>"

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def power(self, x: int, k: int) -> int:
        self.check_index(x)
        if k < 0:
            x, k = self.inv(x), -k
        acc, base = 0, x
        while k:
            if k & 1:
                acc = int(self.table[acc, base])
            base = int(self.table[base, base])
            k >>= 1
        return acc

    def conjugate(self, g: int, x: int) -> int:
        """Return g * x * g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def commutes(self, i: int, j: int) -> bool:
        return bool(self.table[i, j] == self.table[j, i])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def elements(self) -> range:
        return range(self.order)

    def exponent(self) -> int:
        out = 1
        for d in np.unique(self.element_orders):
            out = out * int(d) // gcd(out, int(d))
        return out

    def check_index(self, i: int) -> None:
        if not 0 <= i < self.order:
            raise IndexOutOfRange(f"element index {i} out of range for order {self.order}")

    def relabeled(self, label: str | None) -> "Group":
        """Same group, different display label."""
        return Group(self.table, self.inverse, self.element_orders, label)

    def full_mask(self) -> SubsetMask:
        return SubsetMask((1 << self.order) - 1, self.order)


def _closure_under_table(table: np.ndarray, seeds: Iterable[int]) -> np.ndarray:
    """Indices of the smallest product-closed subset containing 0 and the seeds.

    Works on any table (associativity not assumed); used both by the subgroup
    constructor and by the generating-set search in validation.
    """
    n = table.shape[0]
    member = np.zeros(n, dtype=bool)
    member[0] = True
    for s in seeds:
        member[s] = True
    while True:
        idx = np.flatnonzero(member)
        prods = table[np.ix_(idx, idx)]
        before = int(member.sum())
        member[prods.ravel()] = True
        if int(member.sum()) == before:
            return idx


def _generating_indices(table: np.ndarray) -> list[int]:
    """Greedy small generating set (in the magma sense) for a table."""
    n = table.shape[0]
    gens: list[int] = []
    closed = _closure_under_table(table, gens)
    while len(closed) < n:
        member = np.zeros(n, dtype=bool)
        member[closed] = True
        nxt = int(np.flatnonzero(~member)[0])
        gens.append(nxt)
        closed = _closure_under_table(table, gens)
        if len(gens) > 64:
            # Not remotely group-like; let the caller's scan report it.
            return list(range(n))
    return gens


def _first_bad_triple(table: np.ndarray, i: int) -> tuple[int, int, int]:
    lhs = table[table[i], :]
    rhs = np.take(table[i], table)
    j, k = np.argwhere(lhs != rhs)[0]
    return i, int(j), int(k)


def _check_associative(table: np.ndarray) -> None:
    """Exact associativity check.

    Generator-based test: with S a generating set of the magma, equality of
    (x*s)*y and x*(s*y) for all x, y and s in S implies full associativity
    (Light's criterion).  Small tables additionally get the plain triple scan.
    """
    n = table.shape[0]
    for s in _generating_indices(table):
        lhs = table[table[:, s], :]
        rhs = table[:, table[s]]
        if not np.array_equal(lhs, rhs):
            x, y = np.argwhere(lhs != rhs)[0]
            raise NotAssociative(
                f"associativity fails at triple ({int(x)}, {s}, {int(y)}): "
                f"({int(x)}*{s})*{int(y)} = {int(lhs[x, y])} but "
                f"{int(x)}*({s}*{int(y)}) = {int(rhs[x, y])}"
            )
    if n <= _FULL_TRIPLE_SCAN_LIMIT:
        for i in range(n):
            if not np.array_equal(table[table[i], :], np.take(table[i], table)):
                i, j, k = _first_bad_triple(table, i)
                raise NotAssociative(
                    f"associativity fails at triple ({i}, {j}, {k})"
                )


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int32)
    orders[0] = 1
    idx = np.arange(n)
    cur = idx.copy()
    k = 1
    while (orders == 0).any():
        k += 1
        if k > n + 1:
            raise NotAssociative("element order exceeds group order; table is corrupt")
        cur = table[cur, idx]
        hit = (cur == 0) & (orders == 0)
        orders[hit] = k
    return orders


def from_cayley_table(table: Sequence[Sequence[int]] | np.ndarray,
                      label: str | None = None,
                      order_cap: int | None = None) -> Group:
    """Validate a Cayley table and wrap it as a Group.

    Checks, in order: size cap, entry range, identity at index 0, Latin
    square rows and columns, two-sided inverses, associativity.
    """
    arr = np.asarray(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise BadParameters(f"table must be a nonempty square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    cap = resolve_order_cap(order_cap)
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise NotLatinSquare(
            f"entry at ({int(bad[0])}, {int(bad[1])}) is {int(arr[bad[0], bad[1]])}, "
            f"outside 0..{n - 1}"
        )
    idx = np.arange(n, dtype=np.int32)
    if not np.array_equal(arr[0], idx):
        j = int(np.flatnonzero(arr[0] != idx)[0])
        raise NoIdentityAtZero(f"0*{j} = {int(arr[0, j])}, expected {j}")
    if not np.array_equal(arr[:, 0], idx):
        i = int(np.flatnonzero(arr[:, 0] != idx)[0])
        raise NoIdentityAtZero(f"{i}*0 = {int(arr[i, 0])}, expected {i}")
    seen = np.zeros((n, n), dtype=bool)
    seen[idx[:, None], arr] = True
    if not seen.all():
        i = int(np.flatnonzero(~seen.all(axis=1))[0])
        raise NotLatinSquare(f"row {i} is not a permutation of 0..{n - 1}")
    seen[:] = False
    seen[idx[:, None], arr.T] = True
    if not seen.all():
        j = int(np.flatnonzero(~seen.all(axis=1))[0])
        raise NotLatinSquare(f"column {j} is not a permutation of 0..{n - 1}")
    right_inv = np.argmax(arr == 0, axis=1).astype(np.int32)
    if not np.array_equal(arr[right_inv, idx], np.zeros(n, dtype=np.int32)):
        i = int(np.flatnonzero(arr[right_inv, idx] != 0)[0])
        raise NoInverse(f"element {i} has no two-sided inverse")
    _check_associative(arr)
    arr = arr.copy()
    arr.setflags(write=False)
    return Group(arr, right_inv, _element_orders(arr), label)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p*q)(x) = p(q(x))
    return tuple(p[v] for v in q)


def from_permutation_generators(generators: Sequence[Sequence[int]],
                                label: str | None = None,
                                order_cap: int | None = None) -> Group:
    """Group generated by permutations, as a Cayley table.

    Permutations map positions 0..degree-1; elements are numbered in
    breadth-first discovery order from the identity, so index 0 is the
    identity.  Raises OrderCapExceeded if the closure grows past the cap.
    """
    if not generators:
        raise BadParameters("at least one generator permutation is required")
    degree = len(generators[0])
    gens: list[tuple[int, ...]] = []
    for g in generators:
        t = tuple(int(v) for v in g)
        if len(t) != degree or sorted(t) != list(range(degree)):
            raise BadParameters(f"generator {g!r} is not a permutation of 0..{degree - 1}")
        gens.append(t)
    cap = resolve_order_cap(order_cap)
    ident = tuple(range(degree))
    elems: list[tuple[int, ...]] = [ident]
    index: dict[tuple[int, ...], int] = {ident: 0}
    head = 0
    while head < len(elems):
        cur = elems[head]
        head += 1
        for g in gens:
            nxt = _compose(cur, g)
            if nxt not in index:
                if len(elems) >= cap:
                    raise OrderCapExceeded(
                        f"closure of permutation generators exceeds cap {cap}"
                    )
                index[nxt] = len(elems)
                elems.append(nxt)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elems):
        row = [index[_compose(p, q)] for q in elems]
        table[i] = row
    return from_cayley_table(table, label=label, order_cap=cap)


def direct_product(g: Group, h: Group, label: str | None = None,
                   order_cap: int | None = None) -> Group:
    """Direct product on pairs (a, b), encoded as a*|H| + b."""
    nh = h.order
    block = g.table[:, :, None, None] * nh + h.table[None, None, :, :]
    # axes (a1, a2, b1, b2) -> rows a1*|H|+b1, cols a2*|H|+b2
    table = block.transpose(0, 2, 1, 3).reshape(g.order * nh, g.order * nh)
    if label is None and g.label and h.label:
        label = f"{g.label}x{h.label}"
    return from_cayley_table(table, label=label, order_cap=order_cap)


@dataclass(frozen=True)
class ActionSpec:
    """Action of a group H on a group N by automorphisms.

    ``acting_generators`` are element indices that must generate H;
    ``automorphism_images`` gives, for each, a permutation of N's elements.
    The assignment is extended to all of H during product construction and
    rejected if it does not define a homomorphism H -> Aut(N).
    """

    acting_generators: tuple[int, ...]
    automorphism_images: tuple[tuple[int, ...], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, Sequence[int]]]) -> "ActionSpec":
        gens, images = [], []
        for g, img in pairs:
            gens.append(int(g))
            images.append(tuple(int(v) for v in img))
        return cls(tuple(gens), tuple(images))

    @classmethod
    def trivial(cls, h: Group, n: Group) -> "ActionSpec":
        ident = tuple(range(n.order))
        gens = tuple(range(1, h.order))
        return cls(gens, tuple(ident for _ in gens))


def _check_automorphism(n_grp: Group, img: np.ndarray) -> None:
    n = n_grp.order
    if img.shape != (n,) or sorted(img.tolist()) != list(range(n)):
        raise NotAutomorphism(f"image is not a permutation of 0..{n - 1}")
    if img[0] != 0:
        raise NotAutomorphism("automorphism must fix the identity")
    t = n_grp.table
    if not np.array_equal(img[t], t[np.ix_(img, img)]):
        a, b = np.argwhere(img[t] != t[np.ix_(img, img)])[0]
        raise NotAutomorphism(
            f"map breaks the product at ({int(a)}, {int(b)})"
        )


def _extend_action(n_grp: Group, h_grp: Group, action: ActionSpec) -> np.ndarray:
    """Extend generator images to a full map H -> Aut(N), returned as an
    (|H|, |N|) array of permutations; raises NotHomomorphism on conflict."""
    if len(action.acting_generators) != len(action.automorphism_images):
        raise BadParameters("acting_generators and automorphism_images differ in length")
    if not action.acting_generators:
        raise BadParameters("action must name at least one acting generator")
    nn, nh = n_grp.order, h_grp.order
    gen_imgs: dict[int, np.ndarray] = {}
    for g, img in zip(action.acting_generators, action.automorphism_images):
        h_grp.check_index(g)
        arr = np.asarray(img, dtype=np.int32)
        _check_automorphism(n_grp, arr)
        if g in gen_imgs and not np.array_equal(gen_imgs[g], arr):
            raise NotHomomorphism(f"two different images given for generator {g}")
        gen_imgs[g] = arr
    theta = np.full((nh, nn), -1, dtype=np.int32)
    theta[0] = np.arange(nn, dtype=np.int32)
    if 0 in gen_imgs and not np.array_equal(gen_imgs[0], theta[0]):
        raise NotHomomorphism("identity of H must act trivially")
    known = np.zeros(nh, dtype=bool)
    known[0] = True
    queue = [0]
    while queue:
        h = queue.pop()
        for g, img in gen_imgs.items():
            hg = int(h_grp.table[h, g])
            composed = theta[h][img]
            if known[hg]:
                if not np.array_equal(theta[hg], composed):
                    raise NotHomomorphism(
                        f"generator images are inconsistent at element {hg}"
                    )
            else:
                theta[hg] = composed
                known[hg] = True
                queue.append(hg)
    if not known.all():
        missing = int(np.flatnonzero(~known)[0])
        raise NotHomomorphism(
            f"acting generators do not generate the acting group "
            f"(element {missing} unreachable)"
        )
    return theta


def semidirect_product(n_grp: Group, h_grp: Group, action: ActionSpec,
                       label: str | None = None,
                       order_cap: int | None = None) -> Group:
    """Semidirect product N x| H on pairs (a, h) encoded as a*|H| + h.

    Product rule: (a, h1)(b, h2) = (a * theta(h1)(b), h1*h2).  A trivial
    action reproduces direct_product exactly, table and all.
    """
    theta = _extend_action(n_grp, h_grp, action)
    nn, nh = n_grp.order, h_grp.order
    table = np.empty((nn * nh, nn * nh), dtype=np.int32)
    h_tab = h_grp.table.astype(np.int32)
    for h1 in range(nh):
        # rows (a, h1) for every a at once; columns run over (b, h2)
        a_block = n_grp.table[:, theta[h1]]
        rows = a_block[:, :, None] * nh + h_tab[h1][None, None, :]
        table[h1::nh] = rows.reshape(nn, nn * nh)
    return from_cayley_table(table, label=label, order_cap=order_cap)


def subgroup_generated(g: Group, seeds: Iterable[int]) -> SubsetMask:
    """Mask of the subgroup generated by the seed elements."""
    seed_list = []
    for s in seeds:
        g.check_index(int(s))
        seed_list.append(int(s))
    idx = _closure_under_table(g.table, seed_list)
    flags = np.zeros(g.order, dtype=bool)
    flags[idx] = True
    return SubsetMask.from_bool(flags)


def _as_mask(g: Group, subgroup: SubsetMask | Iterable[int]) -> SubsetMask:
    if isinstance(subgroup, SubsetMask):
        if subgroup.order != g.order:
            raise BadParameters(
                f"mask of order {subgroup.order} used with group of order {g.order}"
            )
        return subgroup
    return SubsetMask.from_elements(subgroup, g.order)


def check_subgroup(g: Group, subgroup: SubsetMask | Iterable[int]) -> SubsetMask:
    """Validate closure and identity membership; returns the mask."""
    mask = _as_mask(g, subgroup)
    if 0 not in mask:
        raise NotSubgroup("subgroup must contain the identity 0")
    idx = np.array(mask.elements(), dtype=np.int32)
    prods = g.table[np.ix_(idx, idx)]
    flags = mask.as_bool()
    if not flags[prods.ravel()].all():
        a, b = np.argwhere(~flags[prods])[0]
        raise NotSubgroup(
            f"not closed: {int(idx[a])}*{int(idx[b])} = {int(prods[a, b])} is outside"
        )
    return mask


def subgroup_as_group(g: Group, subgroup: SubsetMask | Iterable[int],
                      label: str | None = None) -> Group:
    """Extract a subgroup as a standalone Group.

    Members are renumbered in ascending order; the identity stays at 0.
    """
    mask = check_subgroup(g, subgroup)
    idx = np.array(mask.elements(), dtype=np.int32)
    pos = np.full(g.order, -1, dtype=np.int32)
    pos[idx] = np.arange(len(idx), dtype=np.int32)
    return from_cayley_table(pos[g.table[np.ix_(idx, idx)]], label=label)


def quotient(g: Group, normal: SubsetMask | Iterable[int],
             label: str | None = None) -> Group:
    """Quotient of g by a normal subgroup, elements = cosets.

    Cosets are numbered by their smallest member, ascending, which puts the
    subgroup itself (the identity coset) at index 0.
    """
    grp, _ = quotient_with_cosets(g, normal, label=label)
    return grp


def quotient_with_cosets(g: Group, normal: SubsetMask | Iterable[int],
                         label: str | None = None) -> tuple[Group, list[list[int]]]:
    mask = check_subgroup(g, normal)
    members = np.array(mask.elements(), dtype=np.int32)
    flags = mask.as_bool()
    for x in range(g.order):
        conj = g.table[g.table[x, members], g.inverse[x]]
        if not flags[conj].all():
            bad = int(members[int(np.flatnonzero(~flags[conj])[0])])
            raise NotNormal(
                f"conjugation by {x} moves {bad} outside the subgroup"
            )
    coset_min = np.full(g.order, -1, dtype=np.int32)
    for x in range(g.order):
        if coset_min[x] < 0:
            coset = g.table[x, members]
            coset_min[coset] = int(coset.min())
    reps = np.unique(coset_min)
    rep_pos = {int(r): i for i, r in enumerate(reps)}
    coset_id = np.array([rep_pos[int(coset_min[x])] for x in range(g.order)],
                        dtype=np.int32)
    q_table = coset_id[g.table[np.ix_(reps, reps)]]
    cosets = [sorted(int(x) for x in np.flatnonzero(coset_min == r)) for r in reps]
    grp = from_cayley_table(q_table, label=label)
    return grp, cosets
