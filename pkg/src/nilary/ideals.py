"""Ideals of finite rings: generation, arithmetic, and lattice enumeration.

Ideals are stored as bitmasks over element indices together with a kind
tag (two-sided, left, right). Generation and enumeration are fixed-point
closures; the 2^n subset scan is kept as an independent oracle for small
orders. Everything is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .rings import Hom, Ring, SizeCapError

TWO_SIDED = "two-sided"
LEFT = "left"
RIGHT = "right"
KINDS = (TWO_SIDED, LEFT, RIGHT)

DEFAULT_LATTICE_ORDER_CAP = 1024
DEFAULT_LATTICE_COUNT_CAP = 100_000
BRUTE_FORCE_ORDER_CAP = 16


def mask_elements(mask: int) -> tuple[int, ...]:
    """Sorted element indices of a subset bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def elements_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def full_mask(r: Ring) -> int:
    return (1 << r.order) - 1


@dataclass(frozen=True, repr=False)
class Ideal:
    """Subset of a ring closed as an ideal of the given kind."""

    ring: Ring
    mask: int
    kind: str = TWO_SIDED

    def __repr__(self) -> str:
        return f"Ideal({self.ring.label!r}, {{{','.join(map(str, self.elements))}}}, {self.kind})"

    @property
    def elements(self) -> tuple[int, ...]:
        return mask_elements(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.mask == 1

    @property
    def proper(self) -> bool:
        return self.mask != full_mask(self.ring)

    def contains(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def to_json(self) -> dict:
        return {"kind": self.kind, "elements": list(self.elements)}


def zero_ideal(r: Ring, kind: str = TWO_SIDED) -> Ideal:
    return Ideal(r, 1, kind)


def full_ideal(r: Ring, kind: str = TWO_SIDED) -> Ideal:
    return Ideal(r, full_mask(r), kind)


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown ideal kind {kind!r}")


def _close(r: Ring, mask: int, left: bool, right: bool) -> int:
    """Fixed-point closure under addition, negation and side multiplications.

    Worklist closure: every element, when popped, is combined with all
    elements already absorbed, so each pair is covered exactly once. The
    additive zero is always included.
    """
    add, mul, neg, n = r.add, r.mul, r.neg, r.order
    mask |= 1
    queue = list(mask_elements(mask))
    members: list[int] = []
    while queue:
        x = queue.pop()
        members.append(x)
        row = add[x]
        for y in members:
            s = row[y]
            if not mask >> s & 1:
                mask |= 1 << s
                queue.append(s)
        nx = neg[x]
        if not mask >> nx & 1:
            mask |= 1 << nx
            queue.append(nx)
        if left:
            for z in range(n):
                p = mul[z][x]
                if not mask >> p & 1:
                    mask |= 1 << p
                    queue.append(p)
        if right:
            row_m = mul[x]
            for z in range(n):
                p = row_m[z]
                if not mask >> p & 1:
                    mask |= 1 << p
                    queue.append(p)
    return mask


def additive_closure_mask(r: Ring, mask: int) -> int:
    """Least additive subgroup containing the subset (as a mask)."""
    return _close(r, mask, left=False, right=False)


def ideal_generated_by(r: Ring, seed: Iterable[int], kind: str = TWO_SIDED) -> Ideal:
    """Least ideal of the given kind containing the seed elements.

    The closure realizes Za + aA + Aa + AaA for two-sided generation in a
    possibly non-unital ring; the seed itself is always included.
    """
    _check_kind(kind)
    mask = 0
    for e in seed:
        if not 0 <= e < r.order:
            raise ValueError(f"element {e} out of range for {r.label}")
        mask |= 1 << e
    return Ideal(r, _close(r, mask, left=kind != RIGHT, right=kind != LEFT), kind)


def principal_ideal(r: Ring, a: int, kind: str = TWO_SIDED) -> Ideal:
    return ideal_generated_by(r, (a,), kind)


def is_ideal_mask(r: Ring, mask: int, kind: str = TWO_SIDED) -> bool:
    """Direct check of the ideal axioms for a subset mask."""
    _check_kind(kind)
    if not mask >> 0 & 1:
        return False
    elems = mask_elements(mask)
    for x in elems:
        if not mask >> r.neg[x] & 1:
            return False
        row = r.add[x]
        if any(not mask >> row[y] & 1 for y in elems):
            return False
        if kind != RIGHT and any(not mask >> r.mul[z][x] & 1 for z in r.elements):
            return False
        if kind != LEFT and any(not mask >> r.mul[x][z] & 1 for z in r.elements):
            return False
    return True


def _same_ring(i: Ideal, j: Ideal) -> None:
    if i.ring is not j.ring and i.ring != j.ring:
        raise ValueError(f"ideals live in different rings ({i.ring.label} vs {j.ring.label})")


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    """Least ideal containing both; the additive closure of the union."""
    _same_ring(i, j)
    if i.kind != j.kind:
        raise ValueError(f"cannot sum a {i.kind} ideal with a {j.kind} ideal")
    return Ideal(i.ring, additive_closure_mask(i.ring, i.mask | j.mask), i.kind)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """Additive closure of the set of pairwise products.

    Defined for matching kinds only: the product of two right (left,
    two-sided) ideals is again right (left, two-sided).
    """
    _same_ring(i, j)
    if i.kind != j.kind:
        raise ValueError(f"cannot multiply a {i.kind} ideal by a {j.kind} ideal")
    r = i.ring
    mul = r.mul
    prod = 0
    for x in mask_elements(i.mask):
        row = mul[x]
        for y in mask_elements(j.mask):
            prod |= 1 << row[y]
    return Ideal(r, additive_closure_mask(r, prod), i.kind)


@dataclass(frozen=True)
class PowerChain:
    """Descending chain I, I^2, ... up to its stabilization point."""

    base: Ideal
    powers: tuple[Ideal, ...]
    stable_index: int
    stable_value: Ideal


def power_chain(i: Ideal) -> PowerChain:
    """Compute I, I^2, ... until two consecutive powers coincide.

    The chain descends (I^(k+1) is contained in I^k since I is closed
    under its side multiplications), so it stabilizes within |I| steps.
    """
    powers = [i]
    while True:
        nxt = ideal_product(powers[-1], i)
        if nxt.mask == powers[-1].mask:
            return PowerChain(i, tuple(powers), len(powers), powers[-1])
        powers.append(nxt)


def some_power_contained(j: Ideal, i: Ideal) -> Optional[int]:
    """Least m with J^m inside I, or None.

    Decidable via chain stabilization: a power of J lands in I iff the
    stable value does.
    """
    _same_ring(j, i)
    chain = power_chain(j)
    if chain.stable_value.mask & ~i.mask:
        return None
    for exp, p in enumerate(chain.powers, start=1):
        if not p.mask & ~i.mask:
            return exp
    raise AssertionError("stable power contained but no chain power found")


def element_power_in(r: Ring, a: int, i: Ideal) -> Optional[int]:
    """Least n >= 1 with a^n in I, or None; powers iterated with cycle detection."""
    if i.ring != r:
        raise ValueError("ideal belongs to a different ring")
    if not 0 <= a < r.order:
        raise ValueError(f"element {a} out of range")
    seen = set()
    p = a
    exp = 1
    while p not in seen:
        if i.mask >> p & 1:
            return exp
        seen.add(p)
        p = r.mul[p][a]
        exp += 1
    return None


def is_nil(i: Ideal) -> tuple[bool, Optional[int]]:
    """Whether every element of I is nilpotent; witness is the first that is not."""
    r = i.ring
    for a in i.elements:
        if element_power_in(r, a, zero_ideal(r, i.kind)) is None:
            return False, a
    return True, None


def is_nilpotent_ideal(i: Ideal) -> Optional[int]:
    """Least m with I^m = {0}, or None."""
    chain = power_chain(i)
    if not chain.stable_value.is_zero:
        return None
    for exp, p in enumerate(chain.powers, start=1):
        if p.is_zero:
            return exp
    raise AssertionError("zero stable value but no zero chain power")


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of one kind, sorted by (size, mask)."""

    ring: Ring
    kind: str
    ideals: tuple[Ideal, ...]

    def __iter__(self):
        return iter(self.ideals)

    def __len__(self) -> int:
        return len(self.ideals)

    def masks(self) -> tuple[int, ...]:
        return tuple(i.mask for i in self.ideals)


def _sorted_lattice(r: Ring, kind: str, masks: Iterable[int]) -> IdealLattice:
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    return IdealLattice(r, kind, tuple(Ideal(r, m, kind) for m in ordered))


def enumerate_ideals(
    r: Ring,
    kind: str = TWO_SIDED,
    max_order: int = DEFAULT_LATTICE_ORDER_CAP,
    max_ideals: int = DEFAULT_LATTICE_COUNT_CAP,
) -> IdealLattice:
    """All ideals of the kind, via join closure of the principal ideals.

    Every ideal is the sum of the principal ideals of its members, so the
    set of all ideals is the closure of the principal ones under pairwise
    join (additive closure of the union).
    """
    _check_kind(kind)
    if r.order > max_order:
        raise SizeCapError(f"lattice enumeration capped at order {max_order}, got {r.order}")
    masks = {1}
    for a in r.elements:
        masks.add(ideal_generated_by(r, (a,), kind).mask)
    if len(masks) > max_ideals:
        raise SizeCapError(f"lattice exceeds count cap {max_ideals}")
    queue = list(masks)
    while queue:
        m = queue.pop()
        for m2 in list(masks):
            if not m & ~m2 or not m2 & ~m:
                continue  # comparable: join is the larger, already present
            j = additive_closure_mask(r, m | m2)
            if j not in masks:
                masks.add(j)
                queue.append(j)
                if len(masks) > max_ideals:
                    raise SizeCapError(f"lattice exceeds count cap {max_ideals}")
    return _sorted_lattice(r, kind, masks)


def enumerate_ideals_bruteforce(r: Ring, kind: str = TWO_SIDED) -> IdealLattice:
    """Independent oracle: test all 2^order subsets against the ideal axioms.

    Vectorized over the whole subset space: for each closure condition the
    subsets violating it are knocked out with boolean-array arithmetic.
    """
    _check_kind(kind)
    n = r.order
    if n > BRUTE_FORCE_ORDER_CAP:
        raise SizeCapError(f"subset scan capped at order {BRUTE_FORCE_ORDER_CAP}, got {n}")
    count = 1 << n
    idx = np.arange(count, dtype=np.uint32)
    has = [(idx >> e) & 1 != 0 for e in range(n)]
    ok = has[0].copy()
    for a in range(n):
        ok &= ~has[a] | has[r.neg[a]]
    for a in range(n):
        row = r.add[a]
        for b in range(n):
            ok &= ~(has[a] & has[b]) | has[row[b]]
    if kind != RIGHT:
        for z in range(n):
            row = r.mul[z]
            for x in range(n):
                ok &= ~has[x] | has[row[x]]
    if kind != LEFT:
        for x in range(n):
            row = r.mul[x]
            for z in range(n):
                ok &= ~has[x] | has[row[z]]
    return _sorted_lattice(r, kind, (int(m) for m in idx[ok]))


# ---------------------------------------------------------------------------
# quotients


def make_quotient(r: Ring, i: Ideal) -> tuple[Ring, Hom]:
    """Quotient ring on least-index coset representatives, plus the projection.

    The canonical surjection's kernel is exactly ``i``; representatives are
    the least element index in each coset, which keeps the quotient tables
    deterministic.
    """
    if i.ring != r:
        raise ValueError("ideal belongs to a different ring")
    if i.kind != TWO_SIDED or not is_ideal_mask(r, i.mask, TWO_SIDED):
        raise ValueError(f"{i!r} is not a two-sided ideal of {r.label}")
    n = r.order
    ideal_elems = i.elements
    coset_rep = [-1] * n
    reps: list[int] = []
    for a in range(n):
        if coset_rep[a] < 0:
            reps.append(a)
            for x in ideal_elems:
                coset_rep[r.add[a][x]] = a
    index_of = {rep: q for q, rep in enumerate(reps)}
    qn = len(reps)
    qadd = tuple(
        tuple(index_of[coset_rep[r.add[a][b]]] for b in reps) for a in reps
    )
    qmul = tuple(
        tuple(index_of[coset_rep[r.mul[a][b]]] for b in reps) for a in reps
    )
    qone = index_of[coset_rep[r.one]] if r.one is not None else None
    label = f"{r.label}/{{{','.join(map(str, ideal_elems))}}}"
    q = Ring.from_tables(qn, qadd, qmul, one=qone, label=label)
    hom = Hom(r, q, tuple(index_of[coset_rep[a]] for a in range(n)), surjective=True)
    return q, hom


def hom_image_mask(h: Hom, mask: int) -> int:
    """Image of a subset mask of the source under the homomorphism."""
    out = 0
    for a in mask_elements(mask):
        out |= 1 << h.map[a]
    return out


__all__ = [
    "BRUTE_FORCE_ORDER_CAP",
    "DEFAULT_LATTICE_COUNT_CAP",
    "DEFAULT_LATTICE_ORDER_CAP",
    "Ideal",
    "IdealLattice",
    "KINDS",
    "LEFT",
    "PowerChain",
    "RIGHT",
    "TWO_SIDED",
    "additive_closure_mask",
    "element_power_in",
    "elements_mask",
    "enumerate_ideals",
    "enumerate_ideals_bruteforce",
    "full_ideal",
    "full_mask",
    "hom_image_mask",
    "ideal_generated_by",
    "ideal_product",
    "ideal_sum",
    "is_ideal_mask",
    "is_nil",
    "is_nilpotent_ideal",
    "make_quotient",
    "mask_elements",
    "power_chain",
    "principal_ideal",
    "some_power_contained",
    "zero_ideal",
]
