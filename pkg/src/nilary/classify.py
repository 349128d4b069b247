"""Ideal predicates with concrete witnesses.

Each predicate decides one containment property of a two-sided ideal by
exhaustive quantification and returns a :class:`Verdict` carrying a
witness for false verdicts. Quantifier evaluation order is deterministic
(lattice order, then element index order), so reported witnesses are
reproducible. Predicates over "ideals" range over the full two-sided
lattice; predicates over "(principal) ideals" range over principal
two-sided ideals only.

Properness conventions: prime and completely prime require a proper
ideal (a domain is nonzero); the nilary/primary family is evaluated on
improper ideals too (trivially true there); the weakly-* family is
defined only for proper ideals and reports not-applicable otherwise,
encoded as holds=False with na=True.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    Ideal,
    IdealLattice,
    additive_closure_mask,
    enumerate_ideals,
    full_mask,
    ideal_generated_by,
    mask_elements,
)
from .rings import Characteristic, Ring, characteristic, element_powers, is_commutative


@dataclass(frozen=True)
class Witness:
    """Concrete evidence for a verdict; exponents are least witnesses."""

    variant: str  # "element-pair" | "ideal-pair" | "element" | "none"
    a: Optional[int] = None
    b: Optional[int] = None
    j: Optional[tuple[int, ...]] = None
    k: Optional[tuple[int, ...]] = None
    n: Optional[int] = None
    m: Optional[int] = None

    @staticmethod
    def none() -> "Witness":
        return Witness("none")

    @staticmethod
    def element(a: int, n: Optional[int] = None) -> "Witness":
        return Witness("element", a=a, n=n)

    @staticmethod
    def pair(a: int, b: int, n: Optional[int] = None, m: Optional[int] = None) -> "Witness":
        return Witness("element-pair", a=a, b=b, n=n, m=m)

    @staticmethod
    def ideals(
        j: tuple[int, ...], k: tuple[int, ...], n: Optional[int] = None, m: Optional[int] = None
    ) -> "Witness":
        return Witness("ideal-pair", j=j, k=k, n=n, m=m)

    def to_json(self) -> dict:
        out: dict = {"variant": self.variant}
        for name in ("a", "b", "n", "m"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.j is not None:
            out["j"] = list(self.j)
        if self.k is not None:
            out["k"] = list(self.k)
        return out


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Witness
    na: bool = False  # not applicable (improper ideal / missing unity)

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness.to_json(), "na": self.na}


_TRUE = Verdict(True, Witness.none())
_NA = Verdict(False, Witness.none(), na=True)


class RingContext:
    """Memoized quantification data for one ring.

    Caches the ideal lattices, principal-ideal sets, element power
    sequences, pairwise ideal products, power-chain stabilizations and
    individual verdicts. Everything is derived data; the context never
    mutates its ring.
    """

    def __init__(self, ring: Ring):
        self.ring = ring
        self.n = ring.order
        self.full_mask = full_mask(ring)
        self.commutative = is_commutative(ring)
        self.unital = ring.one is not None
        self._lattices: dict[str, tuple[int, ...]] = {}
        self._principal: dict[str, tuple[int, ...]] = {}
        self._powers: list[Optional[tuple[int, ...]]] = [None] * self.n
        self._powmask: list[Optional[int]] = [None] * self.n
        self._products: dict[tuple[str, int, int], int] = {}
        self._stable: dict[tuple[str, int], tuple[tuple[int, ...], int]] = {}
        self._verdicts: dict[tuple[str, int], Verdict] = {}

    # element power data -------------------------------------------------
    def powers(self, a: int) -> tuple[int, ...]:
        p = self._powers[a]
        if p is None:
            p = element_powers(self.ring, a)
            self._powers[a] = p
        return p

    def powmask(self, a: int) -> int:
        m = self._powmask[a]
        if m is None:
            m = 0
            for p in self.powers(a):
                m |= 1 << p
            self._powmask[a] = m
        return m

    def least_power_in(self, a: int, mask: int) -> Optional[int]:
        for exp, p in enumerate(self.powers(a), start=1):
            if mask >> p & 1:
                return exp
        return None

    # ideal data ----------------------------------------------------------
    def lattice_masks(self, kind: str = TWO_SIDED) -> tuple[int, ...]:
        if kind not in self._lattices:
            if self.commutative and kind != TWO_SIDED:
                self._lattices[kind] = self.lattice_masks(TWO_SIDED)
            else:
                self._lattices[kind] = enumerate_ideals(self.ring, kind).masks()
        return self._lattices[kind]

    def lattice(self, kind: str = TWO_SIDED) -> IdealLattice:
        masks = self.lattice_masks(kind)
        return IdealLattice(
            self.ring, kind, tuple(Ideal(self.ring, m, kind) for m in masks)
        )

    def principal_masks(self, kind: str = TWO_SIDED) -> tuple[int, ...]:
        if kind not in self._principal:
            seen = {ideal_generated_by(self.ring, (a,), kind).mask for a in range(self.n)}
            self._principal[kind] = tuple(sorted(seen, key=lambda m: (m.bit_count(), m)))
        return self._principal[kind]

    def product(self, jm: int, km: int, kind: str = TWO_SIDED) -> int:
        key = (kind, jm, km)
        got = self._products.get(key)
        if got is None:
            mul = self.ring.mul
            prod = 0
            for x in mask_elements(jm):
                row = mul[x]
                for y in mask_elements(km):
                    prod |= 1 << row[y]
            got = additive_closure_mask(self.ring, prod)
            self._products[key] = got
        return got

    def chain(self, m: int, kind: str = TWO_SIDED) -> tuple[tuple[int, ...], int]:
        """Masks of I, I^2, ... to stabilization, plus the stable mask."""
        key = (kind, m)
        got = self._stable.get(key)
        if got is None:
            powers = [m]
            while True:
                nxt = self.product(powers[-1], m, kind)
                if nxt == powers[-1]:
                    break
                powers.append(nxt)
            got = (tuple(powers), powers[-1])
            self._stable[key] = got
        return got

    def stable_mask(self, m: int, kind: str = TWO_SIDED) -> int:
        return self.chain(m, kind)[1]

    def power_in(self, jm: int, target: int, kind: str = TWO_SIDED) -> bool:
        """Whether some power of the ideal mask lands inside target."""
        return not self.stable_mask(jm, kind) & ~target

    # verdicts -------------------------------------------------------------
    def verdict(self, name: str, ideal_mask: int) -> Verdict:
        key = (name, ideal_mask)
        got = self._verdicts.get(key)
        if got is None:
            got = REGISTRY[name](self, ideal_mask)
            self._verdicts[key] = got
        return got


@lru_cache(maxsize=256)
def ring_context(ring: Ring) -> RingContext:
    return RingContext(ring)


def clear_caches() -> None:
    ring_context.cache_clear()


# ---------------------------------------------------------------------------
# predicate implementations (ctx, ideal mask) -> Verdict


def _completely_prime(ctx: RingContext, m: int) -> Verdict:
    """ab in I implies a in I or b in I; requires a proper ideal."""
    if m == ctx.full_mask:
        return Verdict(False, Witness.none())
    mul = ctx.ring.mul
    for a in range(ctx.n):
        if m >> a & 1:
            continue
        row = mul[a]
        for b in range(ctx.n):
            if m >> b & 1:
                continue
            if m >> row[b] & 1:
                return Verdict(False, Witness.pair(a, b))
    return _TRUE


def _completely_semiprime(ctx: RingContext, m: int) -> Verdict:
    """a^n in I for some n implies a in I."""
    for a in range(ctx.n):
        if m >> a & 1:
            continue
        if ctx.powmask(a) & m:
            return Verdict(False, Witness.element(a, n=ctx.least_power_in(a, m)))
    return _TRUE


def _completely_nilary(ctx: RingContext, m: int) -> Verdict:
    """ab in I implies some power of a or of b lies in I."""
    mul = ctx.ring.mul
    hopeless = [a for a in range(ctx.n) if not ctx.powmask(a) & m]
    hopeless_set = set(hopeless)
    for a in hopeless:
        row = mul[a]
        for b in range(ctx.n):
            if b in hopeless_set and m >> row[b] & 1:
                return Verdict(False, Witness.pair(a, b))
    return _TRUE


def _completely_right_primary(ctx: RingContext, m: int) -> Verdict:
    """ab in I implies a in I or some power of b lies in I."""
    mul = ctx.ring.mul
    for a in range(ctx.n):
        if m >> a & 1:
            continue
        row = mul[a]
        for b in range(ctx.n):
            if ctx.powmask(b) & m:
                continue
            if m >> row[b] & 1:
                return Verdict(False, Witness.pair(a, b))
    return _TRUE


def _completely_left_primary(ctx: RingContext, m: int) -> Verdict:
    """ab in I implies b in I or some power of a lies in I."""
    mul = ctx.ring.mul
    for a in range(ctx.n):
        if ctx.powmask(a) & m:
            continue
        row = mul[a]
        for b in range(ctx.n):
            if m >> b & 1:
                continue
            if m >> row[b] & 1:
                return Verdict(False, Witness.pair(a, b))
    return _TRUE


def _wit_ideals(jm: int, km: int) -> Witness:
    return Witness.ideals(mask_elements(jm), mask_elements(km))


def _prime(ctx: RingContext, m: int) -> Verdict:
    """JK inside I implies J inside I or K inside I; requires proper I."""
    if m == ctx.full_mask:
        return Verdict(False, Witness.none())
    lat = ctx.lattice_masks(TWO_SIDED)
    for jm in lat:
        if not jm & ~m:
            continue
        for km in lat:
            if not km & ~m:
                continue
            if not ctx.product(jm, km) & ~m:
                return Verdict(False, _wit_ideals(jm, km))
    return _TRUE


def _semiprime(ctx: RingContext, m: int) -> Verdict:
    """J^2 inside I implies J inside I."""
    for jm in ctx.lattice_masks(TWO_SIDED):
        if jm & ~m and not ctx.product(jm, jm) & ~m:
            return Verdict(False, _wit_ideals(jm, jm))
    return _TRUE


def _nilary_over(ctx: RingContext, m: int, domain: tuple[int, ...]) -> Verdict:
    for jm in domain:
        for km in domain:
            if ctx.product(jm, km) & ~m:
                continue
            if ctx.power_in(jm, m) or ctx.power_in(km, m):
                continue
            return Verdict(False, _wit_ideals(jm, km))
    return _TRUE


def _nilary(ctx: RingContext, m: int) -> Verdict:
    """JK inside I implies some power of J or of K is inside I."""
    return _nilary_over(ctx, m, ctx.lattice_masks(TWO_SIDED))


def _p_nilary(ctx: RingContext, m: int) -> Verdict:
    """Nilary condition quantified over principal two-sided ideals."""
    return _nilary_over(ctx, m, ctx.principal_masks(TWO_SIDED))


def _primary_over(ctx: RingContext, m: int, domain: tuple[int, ...], right: bool) -> Verdict:
    for jm in domain:
        for km in domain:
            if ctx.product(jm, km) & ~m:
                continue
            if right:
                if not jm & ~m or ctx.power_in(km, m):
                    continue
            else:
                if not km & ~m or ctx.power_in(jm, m):
                    continue
            return Verdict(False, _wit_ideals(jm, km))
    return _TRUE


def _right_primary(ctx: RingContext, m: int) -> Verdict:
    """JK inside I implies J inside I or some power of K inside I."""
    return _primary_over(ctx, m, ctx.lattice_masks(TWO_SIDED), right=True)


def _left_primary(ctx: RingContext, m: int) -> Verdict:
    """JK inside I implies K inside I or some power of J inside I."""
    return _primary_over(ctx, m, ctx.lattice_masks(TWO_SIDED), right=False)


def _p_right_primary(ctx: RingContext, m: int) -> Verdict:
    return _primary_over(ctx, m, ctx.principal_masks(TWO_SIDED), right=True)


def _p_left_primary(ctx: RingContext, m: int) -> Verdict:
    return _primary_over(ctx, m, ctx.principal_masks(TWO_SIDED), right=False)


def _weakly_over(ctx: RingContext, m: int, domain: tuple[int, ...], kind: str) -> Verdict:
    if m == ctx.full_mask:
        return _NA
    for jm in domain:
        for km in domain:
            prod = ctx.product(jm, km, kind)
            if prod == 1 or prod & ~m:
                continue
            if ctx.power_in(jm, m, kind) or ctx.power_in(km, m, kind):
                continue
            return Verdict(False, _wit_ideals(jm, km))
    return _TRUE


def _weakly_nilary(ctx: RingContext, m: int) -> Verdict:
    """0 != JK inside proper I implies some power of J or of K inside I."""
    return _weakly_over(ctx, m, ctx.lattice_masks(TWO_SIDED), TWO_SIDED)


def _weakly_p_nilary(ctx: RingContext, m: int) -> Verdict:
    return _weakly_over(ctx, m, ctx.principal_masks(TWO_SIDED), TWO_SIDED)


def _weakly_onesided(ctx: RingContext, m: int, side: str, principal: bool) -> Verdict:
    if not ctx.unital:
        return _NA
    domain = ctx.principal_masks(side) if principal else ctx.lattice_masks(side)
    return _weakly_over(ctx, m, domain, side)


def _weakly_nilary_right(ctx: RingContext, m: int) -> Verdict:
    """Weakly nilary condition quantified over right ideals (unital rings)."""
    return _weakly_onesided(ctx, m, RIGHT, principal=False)


def _weakly_nilary_left(ctx: RingContext, m: int) -> Verdict:
    return _weakly_onesided(ctx, m, LEFT, principal=False)


REGISTRY: dict[str, Callable[[RingContext, int], Verdict]] = {
    "completely_prime": _completely_prime,
    "completely_semiprime": _completely_semiprime,
    "completely_nilary": _completely_nilary,
    "prime": _prime,
    "semiprime": _semiprime,
    "nilary": _nilary,
    "p_nilary": _p_nilary,
    "right_primary": _right_primary,
    "left_primary": _left_primary,
    "p_right_primary": _p_right_primary,
    "p_left_primary": _p_left_primary,
    "completely_right_primary": _completely_right_primary,
    "completely_left_primary": _completely_left_primary,
    "weakly_nilary": _weakly_nilary,
    "weakly_p_nilary": _weakly_p_nilary,
    "weakly_nilary_right": _weakly_nilary_right,
    "weakly_nilary_left": _weakly_nilary_left,
}

PREDICATE_NAMES = tuple(REGISTRY)


def _require_two_sided(i: Ideal) -> RingContext:
    if i.kind != TWO_SIDED:
        raise ValueError(f"predicates take two-sided ideals, got kind {i.kind!r}")
    return ring_context(i.ring)


def _eval(i: Ideal, name: str) -> Verdict:
    return _require_two_sided(i).verdict(name, i.mask)


def is_completely_prime(i: Ideal) -> Verdict:
    return _eval(i, "completely_prime")


def is_completely_semiprime(i: Ideal) -> Verdict:
    return _eval(i, "completely_semiprime")


def is_completely_nilary(i: Ideal) -> Verdict:
    return _eval(i, "completely_nilary")


def is_prime_ideal(i: Ideal) -> Verdict:
    return _eval(i, "prime")


def is_semiprime_ideal(i: Ideal) -> Verdict:
    return _eval(i, "semiprime")


def is_nilary(i: Ideal) -> Verdict:
    return _eval(i, "nilary")


def is_p_nilary(i: Ideal) -> Verdict:
    return _eval(i, "p_nilary")


def is_right_primary(i: Ideal) -> Verdict:
    return _eval(i, "right_primary")


def is_left_primary(i: Ideal) -> Verdict:
    return _eval(i, "left_primary")


def is_p_right_primary(i: Ideal) -> Verdict:
    return _eval(i, "p_right_primary")


def is_p_left_primary(i: Ideal) -> Verdict:
    return _eval(i, "p_left_primary")


def is_completely_right_primary(i: Ideal) -> Verdict:
    return _eval(i, "completely_right_primary")


def is_completely_left_primary(i: Ideal) -> Verdict:
    return _eval(i, "completely_left_primary")


def is_weakly_nilary(i: Ideal) -> Verdict:
    return _eval(i, "weakly_nilary")


def is_weakly_p_nilary(i: Ideal) -> Verdict:
    return _eval(i, "weakly_p_nilary")


def is_weakly_nilary_onesided(l: Ideal, side: str, principal: bool = False) -> Verdict:
    """Weakly (p-)nilary via one-sided ideals of the given side; needs unity."""
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    ctx = _require_two_sided(l)
    if not ctx.unital:
        raise ValueError("unity required")
    return _weakly_onesided(ctx, l.mask, side, principal)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class PropertyReport:
    """Full predicate profile of one (ring, ideal) pair."""

    ring_label: str
    ideal_elements: tuple[int, ...]
    proper: bool
    verdicts: dict[str, Verdict]
    char: Optional[Characteristic]
    commutative: bool
    unital: bool
    nil: bool

    def to_json(self) -> dict:
        return {
            "ring": self.ring_label,
            "ideal": list(self.ideal_elements),
            "proper": self.proper,
            "verdicts": {name: v.to_json() for name, v in self.verdicts.items()},
            "char": (
                {"value": self.char.value, "factors": [list(f) for f in self.char.factors]}
                if self.char is not None
                else None
            ),
        }


def classify_ideal(i: Ideal) -> PropertyReport:
    """Evaluate every registered predicate on one two-sided ideal."""
    ctx = _require_two_sided(i)
    verdicts = {name: ctx.verdict(name, i.mask) for name in PREDICATE_NAMES}
    ring = i.ring
    return PropertyReport(
        ring_label=ring.label,
        ideal_elements=i.elements,
        proper=i.mask != ctx.full_mask,
        verdicts=verdicts,
        char=characteristic(ring) if ctx.unital else None,
        commutative=ctx.commutative,
        unital=ctx.unital,
        nil=all(ctx.powmask(a) & 1 for a in range(ctx.n)),
    )


def classify_ring(r: Ring) -> PropertyReport:
    """Predicate profile of the zero ideal plus ring-level facts."""
    return classify_ideal(Ideal(r, 1, TWO_SIDED))


def full_report(r: Ring) -> list[PropertyReport]:
    """One PropertyReport per two-sided ideal, in lattice order."""
    ctx = ring_context(r)
    return [classify_ideal(Ideal(r, m, TWO_SIDED)) for m in ctx.lattice_masks(TWO_SIDED)]


__all__ = [
    "PREDICATE_NAMES",
    "PropertyReport",
    "REGISTRY",
    "RingContext",
    "Verdict",
    "Witness",
    "classify_ideal",
    "classify_ring",
    "clear_caches",
    "full_report",
    "is_completely_left_primary",
    "is_completely_nilary",
    "is_completely_prime",
    "is_completely_right_primary",
    "is_completely_semiprime",
    "is_left_primary",
    "is_nilary",
    "is_p_left_primary",
    "is_p_nilary",
    "is_p_right_primary",
    "is_right_primary",
    "is_prime_ideal",
    "is_semiprime_ideal",
    "is_weakly_nilary",
    "is_weakly_nilary_onesided",
    "is_weakly_p_nilary",
    "ring_context",
]
