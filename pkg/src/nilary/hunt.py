"""Counterexample hunting: boolean predicate queries over a corpus.

Queries are flat boolean expressions (and/or/not, parentheses) whose
atoms are registered predicate names plus the ring/ideal facts
``proper``, ``commutative``, ``unital`` and ``prime_power_char``. A
query is evaluated against every (ring, ideal) pair of the chosen
target: the zero ideal of each ring, or every two-sided ideal.
Not-applicable verdicts never match.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .classify import PREDICATE_NAMES, RingContext, ring_context
from .ideals import TWO_SIDED, mask_elements
from .rings import Ring, characteristic

FACT_ATOMS = ("proper", "commutative", "unital", "prime_power_char")
TARGETS = ("ring-zero-ideal", "any-ideal")

_TOKEN = re.compile(r"\s*(\(|\)|[A-Za-z_][A-Za-z0-9_]*)")


@dataclass(frozen=True)
class HuntQuery:
    """Parsed boolean expression plus the quantification target."""

    expression: tuple
    text: str
    target: str = "ring-zero-ideal"


@dataclass(frozen=True)
class HuntMatch:
    ring_label: str
    ideal_elements: tuple[int, ...]

    def to_json(self) -> dict:
        return {"ring": self.ring_label, "ideal": list(self.ideal_elements)}


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad character in query at position {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_query(text: str, target: str = "ring-zero-ideal") -> HuntQuery:
    """Parse ``a and not (b or c)`` style expressions over predicate atoms."""
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}, got {target!r}")
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def advance() -> str:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def atom() -> tuple:
        tok = peek()
        if tok is None:
            raise ValueError("query ended unexpectedly")
        if tok == "(":
            advance()
            node = or_expr()
            if peek() != ")":
                raise ValueError("missing closing parenthesis")
            advance()
            return node
        if tok == "not":
            advance()
            return ("not", atom())
        advance()
        if tok in ("and", "or", ")"):
            raise ValueError(f"expected a predicate name, got {tok!r}")
        if tok not in PREDICATE_NAMES and tok not in FACT_ATOMS:
            raise ValueError(f"unknown predicate name {tok!r}")
        return ("atom", tok)

    def and_expr() -> tuple:
        node = atom()
        while peek() == "and":
            advance()
            node = ("and", node, atom())
        return node

    def or_expr() -> tuple:
        node = and_expr()
        while peek() == "or":
            advance()
            node = ("or", node, or_expr())
        return node

    expr = or_expr()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in query: {' '.join(tokens[pos:])}")
    return HuntQuery(expr, text, target)


def _eval_atom(name: str, ctx: RingContext, mask: int) -> bool:
    if name == "proper":
        return mask != ctx.full_mask
    if name == "commutative":
        return ctx.commutative
    if name == "unital":
        return ctx.unital
    if name == "prime_power_char":
        return ctx.unital and characteristic(ctx.ring).is_prime_power
    v = ctx.verdict(name, mask)
    return v.holds and not v.na


def _eval(node: tuple, ctx: RingContext, mask: int) -> bool:
    op = node[0]
    if op == "atom":
        return _eval_atom(node[1], ctx, mask)
    if op == "not":
        return not _eval(node[1], ctx, mask)
    if op == "and":
        return _eval(node[1], ctx, mask) and _eval(node[2], ctx, mask)
    if op == "or":
        return _eval(node[1], ctx, mask) or _eval(node[2], ctx, mask)
    raise AssertionError(f"bad query node {node!r}")


def run_hunt(rings: Sequence[Ring], query: HuntQuery) -> Iterator[HuntMatch]:
    """Yield every matching (ring, ideal) instance, in corpus order."""
    for r in rings:
        ctx = ring_context(r)
        masks = (1,) if query.target == "ring-zero-ideal" else ctx.lattice_masks(TWO_SIDED)
        for mask in masks:
            if _eval(query.expression, ctx, mask):
                yield HuntMatch(r.label, mask_elements(mask))


__all__ = ["FACT_ATOMS", "HuntMatch", "HuntQuery", "TARGETS", "parse_query", "run_hunt"]
