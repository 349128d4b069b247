"""Independent brute-force oracles used to pin expected values in tests."""

from __future__ import annotations

import itertools
from typing import Optional

from nilary import Ring


def find_isomorphism(r: Ring, s: Ring) -> Optional[tuple[int, ...]]:
    """Search all bijections fixing 0 for a ring isomorphism; desk scale only."""
    if r.order != s.order:
        return None
    n = r.order
    for perm in itertools.permutations(range(1, n)):
        f = (0,) + perm
        if all(
            f[r.add[a][b]] == s.add[f[a]][f[b]] and f[r.mul[a][b]] == s.mul[f[a]][f[b]]
            for a in range(n)
            for b in range(n)
        ):
            return f
    return None


def nilpotency_by_direct_powers(r: Ring, a: int) -> Optional[int]:
    """Least n <= order with a^n = 0, computing each power by a fresh fold."""
    for n in range(1, r.order + 1):
        p = a
        for _ in range(n - 1):
            p = r.mul[p][a]
        if p == 0:
            return n
    return None
