"""Bounded exhaustive search on the two quartic forms behind the medians.

    A:  x^4 - x^2 y^2 + y^4 = z^2
    B:  x^4 + 14 x^2 y^2 + y^4 = z^2

Both are symmetric in x and y, so the box is scanned for x <= y and the
mirrored solutions are added back before sorting.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from .exactmath import is_perfect_square
from .triples import enumerate_params

__all__ = [
    "MedianHit",
    "QuarticEquation",
    "Regime",
    "Solution",
    "median_radicand_scan",
    "search_quartic",
]


class QuarticEquation(str, enum.Enum):
    A = "A"
    B = "B"

    def form(self, x: int, y: int) -> int:
        x2, y2 = x * x, y * y
        if self is QuarticEquation.A:
            return x2 * x2 - x2 * y2 + y2 * y2
        return x2 * x2 + 14 * x2 * y2 + y2 * y2

    def __str__(self) -> str:
        return self.value


class Regime(str, enum.Enum):
    MIXED_PARITY_COPRIME = "mixed"
    BOTH_ODD_COPRIME = "both-odd"
    UNCONSTRAINED = "unconstrained"

    def admits(self, x: int, y: int) -> bool:
        if self is Regime.UNCONSTRAINED:
            return True
        if math.gcd(x, y) != 1:
            return False
        if self is Regime.MIXED_PARITY_COPRIME:
            return (x + y) % 2 == 1
        return x % 2 == 1 and y % 2 == 1

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Solution:
    x: int
    y: int
    z: int

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"


def _scan_rows(eq: QuarticEquation, regime: Regime, xs: Sequence[int], bound: int) -> List[Tuple[int, int, int]]:
    hits = []
    for x in xs:
        for y in range(x, bound + 1):
            if not regime.admits(x, y):
                continue
            ok, z = is_perfect_square(eq.form(x, y))
            if ok and z > 0:
                hits.append((x, y, z))
    return hits


def search_quartic(eq, regime, bound: int, workers: int = 1) -> List[Solution]:
    """All positive (x, y, z) with x, y <= ``bound`` admitted by ``regime``.

    With ``workers > 1`` the x-range is dealt round-robin to a process pool;
    results are merged and sorted, so output does not depend on ``workers``.
    """
    eq, regime = QuarticEquation(eq), Regime(regime)
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    xs = list(range(1, bound + 1))
    if workers > 1:
        chunks = [xs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_rows, [eq] * workers, [regime] * workers, chunks, [bound] * workers)
            hits = [h for part in parts for h in part]
    else:
        hits = _scan_rows(eq, regime, xs, bound)
    found = set()
    for x, y, z in hits:
        found.add(Solution(x, y, z))
        found.add(Solution(y, x, z))
    return sorted(found)


class MedianHit(NamedTuple):
    m: int
    n: int
    median: str
    radicand: int
    root: int


def median_radicand_scan(m_max: int, parity_filter: bool = True) -> List[MedianHit]:
    """Pairs whose median radicand ``m^4+n^4-m^2n^2`` or ``m^4+n^4+14m^2n^2`` is a square.

    ``parity_filter=False`` is a diagnostic mode: all coprime pairs with
    ``1 <= n <= m <= m_max`` are scanned, both-odd ones included.
    """
    if parity_filter:
        pairs = enumerate_params(m_max)
    else:
        if m_max < 1:
            raise ValueError(f"m_max must be positive, got {m_max}")
        pairs = [(m, n) for m in range(1, m_max + 1) for n in range(1, m + 1) if math.gcd(m, n) == 1]
    hits = []
    for m, n in pairs:
        for name, eq in (("mu_beta", QuarticEquation.A), ("mu_gamma", QuarticEquation.B)):
            value = eq.form(m, n)
            ok, root = is_perfect_square(value)
            if ok:
                hits.append(MedianHit(m, n, name, value, root))
    return hits
