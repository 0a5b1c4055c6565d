"""Two-parameter families of Pythagorean triangles with a rational bisector.

Families 1-3 make the internal bisector ``delta_beta`` rational: ``m`` is a
square ``t^2`` and ``m^2 + n^2 = z^2``.  Families 4-5 make the external
bisector ``d_beta`` rational: ``m^2 + n^2 = w^2``.  The generator pair is
``(k, l)`` for families 1-3 and ``(K, L)`` for 4-5; the scale ``delta`` is
kept outside the member and passed to the value functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .exactmath import DomainError

__all__ = [
    "FAMILIES",
    "FamilyMember",
    "Rejection",
    "d_beta_value",
    "delta_beta_value",
    "family_enumerate",
    "family_generate",
    "family_scan",
]

FAMILIES = (1, 2, 3, 4, 5)
INTERNAL_FAMILIES = (1, 2, 3)
EXTERNAL_FAMILIES = (4, 5)


@dataclass(frozen=True)
class FamilyMember:
    family: int
    gen: Tuple[int, int]
    m: int
    n: int
    root: int
    t: Optional[int] = None

    @property
    def root_name(self) -> str:
        return "z" if self.family in INTERNAL_FAMILIES else "w"

    def sort_key(self):
        k, l = self.gen
        return (k + l, k, l)


@dataclass(frozen=True)
class Rejection:
    family: int
    gen: Tuple[int, int]
    m: int
    n: int
    reasons: Tuple[str, ...]

    @property
    def reason(self) -> str:
        return "; ".join(self.reasons)


def _raw(family: int, k: int, l: int) -> Tuple[int, int, int, Optional[int]]:
    k2, l2 = k * k, l * l
    if family == 1:
        return (k2 - l2) ** 2, 4 * k * l * (k2 + l2), k2 * k2 + l2 * l2 + 6 * k2 * l2, k2 - l2
    if family == 2:
        return 4 * k2 * l2, 4 * k2 * k2 - l2 * l2, 4 * k2 * k2 + l2 * l2, 2 * k * l
    if family == 3:
        return 4 * k2 * l2, k2 * k2 - 4 * l2 * l2, k2 * k2 + 4 * l2 * l2, 2 * k * l
    if family == 4:
        return k2 - l2, 2 * k * l, k2 + l2, None
    if family == 5:
        return 2 * k * l, k2 - l2, k2 + l2, None
    raise DomainError(f"family must be one of {FAMILIES}, got {family}")


def _side_conditions(family: int, k: int, l: int) -> List[str]:
    a, b = ("k", "l") if family in INTERNAL_FAMILIES else ("K", "L")
    failed = []
    if math.gcd(k, l) != 1:
        failed.append(f"gcd({a},{b})={math.gcd(k, l)} != 1")
    if family in (1, 4, 5):
        if not k > l:
            failed.append(f"{a}={k} <= {b}={l}")
        if (k + l) % 2 != 1:
            failed.append(f"{a}+{b}={k + l} is even")
    elif family == 2:
        if l % 2 == 0:
            failed.append(f"l={l} is even")
        if not 2 * k * k > l * l:
            failed.append(f"2k^2={2 * k * k} <= l^2={l * l}")
    else:
        if k % 2 == 0:
            failed.append(f"k={k} is even")
        if not k * k > 2 * l * l:
            failed.append(f"k^2={k * k} <= 2l^2={2 * l * l}")
    return failed


def family_generate(family: int, k: int, l: int) -> Union[FamilyMember, Rejection]:
    """Apply a family's defining equations to the generator pair ``(k, l)``.

    Returns a :class:`Rejection` naming every failed side condition
    (including ``m > n``) instead of raising.
    """
    m, n, root, t = _raw(family, k, l)
    if k < 1 or l < 1:
        raise DomainError(f"generators must be positive integers, got ({k}, {l})")
    reasons = _side_conditions(family, k, l)
    if not m > n:
        rel = "=" if m == n else "<"
        reasons.append(f"m={m} {rel} n={n}")
    if reasons:
        return Rejection(family, (k, l), m, n, tuple(reasons))
    assert n >= 1 and math.gcd(m, n) == 1 and (m + n) % 2 == 1
    assert m * m + n * n == root * root
    assert t is None or t * t == m
    return FamilyMember(family, (k, l), m, n, root, t)


def family_scan(family: int, gen_bound: int) -> Tuple[List[FamilyMember], List[Rejection]]:
    """Members and rejections over ``1 <= k, l <= gen_bound``, both in (k+l, k, l) order."""
    if family not in FAMILIES:
        raise DomainError(f"family must be one of {FAMILIES}, got {family}")
    pairs = sorted(
        ((k, l) for k in range(1, gen_bound + 1) for l in range(1, gen_bound + 1)),
        key=lambda p: (p[0] + p[1], p[0], p[1]),
    )
    members, rejections = [], []
    for k, l in pairs:
        out = family_generate(family, k, l)
        (members if isinstance(out, FamilyMember) else rejections).append(out)
    return members, rejections


def family_enumerate(family: int, gen_bound: int) -> List[FamilyMember]:
    return family_scan(family, gen_bound)[0]


def delta_beta_value(member: FamilyMember, delta: int) -> Fraction:
    """Rational internal bisector ``delta * z * (m^2 - n^2) / m`` (families 1-3)."""
    if member.family not in INTERNAL_FAMILIES:
        raise DomainError(f"delta_beta is rational only for families 1-3, got family {member.family}")
    if delta < 1:
        raise DomainError(f"delta must be positive, got {delta}")
    m, n = member.m, member.n
    return Fraction(delta * member.root * (m * m - n * n), m)


def d_beta_value(member: FamilyMember, delta: int) -> Fraction:
    """Rational external bisector ``delta * w * (m^2 - n^2) / n`` (families 4-5)."""
    if member.family not in EXTERNAL_FAMILIES:
        raise DomainError(f"d_beta is computed here only for families 4-5, got family {member.family}")
    if delta < 1:
        raise DomainError(f"delta must be positive, got {delta}")
    m, n = member.m, member.n
    return Fraction(delta * member.root * (m * m - n * n), n)
