"""Exact integer, rational and single-term quadratic surd arithmetic.

Rationals are ``fractions.Fraction`` (always in lowest terms, zero is 0/1).
A :class:`Surd` is a value ``coeff * sqrt(radicand)`` kept in canonical
form: ``radicand`` squarefree, ``coeff >= 0``, and zero stored as 0*sqrt(1).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

__all__ = [
    "Classification",
    "DomainError",
    "Rational",
    "Surd",
    "classify",
    "decimal_string",
    "gcd",
    "is_perfect_square",
    "isqrt",
    "nth_power_decompose",
    "sqrt_of_rational",
    "squarefree_decompose",
    "surd_scale",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class Classification(str, enum.Enum):
    INTEGER = "Integer"
    HALF_ODD_INTEGER = "HalfOddInteger"
    NON_INTEGER_RATIONAL = "NonIntegerRational"
    IRRATIONAL = "Irrational"

    @property
    def is_rational(self) -> bool:
        return self is not Classification.IRRATIONAL

    def __str__(self) -> str:
        return self.value


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError(f"gcd takes nonnegative integers, got ({a}, {b})")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def isqrt(n: int) -> int:
    """Floor of the square root of ``n``, computed without floating point."""
    if n < 0:
        raise DomainError(f"isqrt of negative integer {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> Tuple[bool, Optional[int]]:
    """Return ``(True, r)`` when ``r*r == n``, else ``(False, None)``."""
    if n < 0:
        return False, None
    # squares are 0, 1, 4 or 9 mod 16
    if (n & 15) not in (0, 1, 4, 9):
        return False, None
    r = math.isqrt(n)
    if r * r == n:
        return True, r
    return False, None


@lru_cache(maxsize=1 << 16)
def squarefree_decompose(n: int) -> Tuple[int, int]:
    """Split ``n`` as ``s * f**2`` with ``s`` squarefree.

    Trial division runs only while ``p**3`` does not exceed the unfactored
    cofactor; what remains then has at most two prime factors, so it is
    either a prime square or squarefree.
    """
    if n < 1:
        raise DomainError(f"squarefree_decompose needs a positive integer, got {n}")
    ok, r = is_perfect_square(n)
    if ok:
        return 1, r
    s, f = 1, 1
    p = 2
    while p * p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            f *= p ** (e // 2)
            if e & 1:
                s *= p
        p += 1 if p == 2 else 2
    if n > 1:
        ok, r = is_perfect_square(n)
        if ok:
            f *= r
        else:
            s *= n
    return s, f


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class Surd:
    """Canonical ``coeff * sqrt(radicand)``; build through :meth:`of`."""

    coeff: Fraction
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 1:
            raise DomainError(f"radicand must be positive, got {self.radicand}")
        if self.coeff < 0:
            raise DomainError(f"negative surd coefficient {self.coeff}")
        if squarefree_decompose(self.radicand)[1] != 1:
            raise DomainError(f"radicand {self.radicand} is not squarefree")
        if self.coeff == 0 and self.radicand != 1:
            raise DomainError("zero must be stored as 0*sqrt(1)")

    @classmethod
    def of(cls, coeff: RationalLike, radicand: int = 1) -> "Surd":
        """Canonicalize an arbitrary nonnegative ``coeff * sqrt(radicand)``."""
        c = _as_fraction(coeff)
        if c < 0:
            raise DomainError(f"negative surd coefficient {c}")
        if radicand < 0:
            raise DomainError(f"negative radicand {radicand}")
        if c == 0 or radicand == 0:
            return cls(Fraction(0), 1)
        s, f = squarefree_decompose(radicand)
        return cls(c * f, s)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def rational_value(self) -> Fraction:
        if self.radicand != 1:
            raise DomainError(f"{self} is irrational")
        return self.coeff

    def decimal(self, digits: int = 12) -> str:
        return decimal_string(self.square(), digits, squared=True)

    def __str__(self) -> str:
        c = str(self.coeff)
        if self.radicand == 1:
            return c
        if self.coeff == 1:
            return f"sqrt({self.radicand})"
        return f"{c}*sqrt({self.radicand})"


def sqrt_of_rational(x: RationalLike) -> Surd:
    """Exact square root of a nonnegative rational as a canonical surd.

    With ``x = p/q``, ``p = s1*f1**2`` and ``q = s2*f2**2``:
    ``sqrt(x) = f1/(f2*s2) * sqrt(s1*s2)``.
    """
    x = _as_fraction(x)
    if x < 0:
        raise DomainError(f"square root of negative rational {x}")
    if x == 0:
        return Surd(Fraction(0), 1)
    s1, f1 = squarefree_decompose(x.numerator)
    s2, f2 = squarefree_decompose(x.denominator)
    # s1, s2 are coprime (x is in lowest terms) so s1*s2 stays squarefree
    return Surd(Fraction(f1, f2 * s2), s1 * s2)


def surd_scale(c: RationalLike, v: Surd) -> Surd:
    c = _as_fraction(c)
    if c < 0:
        raise DomainError(f"negative scale factor {c}")
    if c == 0 or v.coeff == 0:
        return Surd(Fraction(0), 1)
    return Surd(c * v.coeff, v.radicand)


def classify(v: Surd) -> Classification:
    if v.radicand > 1:
        return Classification.IRRATIONAL
    den = v.coeff.denominator
    if den == 1:
        return Classification.INTEGER
    if den == 2 and v.coeff.numerator % 2:
        return Classification.HALF_ODD_INTEGER
    return Classification.NON_INTEGER_RATIONAL


def decimal_string(x: RationalLike, digits: int = 12, *, squared: bool = False) -> str:
    """Render ``x`` (or ``sqrt(x)`` when ``squared``) truncated to ``digits``.

    Integer long division only; the result is rounded toward zero.
    """
    if digits < 0:
        raise DomainError("digits must be nonnegative")
    x = _as_fraction(x)
    scale = 10 ** digits
    if squared:
        if x < 0:
            raise DomainError(f"square root of negative rational {x}")
        scaled = math.isqrt(x.numerator * scale * scale // x.denominator)
        sign = ""
    else:
        sign = "-" if x < 0 else ""
        a = abs(x)
        scaled = a.numerator * scale // a.denominator
    whole, frac = divmod(scaled, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def nth_power_decompose(a: int, b: int, c: int, d: int, n: int) -> Tuple[int, int, int]:
    """Given ``a/b == c**n / d**n``, return ``(g, c1, d1)`` with
    ``g = gcd(a, b)``, ``a == g * c1**n``, ``b == g * d1**n`` and
    ``gcd(c1, d1) == 1``.
    """
    if min(a, b, c, d, n) < 1:
        raise DomainError("nth_power_decompose takes positive integers")
    if a * d ** n != b * c ** n:
        raise DomainError(f"{a}/{b} != {c}^{n}/{d}^{n}")
    g = math.gcd(a, b)
    big_d = math.gcd(c, d)
    c1, d1 = c // big_d, d // big_d
    # a/g and b/g are coprime, as are c1**n and d1**n, and their ratios agree
    assert a // g == c1 ** n and b // g == d1 ** n
    return g, c1, d1
