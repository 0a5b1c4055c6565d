"""Pythagorean triples through the (delta, m, n) parametrization.

    beta = delta*2mn,  gamma = delta*(m^2 - n^2),  alpha = delta*(m^2 + n^2)

with m > n >= 1, gcd(m, n) = 1 and m + n odd.  ``beta`` is always the even
leg; downstream element names follow that labelling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .exactmath import DomainError, is_perfect_square

__all__ = [
    "Triple",
    "TripleParams",
    "decompose",
    "enumerate_params",
    "generate",
    "iter_survey",
    "validate_params",
]

VIOLATION_ORDER = ("m>n", "coprimality", "parity")


@dataclass(frozen=True, order=True)
class TripleParams:
    delta: int
    m: int
    n: int

    def __post_init__(self) -> None:
        problems = validate_params(self.delta, self.m, self.n)
        if problems:
            raise DomainError(
                f"invalid parameters (delta, m, n) = ({self.delta}, {self.m}, {self.n}): "
                + ", ".join(problems)
            )

    @classmethod
    def parse(cls, text: str) -> "TripleParams":
        return cls(*parse_int_triple(text))


@dataclass(frozen=True)
class Triple:
    alpha: int
    beta: int
    gamma: int

    @property
    def sides(self) -> Tuple[int, int, int]:
        return self.alpha, self.beta, self.gamma


def parse_int_triple(text: str) -> Tuple[int, int, int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise DomainError(f"expected three comma-separated integers, got {text!r}")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise DomainError(f"expected three comma-separated integers, got {text!r}") from None
    return a, b, c


def validate_params(delta: int, m: int, n: int) -> List[str]:
    """Names of the violated conditions; an empty list means valid."""
    if min(delta, m, n) < 1:
        raise DomainError(f"parameters must be positive integers, got ({delta}, {m}, {n})")
    problems = []
    if not m > n:
        problems.append("m>n")
    if math.gcd(m, n) != 1:
        problems.append("coprimality")
    if (m + n) % 2 != 1:
        problems.append("parity")
    return problems


def generate(params: TripleParams) -> Triple:
    d, m, n = params.delta, params.m, params.n
    t = Triple(d * (m * m + n * n), d * 2 * m * n, d * (m * m - n * n))
    assert t.beta ** 2 + t.gamma ** 2 == t.alpha ** 2
    return t


def decompose(a: int, b: int, c: int) -> TripleParams:
    """Recover (delta, m, n) from three sides given in any order."""
    if min(a, b, c) < 1:
        raise DomainError(f"sides must be positive integers, got ({a}, {b}, {c})")
    x, y, z = sorted((a, b, c))
    if x * x + y * y != z * z:
        raise DomainError(f"({a}, {b}, {c}) is not a Pythagorean triple: {x}^2 + {y}^2 != {z}^2")
    delta = math.gcd(math.gcd(x, y), z)
    x, y, z = x // delta, y // delta, z // delta
    odd_leg = x if x % 2 else y
    ok_m, m = is_perfect_square((z + odd_leg) // 2)
    ok_n, n = is_perfect_square((z - odd_leg) // 2)
    if not (ok_m and ok_n):
        raise AssertionError(f"primitive reduct ({x}, {y}, {z}) did not yield square generators")
    params = TripleParams(delta, m, n)
    assert sorted(generate(params).sides) == sorted((a, b, c))
    return params


def enumerate_params(m_max: int) -> List[Tuple[int, int]]:
    """Primitive generator pairs (m, n) with m <= m_max, in (m, n) order."""
    if m_max < 2:
        raise DomainError(f"m_max must be at least 2, got {m_max}")
    return [
        (m, n)
        for m in range(2, m_max + 1)
        for n in range(1, m)
        if (m + n) % 2 == 1 and math.gcd(m, n) == 1
    ]


def iter_survey(m_max: int, deltas=(1, 2, 3)) -> Iterator[TripleParams]:
    """Every (delta, m, n) with primitive (m, n), m <= m_max, delta in ``deltas``."""
    for m, n in enumerate_params(m_max):
        for d in deltas:
            yield TripleParams(d, m, n)
