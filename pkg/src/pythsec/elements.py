"""The seventeen secondary elements of a Pythagorean triangle.

:func:`secondary_elements` is the normative path: the classical triangle
formulas (circumradius/inradius, heights, internal and external bisectors,
exradii, medians) evaluated exactly on the sides.  :func:`closed_forms`
evaluates the simplified expressions in (delta, m, n); the two must agree
element by element.

Side naming: ``alpha`` is the hypotenuse, ``beta = 2mn*delta`` the even leg
and ``gamma = (m^2 - n^2)*delta`` the other leg.  An element subscripted by
a side refers to the vertex opposite that side.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from .exactmath import (
    Classification,
    DomainError,
    Surd,
    classify,
    sqrt_of_rational,
    surd_scale,
)
from .triples import TripleParams, generate

__all__ = [
    "ELEMENT_NAMES",
    "DISPLAY_NAMES",
    "DegenerateTriangleError",
    "ElementReport",
    "closed_forms",
    "external_bisector",
    "internal_bisector",
    "secondary_elements",
    "triangle_elements",
]

ELEMENT_NAMES = (
    "R", "rho",
    "h_alpha", "h_beta", "h_gamma",
    "delta_alpha", "delta_beta", "delta_gamma",
    "d_alpha", "d_beta", "d_gamma",
    "rho_alpha", "rho_beta", "rho_gamma",
    "mu_alpha", "mu_beta", "mu_gamma",
)

DISPLAY_NAMES = {
    "R": "R", "rho": "ρ",
    "h_alpha": "h_α", "h_beta": "h_β", "h_gamma": "h_γ",
    "delta_alpha": "δ_α", "delta_beta": "δ_β", "delta_gamma": "δ_γ",
    "d_alpha": "d_α", "d_beta": "d_β", "d_gamma": "d_γ",
    "rho_alpha": "ρ_α", "rho_beta": "ρ_β", "rho_gamma": "ρ_γ",
    "mu_alpha": "μ_α", "mu_beta": "μ_β", "mu_gamma": "μ_γ",
}


class DegenerateTriangleError(DomainError):
    """Raised for side lengths that do not form a usable triangle."""


@dataclass(frozen=True)
class ElementReport:
    s: Fraction
    area: Fraction
    R: Surd
    rho: Surd
    h_alpha: Surd
    h_beta: Surd
    h_gamma: Surd
    delta_alpha: Surd
    delta_beta: Surd
    delta_gamma: Surd
    d_alpha: Surd
    d_beta: Surd
    d_gamma: Surd
    rho_alpha: Surd
    rho_beta: Surd
    rho_gamma: Surd
    mu_alpha: Surd
    mu_beta: Surd
    mu_gamma: Surd

    def __getitem__(self, name: str) -> Surd:
        if name not in ELEMENT_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    def items(self) -> Iterator[Tuple[str, Surd]]:
        for name in ELEMENT_NAMES:
            yield name, getattr(self, name)

    @property
    def classification(self) -> Dict[str, Classification]:
        return {name: classify(v) for name, v in self.items()}

    @classmethod
    def from_mapping(cls, s: Fraction, area: Fraction, values: Dict[str, Surd]) -> "ElementReport":
        return cls(s=s, area=area, **{name: values[name] for name in ELEMENT_NAMES})


assert tuple(f.name for f in fields(ElementReport))[2:] == ELEMENT_NAMES


def _check_sides(a, b, c) -> Tuple[Fraction, Fraction, Fraction]:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if min(a, b, c) <= 0:
        raise DegenerateTriangleError(f"side lengths must be positive, got ({a}, {b}, {c})")
    if a >= b + c or b >= a + c or c >= a + b:
        raise DegenerateTriangleError(f"({a}, {b}, {c}) violates the strict triangle inequality")
    return a, b, c


def internal_bisector(adj1, adj2, opposite) -> Surd:
    """Length of the internal angle bisector between sides ``adj1`` and ``adj2``.

    ``2*b*c/(b+c) * sqrt(s*(s-a)/(b*c))`` with ``a`` the opposite side.
    """
    a, b, c = _check_sides(opposite, adj1, adj2)
    s = (a + b + c) / 2
    return surd_scale(2 * b * c / (b + c), sqrt_of_rational(s * (s - a) / (b * c)))


def external_bisector(adj1, adj2, opposite) -> Surd:
    """Length of the external bisector at the vertex between ``adj1`` and ``adj2``.

    Undefined (parallel to the opposite side) when ``adj1 == adj2``.
    """
    a, b, c = _check_sides(opposite, adj1, adj2)
    if b == c:
        raise DegenerateTriangleError(
            f"external bisector between equal sides {b} and {c} is parallel to the opposite side"
        )
    s = (a + b + c) / 2
    return surd_scale(2 * b * c / abs(b - c), sqrt_of_rational((s - b) * (s - c) / (b * c)))


def _median(a: Fraction, b: Fraction, c: Fraction) -> Surd:
    # median to side a
    return sqrt_of_rational((2 * (b * b + c * c) - a * a) / 4)


def _elements_from_sides(a: Fraction, b: Fraction, c: Fraction, area: Surd) -> Dict[str, Surd]:
    s = (a + b + c) / 2
    area_sq = area.square()

    def over_area(x: Fraction) -> Surd:
        # x / A == (x / A^2) * A
        return surd_scale(x / area_sq, area)

    return {
        "R": over_area(a * b * c / 4),
        "rho": surd_scale(1 / s, area),
        "h_alpha": surd_scale(2 / a, area),
        "h_beta": surd_scale(2 / b, area),
        "h_gamma": surd_scale(2 / c, area),
        "delta_alpha": internal_bisector(b, c, a),
        "delta_beta": internal_bisector(a, c, b),
        "delta_gamma": internal_bisector(a, b, c),
        "d_alpha": external_bisector(b, c, a),
        "d_beta": external_bisector(a, c, b),
        "d_gamma": external_bisector(a, b, c),
        "rho_alpha": surd_scale(1 / (s - a), area),
        "rho_beta": surd_scale(1 / (s - b), area),
        "rho_gamma": surd_scale(1 / (s - c), area),
        "mu_alpha": _median(a, b, c),
        "mu_beta": _median(b, a, c),
        "mu_gamma": _median(c, a, b),
    }


def triangle_elements(a, b, c) -> Dict[str, Surd]:
    """All seventeen elements of an arbitrary triangle with rational sides.

    The area comes from Heron's expression evaluated exactly.  Isosceles
    triangles raise :class:`DegenerateTriangleError` because one external
    bisector is undefined; use :func:`internal_bisector` for those.
    """
    a, b, c = _check_sides(a, b, c)
    s = (a + b + c) / 2
    area = sqrt_of_rational(s * (s - a) * (s - b) * (s - c))
    out = _elements_from_sides(a, b, c, area)
    out["area"] = area
    return out


def secondary_elements(params: TripleParams) -> ElementReport:
    t = generate(params)
    a, b, c = Fraction(t.alpha), Fraction(t.beta), Fraction(t.gamma)
    # no Pythagorean triangle is isosceles
    assert a != b and a != c and b != c
    area = b * c / 2
    values = _elements_from_sides(a, b, c, Surd.of(area))
    return ElementReport.from_mapping((a + b + c) / 2, area, values)


def closed_forms(params: TripleParams) -> ElementReport:
    """Elements from their closed forms in (delta, m, n)."""
    d, m, n = params.delta, params.m, params.n
    sq_sum, sq_diff, two_mn = m * m + n * n, m * m - n * n, 2 * m * n
    half = sqrt_of_rational(Fraction(1, 2))
    values = {
        "R": Surd.of(Fraction(d * sq_sum, 2)),
        "rho": Surd.of(d * n * (m - n)),
        "h_alpha": Surd.of(Fraction(d * two_mn * sq_diff, sq_sum)),
        "h_beta": Surd.of(d * sq_diff),
        "h_gamma": Surd.of(d * two_mn),
        "delta_alpha": surd_scale(Fraction(2 * d * two_mn * sq_diff, two_mn + sq_diff), half),
        "delta_beta": surd_scale(Fraction(d * sq_diff, m), Surd.of(1, sq_sum)),
        "delta_gamma": surd_scale(Fraction(2 * d * two_mn, 2 * (m + n)), Surd.of(1, 2 * sq_sum)),
        "d_alpha": surd_scale(Fraction(2 * d * two_mn * sq_diff, abs(two_mn - sq_diff)), half),
        "d_beta": surd_scale(Fraction(d * sq_diff, n), Surd.of(1, sq_sum)),
        "d_gamma": surd_scale(
            Fraction(2 * d * two_mn * sq_sum, m - n), sqrt_of_rational(Fraction(1, 2 * sq_sum))
        ),
        "rho_alpha": Surd.of(d * m * (m + n)),
        "rho_beta": Surd.of(d * n * (m + n)),
        "rho_gamma": Surd.of(d * m * (m - n)),
        "mu_alpha": Surd.of(Fraction(d * sq_sum, 2)),
        "mu_beta": Surd.of(d, m ** 4 + n ** 4 - m * m * n * n),
        "mu_gamma": Surd.of(Fraction(d, 2), m ** 4 + n ** 4 + 14 * m * m * n * n),
    }
    return ElementReport.from_mapping(
        Fraction(d * m * (m + n)), Fraction(d * d * m * n * sq_diff), values
    )
