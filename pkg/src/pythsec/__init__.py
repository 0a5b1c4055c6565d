"""Exact secondary elements of Pythagorean triangles."""

from .exactmath import Classification, DomainError, Surd, classify, sqrt_of_rational
from .triples import Triple, TripleParams, decompose, enumerate_params, generate, validate_params
from .elements import ElementReport, closed_forms, secondary_elements, triangle_elements

__version__ = "0.1.0"
