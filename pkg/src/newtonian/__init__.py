"""Exact arithmetic for Newtonian triangles, Fermat polynomials,
Pythagorean triples and the groups of points on related curves."""

from .fermat import galois_order, p_poly, q_poly, r1_lambda, r3_poly, symmetric_coefficients
from .numeric import ExactWitness, format_rational, gcd3, normalize, nth_root_exact, parse_rational
from .poly import Poly
from .pythagoras import Triple, TripleParams, diophantine_form, triple_from_params, y_solution
from .triangle import Row, Triangle, delta_carry, delta_positional, f, row

__all__ = [
    "ExactWitness", "Poly", "Row", "Triangle", "Triple", "TripleParams",
    "delta_carry", "delta_positional", "diophantine_form", "f", "format_rational",
    "galois_order", "gcd3", "normalize", "nth_root_exact", "p_poly", "parse_rational",
    "q_poly", "r1_lambda", "r3_poly", "row", "symmetric_coefficients",
    "triple_from_params", "y_solution",
]
