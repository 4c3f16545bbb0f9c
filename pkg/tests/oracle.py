"""Conversions to sympy, used only as an independent oracle in tests."""

from fractions import Fraction

import sympy

from cyhodge import rings
from cyhodge.matrices import Mat

SQRT3 = sympy.sqrt(3)


def to_sympy(e):
    if isinstance(e, int):
        return sympy.Integer(e)
    if isinstance(e, Fraction):
        return sympy.Rational(e.numerator, e.denominator)
    if isinstance(e, rings.Gauss):
        return to_sympy(e.re) + sympy.I * to_sympy(e.im)
    if isinstance(e, rings.Tower):
        c0, c1, c2, c3 = (to_sympy(c) for c in e.c)
        return c0 + sympy.I * c1 + SQRT3 * c2 + sympy.I * SQRT3 * c3
    if isinstance(e, rings.Poly):
        total = sympy.Integer(0)
        for mono, coeff in e.terms.items():
            term = to_sympy(coeff)
            for v, k in mono:
                term *= sympy.Symbol(v) ** k
            total += term
        return total
    raise TypeError(type(e))


def mat_to_sympy(M: Mat) -> sympy.Matrix:
    return sympy.Matrix(M.rows, M.cols, [to_sympy(e) for e in M.entries])


def equal(a, b) -> bool:
    return sympy.simplify(sympy.expand(a - b)) == 0
