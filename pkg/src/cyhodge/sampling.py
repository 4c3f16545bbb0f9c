"""Seeded random exact scalars and matrices for the sampled checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .matrices import Mat
from .rings import Gauss, Tower


def rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def nonzero_rational(rng: random.Random, bound: int = 9) -> Fraction:
    while True:
        q = rational(rng, bound)
        if q:
            return q


def gauss(rng: random.Random, bound: int = 9) -> Gauss:
    return Gauss(rational(rng, bound), rational(rng, bound))


def tower(rng: random.Random, bound: int = 9) -> Tower:
    return Tower(*(rational(rng, bound) for _ in range(4)))


def rational_matrix(rng: random.Random, n: int, m: int | None = None, bound: int = 9) -> Mat:
    m = n if m is None else m
    return Mat(n, m, [rational(rng, bound) for _ in range(n * m)])


def unipotent_upper(rng: random.Random, n: int = 4, bound: int = 9) -> Mat:
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(1 if i == j else (rational(rng, bound) if j > i else 0))
    return Mat(n, n, entries)


def sl2_rational(rng: random.Random, bound: int = 9) -> Mat:
    """Random rational 2x2 matrix of determinant 1."""
    a = nonzero_rational(rng, bound)
    b, c = rational(rng, bound), rational(rng, bound)
    return Mat.from_rows([[a, b], [c, (1 + b * c) / a]])


def unit_parameter(rng: random.Random, bound: int = 20) -> Fraction:
    """Parameter ``t`` for the rational circle point ``(1 - t^2 + 2ti)/(1 + t^2)``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
