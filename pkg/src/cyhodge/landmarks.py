"""Named subalgebras of sp(4) used across checks, tests and scripts (cached)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import lie_tools as lt
from .hodge_frame import circle_action, circle_generator
from .matrices import Mat
from .rings import I, Gauss


@lru_cache(maxsize=None)
def sp() -> lt.Subalgebra:
    return lt.sp_basis()


@lru_cache(maxsize=None)
def circle_centralizer() -> lt.Subalgebra:
    """Centralizer of the ``h_X`` circle (its log generator)."""
    return lt.centralizer([circle_generator("hX")], sp(), "C(h)")


@lru_cache(maxsize=None)
def weil_centralizer() -> lt.Subalgebra:
    return lt.centralizer([circle_action("hW", I)], sp(), "C(hW(i))")


@lru_cache(maxsize=None)
def weil_derived() -> lt.Subalgebra:
    return lt.derived(weil_centralizer(), "Cder(hW(i))")


@lru_cache(maxsize=None)
def griffiths_centralizer() -> lt.Subalgebra:
    return lt.centralizer([circle_action("hG", I)], sp(), "C(hG(i))")


@lru_cache(maxsize=None)
def griffiths_derived() -> lt.Subalgebra:
    return lt.derived(griffiths_centralizer(), "Cder(hG(i))")


@lru_cache(maxsize=None)
def lie_h() -> lt.Subalgebra:
    """Centralizer of ``h_G(i) h_W(i) = diag(-1, 1, 1, -1)``."""
    return lt.centralizer([circle_action("hG", I) @ circle_action("hW", I)], sp(), "Lie(H)")


@lru_cache(maxsize=None)
def lie_h_parts() -> tuple:
    """The blocks on ``{v30, v03}`` and ``{v21, v12}``."""
    H = lie_h()
    return (lt.support_restricted(H, (0, 3), "H_outer"),
            lt.support_restricted(H, (1, 2), "H_inner"))


@lru_cache(maxsize=None)
def inner_block() -> lt.Subalgebra:
    """Elements of sp supported on ``{v21, v12}``."""
    return lt.support_restricted(sp(), (1, 2), "CG")


@lru_cache(maxsize=None)
def corner_block() -> lt.Subalgebra:
    """Elements of sp supported on ``{v30, v03}``."""
    return lt.support_restricted(sp(), (0, 3), "corner")


def outer_rotation(xi=Gauss(Fraction(3, 5), Fraction(4, 5))) -> Mat:
    """``diag(xi, 1, 1, conj xi)``."""
    return Mat.diag(xi, 1, 1, xi.conj())


@lru_cache(maxsize=None)
def outer_rotation_centralizer() -> lt.Subalgebra:
    return lt.centralizer([outer_rotation()], sp(), "C(Z)")
