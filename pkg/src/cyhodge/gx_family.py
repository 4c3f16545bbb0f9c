"""The one-parameter family G_x of three-dimensional subalgebras of sp(4).

The span of ``T = diag(3i, i, -i, -3i)``, ``U(x)`` and ``V(y)`` is closed
under brackets exactly when ``y = ix`` and ``x xbar = 4/3``.  The symbolic
side works with :class:`~cyhodge.rings.Poly` entries in ``x, xbar, y, ybar``;
concrete instances live over Q(i, sqrt3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import rings
from .errors import ConstraintViolated
from .hodge_frame import circle_generator, in_sp, is_real
from .lie_tools import Subalgebra, closure_check, killing
from .matrices import Mat, commutator, nilpotent_exp, nilpotent_profile
from .rings import I, Poly, S, Tower, conj, inv, tower_sqrt

X, XBAR, Y, YBAR = (Poly.var(v) for v in ("x", "xbar", "y", "ybar"))
RADIUS_SQ = Fraction(4, 3)
DEFAULT_X = 2 * inv(S)  # 2/sqrt(3)


def t_matrix() -> Mat:
    return Mat.diag(3 * I, I, -I, -3 * I)


def u_matrix(x) -> Mat:
    return Mat.from_rows([
        [0, 1, 0, 0],
        [1, 0, x, 0],
        [0, conj(x), 0, 1],
        [0, 0, 1, 0],
    ])


def v_matrix(y) -> Mat:
    return Mat.from_rows([
        [0, I, 0, 0],
        [-I, 0, y, 0],
        [0, conj(y), 0, I],
        [0, 0, -I, 0],
    ])


@dataclass(frozen=True)
class GxSymbolic:
    T: Mat = field(default_factory=t_matrix)
    U: Mat = field(default_factory=lambda: u_matrix(X))
    V: Mat = field(default_factory=lambda: v_matrix(Y))

    def bracket_vu(self) -> Mat:
        return commutator(self.V, self.U)

    def generators(self):
        return (self.T, self.U, self.V)


def equal_up_to_unit(p: Poly, q: Poly) -> bool:
    if not p or not q:
        return not p and not q
    return p.monic() == q.monic()


@dataclass(frozen=True)
class ConstraintSet:
    """Polynomials that must vanish, plus how they were obtained.

    ``generators`` is the reduced form; conjugates of generators are implied
    (use :meth:`closure` for an explicitly conjugation-stable list).
    """

    generators: tuple
    raw: tuple = ()
    scale: object = None  # [V, U] = scale * T on the constraint locus

    def closure(self) -> tuple:
        out = list(self.generators)
        for p in self.generators:
            c = p.conj()
            if not any(equal_up_to_unit(c, r) for r in out):
                out.append(c)
        return tuple(out)

    def is_conj_stable(self) -> bool:
        cl = self.closure()
        return all(any(equal_up_to_unit(p.conj(), q) for q in cl) for p in cl)

    def equivalent_to(self, polys) -> bool:
        """Same generators up to order and unit multiples."""
        polys = list(polys)
        if len(polys) != len(self.generators):
            return False
        return all(any(equal_up_to_unit(p, q) for q in self.generators) for p in polys)

    def vanishes_at(self, x_val) -> bool:
        env = _env(x_val, I * x_val)
        return all(not rings.poly_substitute(p, env) for p in self.closure())

    def to_json(self) -> dict:
        return {
            "generators": [rings.scalar_to_json(p) for p in self.generators],
            "closure": [rings.scalar_to_json(p) for p in self.closure()],
            "raw": [rings.scalar_to_json(p) for p in self.raw],
            "scale": rings.scalar_to_json(self.scale),
            "text": [str(p) for p in self.generators],
        }


def _env(x_val, y_val) -> dict:
    x_val, y_val = Tower.lift(x_val), Tower.lift(y_val)
    return {"x": x_val, "xbar": x_val.conj(), "y": y_val, "ybar": y_val.conj()}


def _dedupe(polys) -> list:
    out = []
    for p in polys:
        if p and not any(equal_up_to_unit(p, q) for q in out):
            out.append(p)
    return out


def _solve_linear(p: Poly, name: str):
    """For ``p`` of degree 1 in ``name``: the expression ``e`` with ``p = 0 <=> name = e``."""
    coef = p.terms.get(((name, 1),))
    if coef is None or p.degree() != 1:
        return None
    rest = p - Poly.var(name) * coef
    if name in rest.variables() or rings.conj_var(name) in rest.variables():
        return None
    return -(rest * inv(coef))


def derive_constraints(G: GxSymbolic | None = None) -> ConstraintSet:
    """Conditions for ``[V, U]`` to be a multiple of ``T``.

    Off-diagonal entries of the bracket must vanish; the diagonal must be
    proportional to ``T``, the factor being read off the corner entry (which
    is constant).  The linear condition is then solved for ``y`` and
    substituted into the rest.
    """
    G = G or GxSymbolic()
    B = G.bracket_vu()
    T = G.T
    corner = B[0, 0]
    if not corner.is_constant():
        raise ValueError("corner entry of [V, U] is not constant")
    scale = rings.demote(corner.constant_value() * inv(rings.demote(T[0, 0])))
    residual = B - T * scale
    raw = _dedupe(residual.entries)

    linear = [p for p in raw if _solve_linear(p, "y") is not None]
    if not linear:
        raise ValueError("no constraint is linear in y")
    y_expr = _solve_linear(linear[0], "y")
    sub = {"y": y_expr, "ybar": y_expr.conj()}
    rest = _dedupe(p.subs(sub) for p in raw)
    gens = [Poly.var("y") - y_expr] + [p.monic() for p in rest]
    return ConstraintSet(tuple(gens), tuple(raw), scale)


def diagonal_condition(G: GxSymbolic | None = None) -> Poly:
    """``xbar*y - x*ybar - 8i/3``, from entry (2, 2) of ``[V, U] - (2/3) T``."""
    G = G or GxSymbolic()
    cs = derive_constraints(G)
    return (G.bracket_vu() - G.T * cs.scale)[1, 1]


def _check_norm(x_val):
    n = rings.demote(rings.normsq(x_val))
    if n != RADIUS_SQ:
        raise ConstraintViolated(f"|x|^2 = {n}, need 4/3")


def instantiate(x_val=DEFAULT_X) -> Subalgebra:
    """The concrete algebra ``span(T, U(x), V(ix))`` for ``|x|^2 = 4/3``."""
    _check_norm(x_val)
    x_val = Tower.lift(x_val)
    y_val = I * x_val
    return Subalgebra([t_matrix(), u_matrix(x_val), v_matrix(y_val)], f"G_x[x={x_val}]")


def circle_x(p, q) -> Tower:
    """``(2/sqrt3) (p + qi)``, for ``p^2 + q^2 = 1``."""
    return DEFAULT_X * rings.Gauss(p, q)


@dataclass
class InstanceReport:
    x: object
    closed: bool
    in_sp: bool
    real: bool
    killing_signature: tuple
    contains_circle_generator: bool
    constraints_vanish: bool

    @property
    def ok(self) -> bool:
        return (self.closed and self.in_sp and self.real and self.contains_circle_generator
                and self.killing_signature == (2, 1, 0) and self.constraints_vanish)


def instance_report(x_val=DEFAULT_X) -> InstanceReport:
    G = instantiate(x_val)
    return InstanceReport(
        x=x_val,
        closed=closure_check(G),
        in_sp=all(in_sp(b, level="algebra") for b in G),
        real=all(is_real(b) for b in G),
        killing_signature=killing(G).signature,
        contains_circle_generator=G.contains(circle_generator("hX")),
        constraints_vanish=derive_constraints().vanishes_at(Tower.lift(x_val)),
    )


def bracket_relations(x_val=DEFAULT_X) -> dict:
    """``[V, T] = 2U`` and ``[T, U] = 2V`` at an instance."""
    x_val = Tower.lift(x_val)
    T, U, V = t_matrix(), u_matrix(x_val), v_matrix(I * x_val)
    return {"VT": commutator(V, T) == U * 2, "TU": commutator(T, U) == V * 2}


# -- nilpotents ----------------------------------------------------------------------

A_, B_, C_ = Poly.var("a"), Poly.var("b"), Poly.var("c")


def symbolic_element() -> Mat:
    """``a T + c U(x) + b V(ix)`` with real indeterminates ``a, b, c``."""
    G = GxSymbolic()
    return G.T * A_ + G.U * C_ + G.V.subs({"y": I * X, "ybar": -I * XBAR}) * B_


def _quadratic_form_positive(p: Poly, v1: str, v2: str) -> bool:
    """``p`` is a positive definite binary quadratic form in ``v1, v2``."""
    if p.variables() - {v1, v2} or p.degree() != 2:
        return False
    g11 = p.terms.get(((v1, 2),), Fraction(0))
    g22 = p.terms.get(((v2, 2),), Fraction(0))
    key = tuple(sorted(((v1, 1), (v2, 1)), key=lambda it: rings._var_key(it[0])))
    g12 = p.terms.get(key, Fraction(0))
    if any(m and sum(e for _, e in m) != 2 for m in p.terms):
        return False
    if not all(rings.is_real_scalar(c) for c in (g11, g22, g12)):
        return False
    g11, g22, g12 = (rings.demote(c) for c in (g11, g22, g12))
    return g11 > 0 and 4 * g11 * g22 - g12 * g12 > 0


@dataclass
class NilpotentSquareReport:
    m12: Poly
    m12_expected: Poly
    m12_matches: bool
    a_zero_entry: Poly | None
    a_zero_closes: bool
    diagonal_square: Poly
    diagonal_closes: bool
    instance_matches: bool

    @property
    def ok(self) -> bool:
        return (self.m12_matches and self.a_zero_closes and self.diagonal_closes
                and self.instance_matches)


def nilpotent_square_report(G: Subalgebra | None = None) -> NilpotentSquareReport:
    """Case analysis showing no nonzero ``M`` in G_x has ``M^2 = 0``.

    Entry (1, 2) of ``M^2`` is ``4ai(c + bi)``.  If ``a = 0`` some entry of
    ``M^2`` is a positive definite form in ``b, c``.  If ``c + bi = 0`` then
    ``b = c = 0`` (both real) and ``M^2 = a^2 T^2`` has entry ``-9a^2``.
    """
    M = symbolic_element()
    M2 = M @ M
    m12 = M2[0, 1]
    expected = A_ * (C_ + B_ * I) * (4 * I)

    a0 = M2.subs({"a": 0})
    witness = next((e for e in a0.entries if _quadratic_form_positive(e, "b", "c")), None)

    diag = M2.subs({"b": 0, "c": 0})
    d00 = diag[0, 0]
    diagonal_closes = d00 == A_ * A_ * (-9)

    instance_matches = True
    if G is not None:
        # the instance must be the symbolic family at some admissible x
        x_val = Tower.lift(G.basis[1][1, 2])
        env = _env(x_val, I * x_val)
        sym = GxSymbolic()
        try:
            _check_norm(x_val)
            instance_matches = (
                G.basis[0] == sym.T
                and G.basis[1] == sym.U.evaluate(env)
                and G.basis[2] == sym.V.evaluate(env)
            )
        except ConstraintViolated:
            instance_matches = False

    return NilpotentSquareReport(
        m12=m12,
        m12_expected=expected,
        m12_matches=m12 == expected,
        a_zero_entry=witness,
        a_zero_closes=witness is not None,
        diagonal_square=d00,
        diagonal_closes=diagonal_closes,
        instance_matches=instance_matches,
    )


def nilpotent_square_check(G: Subalgebra | None = None) -> bool:
    return nilpotent_square_report(G).ok


def grid_nilpotents(x_val=DEFAULT_X, bound: int = 3) -> list:
    """Nilpotent ``aT + cU + bV`` with ``a, b`` small integers.

    Nilpotency forces ``b^2 + c^2 = 3a^2``, which has no rational solutions
    with ``a != 0``, so ``c`` is taken in Q(sqrt3).  Each candidate is
    confirmed by ``N^4 = 0``.
    """
    _check_norm(x_val)
    x_val = Tower.lift(x_val)
    T, U, V = t_matrix(), u_matrix(x_val), v_matrix(I * x_val)
    out = []
    for a in range(1, bound + 1):
        for b in range(-bound * 2, bound * 2 + 1):
            c = tower_sqrt(3 * a * a - b * b)
            if c is None:
                continue
            for cc in (c, -c):
                N = T * a + U * cc + V * b
                if (N @ N @ N @ N).is_zero():
                    out.append(((a, b, cc), N))
    return out


def unipotent_profiles(x_val=DEFAULT_X, bound: int = 3) -> list:
    """Jordan profile of ``exp(N)`` for every grid nilpotent ``N``."""
    out = []
    for abc, N in grid_nilpotents(x_val, bound):
        E = nilpotent_exp(N)
        profile = nilpotent_profile(E - Mat.identity(4, E.ring))
        out.append((abc, profile))
    return out
