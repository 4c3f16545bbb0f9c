from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from cyhodge import gx_family as gx
from cyhodge import hodge_frame as hf
from cyhodge.errors import ConstraintViolated
from cyhodge.lie_tools import killing
from cyhodge.matrices import Mat, nilpotent_profile
from cyhodge.rings import I, Gauss, Tower

from oracle import mat_to_sympy
from strategies import unit_params

P, Q, U_, V_ = sympy.symbols("p q u v", real=True)
ALPHA, BETA, GAMMA = sympy.symbols("alpha beta gamma", real=True)


def _sympy_family():
    G = gx.GxSymbolic()
    sub = {sympy.Symbol("x"): P + sympy.I * Q, sympy.Symbol("xbar"): P - sympy.I * Q,
           sympy.Symbol("y"): U_ + sympy.I * V_, sympy.Symbol("ybar"): U_ - sympy.I * V_}
    return [mat_to_sympy(M).subs(sub) for M in G.generators()]


def test_closure_conditions_match_sympy():
    # oracle: solve [V, U] = alpha T + beta U + gamma V over the reals
    T, U, V = _sympy_family()
    R = (V * U - U * V) - ALPHA * T - BETA * U - GAMMA * V
    eqs = {part for e in R for part in (sympy.re(sympy.expand(e)), sympy.im(sympy.expand(e)))} - {0}
    sols = sympy.solve(list(eqs), [U_, V_, ALPHA, BETA, GAMMA, Q], dict=True)
    assert sols
    for s in sols:
        x = P + sympy.I * s[Q]
        y = s[U_] + sympy.I * s[V_]
        assert sympy.simplify(y - sympy.I * x) == 0
        assert sympy.simplify(P ** 2 + s[Q] ** 2 - sympy.Rational(4, 3)) == 0
        assert (s[ALPHA], s[BETA], s[GAMMA]) == (sympy.Rational(2, 3), 0, 0)


def test_derived_constraints():
    cs = gx.derive_constraints()
    assert cs.equivalent_to([gx.Y - I * gx.X, gx.X * gx.XBAR - Fraction(4, 3)])
    assert cs.scale == Fraction(2, 3)
    assert cs.is_conj_stable()
    assert len(cs.closure()) == 3
    assert [str(p) for p in cs.generators] == ["-i*x + y", "x*xbar - 4/3"]


def test_bracket_entries():
    B = gx.GxSymbolic().bracket_vu()
    assert B[0, 2] == I * gx.X - gx.Y
    assert gx.diagonal_condition() == gx.XBAR * gx.Y - gx.X * gx.YBAR - Gauss(0, Fraction(8, 3))
    sub = (gx.XBAR * gx.Y - gx.X * gx.YBAR).subs({"y": I * gx.X, "ybar": -I * gx.XBAR})
    assert sub == gx.X * gx.XBAR * 2 * I


def test_default_instance():
    rep = gx.instance_report()
    assert rep.ok
    assert rep.killing_signature == (2, 1, 0)
    G = gx.instantiate()
    assert G.dim == 3
    assert G.contains(hf.circle_generator("hX"))
    assert all(gx.bracket_relations().values())


def test_instance_rejects_wrong_radius():
    with pytest.raises(ConstraintViolated):
        gx.instantiate(1)
    with pytest.raises(ConstraintViolated):
        gx.instantiate(Tower(0, 0, 1, 0))


@settings(max_examples=15, deadline=None)
@given(unit_params)
def test_instances_on_the_circle(t):
    z = hf.unit_circle_point(t)
    x = gx.circle_x(z.re, z.im)
    assert gx.instance_report(x).ok


def test_instance_matches_sympy_killing():
    T, U, V = (mat_to_sympy(b) for b in gx.instantiate().basis)
    basis = [T, U, V]
    # coordinates of brackets by solving in the flattened 16-space
    A = sympy.Matrix.hstack(*(b.reshape(16, 1) for b in basis))

    def coords(M):
        sol, params = A.gauss_jordan_solve(M.reshape(16, 1))
        return sympy.simplify(sol)

    ads = [sympy.Matrix.hstack(*(coords(x * y - y * x) for y in basis)) for x in basis]
    K = sympy.Matrix(3, 3, lambda i, j: sympy.simplify((ads[i] * ads[j]).trace()))
    eig = [sympy.sign(sympy.N(e)) for e in K.eigenvals(multiple=True)]
    assert (eig.count(1), eig.count(-1)) == killing(gx.instantiate()).signature[:2] == (2, 1)


def test_nilpotent_square_report():
    rep = gx.nilpotent_square_report(gx.instantiate())
    assert rep.ok
    assert rep.m12 == gx.A_ * (gx.C_ + gx.B_ * I) * 4 * I
    assert rep.diagonal_square == gx.A_ * gx.A_ * -9
    T = gx.t_matrix()
    assert T @ T == Mat.diag(-9, -1, -1, -9)


def test_nilpotent_condition_matches_sympy():
    # aT + cU + bV at x = 2/sqrt3 is nilpotent iff b^2 + c^2 = 3a^2
    a, b, c, lam = sympy.symbols("a b c lambda", real=True)
    T, U, V = (mat_to_sympy(m) for m in gx.instantiate().basis)
    M = a * T + c * U + b * V
    poly = sympy.Poly(sympy.expand((M - lam * sympy.eye(4)).det()), lam)
    coeffs = [sympy.factor(sympy.expand(k)) for k in poly.all_coeffs()[1:]]
    sub = {c: sympy.sqrt(3 * a ** 2 - b ** 2)}
    assert all(sympy.simplify(k.subs(sub)) == 0 for k in coeffs)


def test_grid_unipotents():
    found = gx.unipotent_profiles()
    assert len(found) == 10
    for (a, b, c), profile in found:
        assert b * b + c * c == 3 * a * a
        assert max(profile) >= 3
    assert all(profile == [4] for _, profile in found)


def test_grid_nilpotents_satisfy_sympy_check():
    for (a, b, c), N in gx.grid_nilpotents():
        S = mat_to_sympy(N)
        assert sympy.simplify(S ** 4) == sympy.zeros(4)
        assert nilpotent_profile(N) == [4]
