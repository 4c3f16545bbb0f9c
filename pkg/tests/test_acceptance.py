"""Acceptance criteria; every comparison is exact.

``pytest tests/test_acceptance.py`` prints one PASS/FAIL line per criterion.
"""

from fractions import Fraction

import pytest
import sympy

from cyhodge import borcea as bc
from cyhodge import checks
from cyhodge import gx_family as gx
from cyhodge import hodge_frame as hf
from cyhodge import landmarks as lm
from cyhodge import lie_tools as lt
from cyhodge.matrices import Mat, commutator, det
from cyhodge.rings import I, Poly

from oracle import mat_to_sympy

# pinned tolerances: exact arithmetic throughout, so zero slack
TOLERANCE = 0
PROPERTY_SAMPLES = 1000
SEED = checks.DEFAULT_SEED
RANDOM_RESTRICTIONS = 100


def criterion(number, title):
    return pytest.mark.criterion(number, title)


@criterion(1, "circle centralizer is a diagonal 2-torus with complex structures +-h_W(i), +-h_G(i)")
def test_centralizer_suite():
    C = lm.circle_centralizer()
    assert C.dim == 2
    assert all(b.is_diagonal() for b in C)
    expected = {s * hf.circle_action(k, I) for k in ("hW", "hG") for s in (1, -1)}
    found = lt.torus_complex_structures(C)
    assert len(found) == 4 and set(found) == expected


@criterion(2, "dim sp(4) = 10 and the circle characters {0:2, +-1:2, +-2:1, +-3:1} grade the bracket")
def test_characters():
    S = lm.sp()
    assert S.dim == 10
    pieces = lt.character_decomposition(hf.circle_generator("hX"), S)
    dims = {k: len(v) for k, v in pieces.items()}
    assert dims == {0: 2, 1: 2, -1: 2, 2: 1, -2: 1, 3: 1, -3: 1}
    assert sum(dims.values()) == 10
    for j, pj in pieces.items():
        for k, pk in pieces.items():
            for a in pj:
                for b in pk:
                    assert lt.complex_span_contains(pieces.get(j + k, []), commutator(a, b))


@criterion(3, "Hermitian form is (1,1) on <v30, v21> and definite on <v30, v12>")
def test_hermitian_signatures():
    F = hf.CANONICAL_FRAME
    assert hf.hermitian_signature(F, ["v30", "v21"]) == (1, 1)
    assert hf.hermitian_signature(F, ["v30", "v12"]) in ((2, 0), (0, 2))


@criterion(4, "Q(h_W(i)., .) is positive definite and Q(h_G(i)., .) is not")
def test_positivity():
    assert hf.positive_form_check(hf.circle_action("hW", I))
    assert not hf.positive_form_check(hf.circle_action("hG", I))


@criterion(5, "centralizers of the derived Weil and Griffiths algebras are single lines")
def test_derived_centralizers():
    CW = lt.centralizer(lm.weil_derived().basis, lm.sp())
    assert CW.dim == 1 and CW.contains(hf.circle_generator("hW"))
    CG = lt.centralizer(lm.griffiths_derived().basis, lm.lie_h())
    assert CG.dim == 1
    # in the order v30, v12, v21, v03 the line is diag(xi, conj xi, xi, conj xi)
    g = hf.CANONICAL_FRAME.transport(CG.basis[0], hf.HodgeFrame(hf.WEIL_ORDER))
    assert g.is_diagonal()
    xi = g[0, 0]
    assert g == Mat.diag(xi, xi.conj(), xi, xi.conj())


@criterion(6, "Lie(H) is two commuting 3-dim ideals, each of Killing signature (2,1)")
def test_ideal_split():
    H = lm.lie_h()
    p1, p2 = lm.lie_h_parts()
    assert H.dim == 6 and p1.dim == p2.dim == 3
    assert lt.verify_ideal_split(H, p1, p2)
    assert lt.killing(p1).signature == lt.killing(p2).signature == (2, 1, 0)


@criterion(7, "closure forces exactly y = ix and x*xbar = 4/3")
def test_constraints():
    cs = gx.derive_constraints()
    X, XBAR, Y, YBAR = gx.X, gx.XBAR, gx.Y, gx.YBAR
    assert cs.equivalent_to([Y - I * X, X * XBAR - Fraction(4, 3)])
    assert gx.diagonal_condition() == XBAR * Y - X * YBAR - Fraction(8, 3) * I
    assert cs.vanishes_at(gx.DEFAULT_X)
    assert not cs.vanishes_at(gx.DEFAULT_X * 2)


@criterion(8, "G_x at x = 2/sqrt3 is a real closed su(1,1) containing the circle; no element squares to zero")
def test_instance():
    rep = gx.instance_report(gx.DEFAULT_X)
    assert rep.closed and rep.in_sp and rep.real and rep.contains_circle_generator
    assert rep.killing_signature == (2, 1, 0)
    nil = gx.nilpotent_square_report(gx.instantiate(gx.DEFAULT_X))
    assert nil.ok
    a, b, c = (Poly.var(v) for v in "abc")
    assert nil.m12 == a * (c + b * I) * 4 * I


@criterion(9, "N_{r,s,t} has the expected 8x8 entries and N_{1,1,1} is maximally unipotent")
def test_borcea():
    r, s, t = (Poly.var(v) for v in "rst")
    L = sympy.Matrix([[0, 2], [0, 0]])
    E = sympy.eye(2)
    rs, ss, ts = sympy.symbols("r s t")
    expected = (rs * sympy.kronecker_product(L, E, E) + ss * sympy.kronecker_product(E, L, E)
                + ts * sympy.kronecker_product(E, E, L))
    assert sympy.expand(mat_to_sympy(bc.borcea_nilpotent(r, s, t)) - expected) == sympy.zeros(8)
    N = bc.borcea_nilpotent(1, 1, 1)
    N3 = N @ N @ N
    assert not N3.is_zero() and (N3 @ N).is_zero()
    assert bc.max_unipotent_check(N)


@criterion(10, "Sym^3: explicit matrix, homomorphism, det^6, four cube identities, 100 random restrictions")
def test_sym3():
    M = bc.symbolic_2x2()
    a, b, c, d = M.entries
    R = bc.sym3_matrix(M)
    assert R == Mat.from_rows([
        [a ** 3, a * a * b * 3, a * b * b * 3, b ** 3],
        [a * a * c, a * a * d + a * b * c * 2, a * b * d * 2 + b * b * c, b * b * d],
        [a * c * c, a * c * d * 2 + b * c * c, a * d * d + b * c * d * 2, b * d * d],
        [c ** 3, c * c * d * 3, c * d * d * 3, d ** 3],
    ])
    assert bc.sym3_hom_check(bc.symbolic_2x2("abcd"), bc.symbolic_2x2("efgh"))
    assert det(R) == (a * d - b * c) ** 6
    identities = bc.sym3_polynomial_identities()
    assert identities.ok and len(identities.details) == 5
    cfg = checks.VerifyConfig(seed=SEED, samples=RANDOM_RESTRICTIONS)
    [res] = checks.run_checks("sym3.restriction", cfg)
    assert res.status == "pass" and res.details["samples"] >= RANDOM_RESTRICTIONS


PROPERTY_CHECKS = (
    "rings.field_axioms.gauss",
    "rings.field_axioms.tower",
    "rings.conj_and_norm",
    "mat.jacobi",
    "mat.log_exp",
    "mat.kron_mixed_product",
    "frame.circle_product",
)


@criterion(11, f"property suites hold on {PROPERTY_SAMPLES} seeded samples each")
@pytest.mark.parametrize("check_id", PROPERTY_CHECKS)
def test_property_suites(check_id):
    cfg = checks.VerifyConfig(seed=SEED, samples=PROPERTY_SAMPLES)
    [res] = checks.run_checks(check_id, cfg)
    assert res.status == "pass", res.details
    assert res.details["samples"] >= PROPERTY_SAMPLES
    assert res.details["failures"] == TOLERANCE
