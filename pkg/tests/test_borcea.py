from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from sympy.physics.quantum import TensorProduct

from cyhodge import borcea as bc
from cyhodge.errors import NotNilpotent, ShapeMismatch
from cyhodge.matrices import Mat, det, kron, nilpotent_exp, nilpotent_profile, rank_sequence, unipotent_log
from cyhodge.rings import Poly

from oracle import mat_to_sympy
from strategies import nonzero_rationals, rational_mats, rationals

r, s, t = (Poly.var(v) for v in "rst")

# upper triangle of N_{r,s,t}, 1-based, halved
N_ENTRIES = {
    (1, 2): t, (1, 3): s, (1, 5): r,
    (2, 4): s, (2, 6): r,
    (3, 4): t, (3, 7): r,
    (4, 8): r,
    (5, 6): t, (5, 7): s,
    (6, 8): s,
    (7, 8): t,
}


def expected_n():
    return Mat(8, 8, [N_ENTRIES[(i, j)] * 2 if (i, j) in N_ENTRIES else 0
                      for i in range(1, 9) for j in range(1, 9)])


def expected_sym3(a, b, c, d):
    # the (3, 2) entry 2acd + bc^2 mirrors (2, 3) = 2abd + b^2c
    return Mat.from_rows([
        [a ** 3, 3 * a ** 2 * b, 3 * a * b ** 2, b ** 3],
        [a ** 2 * c, a ** 2 * d + 2 * a * b * c, 2 * a * b * d + b ** 2 * c, b ** 2 * d],
        [a * c ** 2, 2 * a * c * d + b * c ** 2, a * d ** 2 + 2 * b * c * d, b * d ** 2],
        [c ** 3, 3 * c ** 2 * d, 3 * c * d ** 2, d ** 3],
    ])


def test_tensor_labels():
    assert bc.TENSOR_LABELS[0] == "a1⊗a2⊗a3"
    assert bc.TENSOR_LABELS[1] == "a1⊗a2⊗b3"
    assert bc.TENSOR_LABELS[-1] == "b1⊗b2⊗b3"


def test_factor_logs():
    L = Mat.from_rows([[0, 2], [0, 0]])
    I2 = Mat.identity(2)
    A = bc.legendre_monodromy()
    assert unipotent_log(A) == L
    assert bc.factor_logs() == (kron(kron(L, I2), I2), kron(kron(I2, L), I2), kron(kron(I2, I2), L))
    assert unipotent_log(kron(kron(A, I2), I2)) == kron(kron(L, I2), I2)


def test_nilpotent_entries():
    assert bc.borcea_nilpotent(r, s, t) == expected_n()


def test_nilpotent_matches_sympy_kron():
    L = sympy.Matrix([[0, 2], [0, 0]])
    E = sympy.eye(2)
    rs, ss, ts = sympy.symbols("r s t")
    N = rs * TensorProduct(L, E, E) + ss * TensorProduct(E, L, E) + ts * TensorProduct(E, E, L)
    assert sympy.expand(mat_to_sympy(bc.borcea_nilpotent(r, s, t)) - N) == sympy.zeros(8)


@given(rationals, rationals, rationals, rationals, rationals, rationals)
def test_nilpotent_is_linear(r1, s1, t1, r2, s2, t2):
    lhs = bc.borcea_nilpotent(r1 + r2, s1 + s2, t1 + t2)
    assert lhs == bc.borcea_nilpotent(r1, s1, t1) + bc.borcea_nilpotent(r2, s2, t2)


def test_max_unipotent():
    N = bc.borcea_nilpotent(1, 1, 1)
    assert bc.max_unipotent_check(N)
    assert (N @ N @ N)[0, 7] == 48
    assert rank_sequence(N) == [8, 5, 2, 1, 0]
    assert nilpotent_profile(N) == [4, 2, 2]
    assert not bc.max_unipotent_check(bc.borcea_nilpotent(1, 0, 0))
    J4 = Mat(4, 4, [1 if j == i + 1 else 0 for i in range(4) for j in range(4)])
    assert bc.max_unipotent_check(J4)
    with pytest.raises(NotNilpotent):
        bc.max_unipotent_check(Mat.identity(2))


@given(nonzero_rationals, nonzero_rationals, nonzero_rationals)
def test_generic_parameters_are_max_unipotent(a, b, c):
    assert bc.max_unipotent_check(bc.borcea_nilpotent(a, b, c))
    N = bc.borcea_nilpotent(a, b, c)
    assert (N @ N @ N)[0, 7] == 48 * a * b * c


def test_sym3_matrix_entries():
    M = bc.symbolic_2x2()
    assert bc.sym3_matrix(M) == expected_sym3(*M.entries)
    assert bc.sym3_matrix(Mat.from_rows([[1, 2], [0, 1]])) == Mat.from_rows(
        [[1, 6, 12, 8], [0, 1, 4, 4], [0, 0, 1, 2], [0, 0, 0, 1]])
    with pytest.raises(ShapeMismatch):
        bc.sym3_matrix(Mat.identity(3))


def test_sym3_matches_sympy_restriction():
    a, b, c, d = sympy.symbols("a b c d")
    M = sympy.Matrix([[a, b], [c, d]])
    K = TensorProduct(M, M, M)
    basis = [mat_to_sympy(v) for v in bc.sym_basis()]
    reps = (0, 1, 3, 7)
    cols = []
    for v in basis:
        w = (K * v).expand()
        coords = [w[i] for i in reps]
        rebuilt = sum((u * k for u, k in zip(basis, coords)), sympy.zeros(8, 1))
        assert (rebuilt - w).expand() == sympy.zeros(8, 1)
        cols.append(coords)
    induced = sympy.Matrix(4, 4, lambda i, j: cols[j][i])
    assert (induced - mat_to_sympy(bc.sym3_matrix(bc.symbolic_2x2()))).expand() == sympy.zeros(4)


def test_sym3_homomorphism_symbolic():
    assert bc.sym3_hom_check(bc.symbolic_2x2("abcd"), bc.symbolic_2x2("efgh"))
    assert bc.sym3_hom_check(Mat.identity(2), Mat.identity(2))


@given(rational_mats(2), rational_mats(2))
def test_sym3_homomorphism_random(A, B):
    assert bc.sym3_hom_check(A, B)


@given(rational_mats(2))
def test_sym3_restriction_random(M):
    rep = bc.sym3_restriction(M)
    assert rep.preserved and rep.matches


def test_sym3_restriction_examples():
    assert bc.sym3_restriction_check(Mat.identity(2))
    rep = bc.sym3_restriction(bc.legendre_monodromy())
    assert rep.induced == bc.sym3_matrix(bc.legendre_monodromy())


def test_sym3_determinant_matches_sympy():
    a, b, c, d = sympy.symbols("a b c d")
    R = mat_to_sympy(bc.sym3_matrix(bc.symbolic_2x2()))
    assert sympy.expand(R.det() - (a * d - b * c) ** 6) == 0
    a_, b_, c_, d_ = bc.symbolic_2x2().entries
    assert det(bc.sym3_matrix(bc.symbolic_2x2())) == (a_ * d_ - b_ * c_) ** 6


def test_cube_identities_match_sympy():
    R = mat_to_sympy(bc.sym3_matrix(bc.symbolic_2x2()))

    def m(i, j):
        return R[i - 1, j - 1]

    for (i, j), idx in (((2, 2), lambda i, j: (i, j)), ((2, 3), lambda i, j: (i, 5 - j)),
                        ((3, 2), lambda i, j: (5 - i, j)), ((3, 3), lambda i, j: (5 - i, 5 - j))):
        def f(p, q):
            return m(*idx(p, q))

        rhs = f(1, 1) * (f(1, 1) * f(4, 4) + sympy.Rational(2, 3) * f(1, 2) * f(4, 3)
                         + sympy.Rational(4, 3) * f(1, 3) * f(4, 2) + 8 * f(1, 4) * f(4, 1))
        assert sympy.expand(m(i, j) ** 3 - rhs) == 0
    assert bc.sym3_polynomial_identities().ok


def test_half_coefficient_breaks_homomorphism():
    # acd + bc^2 in place of 2acd + bc^2 at (3, 2) is not multiplicative
    def altered(M):
        R = bc.sym3_matrix(M)
        a, b, c, d = M.entries
        rows = R.tolist()
        rows[2][1] = a * c * d + b * c * c
        return Mat.from_rows(rows)

    A = Mat.from_rows([[1, 1], [1, 2]])
    assert altered(A @ A) != altered(A) @ altered(A)


def test_sym3_transpose_relation():
    assert bc.sym3_transpose_relation(bc.symbolic_2x2())


def test_rotation():
    d = bc.sym3_rotation_check(Fraction(3, 5), Fraction(4, 5))
    assert all(d.values())
    R = bc.sym3_matrix(Mat.from_rows([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]]))
    assert det(R) == 1


def test_factor_permutations_commute_with_cube():
    K = bc.kron_cube(bc.symbolic_2x2())
    for P in bc.factor_permutations():
        assert P @ K == K @ P
        for v in bc.sym_basis():
            assert P @ v == v
    assert len({P for P in bc.factor_permutations()}) == 6


def test_sym_basis():
    expected = [[0], [1, 2, 4], [3, 5, 6], [7]]
    for v, support in zip(bc.sym_basis(), expected):
        assert [i for i in range(8) if v[i, 0]] == support
