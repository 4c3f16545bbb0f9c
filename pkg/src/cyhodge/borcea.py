"""Monodromy of the triple product of Legendre curves, and the Sym^3 action.

Tensor coordinates use the Kronecker ordering
``a1a2a3, a1a2b3, a1b2a3, a1b2b3, b1a2a3, b1a2b3, b1b2a3, b1b2b3``:
index ``4*i1 + 2*i2 + i3`` with ``a = 0``, ``b = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from . import rings
from .errors import NotNilpotent, ShapeMismatch
from .matrices import (
    Mat,
    det,
    is_nilpotent,
    kron,
    unipotent_log,
)
from .rings import Poly

TENSOR_LABELS = tuple(
    "⊗".join(f"{'ab'[bit]}{k + 1}" for k, bit in enumerate(bits))
    for bits in product((0, 1), repeat=3)
)


def legendre_monodromy() -> Mat:
    return Mat.from_rows([[1, 2], [0, 1]])


def _i2() -> Mat:
    return Mat.identity(2)


def factor_logs() -> tuple:
    """``log`` of the monodromy acting on one tensor factor at a time."""
    A = legendre_monodromy()
    I2 = _i2()
    ops = (kron(kron(A, I2), I2), kron(kron(I2, A), I2), kron(kron(I2, I2), A))
    return tuple(unipotent_log(T) for T in ops)


def borcea_nilpotent(r, s, t) -> Mat:
    """``r log(A x I x I) + s log(I x A x I) + t log(I x I x A)``.

    ``r, s, t`` may be rationals or polynomials.
    """
    L1, L2, L3 = factor_logs()
    return L1 * r + L2 * s + L3 * t


def max_unipotent_check(N: Mat) -> bool:
    """``N^3 != 0`` and ``N^4 = 0``."""
    if not is_nilpotent(N):
        raise NotNilpotent("N is not nilpotent")
    N3 = N @ N @ N
    return not N3.is_zero() and (N3 @ N).is_zero()


# -- Sym^3 ----------------------------------------------------------------------------

def sym3_matrix(M: Mat) -> Mat:
    """Action of ``M`` on the third symmetric power, in the orbit-sum basis."""
    if M.shape != (2, 2):
        raise ShapeMismatch("sym3_matrix needs a 2x2 matrix")
    a, b, c, d = M.entries
    return Mat.from_rows([
        [a * a * a, a * a * b * 3, a * b * b * 3, b * b * b],
        [a * a * c, a * a * d + a * b * c * 2, a * b * d * 2 + b * b * c, b * b * d],
        [a * c * c, a * c * d * 2 + b * c * c, a * d * d + b * c * d * 2, b * d * d],
        [c * c * c, c * c * d * 3, c * d * d * 3, d * d * d],
    ])


def sym_basis() -> list[Mat]:
    """Orbit sums ``e1e1e1``, ``sum e1e1e2``, ``sum e1e2e2``, ``e2e2e2`` in C^8."""
    out = []
    for ones in range(4):
        v = [0] * 8
        for bits in product((0, 1), repeat=3):
            if sum(bits) == ones:
                v[4 * bits[0] + 2 * bits[1] + bits[2]] = 1
        out.append(Mat.column(v))
    return out


# one representative tensor index per orbit: 000, 001, 011, 111
_REPS = (0, 1, 3, 7)


def factor_permutation(perm) -> Mat:
    """Operator on C^8 permuting tensor factors: slot ``k`` goes to ``perm[k]``."""
    entries = [0] * 64
    for bits in product((0, 1), repeat=3):
        src = 4 * bits[0] + 2 * bits[1] + bits[2]
        new = [0, 0, 0]
        for k in range(3):
            new[perm[k]] = bits[k]
        dst = 4 * new[0] + 2 * new[1] + new[2]
        entries[dst * 8 + src] = 1
    return Mat(8, 8, entries)


def kron_cube(M: Mat) -> Mat:
    return kron(kron(M, M), M)


@dataclass
class RestrictionReport:
    preserved: bool
    induced: Mat | None
    expected: Mat
    matches: bool = field(init=False)

    def __post_init__(self):
        self.matches = self.preserved and self.induced == self.expected


def sym3_restriction(M: Mat) -> RestrictionReport:
    """Restrict ``M (x) M (x) M`` to the symmetric tensors.

    Coordinates of an image vector are read at the orbit representatives and
    the vector is then checked to equal the matching combination of orbit sums.
    """
    K = kron_cube(M)
    basis = sym_basis()
    cols = []
    preserved = True
    for v in basis:
        w = K @ v
        coords = [w[i, 0] for i in _REPS]
        rebuilt = basis[0] * coords[0]
        for c, u in zip(coords[1:], basis[1:]):
            rebuilt = rebuilt + u * c
        if rebuilt != w:
            preserved = False
        cols.append(coords)
    induced = Mat(4, 4, [cols[j][i] for i in range(4) for j in range(4)]) if preserved else None
    return RestrictionReport(preserved, induced, sym3_matrix(M))


def sym3_restriction_check(M: Mat) -> bool:
    return sym3_restriction(M).matches


def sym3_hom_check(A: Mat, B: Mat) -> bool:
    return sym3_matrix(A @ B) == sym3_matrix(A) @ sym3_matrix(B)


def symbolic_2x2(names="abcd") -> Mat:
    return Mat.from_rows([[Poly.var(names[0]), Poly.var(names[1])],
                          [Poly.var(names[2]), Poly.var(names[3])]])


SYM3_CONJUGATOR = Mat.diag(1, 3, 3, 1)


def sym3_transpose_relation(M: Mat) -> bool:
    """``r(M^t) = D^-1 r(M)^t D`` with ``D = diag(1, 3, 3, 1)``."""
    D = SYM3_CONJUGATOR
    Dinv = Mat.diag(1, Fraction(1, 3), Fraction(1, 3), 1)
    return sym3_matrix(M.T) == Dinv @ sym3_matrix(M).T @ D


def sym3_invariant_form() -> Mat:
    """Gram matrix of ``w (x) w (x) w`` on the orbit-sum basis, ``w = [[0,1],[-1,0]]``."""
    w = Mat.from_rows([[0, 1], [-1, 0]])
    S = Mat(8, 4, [v[i, 0] for i in range(8) for v in sym_basis()])
    return S.T @ kron_cube(w) @ S


def sym3_rotation_check(a, b) -> dict:
    """``r`` of the rotation ``[[a, b], [-b, a]]`` with ``a^2 + b^2 = 1``."""
    R = Mat.from_rows([[a, b], [-b, a]])
    rR = sym3_matrix(R)
    G = sym3_invariant_form()
    return {
        "det_one": det(rR) == 1,
        "hom": sym3_hom_check(R, R) and sym3_hom_check(R, R.T),
        "preserves_form": rR.T @ G @ rR == G,
    }


# -- polynomial identities ------------------------------------------------------------

def _m(r: Mat, i: int, j: int):
    return r[i - 1, j - 1]


def _cube_identity_rhs(r: Mat, idx) -> Poly:
    """``m_p (m_p m_q + 2/3 m_u m_v + 4/3 m_w m_z + 8 m_k m_l)`` for one index map."""
    f = idx
    m = lambda i, j: _m(r, *f(i, j))  # noqa: E731
    return m(1, 1) * (m(1, 1) * m(4, 4) + m(1, 2) * m(4, 3) * Fraction(2, 3)
                      + m(1, 3) * m(4, 2) * Fraction(4, 3) + m(1, 4) * m(4, 1) * 8)


# index maps turning the (2,2) identity into its analogues
IDENTITY_VARIANTS = {
    "m22": ((2, 2), lambda i, j: (i, j)),
    "m23": ((2, 3), lambda i, j: (i, 5 - j)),
    "m32": ((3, 2), lambda i, j: (5 - i, j)),
    "m33": ((3, 3), lambda i, j: (5 - i, 5 - j)),
}


@dataclass
class CheckOutcome:
    ok: bool
    details: dict


def sym3_polynomial_identities() -> CheckOutcome:
    """Expand each identity over Q[a, b, c, d] and compare with zero."""
    M = symbolic_2x2()
    r = sym3_matrix(M)
    details = {}
    a, b, c, d = M.entries
    det_res = det(r) - (a * d - b * c) ** 6
    details["det_is_det2_pow6"] = not det_res
    for name, ((i, j), idx) in IDENTITY_VARIANTS.items():
        res = _m(r, i, j) ** 3 - _cube_identity_rhs(r, idx)
        details[f"{name}_cubed"] = not res
    return CheckOutcome(all(details.values()), details)


def factor_permutations() -> list[Mat]:
    return [factor_permutation(p) for p in permutations(range(3))]
