"""Real Lie subalgebras of sp(4) and the computations done with them.

A subalgebra is kept as a list of 4x4 matrices in the canonical ordering
together with their coordinates in the real chart of
:mod:`cyhodge.hodge_frame`.  Spans, kernels and ranks are all computed on
those coordinates, so "real span" means span over Q (or over Q(sqrt3) for
matrices with tower entries).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import rings
from .errors import NotClosed, NotDiagonalGenerator, NotDiagonalTorus
from .hodge_frame import (
    CANONICAL_FRAME,
    chart,
    chart_form,
    complex_structure_check,
    from_chart,
    in_sp,
)
from .matrices import Mat, _rref, commutator, inertia, kernel_basis, rank, solve
from .rings import I


def _coord_matrix(coord_list) -> Mat:
    """Columns are the given coordinate vectors."""
    n = len(coord_list)
    return Mat(16, n, [coord_list[j][i] for i in range(16) for j in range(n)])


@dataclass(frozen=True)
class Subalgebra:
    basis: tuple
    coords: tuple
    name: str = ""

    def __init__(self, basis, name: str = "", check: bool = True):
        basis = tuple(basis)
        if check:
            for b in basis:
                if not in_sp(b, CANONICAL_FRAME, "algebra"):
                    raise ValueError(f"{name or 'basis'} element is not in sp:\n{b}")
        coords = tuple(chart(b) for b in basis)
        if check and basis and rank(_coord_matrix(coords)) != len(basis):
            raise ValueError(f"{name or 'basis'} is linearly dependent")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "name", name)

    @classmethod
    def span(cls, mats, name: str = "") -> "Subalgebra":
        """Canonical basis of the real span (reduced echelon form on coordinates)."""
        mats = list(mats)
        if not mats:
            return cls((), name)
        rows = Mat.from_rows([list(chart(m)) for m in mats])
        reduced, pivots = _rref(rows)
        return cls([from_chart(reduced[k]) for k in range(len(pivots))], name)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def coordinates_of(self, M: Mat):
        """Real coordinates of ``M`` in this basis, or None if outside the span."""
        if not self.basis:
            return [] if M.is_zero() else None
        x = solve(_coord_matrix(self.coords), Mat.column(chart(M)))
        return None if x is None else list(x.entries)

    def contains(self, M: Mat) -> bool:
        return self.coordinates_of(M) is not None

    def contains_all(self, other) -> bool:
        return all(self.contains(m) for m in other)

    def to_json(self) -> dict:
        from .matrices import mat_to_json
        return {
            "name": self.name,
            "basis": [mat_to_json(b) for b in self.basis],
            "coords": [[rings.scalar_to_json(c) for c in v] for v in self.coords],
        }


# -- construction ------------------------------------------------------------------

def sp_basis(frame=CANONICAL_FRAME) -> Subalgebra:
    """Basis of sp(4, R) from the kernel of ``R -> R^t W + W R`` in the chart."""
    W = chart_form()
    rows = []
    for a, b in product(range(4), repeat=2):
        # (R^t W + W R)[a, b] = sum_k R[k, a] W[k, b] + W[a, k] R[k, b]
        row = [Fraction(0)] * 16
        for k in range(4):
            row[k * 4 + a] += W[k, b]
            row[k * 4 + b] += W[a, k]
        rows.append(row)
    kernel = kernel_basis(Mat.from_rows(rows))
    return Subalgebra([from_chart(v.entries) for v in kernel], "sp")


def support_restricted(ambient: Subalgebra, indices, name: str = "") -> Subalgebra:
    """Elements of ``ambient`` supported on the ``indices x indices`` block."""
    outside = [(i, j) for i in range(4) for j in range(4)
               if not (i in indices and j in indices)]
    return _linear_subspace(ambient, lambda M: [M[i, j] for i, j in outside], name)


def _realify(values) -> list:
    out = []
    for v in values:
        out.append(rings.real_part(v))
        out.append(rings.imag_part(v))
    return out


def _linear_subspace(ambient: Subalgebra, linear_map, name: str) -> Subalgebra:
    """Kernel of a linear map ``M -> list of scalars`` restricted to ``ambient``."""
    cols = [_realify(linear_map(b)) for b in ambient.basis]
    if not cols or not cols[0]:
        return Subalgebra(ambient.basis, name)
    A = Mat(len(cols[0]), len(cols), [cols[j][i] for i in range(len(cols[0]))
                                      for j in range(len(cols))])
    kernel = kernel_basis(A)
    mats = []
    for v in kernel:
        acc = None
        for c, b in zip(v.entries, ambient.basis):
            if c:
                acc = b * c if acc is None else acc + b * c
        mats.append(acc)
    return Subalgebra.span(mats, name)


def centralizer(gens, ambient: Subalgebra, name: str = "") -> Subalgebra:
    """``{X in ambient : [X, g] = 0 for all g in gens}``."""
    gens = list(gens)

    def brackets(X):
        out = []
        for g in gens:
            out.extend(commutator(X, g).entries)
        return out

    return _linear_subspace(ambient, brackets, name)


def derived(S: Subalgebra, name: str = "") -> Subalgebra:
    """Span of all brackets ``[S, S]``."""
    mats = [commutator(a, b) for i, a in enumerate(S.basis) for b in S.basis[i + 1:]]
    return Subalgebra.span([m for m in mats if not m.is_zero()], name)


def bracket_span(A, B, name: str = "") -> Subalgebra:
    mats = [commutator(a, b) for a in A for b in B]
    return Subalgebra.span([m for m in mats if not m.is_zero()], name)


# -- structure ---------------------------------------------------------------------

def closure_check(S: Subalgebra) -> bool:
    return all(S.contains(commutator(a, b))
               for i, a in enumerate(S.basis) for b in S.basis[i + 1:])


def structure_constants(S: Subalgebra) -> list:
    """``c[i][j]`` = coordinates of ``[b_i, b_j]``; raises NotClosed."""
    n = S.dim
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = S.coordinates_of(commutator(S.basis[i], S.basis[j]))
            if c is None:
                raise NotClosed(f"[b{i}, b{j}] leaves the span")
            out[i][j] = c
    return out


def ad_matrices(S: Subalgebra) -> list[Mat]:
    """``ad(b_i)`` in the basis of ``S``; column ``j`` is ``[b_i, b_j]``."""
    c = structure_constants(S)
    n = S.dim
    return [Mat(n, n, [c[i][j][k] for k in range(n) for j in range(n)]) for i in range(n)]


@dataclass(frozen=True)
class KillingForm:
    gram: Mat
    signature: tuple
    semisimple: bool


def killing(S: Subalgebra) -> KillingForm:
    ads = ad_matrices(S)
    n = S.dim
    if n == 0:
        return KillingForm(Mat(0, 0, []), (0, 0, 0), True)
    gram = Mat(n, n, [rings.demote((ads[i] @ ads[j]).trace())
                      for i in range(n) for j in range(n)])
    sig = inertia(gram)
    return KillingForm(gram, sig, sig[2] == 0)


def verify_ideal_split(S: Subalgebra, part1: Subalgebra, part2: Subalgebra) -> bool:
    """``S`` is the direct sum of the commuting ideals ``part1`` and ``part2``."""
    if part1.dim == 0 or part2.dim == 0:
        return False
    if not (S.contains_all(part1) and S.contains_all(part2)):
        return False
    if part1.dim + part2.dim != S.dim:
        return False
    if rank(_coord_matrix(part1.coords + part2.coords)) != S.dim:
        return False
    if any(not commutator(a, b).is_zero() for a in part1 for b in part2):
        return False
    for part in (part1, part2):
        if not all(part.contains(commutator(s, p)) for s in S for p in part):
            return False
    return True


# -- character decomposition ----------------------------------------------------------

def _diag_imag_weights(t: Mat) -> list:
    if t.shape != (4, 4) or not t.is_diagonal():
        raise NotDiagonalGenerator("generator must be a diagonal 4x4 matrix")
    weights = []
    for k in range(4):
        e = rings.demote(t[k, k])
        if rings.real_part(e):
            raise NotDiagonalGenerator("diagonal entries must be purely imaginary")
        weights.append(rings.imag_part(e))
    return weights


def character_decomposition(t: Mat, ambient: Subalgebra) -> dict:
    """Split ``ambient (x) C`` into eigenspaces of ``ad(t)`` with eigenvalue ``2ik``.

    Returns ``{k: [complex matrices]}`` for the nonzero pieces.  Eigenvectors
    come from kernels of ``ad(t) - 2ik`` on ``Q(i)`` coordinates.
    """
    weights = _diag_imag_weights(t)
    if not ambient.contains(t):
        raise NotDiagonalGenerator("generator is not in the ambient algebra")
    n = ambient.dim
    ad_cols = [ambient.coordinates_of(commutator(t, b)) for b in ambient.basis]
    if any(c is None for c in ad_cols):
        raise NotClosed("ad(t) does not preserve the ambient algebra")
    ad = Mat(n, n, [ad_cols[j][i] for i in range(n) for j in range(n)])
    spread = max(weights) - min(weights)
    kmax = int(spread / 2) + 1
    pieces = {}
    for k in range(-kmax, kmax + 1):
        shifted = ad - Mat.identity(n, rings.QI) * (2 * k * I)
        vecs = kernel_basis(shifted)
        if vecs:
            mats = []
            for v in vecs:
                acc = Mat.zeros(4, 4, rings.join_rings(rings.QI, ambient.basis[0].ring))
                for c, b in zip(v.entries, ambient.basis):
                    if c:
                        acc = acc + b * c
                mats.append(acc)
            pieces[k] = mats
    return pieces


def complex_span_contains(mats, M: Mat) -> bool:
    """Membership in the complex span of ``mats`` (Q(i) or tower coefficients)."""
    if not mats:
        return M.is_zero()
    A = _coord_matrix([chart(m) for m in mats])
    return solve(A, Mat.column(chart(M))) is not None


# -- complex structures in diagonal tori ----------------------------------------------

def _torus_weights(T: Subalgebra):
    ws = []
    for b in T.basis:
        if not b.is_diagonal():
            raise NotDiagonalTorus("torus basis must be diagonal")
        w = _diag_imag_weights(b)
        if w[2] != -w[1] or w[3] != -w[0]:
            raise NotDiagonalTorus("diagonal element is not symplectic")
        ws.append((Fraction(w[0]), Fraction(w[1])))
    for a in T.basis:
        for b in T.basis:
            if not commutator(a, b).is_zero():
                raise NotDiagonalTorus("torus is not abelian")
    return ws


def _in_exp_image(ws, eps) -> bool:
    """Does ``diag(i^e1, i^e2, ...)`` lie in ``exp`` of the span of ``ws``?

    Writing the element as ``exp(2 pi i p)`` with ``p = eps/4 + n``, ``n`` an
    integer vector, the question is whether some such ``p`` lies in the real
    span ``L`` of the weight vectors.
    """
    L = Mat.from_rows(ws) if ws else Mat(0, 2, [])
    d = rank(L) if ws else 0
    if d == 2:
        return True
    if d == 0:
        return False
    w = next(v for v in ws if any(v))
    den = w[0].denominator * w[1].denominator
    w1, w2 = int(w[0] * den), int(w[1] * den)
    g = gcd(w1, w2)
    w1, w2 = w1 // g, w2 // g
    # w2*p1 - w1*p2 = 0 with p = eps/4 + n; w1*n2 - w2*n1 ranges over Z
    return Fraction(w2 * eps[0] - w1 * eps[1], 4).denominator == 1


def torus_complex_structures(T: Subalgebra) -> list[Mat]:
    """Complex structures ``diag(xi, zeta, conj zeta, conj xi)`` in ``exp(T)``."""
    ws = _torus_weights(T)
    out = []
    for e1, e2 in product((1, -1), repeat=2):
        if not _in_exp_image(ws, (e1, e2)):
            continue
        xi, zeta = I * e1, I * e2
        J = Mat.diag(xi, zeta, rings.conj(zeta), rings.conj(xi))
        if complex_structure_check(J):
            out.append(J)
    return out
