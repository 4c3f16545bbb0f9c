"""Weight-3 Hodge frame with one-dimensional Hodge pieces.

Basis labels ``v30, v21, v12, v03`` stand for generators of ``H^{3,0}``,
``H^{2,1}``, ``H^{1,2}``, ``H^{0,3}``.  Complex conjugation swaps
``v30 <-> v03`` and ``v21 <-> v12``.  Everything is stored in the canonical
ordering; other orderings are views through permutation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import rings
from .errors import DegenerateForm, NotUnitNorm, ShapeMismatch
from .matrices import Mat, det, inertia, inverse
from .rings import I

LABELS = ("v30", "v21", "v12", "v03")
CANONICAL = LABELS
WEIL_ORDER = ("v30", "v12", "v21", "v03")
PAIRED_ORDER = ("v30", "v03", "v21", "v12")

CONJ_LABEL = {"v30": "v03", "v03": "v30", "v21": "v12", "v12": "v21"}

# nonzero values Q(v_j, v_k); Q(i v30, v03) = Q(-i v21, v12) = 1
_Q_TABLE = {
    ("v30", "v03"): -I,
    ("v03", "v30"): I,
    ("v21", "v12"): I,
    ("v12", "v21"): -I,
}


def q_value(a: str, b: str):
    return _Q_TABLE.get((a, b), rings.Gauss(0, 0))


@dataclass(frozen=True)
class HodgeFrame:
    ordering: tuple = CANONICAL
    q: Mat = field(init=False, repr=False, compare=False)
    sigma: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ordering = tuple(self.ordering)
        if sorted(ordering) != sorted(LABELS):
            raise ValueError(f"not an ordering of {LABELS}: {ordering}")
        object.__setattr__(self, "ordering", ordering)
        q = Mat.from_rows([[q_value(a, b) for b in ordering] for a in ordering])
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "sigma",
                           tuple(ordering.index(CONJ_LABEL[l]) for l in ordering))

    def index(self, label: str) -> int:
        return self.ordering.index(label)

    def permutation_to(self, other: "HodgeFrame") -> Mat:
        """``P`` with ``coords_other = P @ coords_self``."""
        n = len(LABELS)
        entries = [0] * (n * n)
        for j, label in enumerate(self.ordering):
            entries[other.index(label) * n + j] = 1
        return Mat(n, n, entries)

    def transport(self, M: Mat, other: "HodgeFrame") -> Mat:
        """The operator ``M`` (written in this frame) written in ``other``."""
        P = self.permutation_to(other)
        return P @ M @ P.T

    def conj_vector(self, w: Mat) -> Mat:
        """Coordinates of the complex conjugate of the vector ``w``."""
        vals = [None] * w.rows
        for k in range(w.rows):
            vals[self.sigma[k]] = rings.conj(w[k, 0])
        return Mat.column(vals)

    def real_basis(self) -> Mat:
        """Columns ``v30+v03, i(v30-v03), v21+v12, i(v21-v12)``."""
        return CANONICAL_FRAME.transport_vectors(_REAL_BASIS, self)

    def transport_vectors(self, V: Mat, other: "HodgeFrame") -> Mat:
        return self.permutation_to(other) @ V

    def to_json(self) -> dict:
        from .matrices import mat_to_json
        return {"ordering": list(self.ordering), "q": mat_to_json(self.q)}


_REAL_BASIS = Mat.from_rows([
    [1, I, 0, 0],
    [0, 0, 1, I],
    [0, 0, 1, -I],
    [1, -I, 0, 0],
])

CANONICAL_FRAME = HodgeFrame(CANONICAL)


def q_matrix(ordering=CANONICAL) -> Mat:
    return HodgeFrame(tuple(ordering)).q


# -- circle actions ------------------------------------------------------------

_EXPONENTS = {
    # exponent of z per canonical label; negative means conj(z)
    "hX": (3, 1, -1, -3),
    "hW": (1, -1, 1, -1),
    "hG": (1, 1, -1, -1),
}


def circle_action(kind: str, z, frame: HodgeFrame = CANONICAL_FRAME) -> Mat:
    """Diagonal circle action ``h_X``, ``h_W`` or ``h_G`` evaluated at ``z``."""
    if kind not in _EXPONENTS:
        raise ValueError(f"unknown circle action {kind!r}")
    if rings.normsq(z) != 1:
        raise NotUnitNorm(f"|z|^2 = {rings.normsq(z)} for z = {z}")
    zc = rings.conj(z)
    diag = [z ** e if e > 0 else zc ** (-e) for e in _EXPONENTS[kind]]
    M = Mat.diag(*diag)
    return M if frame.ordering == CANONICAL else CANONICAL_FRAME.transport(M, frame)


def circle_generator(kind: str, frame: HodgeFrame = CANONICAL_FRAME) -> Mat:
    """Derivative at ``z = 1`` along ``z = e^{i theta}``: ``diag(i*e_k)``."""
    M = Mat.diag(*(I * e for e in _EXPONENTS[kind]))
    return M if frame.ordering == CANONICAL else CANONICAL_FRAME.transport(M, frame)


def unit_circle_point(t) -> rings.Gauss:
    """Rational point ``(1 - t^2 + 2ti) / (1 + t^2)`` of the unit circle."""
    t = Fraction(t)
    d = 1 + t * t
    return rings.Gauss((1 - t * t) / d, 2 * t / d)


# -- reality and symplectic membership -----------------------------------------

def _check_square4(M: Mat):
    if M.shape != (4, 4):
        raise ShapeMismatch(f"expected a 4x4 matrix, got {M.rows}x{M.cols}")


def is_real(M: Mat, frame: HodgeFrame = CANONICAL_FRAME) -> bool:
    """``M`` commutes with complex conjugation: ``m[s(i), s(j)] == conj(m[i, j])``."""
    _check_square4(M)
    s = frame.sigma
    return all(M[s[i], s[j]] == rings.conj(M[i, j]) for i in range(4) for j in range(4))


def in_sp(M: Mat, frame: HodgeFrame = CANONICAL_FRAME, level: str = "group") -> bool:
    _check_square4(M)
    q = frame.q
    if level == "group":
        ok = M.T @ q @ M == q
    elif level == "algebra":
        ok = (M.T @ q + q @ M).is_zero()
    else:
        raise ValueError(f"level must be 'group' or 'algebra', not {level!r}")
    return ok and is_real(M, frame)


def weil_commutant(y, z) -> Mat:
    """Real matrices commuting with the derived Weil centralizer, before the
    symplectic condition; ordering ``v30, v12, v21, v03``."""
    yb, zb = rings.conj(y), rings.conj(z)
    return Mat.from_rows([
        [z, 0, yb, 0],
        [0, z, 0, -yb],
        [-y, 0, zb, 0],
        [0, y, 0, zb],
    ])


# -- Hermitian and symmetric forms -------------------------------------------------

def hermitian_gram(frame: HodgeFrame, vectors: list[Mat]) -> Mat:
    """``H(u, w) = i * Q(u, conj(w))`` on coordinate column vectors."""
    q = frame.q
    rows = []
    for u in vectors:
        rows.append([I * (u.T @ q @ frame.conj_vector(w))[0, 0] for w in vectors])
    return Mat.from_rows(rows)


def _label_vector(frame: HodgeFrame, label: str, scale=1) -> Mat:
    vals = [0, 0, 0, 0]
    vals[frame.index(label)] = scale
    return Mat.column(vals)


def hermitian_signature(frame: HodgeFrame, subspace, scales=None) -> tuple[int, int]:
    """Signature of ``H = iQ(., conj .)`` restricted to the span of ``subspace``.

    ``subspace`` is a list of basis labels or of coordinate vectors; optional
    ``scales`` rescale label vectors (the signature must not change).
    """
    subspace = list(subspace)
    if subspace and isinstance(subspace[0], str):
        if len(set(subspace)) != len(subspace):
            raise ValueError("subspace labels must be distinct")
        scales = scales or [1] * len(subspace)
        vectors = [_label_vector(frame, l, c) for l, c in zip(subspace, scales)]
    else:
        vectors = subspace
    G = hermitian_gram(frame, vectors)
    pos, neg, zero = inertia(G)
    if zero:
        raise DegenerateForm(f"H is degenerate on {subspace}")
    return pos, neg


def positive_form_gram(J: Mat, frame: HodgeFrame = CANONICAL_FRAME) -> Mat:
    """Gram matrix of ``Q(J., .)`` in the real basis."""
    B = frame.real_basis()
    G = B.T @ J.T @ frame.q @ B
    return G.map(rings.demote)


def positive_form_report(J: Mat, frame: HodgeFrame = CANONICAL_FRAME) -> dict:
    G = positive_form_gram(J, frame)
    real = all(rings.is_real_scalar(e) for e in G.entries)
    symmetric = G == G.T
    minors = []
    if real and symmetric:
        for k in range(1, 5):
            sub = Mat.from_rows([list(G.row(i))[:k] for i in range(k)])
            minors.append(rings.demote(det(sub)))
    positive = bool(minors) and all(rings.real_sign(m) > 0 for m in minors)
    return {"gram": G, "real": real, "symmetric": symmetric,
            "leading_minors": minors, "positive": positive}


def positive_form_check(J: Mat, frame: HodgeFrame = CANONICAL_FRAME) -> bool:
    """``Q(J., .)`` is symmetric and positive definite (Sylvester)."""
    return positive_form_report(J, frame)["positive"]


def complex_structure_check(J: Mat, frame: HodgeFrame = CANONICAL_FRAME) -> bool:
    _check_square4(J)
    return (is_real(J, frame) and in_sp(J, frame, "group")
            and J @ J == -Mat.identity(4, J.ring))


# -- real chart -----------------------------------------------------------------------

_B = _REAL_BASIS
_B_INV = inverse(_B)


def chart(M: Mat) -> tuple:
    """Coordinates of a canonical-ordering matrix in the real chart.

    The chart sends ``M`` to ``B^-1 M B`` flattened row-major, ``B`` being
    the real basis; real matrices get real coordinates.
    """
    R = _B_INV @ M @ _B
    return tuple(rings.demote(e) for e in R.entries)


def from_chart(coords) -> Mat:
    R = Mat(4, 4, list(coords))
    return _B @ R @ _B_INV


def chart_form() -> Mat:
    """``B^t q B``; rational, and ``sp`` in the chart is ``R^t W + W R = 0``."""
    return (_B.T @ CANONICAL_FRAME.q @ _B).map(rings.demote)
