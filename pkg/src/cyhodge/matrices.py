"""Exact dense matrices over the scalar rings of :mod:`cyhodge.rings`."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial, lcm
from typing import Iterable, Sequence

from . import rings
from .errors import (
    NotNilpotent,
    NotUnipotent,
    ShapeMismatch,
    UnsupportedRing,
)
from .rings import POLY, Q, inv, join_rings, lift, ring_of


class Mat:
    """Immutable ``rows x cols`` matrix, entries stored row-major.

    Entries are lifted to the smallest common ring on construction, so a
    matrix is always homogeneous.
    """

    __slots__ = ("rows", "cols", "entries", "ring")

    def __init__(self, rows: int, cols: int, entries: Iterable, ring: str | None = None):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        found = [ring_of(e) for e in entries]
        r = join_rings(*found, *([ring] if ring else []))
        self.rows = rows
        self.cols = cols
        self.ring = r
        self.entries = tuple(lift(e, r) for e in entries)

    @classmethod
    def _new(cls, rows, cols, entries, ring) -> "Mat":
        m = object.__new__(cls)
        m.rows, m.cols, m.entries, m.ring = rows, cols, tuple(entries), ring
        return m

    # construction
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int, ring: str = Q) -> "Mat":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)], ring)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, ring: str = Q) -> "Mat":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols), ring)

    @classmethod
    def diag(cls, *values) -> "Mat":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def column(cls, values: Sequence) -> "Mat":
        return cls(len(values), 1, values)

    # access
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # arithmetic
    def _check_same_shape(self, other: "Mat"):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Mat":
        return Mat._new(self.rows, self.cols, [-a for a in self.entries], self.ring)

    def __mul__(self, scalar) -> "Mat":
        if isinstance(scalar, Mat):
            return self @ scalar
        return Mat(self.rows, self.cols, [a * scalar for a in self.entries])

    def __rmul__(self, scalar) -> "Mat":
        return Mat(self.rows, self.cols, [scalar * a for a in self.entries])

    def __matmul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.ring == Q and other.ring == Q:
            return _matmul_rational(self, other)
        ring = join_rings(self.ring, other.ring)
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(p):
                acc = None
                for k in range(m):
                    x = arow[k]
                    if not x:
                        continue
                    y = b[k * p + j]
                    if not y:
                        continue
                    t = x * y
                    acc = t if acc is None else acc + t
                out.append(0 if acc is None else acc)
        return Mat(n, p, out, ring)

    def __pow__(self, n: int) -> "Mat":
        if not self.is_square:
            raise ShapeMismatch("power of a non-square matrix")
        if n < 0:
            return inverse(self) ** (-n)
        result = Mat.identity(self.rows, self.ring)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    @property
    def T(self) -> "Mat":
        return Mat._new(self.cols, self.rows,
                        [self[i, j] for j in range(self.cols) for i in range(self.rows)],
                        self.ring)

    def conj(self) -> "Mat":
        return Mat._new(self.rows, self.cols, [rings.conj(a) for a in self.entries], self.ring)

    def map(self, fn) -> "Mat":
        return Mat(self.rows, self.cols, [fn(a) for a in self.entries])

    def subs(self, mapping) -> "Mat":
        """Substitute into polynomial entries (result stays polynomial)."""
        return self.map(lambda e: e.subs(mapping) if isinstance(e, rings.Poly) else e)

    def evaluate(self, env) -> "Mat":
        """Evaluate polynomial entries at tower values."""
        return Mat(self.rows, self.cols,
                   [rings.demote(rings.poly_substitute(e, env)) for e in self.entries])

    def trace(self):
        if not self.is_square:
            raise ShapeMismatch("trace of a non-square matrix")
        acc = lift(0, self.ring)
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(not self[i, j] for i in range(self.rows)
                   for j in range(self.cols) if i != j)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.ring}, {self.tolist()})"

    def __str__(self):
        cells = [[str(rings.demote(e)) for e in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def _matmul_rational(A: Mat, B: Mat) -> Mat:
    # scale to integer matrices, multiply, rescale
    da = lcm(*(e.denominator for e in A.entries)) if A.entries else 1
    db = lcm(*(e.denominator for e in B.entries)) if B.entries else 1
    ai = [int(e * da) for e in A.entries]
    bi = [int(e * db) for e in B.entries]
    n, m, p = A.rows, A.cols, B.cols
    den = da * db
    out = []
    for i in range(n):
        arow = ai[i * m:(i + 1) * m]
        for j in range(p):
            out.append(Fraction(sum(arow[k] * bi[k * p + j] for k in range(m)), den))
    return Mat._new(n, p, out, Q)


# -- products ------------------------------------------------------------------

def commutator(A: Mat, B: Mat) -> Mat:
    """``AB - BA``."""
    if not (A.is_square and B.is_square and A.shape == B.shape):
        raise ShapeMismatch(f"commutator needs equal square shapes, got {A.shape}, {B.shape}")
    join_rings(A.ring, B.ring)
    return A @ B - B @ A


def kron(A: Mat, B: Mat) -> Mat:
    """Kronecker product, first factor most significant."""
    ring = join_rings(A.ring, B.ring)
    rows, cols = A.rows * B.rows, A.cols * B.cols
    out = [None] * (rows * cols)
    for i, j in product(range(A.rows), range(A.cols)):
        a = A[i, j]
        for k, l in product(range(B.rows), range(B.cols)):
            out[(i * B.rows + k) * cols + j * B.cols + l] = a * B[k, l]
    return Mat(rows, cols, out, ring)


# -- elimination -------------------------------------------------------------------

def _require_field(A: Mat):
    if A.ring == POLY:
        raise UnsupportedRing("elimination needs field entries, got polynomials")


def _rref(A: Mat):
    """Reduced row echelon form as a list of rows plus pivot columns."""
    _require_field(A)
    m = [list(A.row(i)) for i in range(A.rows)]
    pivots = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        p = next((i for i in range(r, A.rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = inv(m[r][c])
        m[r] = [x * piv for x in m[r]]
        pivot_row = m[r]
        for i in range(A.rows):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots


def kernel_basis(A: Mat) -> list[Mat]:
    """Basis of the right kernel, one column vector per free column.

    Each vector carries a 1 in its free column and zeros in the other free
    columns, as read off the reduced echelon form.
    """
    m, pivots = _rref(A)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * A.cols
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][f]
        basis.append(Mat(A.cols, 1, v, A.ring))
    return basis


def rank(A: Mat) -> int:
    return len(_rref(A)[1])


def inverse(A: Mat) -> Mat:
    if not A.is_square:
        raise ShapeMismatch("inverse of a non-square matrix")
    n = A.rows
    aug = Mat(n, 2 * n, [x for i in range(n)
                         for x in (*A.row(i), *(1 if i == j else 0 for j in range(n)))], A.ring)
    m, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise rings.ZeroInverse("matrix is singular")
    return Mat(n, n, [x for r in m for x in r[n:]], A.ring)


def solve(A: Mat, b: Mat) -> Mat | None:
    """One solution ``x`` of ``A x = b`` (free variables set to 0), or None."""
    if b.rows != A.rows or b.cols != 1:
        raise ShapeMismatch("right-hand side must be a column of matching height")
    aug = Mat(A.rows, A.cols + 1,
              [x for i in range(A.rows) for x in (*A.row(i), b[i, 0])])
    m, pivots = _rref(aug)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [0] * A.cols
    for row, pc in enumerate(pivots):
        x[pc] = m[row][A.cols]
    return Mat(A.cols, 1, x, aug.ring)


def det(A: Mat):
    """Determinant: elimination over fields, Laplace expansion over polynomials."""
    if not A.is_square:
        raise ShapeMismatch("determinant of a non-square matrix")
    if A.ring == POLY:
        return _det_laplace(A.tolist())
    m = A.tolist()
    n = A.rows
    result = lift(1, A.ring)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return lift(0, A.ring)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result = result * piv
        ip = inv(piv)
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f = f * ip
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def _det_laplace(m: list):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        a = m[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _det_laplace(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rings.Poly.const(0)


# -- nilpotent and unipotent structure ------------------------------------------------

def is_nilpotent(N: Mat) -> bool:
    if not N.is_square:
        raise ShapeMismatch("nilpotency of a non-square matrix")
    return (N ** N.rows).is_zero()


def nilpotent_profile(N: Mat) -> list[int]:
    """Jordan block sizes of a nilpotent matrix, largest first."""
    if not is_nilpotent(N):
        raise NotNilpotent("N^dim != 0")
    n = N.rows
    ranks = [n]
    power = Mat.identity(n, N.ring)
    while ranks[-1]:
        power = power @ N
        ranks.append(rank(power))
    # at_least[k-1] = number of blocks of size >= k
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exact)
    return sizes


def rank_sequence(N: Mat) -> list[int]:
    """``[rank(N^0), rank(N^1), ...]`` down to the first zero."""
    ranks = [N.rows]
    power = Mat.identity(N.rows, N.ring)
    while ranks[-1] and len(ranks) <= N.rows:
        power = power @ N
        ranks.append(rank(power))
    return ranks


def unipotent_log(M: Mat) -> Mat:
    """Logarithm of a unipotent matrix as the terminating series in ``M - I``."""
    if not M.is_square:
        raise ShapeMismatch("log of a non-square matrix")
    n = M.rows
    N = M - Mat.identity(n, M.ring)
    if not (N ** n).is_zero():
        raise NotUnipotent("M - I is not nilpotent")
    result = Mat.zeros(n, n, M.ring)
    power = Mat.identity(n, M.ring)
    for k in range(1, n):
        power = power @ N
        if power.is_zero():
            break
        sign = 1 if k % 2 else -1
        result = result + power * Fraction(sign, k)
    return result


def nilpotent_exp(N: Mat) -> Mat:
    """Exponential of a nilpotent matrix as a finite sum."""
    if not is_nilpotent(N):
        raise NotNilpotent("N^dim != 0")
    n = N.rows
    result = Mat.identity(n, N.ring)
    power = Mat.identity(n, N.ring)
    for k in range(1, n):
        power = power @ N
        if power.is_zero():
            break
        result = result + power * Fraction(1, factorial(k))
    return result


# -- JSON --------------------------------------------------------------------------

def mat_to_json(M: Mat) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "ring": M.ring,
        "entries": [rings.scalar_to_json(e) for e in M.entries],
    }


def mat_from_json(obj) -> Mat:
    """Decode ``{"rows","cols","ring","entries"}`` or a plain nested list."""
    if isinstance(obj, list):
        return Mat.from_rows([[rings.scalar_from_json(e) for e in row] for row in obj])
    entries = [rings.scalar_from_json(e) for e in obj["entries"]]
    return Mat(obj["rows"], obj["cols"], entries, obj.get("ring"))


def inertia(G: Mat) -> tuple[int, int, int]:
    """``(pos, neg, zero)`` of a real symmetric or complex Hermitian matrix.

    Diagonalizes by congruence ``G -> P G P^*``; when every remaining
    diagonal entry is zero a row/column pair is mixed first.
    """
    if not G.is_square:
        raise ShapeMismatch("inertia of a non-square matrix")
    _require_field(G)
    cj = rings.conj
    m = G.tolist()
    n = G.rows
    if any(m[i][j] != cj(m[j][i]) for i in range(n) for j in range(n)):
        raise ValueError("matrix is not Hermitian")
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if m[i][i]), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n) if m[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row_i += u * row_j, col_i += conj(u) * col_j gives diagonal 2|m_ji|^2
            u = cj(m[j][i])
            m[i] = [a + u * b for a, b in zip(m[i], m[j])]
            for row in m:
                row[i] = row[i] + cj(u) * row[j]
            p = i
        if p != k:
            m[k], m[p] = m[p], m[k]
            for row in m:
                row[k], row[p] = row[p], row[k]
        d = m[k][k]
        sign = rings.real_sign(d)
        pos += sign > 0
        neg += sign < 0
        dinv = inv(d)
        for i in range(k + 1, n):
            f = m[i][k]
            if f:
                f = f * dinv
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
                cf = cj(f)
                for row in m:
                    row[i] = row[i] - cf * row[k]
        k += 1
    return pos, neg, n - pos - neg
