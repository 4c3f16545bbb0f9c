"""Exact scalar rings.

Four rings are used throughout, ordered by the implicit embedding
``Q < Q(i) < Q(i, sqrt3)``, plus polynomials over ``Q(i)``:

* ``Q``     -- :class:`fractions.Fraction` (plain ``int`` is accepted on input)
* ``QI``    -- :class:`Gauss`, Gaussian rationals ``re + im*i``
* ``QIS``   -- :class:`Tower`, ``c0 + c1*i + c2*s + c3*i*s`` with ``s**2 == 3``
* ``POLY``  -- :class:`Poly`, polynomials with ``Q(i)`` coefficients whose
  indeterminates carry a conjugation pairing (``x <-> xbar``, ``y <-> ybar``;
  every other name is a real indeterminate).

``Tower`` and ``Poly`` do not embed into each other; mixing them raises
:class:`~cyhodge.errors.RingMismatch`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import (
    MissingAssignment,
    PairingViolation,
    RingMismatch,
    UnsupportedRing,
    ZeroInverse,
)

Q, QI, QIS, POLY = "Q", "QI", "QIS", "POLY"
_RANK = {Q: 0, QI: 1, QIS: 2, POLY: 3}

_RATIONAL = (int, Fraction)


def _frac(v) -> Fraction:
    if type(v) is Fraction:
        return v
    if isinstance(v, bool) or not isinstance(v, _RATIONAL):
        if isinstance(v, str):
            return Fraction(v)
        raise TypeError(f"not a rational: {v!r}")
    return Fraction(v)


class Gauss:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _new(cls, re: Fraction, im: Fraction) -> "Gauss":
        g = object.__new__(cls)
        g.re = re
        g.im = im
        return g

    def __add__(self, o):
        if isinstance(o, Gauss):
            return Gauss._new(self.re + o.re, self.im + o.im)
        if isinstance(o, _RATIONAL):
            return Gauss._new(self.re + o, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Gauss._new(-self.re, -self.im)

    def __sub__(self, o):
        if isinstance(o, Gauss):
            return Gauss._new(self.re - o.re, self.im - o.im)
        if isinstance(o, _RATIONAL):
            return Gauss._new(self.re - o, self.im)
        return NotImplemented

    def __rsub__(self, o):
        if isinstance(o, _RATIONAL):
            return Gauss._new(o - self.re, -self.im)
        return NotImplemented

    def __mul__(self, o):
        if isinstance(o, Gauss):
            a, b, c, d = self.re, self.im, o.re, o.im
            return Gauss._new(a * c - b * d, a * d + b * c)
        if isinstance(o, _RATIONAL):
            return Gauss._new(self.re * o, self.im * o)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Gauss":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroInverse("inverse of 0 in Q(i)")
        return Gauss._new(self.re / n, -self.im / n)

    def __truediv__(self, o):
        if isinstance(o, Gauss):
            return self * o.inverse()
        if isinstance(o, _RATIONAL):
            if not o:
                raise ZeroInverse("division by 0")
            return Gauss._new(self.re / o, self.im / o)
        return NotImplemented

    def __rtruediv__(self, o):
        if isinstance(o, _RATIONAL):
            return self.inverse() * o
        return NotImplemented

    def __pow__(self, n: int):
        return _power(self, n, Gauss._new(Fraction(1), Fraction(0)))

    def conj(self) -> "Gauss":
        return Gauss._new(self.re, -self.im)

    def normsq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        if isinstance(o, Gauss):
            return self.re == o.re and self.im == o.im
        if isinstance(o, _RATIONAL):
            return not self.im and self.re == o
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gauss({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = abs(self.im)
        unit = "i" if im == 1 else f"{im}i"
        if not self.re:
            return unit if self.im > 0 else "-" + unit
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{unit})"


I = Gauss(0, 1)


class Tower:
    """Element ``c0 + c1*i + c2*s + c3*i*s`` of Q(i, s), ``s**2 == 3``."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (_frac(c0), _frac(c1), _frac(c2), _frac(c3))

    @classmethod
    def _new(cls, c) -> "Tower":
        t = object.__new__(cls)
        t.c = c
        return t

    @classmethod
    def lift(cls, e) -> "Tower":
        if isinstance(e, Tower):
            return e
        if isinstance(e, Gauss):
            return cls._new((e.re, e.im, Fraction(0), Fraction(0)))
        if isinstance(e, _RATIONAL):
            return cls._new((Fraction(e), Fraction(0), Fraction(0), Fraction(0)))
        raise RingMismatch(f"cannot embed {type(e).__name__} into Q(i,s)")

    @staticmethod
    def _coerce(o):
        if isinstance(o, Tower):
            return o
        if isinstance(o, (Gauss, int, Fraction)):
            return Tower.lift(o)
        return None

    def __add__(self, o):
        o = Tower._coerce(o)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return Tower._new((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return Tower._new((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, o):
        o = Tower._coerce(o)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return Tower._new((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, o):
        o = Tower._coerce(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        o = Tower._coerce(o)
        if o is None:
            return NotImplemented
        c0, c1, c2, c3 = self.c
        d0, d1, d2, d3 = o.c
        return Tower._new((
            c0 * d0 - c1 * d1 + 3 * (c2 * d2 - c3 * d3),
            c0 * d1 + c1 * d0 + 3 * (c2 * d3 + c3 * d2),
            c0 * d2 - c1 * d3 + c2 * d0 - c3 * d1,
            c0 * d3 + c1 * d2 + c2 * d1 + c3 * d0,
        ))

    __rmul__ = __mul__

    def inverse(self) -> "Tower":
        if not self:
            raise ZeroInverse("inverse of 0 in Q(i,s)")
        c0, c1, c2, c3 = self.c
        # (A + B s)^-1 = (A - B s) / (A^2 - 3 B^2) with A, B in Q(i)
        a = Gauss._new(c0, c1)
        b = Gauss._new(c2, c3)
        n = (a * a - b * b * 3).inverse()
        p, q = a * n, -(b * n)
        return Tower._new((p.re, p.im, q.re, q.im))

    def __truediv__(self, o):
        o = Tower._coerce(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = Tower._coerce(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        return _power(self, n, Tower(1))

    def conj(self) -> "Tower":
        c0, c1, c2, c3 = self.c
        return Tower._new((c0, -c1, c2, -c3))

    def normsq(self) -> "Tower":
        return self * self.conj()

    def __bool__(self):
        return any(self.c)

    def __eq__(self, o):
        o = Tower._coerce(o)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        c0, c1, c2, c3 = self.c
        if not c2 and not c3:
            return hash(Gauss._new(c0, c1))
        return hash(self.c)

    def __repr__(self):
        return "Tower({}, {}, {}, {})".format(*self.c)

    def __str__(self):
        text = ""
        for coef, unit in zip(self.c, ("", "i", "s", "i*s")):
            if not coef:
                continue
            mag = abs(coef)
            body = str(mag) if not unit else (unit if mag == 1 else f"{mag}*{unit}")
            if text:
                text += (" + " if coef > 0 else " - ") + body
            else:
                text = body if coef > 0 else "-" + body
        return text or "0"


S = Tower(0, 0, 1, 0)


# -- polynomials -------------------------------------------------------------

ALPHABET = ("a", "b", "c", "d", "e", "f", "g", "h", "r", "s", "t",
            "x", "xbar", "y", "ybar", "z", "zbar")
_CONJ_VARS = {"x": "xbar", "xbar": "x", "y": "ybar", "ybar": "y",
              "z": "zbar", "zbar": "z"}


def conj_var(name: str) -> str:
    """Partner of ``name`` under the conjugation pairing (itself if real)."""
    return _CONJ_VARS.get(name, name)


def _var_key(name: str):
    try:
        return (0, ALPHABET.index(name), name)
    except ValueError:
        return (1, 0, name)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda it: _var_key(it[0])))


def _norm_coeff(c):
    if isinstance(c, Gauss) and not c.im:
        return c.re
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    """Polynomial over Q(i) in named indeterminates.

    Stored canonically as ``{monomial: coefficient}`` with no zero
    coefficients; a monomial is a tuple of ``(name, exponent)`` pairs sorted
    in alphabet order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            if isinstance(c, Tower):
                raise RingMismatch("Poly coefficients must lie in Q(i)")
            c = _norm_coeff(c)
            if c:
                mono = tuple(sorted(((v, e) for v, e in mono if e),
                                    key=lambda it: _var_key(it[0])))
                clean[mono] = _norm_coeff(clean.get(mono, 0) + c)
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "Poly":
        if isinstance(c, Poly):
            return c
        if isinstance(c, Tower):
            raise RingMismatch("cannot embed Q(i,s) into Poly over Q(i)")
        c = _norm_coeff(c)
        return cls._raw({(): c} if c else {})

    @staticmethod
    def _coerce(o):
        if isinstance(o, Poly):
            return o
        if isinstance(o, (int, Fraction, Gauss)):
            return Poly.const(o)
        if isinstance(o, Tower):
            raise RingMismatch("cannot mix Poly with Q(i,s) elements")
        return None

    def __add__(self, o):
        o = Poly._coerce(o)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = _norm_coeff(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, o):
        o = Poly._coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = Poly._coerce(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        o = Poly._coerce(o)
        if o is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: _norm_coeff(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction, Gauss)):
            return self * inv(o)
        raise UnsupportedRing("polynomial division is not supported")

    def __pow__(self, n: int):
        return _power(self, n, Poly.const(1))

    def conj(self) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            m2 = tuple(sorted(((conj_var(v), e) for v, e in m),
                              key=lambda it: _var_key(it[0])))
            out[m2] = c.conj() if isinstance(c, Gauss) else c
        return Poly._raw(out)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((), Fraction(0))

    def sorted_terms(self):
        """Terms in descending lexicographic order over the alphabet."""
        allvars = sorted(self.variables(), key=_var_key)

        def key(m):
            d = dict(m)
            return tuple(d.get(v, 0) for v in allvars)

        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def leading_coefficient(self):
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def monic(self) -> "Poly":
        """Divide by the leading coefficient (zero stays zero)."""
        if not self.terms:
            return self
        return self * inv(self.leading_coefficient())

    def subs(self, mapping: Mapping[str, object]) -> "Poly":
        """Substitute polynomials or Q(i) scalars for some indeterminates."""
        out = Poly.const(0)
        cache: dict = {}
        for m, c in self.terms.items():
            term = Poly.const(c)
            rest = []
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = Poly._coerce(mapping[v]) ** e
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * Poly._raw({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, o):
        try:
            o = Poly._coerce(o)
        except RingMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")


def var(name: str) -> Poly:
    return Poly.var(name)


def _power(x, n: int, one):
    if n < 0:
        return _power(inv(x), -n, one)
    result = one
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


# -- ring bookkeeping ----------------------------------------------------------

Scalar = Union[int, Fraction, Gauss, Tower, Poly]


def ring_of(e) -> str:
    if isinstance(e, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(e, _RATIONAL):
        return Q
    if isinstance(e, Gauss):
        return QI
    if isinstance(e, Tower):
        return QIS
    if isinstance(e, Poly):
        return POLY
    raise TypeError(f"not a scalar: {e!r}")


def join_rings(*rings: str) -> str:
    rs = set(rings)
    if QIS in rs and POLY in rs:
        raise RingMismatch("Q(i,s) and Poly do not embed into a common ring")
    return max(rs, key=_RANK.__getitem__) if rs else Q


def lift(e, ring: str):
    """Embed ``e`` into ``ring`` (upward only)."""
    if ring == Q:
        if ring_of(e) != Q:
            raise RingMismatch(f"cannot lower {type(e).__name__} to Q")
        return _frac(e)
    if ring == QI:
        if isinstance(e, Gauss):
            return e
        if isinstance(e, _RATIONAL):
            return Gauss._new(Fraction(e), Fraction(0))
        raise RingMismatch(f"cannot lower {type(e).__name__} to Q(i)")
    if ring == QIS:
        return Tower.lift(e)
    if ring == POLY:
        return Poly.const(e)
    raise ValueError(f"unknown ring {ring!r}")


def zero(ring: str = Q):
    return lift(0, ring)


def one(ring: str = Q):
    return lift(1, ring)


# -- operations ------------------------------------------------------------------

def conj(e):
    """Complex conjugation; fixes rationals and real indeterminates."""
    if isinstance(e, _RATIONAL):
        return e
    return e.conj()


def inv(e):
    """Multiplicative inverse in Q, Q(i) or Q(i,s)."""
    if isinstance(e, Poly):
        raise UnsupportedRing("Poly is not a field")
    if isinstance(e, _RATIONAL):
        if not e:
            raise ZeroInverse("inverse of 0")
        return 1 / Fraction(e)
    if isinstance(e, (Gauss, Tower)):
        return e.inverse()
    raise TypeError(f"not a scalar: {e!r}")


def normsq(e):
    """``e * conj(e)``."""
    if isinstance(e, _RATIONAL):
        return Fraction(e) * e
    if isinstance(e, Gauss):
        return e.normsq()
    return e * e.conj()


def real_part(e):
    """Real part; lands in Q for Q(i) input and in Q(s) for tower input."""
    if isinstance(e, _RATIONAL):
        return Fraction(e)
    if isinstance(e, Gauss):
        return e.re
    if isinstance(e, Tower):
        c0, _, c2, _ = e.c
        return Tower._new((c0, Fraction(0), c2, Fraction(0))) if c2 else c0
    raise UnsupportedRing("real part of a polynomial is not defined")


def imag_part(e):
    if isinstance(e, _RATIONAL):
        return Fraction(0)
    if isinstance(e, Gauss):
        return e.im
    if isinstance(e, Tower):
        _, c1, _, c3 = e.c
        return Tower._new((c1, Fraction(0), c3, Fraction(0))) if c3 else c1
    raise UnsupportedRing("imaginary part of a polynomial is not defined")


def is_real_scalar(e) -> bool:
    return conj(e) == e


def real_sign(e) -> int:
    """Sign of a real element of Q or Q(s)."""
    if not is_real_scalar(e):
        raise ValueError(f"sign of non-real element {e}")
    if isinstance(e, Gauss):
        e = e.re
    if isinstance(e, _RATIONAL):
        return (e > 0) - (e < 0)
    if isinstance(e, Poly):
        raise UnsupportedRing("sign of a polynomial")
    a, _, b, _ = e.c
    sa, sb = (a > 0) - (a < 0), (b > 0) - (b < 0)
    if not sb:
        return sa
    if not sa or sa == sb:
        return sb
    # a + b*sqrt(3) with opposite signs
    return sa if a * a > 3 * b * b else sb


def demote(e):
    """Smallest ring holding ``e`` (tower -> Gauss -> rational)."""
    if isinstance(e, Tower):
        c0, c1, c2, c3 = e.c
        if c2 or c3:
            return e
        e = Gauss._new(c0, c1)
    if isinstance(e, Gauss):
        return e if e.im else e.re
    if isinstance(e, Poly) and e.is_constant():
        return demote(e.constant_value())
    if isinstance(e, int):
        return Fraction(e)
    return e


def tower_sqrt(q) -> Tower | None:
    """A square root of the rational ``q >= 0`` inside Q(s), if one exists."""
    q = _frac(q)
    if q < 0:
        return None
    r = _rational_sqrt(q)
    if r is not None:
        return Tower(r)
    r = _rational_sqrt(q / 3)
    if r is not None:
        return Tower(0, 0, r)
    return None


def _rational_sqrt(q: Fraction) -> Fraction | None:
    from math import isqrt

    n, d = q.numerator, q.denominator
    if n < 0:
        return None
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def poly_substitute(p, env: Mapping[str, object]):
    """Evaluate ``p`` at tower-valued indeterminates.

    ``env`` must assign every indeterminate of ``p`` and respect the pairing,
    i.e. ``env[xbar] == conj(env[x])`` and real indeterminates get real values.
    """
    if not isinstance(p, Poly):
        return Tower.lift(p)
    vals = {k: Tower.lift(v) for k, v in env.items()}
    for name, v in vals.items():
        partner = conj_var(name)
        if partner in vals and vals[partner] != v.conj():
            raise PairingViolation(f"{partner} is not the conjugate of {name}")
    missing = p.variables() - set(vals)
    if missing:
        raise MissingAssignment(", ".join(sorted(missing, key=_var_key)))
    total = Tower(0)
    powers: dict = {}
    for m, c in p.terms.items():
        term = Tower.lift(c)
        for v, e in m:
            if (v, e) not in powers:
                powers[(v, e)] = vals[v] ** e
            term = term * powers[(v, e)]
        total = total + term
    return total


# -- JSON ------------------------------------------------------------------------

def scalar_to_json(e):
    if isinstance(e, _RATIONAL):
        f = Fraction(e)
        return f"{f.numerator}/{f.denominator}"
    if isinstance(e, Gauss):
        return {"re": scalar_to_json(e.re), "im": scalar_to_json(e.im)}
    if isinstance(e, Tower):
        return {"c": [scalar_to_json(c) for c in e.c]}
    if isinstance(e, Poly):
        return [
            {"coeff": scalar_to_json(c), "exps": {v: x for v, x in m}}
            for m, c in e.sorted_terms()
        ]
    raise TypeError(f"not a scalar: {e!r}")


def scalar_from_json(obj):
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    if isinstance(obj, dict):
        if "c" in obj:
            return Tower(*(scalar_from_json(c) for c in obj["c"]))
        return Gauss(scalar_from_json(obj["re"]), scalar_from_json(obj["im"]))
    if isinstance(obj, list):
        return Poly({tuple(t["exps"].items()): scalar_from_json(t["coeff"])
                     for t in obj})
    raise ValueError(f"cannot decode scalar from {obj!r}")
