"""Static registry of verifications and the report they produce."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import borcea as bc
from . import gx_family as gx
from . import hodge_frame as hf
from . import landmarks as lm
from . import lie_tools as lt
from . import rings
from . import sampling as smp
from .errors import UnknownSelector
from .matrices import (
    Mat,
    commutator,
    det,
    kernel_basis,
    kron,
    mat_to_json,
    nilpotent_exp,
    nilpotent_profile,
    rank_sequence,
    unipotent_log,
)
from .rings import I, Poly

DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = DEFAULT_SEED
    samples: int = 1000

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass
class CheckResult:
    id: str
    status: str
    citation: str
    details: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Check:
    id: str
    citation: str
    fn: Callable


REGISTRY: list[Check] = []


def check(check_id: str, citation: str):
    def register(fn):
        if any(c.id == check_id for c in REGISTRY):
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY.append(Check(check_id, citation, fn))
        return fn
    return register


def jsonable(obj):
    if isinstance(obj, Mat):
        return mat_to_json(obj)
    if isinstance(obj, (rings.Gauss, rings.Tower, rings.Poly, Fraction)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


# -- exact rings -----------------------------------------------------------------------

def _field_axioms(draw, rng, n) -> dict:
    bad = 0
    for _ in range(n):
        a, b, c = draw(rng), draw(rng), draw(rng)
        ok = (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c and a * b == b * a
        if a:
            ok = ok and a * rings.inv(a) == 1
        bad += not ok
    return {"samples": n, "failures": bad}


@check("rings.field_axioms.gauss", "Q(i) is a field: associativity, distributivity, inverses")
def _(cfg):
    d = _field_axioms(smp.gauss, cfg.rng("gauss"), cfg.samples)
    return d["failures"] == 0, d


@check("rings.field_axioms.tower", "Q(i, sqrt3) is a field: associativity, distributivity, inverses")
def _(cfg):
    d = _field_axioms(smp.tower, cfg.rng("tower"), cfg.samples)
    return d["failures"] == 0, d


@check("rings.conj_and_norm", "conjugation is an involution and |zw|^2 = |z|^2 |w|^2")
def _(cfg):
    rng = cfg.rng("conj")
    bad = 0
    for _ in range(cfg.samples):
        z, w = smp.tower(rng), smp.tower(rng)
        ok = rings.conj(rings.conj(z)) == z and rings.normsq(z * w) == rings.normsq(z) * rings.normsq(w)
        ok = ok and rings.imag_part(rings.normsq(z)) == 0
        bad += not ok
    return bad == 0, {"samples": cfg.samples, "failures": bad}


@check("rings.tower_extends_gauss", "Q(i) embeds into Q(i, sqrt3) as a subring")
def _(cfg):
    rng = cfg.rng("embed")
    bad = 0
    for _ in range(cfg.samples):
        a, b = smp.gauss(rng), smp.gauss(rng)
        ta, tb = rings.Tower.lift(a), rings.Tower.lift(b)
        bad += not (ta * tb == rings.Tower.lift(a * b) and ta + tb == rings.Tower.lift(a + b))
    return bad == 0, {"samples": cfg.samples, "failures": bad}


@check("rings.radius", "|2/sqrt3|^2 = 4/3 and (sqrt3/3)^-1 = sqrt3")
def _(cfg):
    s = rings.S
    n = rings.normsq(2 * rings.inv(s))
    return rings.inv(s / 3) == s and n == Fraction(4, 3), {"normsq": n}


@check("rings.substitution", "x = 2/sqrt3, y = ix gives xbar*y - x*ybar = 8i/3 and x*xbar = 4/3")
def _(cfg):
    x = gx.DEFAULT_X
    env = {"x": x, "xbar": x.conj(), "y": I * x, "ybar": (I * x).conj()}
    v1 = rings.poly_substitute(gx.XBAR * gx.Y - gx.X * gx.YBAR, env)
    v2 = rings.poly_substitute(gx.X * gx.XBAR - Fraction(4, 3), env)
    return v1 == rings.Gauss(0, Fraction(8, 3)) and not v2, {"xbar_y_minus_x_ybar": v1}


# -- matrices --------------------------------------------------------------------------

@check("mat.jacobi", "the commutator satisfies the Jacobi identity")
def _(cfg):
    rng = cfg.rng("jacobi")
    bad = 0
    for _ in range(cfg.samples):
        A, B, C = (smp.rational_matrix(rng, 4) for _ in range(3))
        J = (commutator(A, commutator(B, C)) + commutator(B, commutator(C, A))
             + commutator(C, commutator(A, B)))
        bad += not J.is_zero()
    return bad == 0, {"samples": cfg.samples, "failures": bad}


@check("mat.kron_mixed_product", "(A (x) B)(C (x) D) = AC (x) BD")
def _(cfg):
    rng = cfg.rng("kron")
    bad = 0
    for _ in range(cfg.samples):
        A, B, C, D = (smp.rational_matrix(rng, 2) for _ in range(4))
        bad += kron(A, B) @ kron(C, D) != kron(A @ C, B @ D)
    return bad == 0, {"samples": cfg.samples, "failures": bad}


@check("mat.log_exp", "log and exp are inverse on unipotent upper-triangular 4x4 matrices")
def _(cfg):
    rng = cfg.rng("logexp")
    bad = 0
    for _ in range(cfg.samples):
        M = smp.unipotent_upper(rng)
        bad += nilpotent_exp(unipotent_log(M)) != M
    J3 = Mat.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    logJ3 = unipotent_log(J3)
    ok = bad == 0 and logJ3 == Mat.from_rows([[0, 1, Fraction(-1, 2)], [0, 0, 1], [0, 0, 0]])
    return ok, {"samples": cfg.samples, "failures": bad, "log_J3": logJ3}


@check("mat.middle_block_bracket", "[N1, N2] = diag(0, -2i, 2i, 0) for the middle-block generators")
def _(cfg):
    N1 = Mat.from_rows([[0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 0]])
    N2 = Mat.from_rows([[0, 0, 0, 0], [0, 0, I, 0], [0, -I, 0, 0], [0, 0, 0, 0]])
    got = commutator(N1, N2)
    return got == Mat.diag(0, -2 * I, 2 * I, 0), {"bracket": got}


@check("mat.commuting_diagonals", "matrices commuting with two generic diagonals are diagonal")
def _(cfg):
    d1 = Mat.diag(I, -I, I, -I)
    d2 = Mat.diag(3 * I, I, -I, -3 * I)
    rows = []
    for D in (d1, d2):
        for i in range(4):
            for j in range(4):
                if i != j:
                    # [X, D][i, j] = X[i, j] (D[j, j] - D[i, i])
                    row = [0] * 16
                    row[4 * i + j] = D[j, j] - D[i, i]
                    rows.append(row)
    kernel = kernel_basis(Mat.from_rows(rows))
    diag_only = all(all(not v[4 * i + j, 0] for i in range(4) for j in range(4) if i != j)
                    for v in kernel)
    return len(kernel) == 4 and diag_only, {"kernel_dim": len(kernel)}


@check("mat.det_q", "det Q = 1")
def _(cfg):
    return det(hf.q_matrix(hf.WEIL_ORDER)) == 1, {}


# -- frame ---------------------------------------------------------------------------

@check("frame.q_orderings", "Q transforms as P^t Q P between basis orderings")
def _(cfg):
    frames = [hf.HodgeFrame(o) for o in (hf.CANONICAL, hf.WEIL_ORDER, hf.PAIRED_ORDER)]
    ok = True
    for a in frames:
        for b in frames:
            P = a.permutation_to(b)
            ok = ok and P.T @ b.q @ P == a.q and P @ b.permutation_to(a) == Mat.identity(4)
    weil = hf.q_matrix(hf.WEIL_ORDER)
    ok = ok and weil == Mat.from_rows([[0, 0, 0, -I], [0, 0, -I, 0], [0, I, 0, 0], [I, 0, 0, 0]])
    return ok, {"weil_order_q": weil}


@check("frame.circle_actions", "h_X, h_W, h_G are real and symplectic on the unit circle")
def _(cfg):
    rng = cfg.rng("circle")
    bad = 0
    n = max(1, cfg.samples // 10)
    for _ in range(n):
        z = hf.unit_circle_point(smp.unit_parameter(rng))
        for kind in ("hX", "hW", "hG"):
            M = hf.circle_action(kind, z)
            bad += not hf.in_sp(M, level="group")
    return bad == 0, {"samples": n, "failures": bad}


@check("frame.circle_product", "h_X(z) = h_G(z)^2 h_W(z)")
def _(cfg):
    rng = cfg.rng("product")
    bad = 0
    for _ in range(cfg.samples):
        z = hf.unit_circle_point(smp.unit_parameter(rng))
        hG, hW = hf.circle_action("hG", z), hf.circle_action("hW", z)
        bad += hG @ hG @ hW != hf.circle_action("hX", z)
    minus = hf.circle_action("hX", -1) == -Mat.identity(4)
    return bad == 0 and minus, {"samples": cfg.samples, "failures": bad, "hX(-1)=-1": minus}


@check("frame.hermitian_signatures", "iQ(., conj .) has signature (1,1) on <v30, v21> and is definite on <v30, v12>")
def _(cfg):
    F = hf.CANONICAL_FRAME
    g = hf.hermitian_signature(F, ["v30", "v21"])
    w = hf.hermitian_signature(F, ["v30", "v12"])
    one = hf.hermitian_signature(F, ["v30"])
    ok = g == (1, 1) and 0 in w and sum(w) == 2 and sum(one) == 1
    return ok, {"griffiths": g, "weil": w, "v30": one}


@check("frame.positivity", "Q(h_W(i)., .) is positive definite; Q(h_G(i)., .) is not")
def _(cfg):
    rW = hf.positive_form_report(hf.circle_action("hW", I))
    rG = hf.positive_form_report(hf.circle_action("hG", I))
    neg = hf.positive_form_check(-hf.circle_action("hW", I))
    ok = rW["positive"] and not rG["positive"] and not neg
    return ok, {"hW": rW, "hG": rG}


@check("frame.weil_commutant", "the real commutant candidate M(y, z) is symplectic iff y = 0 and |z| = 1")
def _(cfg):
    W = hf.HodgeFrame(hf.WEIL_ORDER)
    samples = {
        "y=1,z=1": hf.in_sp(hf.weil_commutant(1, 1), W),
        "y=0,z=i": hf.in_sp(hf.weil_commutant(0, I), W),
        "y=0,z=3/5+4i/5": hf.in_sp(hf.weil_commutant(0, rings.Gauss(Fraction(3, 5), Fraction(4, 5))), W),
        "y=i,z=0": hf.in_sp(hf.weil_commutant(I, 0), W),
        "y=0,z=2": hf.in_sp(hf.weil_commutant(0, 2), W),
    }
    expected = {"y=1,z=1": False, "y=0,z=i": True, "y=0,z=3/5+4i/5": True,
                "y=i,z=0": False, "y=0,z=2": False}
    return samples == expected, samples


@check("frame.complex_structures", "h_G(i) is a complex structure; diag(1, i, -i, 1) and I are not")
def _(cfg):
    a = hf.complex_structure_check(hf.circle_action("hG", I))
    b = hf.complex_structure_check(Mat.diag(1, I, -I, 1))
    c = hf.complex_structure_check(Mat.identity(4))
    return a and not b and not c, {"hG(i)": a, "diag(1,i,-i,1)": b, "I": c}


# -- Lie algebras -------------------------------------------------------------------------

@check("lie.sp_dimension", "dim sp(4, R) = 10")
def _(cfg):
    S = lm.sp()
    t_in = S.contains(gx.t_matrix())
    return S.dim == 10 and lt.closure_check(S) and t_in, {"dim": S.dim}


@check("lie.circle_centralizer", "the centralizer of the Hodge circle is a diagonal 2-torus with complex structures +-h_W(i), +-h_G(i)")
def _(cfg):
    C = lm.circle_centralizer()
    diag = all(b.is_diagonal() for b in C)
    Js = lt.torus_complex_structures(C)
    expected = {hf.circle_action("hW", I), -hf.circle_action("hW", I),
                hf.circle_action("hG", I), -hf.circle_action("hG", I)}
    ok = C.dim == 2 and diag and len(Js) == 4 and set(Js) == expected
    return ok, {"dim": C.dim, "structures": Js}


@check("lie.griffiths_torus_structures", "the h_G circle alone contains only +-h_G(i)")
def _(cfg):
    T = lt.Subalgebra([hf.circle_generator("hG")])
    Js = lt.torus_complex_structures(T)
    hG = hf.circle_action("hG", I)
    return set(Js) == {hG, -hG}, {"structures": Js}


@check("lie.characters", "ad of the Hodge circle splits sp(4) into characters {0:2, +-1:2, +-2:1, +-3:1}")
def _(cfg):
    pieces = lt.character_decomposition(gx.t_matrix(), lm.sp())
    dims = {k: len(v) for k, v in pieces.items()}
    expected = {0: 2, 1: 2, -1: 2, 2: 1, -2: 1, 3: 1, -3: 1}
    corner = lm.corner_block()
    corners = all(corner.contains(m.map(rings.real_part)) and corner.contains(m.map(rings.imag_part))
                  or lt.complex_span_contains(list(corner.basis), m)
                  for k in (3, -3) for m in pieces[k])
    zero_is_centralizer = all(lt.complex_span_contains(list(lm.circle_centralizer().basis), m)
                              for m in pieces[0])
    return dims == expected and corners and zero_is_centralizer, {"dims": dims}


@check("lie.character_grading", "[piece_j, piece_k] lies in piece_(j+k)")
def _(cfg):
    pieces = lt.character_decomposition(gx.t_matrix(), lm.sp())
    bad = []
    for j, pj in pieces.items():
        for k, pk in pieces.items():
            target = pieces.get(j + k, [])
            for a in pj:
                for b in pk:
                    if not lt.complex_span_contains(target, commutator(a, b)):
                        bad.append((j, k))
    return not bad, {"violations": sorted(set(bad))}


@check("lie.killing_forms", "Killing signatures: su(2) type (0,3), su(1,1) type (2,1), torus (0,0,2)")
def _(cfg):
    sigs = {
        "Cder(hW(i))": lt.killing(lm.weil_derived()).signature,
        "Cder(hG(i))": lt.killing(lm.griffiths_derived()).signature,
        "C(h)": lt.killing(lm.circle_centralizer()).signature,
        "sp": lt.killing(lm.sp()).signature,
    }
    ok = (sigs["Cder(hW(i))"] == (0, 3, 0) and sigs["Cder(hG(i))"] == (2, 1, 0)
          and sigs["C(h)"] == (0, 0, 2) and sigs["sp"][2] == 0)
    return ok, sigs


@check("lie.weil_derived_centralizer", "the centralizer of Cder(h_W(i)) in sp is the h_W line")
def _(cfg):
    C = lt.centralizer(lm.weil_derived().basis, lm.sp())
    line = lt.Subalgebra([hf.circle_generator("hW")])
    return C.dim == 1 and line.contains_all(C), {"dim": C.dim, "basis": list(C.basis)}


@check("lie.lie_h_split", "Lie(H) is the sum of two commuting su(1,1) ideals")
def _(cfg):
    H = lm.lie_h()
    p1, p2 = lm.lie_h_parts()
    sigs = (lt.killing(p1).signature, lt.killing(p2).signature)
    ok = (H.dim == 6 and lt.verify_ideal_split(H, p1, p2) and lt.verify_ideal_split(H, p2, p1)
          and sigs == ((2, 1, 0), (2, 1, 0)))
    simple = not lt.verify_ideal_split(lm.sp(), p1, p2)
    return ok and simple, {"dim": H.dim, "part_signatures": sigs}


@check("lie.griffiths_line", "in Lie(H) only the h_G line commutes with Cder(h_G(i)); in the order v30, v12, v21, v03 it is diag(xi, conj xi, xi, conj xi)")
def _(cfg):
    C = lt.centralizer(lm.griffiths_derived().basis, lm.lie_h())
    line = lt.Subalgebra([hf.circle_generator("hG")])
    weil = hf.CANONICAL_FRAME.transport(C.basis[0], hf.HodgeFrame(hf.WEIL_ORDER)) if C.dim else None
    shape = weil is not None and weil.is_diagonal() and weil == Mat.diag(1, -1, 1, -1) * weil[0, 0]
    ok = C.dim == 1 and line.contains_all(C) and shape
    return ok, {"dim": C.dim, "basis": list(C.basis), "weil_order_view": weil}


@check("lie.outer_rotation_centralizer", "Z = diag(xi, 1, 1, conj xi) has a 4-dim centralizer inside Lie(H)")
def _(cfg):
    C = lm.outer_rotation_centralizer()
    return C.dim == 4 and lm.lie_h().contains_all(C), {"dim": C.dim}


@check("lie.blocks", "the inner and corner blocks of sp are su(1,1) subalgebras")
def _(cfg):
    inner, corner = lm.inner_block(), lm.corner_block()
    sigs = (lt.killing(inner).signature, lt.killing(corner).signature)
    return sigs == ((2, 1, 0), (2, 1, 0)), {"signatures": sigs}


# -- G_x ------------------------------------------------------------------------------

@check("gx.bracket_vu", "[V(y), U(x)] has entry (1,3) = ix - y and corner 2i")
def _(cfg):
    B = gx.GxSymbolic().bracket_vu()
    ok = B[0, 2] == I * gx.X - gx.Y and B[0, 0] == 2 * I and B[3, 3] == -2 * I
    return ok, {"bracket": B}


@check("gx.constraints", "closure forces y = ix and x*xbar = 4/3")
def _(cfg):
    cs = gx.derive_constraints()
    expected = [gx.Y - I * gx.X, gx.X * gx.XBAR - Fraction(4, 3)]
    diag = gx.diagonal_condition()
    diag_ok = diag == gx.XBAR * gx.Y - gx.X * gx.YBAR - rings.Gauss(0, Fraction(8, 3))
    sub = (gx.XBAR * gx.Y - gx.X * gx.YBAR).subs({"y": I * gx.X, "ybar": -I * gx.XBAR})
    sub_ok = sub == gx.X * gx.XBAR * (2 * I)
    ok = cs.equivalent_to(expected) and cs.is_conj_stable() and diag_ok and sub_ok
    return ok, {"generators": [str(p) for p in cs.generators], "scale": cs.scale,
                "diagonal": str(diag)}


@check("gx.instance", "x = 2/sqrt3 gives a closed real 3-dim algebra of Killing type (2,1) containing the circle")
def _(cfg):
    r = gx.instance_report()
    return r.ok, asdict(r)


@check("gx.instance_circle", "every x = (2/sqrt3)(p + qi) with p^2 + q^2 = 1 gives the same structure")
def _(cfg):
    rng = cfg.rng("gxcircle")
    n = max(1, cfg.samples // 100)
    bad = []
    for _ in range(n):
        z = hf.unit_circle_point(smp.unit_parameter(rng))
        x = gx.circle_x(z.re, z.im)
        if not gx.instance_report(x).ok:
            bad.append(str(x))
    return not bad, {"samples": n, "failures": bad}


@check("gx.bracket_relations", "[V, T] = 2U and [T, U] = 2V once y = ix")
def _(cfg):
    d = gx.bracket_relations()
    return all(d.values()), d


@check("gx.nilpotent_square", "no nonzero element of G_x squares to zero; m12 of M^2 is 4ai(c + bi)")
def _(cfg):
    r = gx.nilpotent_square_report(gx.instantiate())
    return r.ok, asdict(r)


@check("gx.unipotent_blocks", "unipotent elements of G_x have a Jordan block of length >= 3")
def _(cfg):
    profiles = gx.unipotent_profiles()
    ok = bool(profiles) and all(max(p) >= 3 for _, p in profiles)
    return ok, {"profiles": [[list(map(str, abc)), p] for abc, p in profiles]}


# -- Borcea and Sym^3 -----------------------------------------------------------------

R_, S_, T_ = Poly.var("r"), Poly.var("s"), Poly.var("t")

# nonzero entries (1-based) of N_{r,s,t}: twice the named parameter
N_ENTRIES = {
    (1, 2): "t", (1, 3): "s", (1, 5): "r",
    (2, 4): "s", (2, 6): "r",
    (3, 4): "t", (3, 7): "r",
    (4, 8): "r",
    (5, 6): "t", (5, 7): "s",
    (6, 8): "s",
    (7, 8): "t",
}


def n_expected() -> Mat:
    vals = {"r": R_, "s": S_, "t": T_}
    return Mat(8, 8, [vals[N_ENTRIES[(i, j)]] * 2 if (i, j) in N_ENTRIES else 0
                      for i in range(1, 9) for j in range(1, 9)])


@check("borcea.legendre", "the Legendre monodromy [[1,2],[0,1]] has log [[0,2],[0,0]]")
def _(cfg):
    A = bc.legendre_monodromy()
    L = unipotent_log(A)
    ok = L == Mat.from_rows([[0, 2], [0, 0]]) and nilpotent_exp(L) == A and det(A) == 1
    return ok, {"log": L}


@check("borcea.nilpotent", "N_{r,s,t} has entries 2r, 2s, 2t exactly at the twelve single-flip positions of the tensor basis")
def _(cfg):
    N = bc.borcea_nilpotent(R_, S_, T_)
    ok = N == n_expected() and bc.borcea_nilpotent(0, 0, 0).is_zero()
    L = unipotent_log(bc.legendre_monodromy())
    I2 = Mat.identity(2)
    logs = bc.factor_logs()
    ok = ok and logs == (kron(kron(L, I2), I2), kron(kron(I2, L), I2), kron(kron(I2, I2), L))
    return ok, {"N": N}


@check("borcea.max_unipotent", "N_{1,1,1} is maximally unipotent: N^3 != 0, N^4 = 0")
def _(cfg):
    N = bc.borcea_nilpotent(1, 1, 1)
    N3 = N @ N @ N
    ranks = rank_sequence(N)
    profile = nilpotent_profile(N)
    ok = (bc.max_unipotent_check(N) and not bc.max_unipotent_check(bc.borcea_nilpotent(1, 0, 0))
          and N3[0, 7] == 48 and ranks == [8, 5, 2, 1, 0] and profile == [4, 2, 2])
    T = nilpotent_exp(N)
    E = T - Mat.identity(8)
    ok = ok and not (E @ E @ E).is_zero()
    return ok, {"ranks": ranks, "profile": profile, "N3[1,8]": N3[0, 7]}


def sym3_expected(a, b, c, d) -> Mat:
    return Mat.from_rows([
        [a ** 3, 3 * a ** 2 * b, 3 * a * b ** 2, b ** 3],
        [a ** 2 * c, a ** 2 * d + 2 * a * b * c, 2 * a * b * d + b ** 2 * c, b ** 2 * d],
        [a * c ** 2, 2 * a * c * d + b * c ** 2, a * d ** 2 + 2 * b * c * d, b * d ** 2],
        [c ** 3, 3 * c ** 2 * d, 3 * c * d ** 2, d ** 3],
    ])


@check("sym3.matrix", "r(M) is the cubic matrix of M on the orbit-sum basis; r(I) = I")
def _(cfg):
    M = bc.symbolic_2x2()
    ok = bc.sym3_matrix(M) == sym3_expected(*M.entries)
    ok = ok and bc.sym3_matrix(Mat.identity(2)) == Mat.identity(4)
    got = bc.sym3_matrix(bc.legendre_monodromy())
    ok = ok and got == Mat.from_rows([[1, 6, 12, 8], [0, 1, 4, 4], [0, 0, 1, 2], [0, 0, 0, 1]])
    return ok, {"r([[1,2],[0,1]])": got}


@check("sym3.homomorphism", "r(AB) = r(A) r(B) as a polynomial identity")
def _(cfg):
    A, B = bc.symbolic_2x2("abcd"), bc.symbolic_2x2("efgh")
    sym = bc.sym3_hom_check(A, B)
    rng = cfg.rng("sl2")
    n = max(1, cfg.samples // 10)
    bad = sum(not bc.sym3_hom_check(smp.sl2_rational(rng), smp.sl2_rational(rng)) for _ in range(n))
    return sym and bad == 0, {"symbolic": sym, "samples": n, "failures": bad}


@check("sym3.identities", "det r(M) = det(M)^6 and the cube identities for m22, m23, m32, m33")
def _(cfg):
    out = bc.sym3_polynomial_identities()
    return out.ok, out.details


@check("sym3.restriction", "M (x) M (x) M preserves symmetric tensors and acts there by r(M)")
def _(cfg):
    rng = cfg.rng("restriction")
    n = max(100, cfg.samples // 10)
    bad = 0
    for _ in range(n):
        bad += not bc.sym3_restriction_check(smp.rational_matrix(rng, 2))
    sym = bc.sym3_restriction_check(bc.symbolic_2x2())
    perms = all(P @ bc.kron_cube(bc.symbolic_2x2()) == bc.kron_cube(bc.symbolic_2x2()) @ P
                for P in bc.factor_permutations())
    fixed = all(P @ v == v for P in bc.factor_permutations() for v in bc.sym_basis())
    return bad == 0 and sym and perms and fixed, {"samples": n, "failures": bad}


@check("sym3.transpose", "r(M^t) = D^-1 r(M)^t D with D = diag(1, 3, 3, 1)")
def _(cfg):
    return bc.sym3_transpose_relation(bc.symbolic_2x2()), {}


@check("sym3.rotation", "r maps the rotation (3/5, 4/5) to a determinant-one map preserving the induced form")
def _(cfg):
    d = bc.sym3_rotation_check(Fraction(3, 5), Fraction(4, 5))
    return all(d.values()), d


# -- running ---------------------------------------------------------------------------

def select(selector: str = "all") -> list[Check]:
    checks = sorted(REGISTRY, key=lambda c: c.id)
    if selector in ("all", "", None):
        return checks
    chosen = [c for c in checks if c.id.startswith(selector)]
    if not chosen:
        raise UnknownSelector(selector)
    return chosen


def run_checks(selector: str = "all", config: VerifyConfig | None = None) -> list[CheckResult]:
    config = config or VerifyConfig()
    results = []
    for c in select(selector):
        start = time.perf_counter()
        try:
            ok, details = c.fn(config)
            status = "pass" if ok else "fail"
            details = jsonable(details)
            if not ok and not details:
                details = {"note": "check returned false"}
        except Exception as exc:  # reported, not raised
            status, details = "error", {"exception": f"{type(exc).__name__}: {exc}"}
        elapsed = (time.perf_counter() - start) * 1000
        results.append(CheckResult(c.id, status, c.citation, details, round(elapsed, 3)))
    return results


def summarize(results) -> dict:
    out = {"pass": 0, "fail": 0, "error": 0}
    for r in results:
        out[r.status] += 1
    return out


def report(results, config: VerifyConfig) -> dict:
    return {
        "seed": config.seed,
        "samples": config.samples,
        "results": [r.to_json() for r in results],
        "summary": summarize(results),
    }
