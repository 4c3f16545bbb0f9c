from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyhodge import hodge_frame as hf
from cyhodge.errors import DegenerateForm, NotUnitNorm, ShapeMismatch
from cyhodge.matrices import Mat
from cyhodge.rings import I, Gauss

from strategies import gauss, unit_params

FRAMES = [hf.HodgeFrame(o) for o in (hf.CANONICAL, hf.WEIL_ORDER, hf.PAIRED_ORDER)]
KINDS = ("hX", "hW", "hG")


def test_q_in_weil_order():
    assert hf.q_matrix(hf.WEIL_ORDER) == Mat.from_rows(
        [[0, 0, 0, -I], [0, 0, -I, 0], [0, I, 0, 0], [I, 0, 0, 0]])


def test_q_in_canonical_order():
    q = hf.q_matrix()
    assert (q[0, 3], q[1, 2], q[2, 1], q[3, 0]) == (-I, I, -I, I)
    assert sum(1 for e in q.entries if e) == 4


@pytest.mark.parametrize("a", FRAMES)
@pytest.mark.parametrize("b", FRAMES)
def test_q_transforms_under_reordering(a, b):
    P = a.permutation_to(b)
    assert P.T @ b.q @ P == a.q
    assert P @ b.permutation_to(a) == Mat.identity(4)


@pytest.mark.parametrize("frame", FRAMES)
def test_normalisation_in_every_ordering(frame):
    v = {l: Mat.column([1 if x == l else 0 for x in frame.ordering]) for l in hf.LABELS}

    def Q(u, w):
        return (u.T @ frame.q @ w)[0, 0]

    assert Q(v["v30"] * I, v["v03"]) == 1
    assert Q(v["v21"] * -I, v["v12"]) == 1
    assert frame.q.T == -frame.q


@pytest.mark.parametrize("kind", KINDS)
@given(t=unit_params)
def test_circle_actions_are_real_symplectic(kind, t):
    z = hf.unit_circle_point(t)
    for frame in FRAMES:
        M = hf.circle_action(kind, z, frame)
        assert hf.in_sp(M, frame)
        assert hf.is_real(M, frame)


@given(unit_params, unit_params)
def test_circle_actions_are_homomorphisms(s, t):
    z, w = hf.unit_circle_point(s), hf.unit_circle_point(t)
    for kind in KINDS:
        assert hf.circle_action(kind, z * w) == hf.circle_action(kind, z) @ hf.circle_action(kind, w)


@given(unit_params)
def test_hodge_circle_is_griffiths_squared_times_weil(t):
    z = hf.unit_circle_point(t)
    hG = hf.circle_action("hG", z)
    assert hG @ hG @ hf.circle_action("hW", z) == hf.circle_action("hX", z)


def test_circle_action_examples():
    assert hf.circle_action("hX", I) == Mat.diag(-I, I, -I, I)
    assert hf.circle_action("hW", I) == Mat.diag(I, -I, I, -I)
    assert hf.circle_action("hX", -1) == -Mat.identity(4)
    with pytest.raises(NotUnitNorm):
        hf.circle_action("hW", 2)
    with pytest.raises(ValueError):
        hf.circle_action("hZ", 1)


@pytest.mark.parametrize("kind", KINDS)
def test_generators_are_in_sp_algebra(kind):
    assert hf.in_sp(hf.circle_generator(kind), level="algebra")
    assert hf.in_sp(Mat.diag(3 * I, I, -I, -3 * I), level="algebra")


def test_is_real_examples():
    assert hf.is_real(Mat.diag(I, I, -I, -I))
    assert not hf.is_real(Mat.diag(I, I, I, I))


@given(gauss, gauss, gauss, gauss, gauss, gauss, gauss, gauss)
def test_generic_real_pattern(v0, v1, v2, v3, w0, w1, w2, w3):
    # columns v, w, reversed conj w, reversed conj v
    v, w = (v0, v1, v2, v3), (w0, w1, w2, w3)
    cols = [v, w, tuple(x.conj() for x in reversed(w)), tuple(x.conj() for x in reversed(v))]
    M = Mat(4, 4, [cols[j][i] for i in range(4) for j in range(4)])
    assert hf.is_real(M)


def test_in_sp_examples():
    assert hf.in_sp(Mat.identity(4))
    W = hf.HodgeFrame(hf.WEIL_ORDER)
    assert not hf.in_sp(hf.weil_commutant(1, 1), W)
    assert hf.in_sp(hf.weil_commutant(0, I), W)
    with pytest.raises(ValueError):
        hf.in_sp(Mat.identity(4), level="nope")
    with pytest.raises(ShapeMismatch):
        hf.in_sp(Mat.identity(3))


@given(gauss, gauss)
def test_weil_commutant_condition(y, z):
    W = hf.HodgeFrame(hf.WEIL_ORDER)
    assert hf.in_sp(hf.weil_commutant(y, z), W) == (not y and z.normsq() == 1)


def test_hermitian_signatures():
    F = hf.CANONICAL_FRAME
    assert hf.hermitian_signature(F, ["v30", "v21"]) == (1, 1)
    assert hf.hermitian_signature(F, ["v30", "v12"]) in ((2, 0), (0, 2))
    assert hf.hermitian_signature(F, ["v30"]) in ((1, 0), (0, 1))
    with pytest.raises(DegenerateForm):
        hf.hermitian_signature(F, [Mat.column([1, 0, 0, 0]), Mat.column([2, 0, 0, 0])])


@given(st.lists(gauss.filter(bool), min_size=2, max_size=2))
def test_hermitian_signature_ignores_scaling(scales):
    for frame in FRAMES:
        assert hf.hermitian_signature(frame, ["v30", "v21"], scales) == (1, 1)


def test_positive_form():
    assert hf.positive_form_check(hf.circle_action("hW", I))
    assert hf.positive_form_gram(hf.circle_action("hW", I)) == Mat.diag(2, 2, 2, 2)
    assert not hf.positive_form_check(hf.circle_action("hG", I))
    assert not hf.positive_form_check(-hf.circle_action("hW", I))


def test_complex_structures():
    assert hf.complex_structure_check(hf.circle_action("hG", I))
    assert not hf.complex_structure_check(Mat.diag(1, I, -I, 1))
    assert not hf.complex_structure_check(Mat.identity(4))


def test_chart():
    W = hf.chart_form()
    assert W == Mat.from_rows([[0, -2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]])
    M = hf.circle_action("hW", Gauss(Fraction(3, 5), Fraction(4, 5)))
    coords = hf.chart(M)
    assert all(isinstance(c, Fraction) for c in coords)
    assert hf.from_chart(coords) == M
