import math
from fractions import Fraction as Q

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from holotriples.errors import InvalidRegion, NonPositiveDeterminant
from holotriples.gltilde import (
    IDENTITY,
    IDENTITY_LIFT,
    LiftedElement,
    Mat2,
    RhoPoint,
    charge_abcd,
    charge_eval,
    charge_from_abcd,
    compose,
    eval_lift,
    eval_lift_array,
    heart_descriptor,
    inverse_lift,
    invert,
    iwasawa,
    lift_with_f0,
    recompose,
    rho,
    rho_inverse,
    rotation,
    shift,
    unipotent,
)

N1 = Mat2.exact([[1, 1], [0, 1]])
reals = st.floats(-3, 3, allow_nan=False)


@st.composite
def lifts(draw):
    # det > 0 by construction: d solves a d - b c = det
    a = draw(st.floats(0.1, 3)) * draw(st.sampled_from([-1, 1]))
    b, c = draw(reals), draw(reals)
    det = draw(st.floats(0.05, 5))
    return lift_with_f0(Mat2(a, b, c, (det + b * c) / a), draw(st.floats(-3, 3)))


def test_iwasawa_examples():
    assert iwasawa(IDENTITY) == pytest.approx((1, 0, 1, 0))
    assert iwasawa(Mat2.exact([[0, -1], [1, 0]])) == pytest.approx((1, math.pi / 2, 1, 0))
    assert iwasawa(Mat2.exact([[2, 1], [0, Q(1, 2)]])) == pytest.approx((1, 0, 2, 0.5))


def test_iwasawa_rejects_negative_det():
    with pytest.raises(NonPositiveDeterminant):
        iwasawa(Mat2.exact([[1, 0], [0, -1]]))


def test_eval_lift_examples():
    assert eval_lift(IDENTITY_LIFT, 0.3) == pytest.approx(0.3)
    assert eval_lift(LiftedElement(IDENTITY, 1), 0.3) == pytest.approx(2.3)
    assert eval_lift(LiftedElement(N1, 0), 0.75) == pytest.approx(0.5)


def test_compose_invert_examples():
    assert compose(IDENTITY_LIFT, IDENTITY_LIFT) == IDENTITY_LIFT
    assert invert(LiftedElement(IDENTITY, 1)) == LiftedElement(IDENTITY, -1)
    k = lift_with_f0(rotation(math.pi / 2), 0.5)
    kk = compose(k, k)
    assert kk.f0() == pytest.approx(1.0)
    assert np.allclose([kk.T.a, kk.T.b, kk.T.c, kk.T.d], [-1, 0, 0, -1])


def test_charge_eval_examples():
    assert complex(charge_eval(IDENTITY, (0, 1))) == -1
    assert complex(charge_eval(IDENTITY, (1, 0))) == 1j
    assert complex(charge_eval(Mat2.exact([[1, -1], [0, 1]]), (1, 0))) == -1 + 1j


def test_charge_abcd_round_trip():
    M = charge_from_abcd(Q(1), Q(2), Q(3), Q(4))
    assert charge_abcd(M) == (1, 2, 3, 4)
    # Z(d, r) = A d + B r + i(C r + D d)
    z = charge_eval(M, (5, 7))
    assert (z.re, z.im) == (1 * 7 + 2 * 5, 3 * 5 + 4 * 7)


def test_rho_examples():
    assert rho(IDENTITY_LIFT) == pytest.approx((1, 1, 1, 0.5))
    # f(t) = t + 1 lowers every phase by one; f(t) = t - 1 raises it
    assert rho(lift_with_f0(-IDENTITY, 1.0)) == pytest.approx((1, 1, 0, -0.5))
    assert rho(lift_with_f0(-IDENTITY, -1.0)) == pytest.approx((1, 1, 2, 1.5))
    p = RhoPoint(2, 3, 1.2, 0.7)
    assert rho(rho_inverse(p)) == pytest.approx(p, abs=1e-9)


def test_rho_inverse_checks_invariants():
    with pytest.raises(InvalidRegion):
        rho_inverse(RhoPoint(1, 1, 0.2, 0.5))
    with pytest.raises(InvalidRegion):
        rho_inverse(RhoPoint(0, 1, 1, 0.5))


def test_heart_descriptor_examples():
    assert heart_descriptor(IDENTITY_LIFT) == (0, 0)
    assert heart_descriptor(LiftedElement(IDENTITY, 1)) == (2, 0)
    n, theta = heart_descriptor(lift_with_f0(rotation(math.pi / 4), 0.25))
    assert n == 0 and theta == pytest.approx(0.25)


def test_unipotent_is_exact():
    assert unipotent(Q(1, 3)) == Mat2.exact([[1, Q(1, 3)], [0, 1]])


@settings(max_examples=60)
@given(lifts())
def test_lift_is_increasing_and_periodic(g):
    xs = np.arange(0.0, 2.0, 1e-3)
    f = eval_lift_array(g, xs)
    assert np.all(np.diff(f) > 0)
    assert np.allclose(eval_lift_array(g, xs + 1), f + 1, atol=1e-10)


@settings(max_examples=60)
@given(lifts(), lifts())
def test_composition_law(g, h):
    gh = compose(g, h)
    for x in np.linspace(-2, 2, 9):
        assert eval_lift(gh, x) == pytest.approx(eval_lift(g, eval_lift(h, x)), abs=1e-10)


@settings(max_examples=60)
@given(lifts(), st.floats(-3, 3))
def test_inverse_lift(g, y):
    assert eval_lift(g, inverse_lift(g, y)) == pytest.approx(y, abs=1e-10)
    gi = invert(g)
    assert eval_lift(gi, eval_lift(g, 0.3)) == pytest.approx(0.3, abs=1e-10)


@settings(max_examples=60)
@given(lifts(), st.integers(-3, 3))
def test_shift_adds_n(g, n):
    assert eval_lift(shift(g, n), 0.4) == pytest.approx(eval_lift(g, 0.4) + n, abs=1e-12)


@settings(max_examples=60)
@given(lifts())
def test_iwasawa_recomposes(g):
    w = iwasawa(g.T)
    R = recompose(w)
    assert np.allclose([R.a, R.b, R.c, R.d], [g.T.a, g.T.b, g.T.c, g.T.d], atol=1e-12)
    assert g.f0() == pytest.approx(2 * g.branch + w.phi / math.pi)


@settings(max_examples=60)
@given(lifts())
def test_rho_round_trip(g):
    p = rho(g)
    assert p.m0 > 0 and p.m1 > 0 and p.phi1 < p.phi0 < p.phi1 + 1
    back = rho_inverse(p)
    # the branch integer jumps at angle 0, f(0) does not
    assert back.f0() == pytest.approx(g.f0(), abs=1e-9)
    assert np.allclose([back.T.a, back.T.b, back.T.c, back.T.d],
                       [g.T.a, g.T.b, g.T.c, g.T.d], atol=1e-9)


@given(*(st.fractions(-5, 5, max_denominator=6) for _ in range(4)),
       st.integers(-9, 9), st.integers(-9, 9))
def test_charge_eval_matches_matrix(a, b, c, d, r, deg):
    M = Mat2(a, b, c, d)
    z = charge_eval(M, (r, deg))
    assert (z.re, z.im) == (a * -deg + b * r, c * -deg + d * r)
