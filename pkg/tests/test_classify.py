import math
import random
from fractions import Fraction as Q

import numpy as np
import pytest
from hypothesis import given, strategies as st

from holotriples.classify import (
    ConditionStarData,
    data_from_lift,
    fixed_point,
    float_verdict,
    normalize,
    serre_transport,
    trichotomy,
)
from holotriples.errors import BoundaryEigenvalue, InconsistentPhases, InvalidDeterminant
from holotriples.gltilde import (
    IDENTITY,
    IDENTITY_LIFT,
    LiftedElement,
    Mat2,
    RhoPoint,
    eval_lift,
    lift_from_charge,
    lift_with_f0,
    rotation,
)
from holotriples.glue import GluedDescriptor, glued_charge


def verdict(rows, f0=-0.5):
    return trichotomy(ConditionStarData(Mat2.exact(rows), f0))


def test_trichotomy_examples():
    assert verdict([[1, 0], [0, 2]]).tag == "Theta1"
    assert verdict([[Q(-1, 2), 0], [0, Q(-1, 2)]]).tag == "Theta2"
    assert verdict([[-2, 0], [0, -3]]).tag == "Theta3"
    v = verdict([[0, -1], [1, 0]])
    assert v.tag == "Gamma"
    assert v.to_json() == {"tag": "Gamma", "delta": "-4/1", "trace": "0/1",
                           "det": "1/1", "detMplusI": "2/1"}


def test_glued_when_f0_nonnegative():
    assert verdict([[0, -1], [1, 0]], f0=0).tag == "Theta1"


def test_trichotomy_errors():
    with pytest.raises(InvalidDeterminant, match="det\\(M\\) ≤ 0"):
        verdict([[1, 0], [0, -1]])
    with pytest.raises(BoundaryEigenvalue):
        verdict([[-1, 0], [0, -3]])
    # eigenvalues -1/2 and -3 straddle -1
    with pytest.raises(InvalidDeterminant):
        verdict([[Q(-1, 2), 0], [0, -3]])


def test_repeated_eigenvalue_is_real():
    assert verdict([[Q(1, 4), 2], [Q(-1, 8), Q(5, 4)]]).tag == "Theta1"
    assert float_verdict(Mat2.exact([[Q(1, 4), 2], [Q(-1, 8), Q(5, 4)]])) == "Theta1"


def test_certificates_record_signs():
    certs = verdict([[-2, 0], [0, -3]]).certificates
    assert any("trace + 2" in c for c in certs)


def test_fixed_point_examples():
    assert fixed_point(LiftedElement(Mat2.exact([[2, 0], [0, Q(1, 2)]]), 0)) == 0
    assert fixed_point(IDENTITY_LIFT) == "all"
    assert fixed_point(lift_with_f0(rotation(math.pi / 4), 0.25)) is None
    assert fixed_point(LiftedElement(IDENTITY, 1)) is None


def test_normalize_examples():
    std = RhoPoint(1, 1, 1, 0.5)
    out = normalize(std, std)
    assert np.allclose([out.M.a, out.M.b, out.M.c, out.M.d], [1, 0, 0, 1])
    assert out.f0 == pytest.approx(0)
    # i-phases a quarter above the j-phases need f(t) = t - 1/4 near 0
    assert normalize(RhoPoint(1, 1, 1.25, 0.75), std).f0 == pytest.approx(-0.25)
    assert normalize(RhoPoint(1, 1, 0.75, 0.25), std).f0 == pytest.approx(0.25)
    with pytest.raises(InconsistentPhases):
        normalize(RhoPoint(1, 1, 2.5, 2), std)


def test_serre_transport_cycle():
    d = GluedDescriptor(12, IDENTITY, IDENTITY)
    s1 = serre_transport(d)
    assert s1.sod == 23
    s3 = serre_transport(serre_transport(s1))
    assert s3.sod == 12
    for e in [(1, 0, 0, 0), (0, 1, 0, 0), (2, -3, 1, 5)]:
        assert glued_charge(s3, e) == glued_charge(d, e)


@given(*(st.fractions(-6, 6, max_denominator=4) for _ in range(4)))
def test_exact_agrees_with_eigenvalues(a, b, c, d):
    M = Mat2(a, b, c, d)
    if M.det() <= 0 or (M + IDENTITY).det() == 0:
        return
    try:
        tag = trichotomy(ConditionStarData(M, -0.5)).tag
    except InvalidDeterminant:
        tag = "straddles -1"
    assert tag == float_verdict(M)


@given(*(st.fractions(-6, 6, max_denominator=4) for _ in range(4)))
def test_fixed_point_iff_theta1(a, b, c, d):
    M = Mat2(a, b, c, d)
    if M.det() <= 0 or (M + IDENTITY).det() <= 0:
        return
    g = lift_from_charge(M, -0.5)
    if not -1 < g.f0() < 0:
        return
    t = fixed_point(g)
    assert (t is not None) == (trichotomy(data_from_lift(g)).tag == "Theta1")
    if t is not None:
        assert eval_lift(g, t) == pytest.approx(t, abs=1e-9)
