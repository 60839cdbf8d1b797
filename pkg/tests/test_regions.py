import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from holotriples.classify import ConditionStarData
from holotriples.errors import DegenerateOnPath
from holotriples.gltilde import IDENTITY, IDENTITY_LIFT, LiftedElement, Mat2, RhoPoint, lift_with_f0, rho, rotation
from holotriples.regions import (
    TAGS,
    PhaseProfile,
    audit,
    delta,
    in_L12,
    in_P12,
    in_Y,
    trace_path,
)

STABLE = dict.fromkeys(TAGS, True)
STD = RhoPoint(1, 1, 1, 0.5)


def rules(violations):
    return {v.rule for v in violations}


def test_audit_examples():
    assert audit(PhaseProfile.of([1.6, 0.9, 1, 0.5, 1.3, 0.7], STABLE)) == []
    out = audit(PhaseProfile.of([1.6, 0.9, 1, 0.5, 1.5, 0.7], {"i_x": False}))
    assert rules(out) == {"phi4 > phi2+1"}
    assert audit(PhaseProfile.of()) == []


def test_audit_cyclic_chain():
    # phi2 < phi4 < phi0 < phi2 + 1 is fine, phi0 <= phi2 with all stable is not
    out = audit(PhaseProfile.of([0.9, 0.4, 1, 0.5, 1.3, 0.7], STABLE))
    assert "phi4 < phi0" in rules(out)


def test_audit_two_embeddings():
    flags = dict(STABLE, i_x=False, j_o=False)
    out = audit(PhaseProfile.of([1.6, 0.9, 1, 0.5, 1.3, 0.7], flags))
    assert "two stable embeddings" in rules(out)


@settings(max_examples=100)
@given(st.lists(st.floats(-2, 3), min_size=6, max_size=6),
       st.fixed_dictionaries({t: st.sampled_from([None, True, False]) for t in TAGS}),
       st.sampled_from(TAGS))
def test_audit_monotone_in_stable_flags(phis, flags, extra):
    if flags[extra] is not None:
        return
    before = rules(audit(PhaseProfile.of(phis, flags)))
    after = rules(audit(PhaseProfile.of(phis, dict(flags, **{extra: True}))))
    assert before - {"two stable embeddings"} <= after


def test_in_P12_examples():
    assert in_P12(STD, STD, IDENTITY, IDENTITY)
    above = RhoPoint(1, 1, 1.2, 0.5)
    assert not in_P12(above, STD, IDENTITY, -IDENTITY)
    assert in_P12(above, STD, IDENTITY, IDENTITY)
    assert not in_P12(RhoPoint(1, 1, 2.2, 1.6), STD, IDENTITY, IDENTITY)


def test_in_L12_examples():
    assert in_L12(IDENTITY_LIFT)
    assert not in_L12(lift_with_f0(-IDENTITY, -1.0))
    assert not in_L12(lift_with_f0(rotation(0.6 * math.pi), -0.6))


def test_delta_value():
    assert delta(RhoPoint(1, 1, 1.25, 0.75)) == pytest.approx(1 + math.sqrt(2), abs=1e-8)


def test_in_Y_basic():
    assert in_Y(STD)
    assert not in_Y(RhoPoint(1, 1, 2, 1.5))
    assert not in_Y(RhoPoint(1, 1, 1.5, 1.5))


@settings(max_examples=200)
@given(st.floats(0.2, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 3), st.floats(-1.5, 2.0))
def test_Y_matches_L12(a, b, c, det, f0):
    g = lift_with_f0(Mat2(a, b, c, (det + b * c) / a), f0)
    p = rho(g)
    edges = [g.f0() + 1, g.f0(), p.phi1 - 1.5, p.phi0 - 1, delta(p) + 1,
             float((g.charge + IDENTITY).det())]
    if min(abs(x) for x in edges) < 1e-7:
        return
    assert in_Y(p) == in_L12(g)


def test_trace_constant_path():
    M = Mat2.exact([[1, 0], [0, 2]])
    assert trace_path(ConditionStarData(M, -0.5), M) == []


def test_trace_theta1_to_gamma():
    events = trace_path(ConditionStarData(Mat2.exact([[1, 0], [0, 2]]), -0.5),
                        Mat2.exact([[0, -1], [1, 0]]))
    disc = [e for e in events if e.wall == "delta=0"]
    assert len(disc) == 1
    assert disc[0].t == pytest.approx(1 / 3, abs=1e-8)
    assert (disc[0].left, disc[0].right) == ("Theta1", "Gamma")
    assert disc[0].to_json()["wall"] == "delta=0"


def test_trace_skyscraper_wall():
    start = ConditionStarData(rotation(0.9 * math.pi), -0.9)
    events = trace_path(start, rotation(1.1 * math.pi), samples=40)
    walls = {e.wall: e.t for e in events}
    assert walls["phi0=phi2+1"] == pytest.approx(0.5, abs=1e-8)


def test_trace_degenerate():
    with pytest.raises(DegenerateOnPath):
        trace_path(ConditionStarData(IDENTITY, 0.0), -IDENTITY)
