import math
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from holotriples import quiver_oracle as qo
from holotriples.errors import InvalidCharge, SizeBound

Z_STD = qo.DimCharge.of(-1, 0, 0, 1)  # Z(n1, n2) = -n1 + i n2
IDENT = qo.QuiverRep.of(2, (1, 1), [[1]])
ZERO_MAP = qo.QuiverRep.of(2, (1, 1), [[0]])


def gaussian_binomial(n, k, p):
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("p,n", [(2, 1), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_subspace_counts(p, n):
    total = sum(gaussian_binomial(n, k, p) for k in range(n + 1))
    subs = qo.subspaces(p, n)
    assert len(subs) == len(set(subs)) == total


def test_subrep_examples():
    assert len(qo.subreps(qo.QuiverRep.of(2, (0, 0)))) == 1
    assert sorted(s.dims for s in qo.subreps(IDENT)) == [(0, 0), (0, 1), (1, 1)]
    assert len(qo.subreps(ZERO_MAP)) == 4


def test_rep_validation():
    with pytest.raises(SizeBound):
        qo.QuiverRep.of(5, (1, 1))
    with pytest.raises(SizeBound):
        qo.QuiverRep.of(2, (4, 3))
    with pytest.raises(ValueError):
        qo.QuiverRep.of(2, (2, 1), [[1]])


def test_charge_validation():
    with pytest.raises(InvalidCharge):
        qo.DimCharge.of(1, 0, 0, 1)
    with pytest.raises(InvalidCharge):
        qo.DimCharge.of(0, -1, 0, 1)


def test_hn_examples():
    hn = qo.hn_filtration(IDENT, Z_STD)
    assert [f.dims for f in hn] == [(1, 1)]
    assert hn[0].phase == pytest.approx(0.75)
    hn = qo.hn_filtration(ZERO_MAP, Z_STD)
    assert [(f.dims, f.phase) for f in hn] == [((1, 0), 1.0), ((0, 1), 0.5)]
    assert qo.is_semistable(qo.QuiverRep.of(2, (1, 0)), Z_STD)


def test_hn_phase_one_ties():
    # every factor at phase 1: the whole rep is semistable
    Z = qo.DimCharge.of(-1, 0, -2, 0)
    rep = qo.QuiverRep.of(2, (2, 1), [[1, 0]])
    assert [f.dims for f in qo.hn_filtration(rep, Z)] == [(2, 1)]


def test_hom_dims():
    S1 = qo.QuiverRep.of(2, (1, 0))
    S2 = qo.QuiverRep.of(2, (0, 1))
    assert qo.hom_dim(S2, IDENT) == 1
    assert qo.hom_dim(IDENT, S1) == 1
    assert qo.hom_dim(S1, IDENT) == 0
    assert qo.hom_dim(IDENT, IDENT) == 1
    assert qo.hom_dim(ZERO_MAP, ZERO_MAP) == 2


def test_hom_dim_matches_enumeration():
    reps = [r for a in range(3) for b in range(3 - a) for r in qo.all_reps(2, a, b)]
    for X in reps:
        for Y in reps:
            assert qo.hom_dim(X, Y) == qo.hom_dim_enumerate(X, Y)


def test_quotient_and_sub():
    s = next(s for s in qo.subreps(IDENT) if s.dims == (0, 1))
    assert qo.quotient_rep(IDENT, s).dims == (1, 0)
    assert qo.sub_as_rep(IDENT, s).dims == (0, 1)


def test_slope():
    assert qo.slope(Z_STD, (1, 1)) == 1
    assert qo.slope(Z_STD, (1, 0)) == math.inf


def test_truncation_extremes():
    reps = [r for a in range(3) for b in range(3 - a) if a + b for r in qo.all_reps(2, a, b)]
    top = qo.truncation_pair(reps, Z_STD, math.inf)
    assert top.torsion == [] and len(top.torsionfree) == len(reps) and top.ok
    low = qo.truncation_pair(reps, Z_STD, Q(-10 ** 6))
    assert len(low.torsion) == len(reps) and low.torsionfree == [] and low.ok


def test_truncation_alpha_zero():
    reps = [r for a in range(3) for b in range(3) if a + b for r in qo.all_reps(2, a, b)]
    report = qo.truncation_pair(reps, Z_STD, 0)
    assert report.ok
    assert report.to_json()["ok"]


def test_glued_heart_check():
    assert qo.glued_heart_check(0, 0)["valid"]
    assert qo.glued_heart_check(1, 0)["valid"]
    bad = qo.glued_heart_check(0, 1)
    assert not bad["valid"] and not bad["gluing_inequality"]
    with pytest.raises(SizeBound):
        qo.glued_heart_check(4, 0)


def test_canonical_rep_rank():
    assert qo.canonical_rep(2, 3, 2, 2).rank == 2


@st.composite
def rep_and_charge(draw):
    n1 = draw(st.integers(0, 3))
    n2 = draw(st.integers(0 if n1 else 1, 3))
    mat = [[draw(st.integers(0, 1)) for _ in range(n1)] for _ in range(n2)]
    q = st.fractions(-6, 6, max_denominator=4)
    qp = st.fractions(Q(1, 4), 6, max_denominator=4)
    Z = qo.DimCharge.of(draw(q), draw(qp), draw(q), draw(qp))
    return qo.QuiverRep.of(2, (n1, n2), mat), Z


@settings(max_examples=150)
@given(rep_and_charge())
def test_greedy_equals_exhaustive(rc):
    rep, Z = rc
    hn = qo.hn_filtration(rep, Z)
    assert qo.hn_exhaustive(rep, Z) == [hn]
    assert all(a.phase > b.phase for a, b in zip(hn, hn[1:]))
    assert not qo.seesaw_violations(rep, Z)
    if len(hn) == 1:
        assert qo.is_semistable(rep, Z)


@settings(max_examples=100)
@given(rep_and_charge(), st.fractions(-6, 6, max_denominator=3))
def test_torsion_decomposition(rc, alpha):
    rep, Z = rc
    s = qo.torsion_part(rep, Z, alpha)
    assert qo.in_torsion(qo.sub_as_rep(rep, s), Z, alpha)
    assert qo.in_torsionfree(qo.quotient_rep(rep, s), Z, alpha)
