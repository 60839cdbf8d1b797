"""Serre functor and duality at the level of classes and charges (genus 1).

With trivial canonical bundle the curve Serre functor is [1], and the Serre
functor of triples sends i(X) to j(X)[2], j(X) to l(X)[1] and l(X) to i(X)[1].
On classes, using [E[1]] = -[E], this is (a, b) -> (-b, a - b) where a, b are
the two halves of (r1, d1, r2, d2).
"""

from __future__ import annotations

import math
from typing import List

from .errors import GenusUnsupported, PhaseUndefined, ShapeViolation
from .gltilde import (
    Charge,
    LiftedElement,
    Mat2,
    charge_eval,
    inverse_lift,
    lift_with_f0,
    shift,
)
from .glue import GluedDescriptor, glued_charge
from .kclass import TripleClass, embed

SERRE_MATRIX = (
    (0, 0, -1, 0),
    (0, 0, 0, -1),
    (1, 0, -1, 0),
    (0, 1, 0, -1),
)


def _apply(mat, e) -> TripleClass:
    return TripleClass(*(sum(m * x for m, x in zip(row, e)) for row in mat))


def serre_class(e, genus: int = 1) -> TripleClass:
    if genus != 1:
        raise GenusUnsupported("the class-level Serre matrix is only fixed for genus 1")
    return _apply(SERRE_MATRIX, e)


def serre_power(e, k: int) -> TripleClass:
    k %= 3
    for _ in range(k):
        e = serre_class(e)
    return TripleClass(*e)


def serre_matrix_from_images() -> List[List[int]]:
    """Rebuild the matrix from the images of the embedded generators.

    i(x) -> j(x)[2] has class j(x); j(x) -> l(x)[1] has class -l(x).
    """
    cols = []
    for x in ((1, 0), (0, 1)):
        cols.append(embed("j", x))
    for x in ((1, 0), (0, 1)):
        cols.append(-embed("l", x))
    return [[cols[c][r] for c in range(4)] for r in range(4)]


def dual_class(e) -> TripleClass:
    r1, d1, r2, d2 = e
    return TripleClass(r2, -d2, r1, -d1)


def flip(M: Mat2) -> Mat2:
    """[[-A, B], [-D, C]] -> [[-A, -B], [D, C]]: conjugation by diag(1, -1)."""
    return Mat2(M.a, -M.b, -M.c, M.d)


def dual_curve_charge(M: Mat2, theta):
    """Dual curve data: signs of B and D flip, Coh^theta becomes Coh^{1-theta}[-1]."""
    return flip(M), 1 - theta, -1


def dual_lift(g: LiftedElement) -> LiftedElement:
    """Heart Coh^theta[n] dualises to Coh^{1-theta}[-1-n], so f(0) -> -f(0)."""
    return lift_with_f0(flip(g.T), -g.f0())


def dual_triple_descriptor(desc: GluedDescriptor) -> GluedDescriptor:
    """sigma* = gl12(sigma_2 dual, sigma_1 dual) for an upper triangular transition."""
    if desc.sod != 12:
        raise ShapeViolation("duality is implemented for the decomposition 12")
    trans = desc.Z1 @ desc.Z2.inv()
    if trans.c != 0:
        raise ShapeViolation("transition matrix Z1 Z2^-1 is not upper triangular")
    g1, g2 = desc.constituents()
    d1, d2 = dual_lift(g2), dual_lift(g1)
    return GluedDescriptor(12, d1.charge, d2.charge, d1.branch, d2.branch)


def dual_charge_identity(desc: GluedDescriptor, e) -> tuple:
    """Z*(e) against -conj(Z(D1 e)); the two should agree."""
    star = dual_triple_descriptor(desc)
    lhs = glued_charge(star, e)
    z = glued_charge(desc, dual_class(e))
    return lhs, Charge(-z.re, z.im)


# ---------------------------------------------------------------- Serre on glued data

# first and second factor of each decomposition, and where S sends each factor
_FACTORS = {12: (1, 2), 23: (2, 3), 31: (3, 1)}
_NEXT_SOD = {12: 23, 23: 31, 31: 12}
# S(i X) = j X[2], S(j X) = l X[1], S(l X) = i X[1]
_SHIFT_FROM = {1: 2, 2: 1, 3: 1}


def serre_descriptor(desc: GluedDescriptor) -> GluedDescriptor:
    """Push a glued descriptor forward along S; the charge becomes Z o S^-1."""
    g1, g2 = desc.constituents()
    a, b = _FACTORS[desc.sod]
    h1, h2 = shift(g1, _SHIFT_FROM[a]), shift(g2, _SHIFT_FROM[b])
    return GluedDescriptor(_NEXT_SOD[desc.sod], h1.charge, h2.charge, h1.branch, h2.branch)


def transported_rows(rows, k: int = 1):
    """Rows of Z o S^-k, the charge carried along k applications of S."""
    basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    pulled = [serre_power(b, -k) for b in basis]
    return tuple([sum(c * x for c, x in zip(row, v)) for v in pulled] for row in rows)


# ---------------------------------------------------------------- HN triangle of i(X)


def _lift_near(phase_mod2: float, centre: float) -> float:
    # representative of phase_mod2 + 2Z in (centre - 1/2, centre + 3/2]
    lo = centre - 0.5
    k = math.ceil((lo - phase_mod2) / 2.0)
    val = phase_mod2 + 2 * k
    if val <= lo:
        val += 2
    return val


def hn_triangle_i(x, phases_i_j, charge_of, tol: float = 1e-12):
    """Test the triangle l(X) -> i(X) -> j(X)[1] for the destabilising pattern.

    ``phases_i_j`` gives the phases of i(X) and j(X); ``charge_of`` maps a
    triple class to its charge. The phase of l(X) is the lift of its charge
    angle sitting just above the phase of i(X).
    """
    r, d = x
    l_cls = embed("l", x)
    j1_cls = TripleClass(0, 0, -r, -d)
    zl = charge_of(l_cls)
    if zl.re == 0 and zl.im == 0:
        raise PhaseUndefined("l(X) has zero charge")
    zj = charge_of(embed("j", x))
    if zj.re == 0 and zj.im == 0:
        raise PhaseUndefined("j(X) has zero charge")
    phi_i, phi_j = phases_i_j
    phi_l = _lift_near(zl.phase(), phi_i)
    gap = phi_l - (phi_j + 1)
    factors = [
        {"class": list(l_cls), "phase": phi_l},
        {"class": list(j1_cls), "phase": phi_j + 1},
    ]
    if gap > tol:
        status = "unstable"
    elif abs(gap) <= tol:
        status = "strictly_semistable"
    else:
        status = "semistable"
    return {"status": status, "phi_i": phi_i, "phi_j": phi_j, "phi_l": phi_l, "factors": factors}


def hn_triangle_glued(x, desc: GluedDescriptor):
    """hn_triangle_i for a 12-glued descriptor."""
    if desc.sod != 12:
        raise ShapeViolation("the i-triangle is read on the decomposition 12")
    g1, g2 = desc.constituents()
    psi = _mu_phase(x)
    phis = (inverse_lift(g1, psi), inverse_lift(g2, psi))
    return hn_triangle_i(x, phis, lambda e: glued_charge(desc, e))


def _mu_phase(x) -> float:
    """Phase of a curve class under the standard slope stability."""
    r, d = x
    if r == 0 and d > 0:
        return 1.0
    if r > 0:
        return math.atan2(r, -d) / math.pi
    raise PhaseUndefined("expected a skyscraper (0,1) or a line bundle class (1,d)")


def hn_triangle_gamma(x, p):
    """hn_triangle_i for tilted data: i reads sigma_1, j reads sigma_mu."""
    from .tiltgamma import constituent_1, zr_charge

    psi = _mu_phase(x)
    phis = (inverse_lift(constituent_1(p), psi), psi)
    return hn_triangle_i(x, phis, lambda e: zr_charge(p, e))
