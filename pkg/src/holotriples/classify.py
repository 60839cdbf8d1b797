"""The discriminant / eigenvalue trichotomy for normalised stability data.

After acting so that the C2 constituent is sigma_mu, the data are a charge
matrix ``M`` for C1 together with ``f0 = f_1(0)``. For ``f0 >= 0`` the data
are glued (Theta1). Otherwise the eigenvalues of ``M`` decide:

* complex pair                  -> Gamma
* both positive                 -> Theta1
* both in (-1, 0)               -> Theta2
* both below -1                 -> Theta3

All decisions use signs of rational quantities only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Union

import numpy as np

from .errors import BoundaryEigenvalue, InconsistentPhases, InvalidDeterminant
from .gltilde import (
    IDENTITY,
    LiftedElement,
    Mat2,
    RhoPoint,
    compose,
    eval_lift,
    invert,
    rho_inverse,
)
from .rational import as_fraction, fmt_q

TAGS = ("Theta1", "Theta2", "Theta3", "Gamma")


@dataclass(frozen=True)
class ConditionStarData:
    M: Mat2
    f0: object


@dataclass
class Verdict:
    tag: str
    delta: Fraction
    trace: Fraction
    det: Fraction
    detMplusI: Fraction
    certificates: List[str] = field(default_factory=list)

    def to_json(self):
        return {
            "tag": self.tag,
            "delta": fmt_q(self.delta),
            "trace": fmt_q(self.trace),
            "det": fmt_q(self.det),
            "detMplusI": fmt_q(self.detMplusI),
        }


def invariants(M: Mat2):
    tr = M.trace()
    det = M.det()
    return tr * tr - 4 * det, tr, det, det + tr + 1


def trichotomy(data: Union[ConditionStarData, tuple]) -> Verdict:
    if not isinstance(data, ConditionStarData):
        data = ConditionStarData(*data)
    M = data.M
    delta, tr, det, dmi = invariants(M)
    if det <= 0:
        raise InvalidDeterminant(f"det(M) ≤ 0 (det(M) = {fmt_q(det)})")
    certs = [f"det(M) = {fmt_q(det)} > 0"]
    if data.f0 >= 0:
        certs.append("f0 >= 0: glued")
        return Verdict("Theta1", delta, tr, det, dmi, certs)
    if dmi == 0:
        raise BoundaryEigenvalue("det(M+I) = 0: eigenvalue -1")
    if dmi < 0:
        raise InvalidDeterminant(f"det(M+I) = {fmt_q(dmi)} < 0 with f0 < 0")
    certs.append(f"det(M+I) = {fmt_q(dmi)} > 0")
    if delta < 0:
        certs.append(f"delta = {fmt_q(delta)} < 0")
        return Verdict("Gamma", delta, tr, det, dmi, certs)
    certs.append(f"delta = {fmt_q(delta)} >= 0")
    if tr > 0:
        certs.append(f"trace = {fmt_q(tr)} > 0")
        return Verdict("Theta1", delta, tr, det, dmi, certs)
    # tr = 0 is impossible here: det > 0 would force delta < 0
    if tr + 2 < 0:
        certs.append(f"trace + 2 = {fmt_q(tr + 2)} < 0")
        return Verdict("Theta3", delta, tr, det, dmi, certs)
    certs.append(f"-2 <= trace = {fmt_q(tr)} < 0")
    return Verdict("Theta2", delta, tr, det, dmi, certs)


def float_verdict(M, tol: float = 1e-9) -> str:
    """Independent classification from numerical eigenvalues.

    A repeated eigenvalue comes back from LAPACK split by about sqrt(eps), so
    the tolerance is applied to (lam1 - lam2)^2 rather than to imaginary parts.
    """
    arr = np.array([[float(M.a), float(M.b)], [float(M.c), float(M.d)]])
    l1, l2 = np.linalg.eigvals(arr)
    if ((l1 - l2) ** 2).real < -tol:
        return "Gamma"
    lo, hi = sorted((l1.real, l2.real))
    if lo > 0:
        return "Theta1"
    if hi < -1:
        return "Theta3"
    if lo > -1:
        return "Theta2"
    return "straddles -1"


def data_from_lift(g: LiftedElement) -> ConditionStarData:
    """Normalised data whose f0 is consistent with the charge M = T^-1."""
    return ConditionStarData(g.charge, g.f0())


def normalize(rho_i: RhoPoint, rho_j: RhoPoint) -> ConditionStarData:
    """Act so the j-data become (Z_mu, Coh(C)); return the transported i-data."""
    if not rho_i.phi0 < rho_j.phi0 + 1:
        raise InconsistentPhases("phi0 < phi2 + 1 fails")
    if not rho_i.phi1 < rho_j.phi1 + 1:
        raise InconsistentPhases("phi1 < phi3 + 1 fails")
    gi, gj = rho_inverse(rho_i), rho_inverse(rho_j)
    h = compose(gi, invert(gj))
    return ConditionStarData(h.charge, eval_lift(h, 0.0))


# ---------------------------------------------------------------- fixed points


def _positive_eigen_angles(T: Mat2) -> List[float]:
    """Angles t in [0, 1) of eigenvector rays for positive real eigenvalues."""
    # the discriminant sign is decided before rounding: float noise would
    # drop repeated eigenvalues
    disc = T.trace() ** 2 - 4 * T.det()
    if disc < 0:
        return []
    a, b, c, d = (float(v) for v in (T.a, T.b, T.c, T.d))
    tr = a + d
    root = math.sqrt(float(disc))
    out = []
    for lam in {(tr + root) / 2, (tr - root) / 2}:
        if lam <= 0:
            continue
        # (T - lam) v = 0: use the row with the larger entries for stability
        r1 = (a - lam, b)
        r2 = (c, d - lam)
        row = r1 if abs(r1[0]) + abs(r1[1]) >= abs(r2[0]) + abs(r2[1]) else r2
        vx, vy = -row[1], row[0]
        if vx == 0 and vy == 0:
            continue
        t = math.atan2(vy, vx) / math.pi % 1.0
        out.append(t)
    return sorted(out)


def fixed_point(g: LiftedElement):
    """A t in [0, 1) with f(t) = t, ``"all"`` for f = id, or ``None``."""
    T = g.T
    if T.b == 0 and T.c == 0 and T.a == T.d:
        if T.a > 0 and g.branch == 0:
            return "all"
        return None
    for t in _positive_eigen_angles(T):
        # on an eigen-ray f(t) - t is an even integer
        if abs(eval_lift(g, t) - t) < 0.5:
            return t
    return None


# ---------------------------------------------------------------- Serre transport


def serre_transport(desc):
    """Carry a glued descriptor along S: Theta12 -> Theta23 -> Theta31 -> Theta12."""
    from .serre_dual import serre_descriptor

    return serre_descriptor(desc)
