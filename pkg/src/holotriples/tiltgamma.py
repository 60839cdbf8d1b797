"""Stability data that do not come from gluing: the tilted charges Z_r.

Parameters ``A1, B1, C1, D1`` describe the constituent on C1 through
``M = [[-A1, B1], [-D1, C1]]``. The weak charge forgets the degree on C2;
its phase ``lambda`` is cut at 3/4 to define a torsion pair, and the tilt
carries the charge ``Z_r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegeneratePhase, InvalidGammaParams
from .gltilde import IDENTITY, Charge, LiftedElement, Mat2, inverse_lift, lift_with_f0
from .rational import as_fraction, fmt_q

THRESHOLD = Fraction(3, 4)


@dataclass(frozen=True)
class GammaParams:
    A1: Fraction
    B1: Fraction
    C1: Fraction
    D1: Fraction

    @classmethod
    def of(cls, A1, B1, C1, D1) -> "GammaParams":
        return cls(*(as_fraction(v) for v in (A1, B1, C1, D1)))

    @classmethod
    def from_matrix(cls, M: Mat2) -> "GammaParams":
        return cls.of(-M.a, M.b, M.d, -M.c)

    @property
    def M(self) -> Mat2:
        return Mat2(-self.A1, self.B1, -self.D1, self.C1)

    def violations(self):
        out = []
        M = self.M
        if not self.D1 < 0:
            out.append("D1 < 0")
        if not M.det() > 0:
            out.append("det(M) > 0")
        if not (M + IDENTITY).det() > 0:
            out.append("det(M+I) > 0")
        return out

    def validate(self) -> "GammaParams":
        bad = self.violations()
        if bad:
            raise InvalidGammaParams("violated: " + ", ".join(bad))
        return self

    def to_json(self):
        return {k: fmt_q(getattr(self, k)) for k in ("A1", "B1", "C1", "D1")}


def weak_charge(p: GammaParams, e) -> Charge:
    r1, d1, r2, d2 = e
    return Charge(p.D1 * d1 + (p.C1 - 1) * r1, r1 + r2)


def zr_charge(p: GammaParams, e) -> Charge:
    p.validate()
    r1, d1, r2, d2 = e
    return Charge(p.A1 * d1 + p.B1 * r1 - d2, p.D1 * d1 + p.C1 * r1 + r2)


def zr_rows(p: GammaParams):
    p.validate()
    return [p.B1, p.A1, Fraction(0), Fraction(-1)], [p.C1, p.D1, Fraction(1), Fraction(0)]


def heart_index_r(p: GammaParams) -> float:
    """arg(C1 + D1 i)/pi on the branch (-1, 0]."""
    return math.atan2(float(p.D1), float(p.C1)) / math.pi


def r3(p: GammaParams) -> float:
    """acot((C1 + 1)/D1)/pi on the branch (-pi, 0) of acot."""
    x = (p.C1 + 1) / p.D1
    return math.atan2(-1.0, -float(x)) / math.pi


def weak_phase(p: GammaParams, e) -> float:
    w = weak_charge(p, e)
    if w.re == 0 and w.im == 0:
        raise DegeneratePhase("weak charge vanishes")
    return math.atan2(float(w.im), float(w.re)) / math.pi


def lambda_gt_threshold(p: GammaParams, e) -> bool:
    r1, d1, r2, d2 = e
    if r1 + r2 <= 0:
        w = weak_charge(p, e)
        if w.re != 0 or w.im != 0:
            raise DegeneratePhase("r1 + r2 <= 0 on a class with nonzero weak charge")
        return False
    return -p.D1 * d1 - p.C1 * r1 - r2 > 0


# ---------------------------------------------------------------- phases

DISTINGUISHED = {
    "i_x": (0, 1, 0, 0),
    "i_o": (1, 0, 0, 0),
    "j_x": (0, 0, 0, 1),
    "j_o": (0, 0, 1, 0),
    "l_x": (0, 1, 0, 1),
    "l_o": (1, 0, 1, 0),
}


def constituent_1(p: GammaParams) -> LiftedElement:
    """sigma_1 = (M^-1, f) with f(0) = r."""
    return lift_with_f0(p.M.inv(), heart_index_r(p))


def constituent_3(p: GammaParams) -> LiftedElement:
    """sigma_3 = ((M+I)^-1, f_3) with f_3(0) = r_3."""
    return lift_with_f0((p.M + IDENTITY).inv(), r3(p))


def distinguished_phases(p: GammaParams):
    """Phases phi0..phi5 of i, j, l applied to a skyscraper and to O_C.

    The C2 constituent is sigma_mu, so j gives phases 1 and 1/2. The i and l
    objects read their phases from sigma_1 and sigma_3, whose hearts sit in
    (-1, 0]; this places i(C(x)) and l(C(x)) in the heart after a [-1] shift.
    """
    p.validate()
    g1, g3 = constituent_1(p), constituent_3(p)
    phi = {
        "phi0": inverse_lift(g1, 1.0),
        "phi1": inverse_lift(g1, 0.5),
        "phi2": 1.0,
        "phi3": 0.5,
        "phi4": inverse_lift(g3, 1.0),
        "phi5": inverse_lift(g3, 0.5),
    }
    # E[s] lies in the heart when its phase is in (-s, 1 - s]
    rows = [
        (tag, 1 - math.ceil(phi[key] - 1e-12), phi[key])
        for tag, key in zip(DISTINGUISHED, ("phi0", "phi1", "phi2", "phi3", "phi4", "phi5"))
    ]
    flags = {
        "i_o_and_j_o_stable": phi["phi1"] < 1.5,
        "all_structure_sheaves_stable": 0.5 < phi["phi5"] < phi["phi1"] < 1.5,
    }
    return {"phases": phi, "rows": rows, "flags": flags}
