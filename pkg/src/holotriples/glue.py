"""CP-gluing along the three semiorthogonal decompositions.

``sod`` 12 glues C1 (via i) and C2 (via j); 23 glues C2 and C3 (via l); 31
glues C3 and C1. In each case constituent 1 lives on the first factor and
its charge is read through the left adjoint of that factor, constituent 2
through the right adjoint of the second.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InvalidA
from .gltilde import (
    IDENTITY,
    Charge,
    LiftedElement,
    Mat2,
    charge_eval,
    eval_lift,
)
from .kclass import project
from .rational import as_fraction

SODS = (12, 23, 31)

# left adjoint of the first factor, right adjoint of the second
_READOUT = {
    12: ("istar", "jshriek"),
    23: ("jstar", "lshriek"),
    31: ("lstar", "ishriek"),
}


@dataclass(frozen=True)
class GluedDescriptor:
    sod: int
    Z1: Mat2
    Z2: Mat2
    branch1: int = 0
    branch2: int = 0

    def __post_init__(self):
        if self.sod not in SODS:
            raise ValueError(f"sod must be one of {SODS}")

    def constituents(self):
        """The two lifted elements (T_k, branch_k) with T_k = Z_k^-1."""
        return (
            LiftedElement(self.Z1.inv(), self.branch1),
            LiftedElement(self.Z2.inv(), self.branch2),
        )

    def heart_parameters(self):
        g1, g2 = self.constituents()
        return g1.f0(), g2.f0()

    def gluing_holds(self) -> bool:
        r1, r2 = self.heart_parameters()
        return check_gluing(self.sod, r1, r2)

    def to_json(self):
        return {
            "sod": self.sod,
            "Z1": self.Z1.to_rows(),
            "Z2": self.Z2.to_rows(),
            "branch1": self.branch1,
            "branch2": self.branch2,
        }


def check_gluing(sod: int, rA, rB) -> bool:
    """Hom^{<=0} from the first embedded heart to the second vanishes."""
    if sod == 12:
        return rA >= rB
    if sod in (23, 31):
        return rA >= rB + 1
    raise ValueError(f"sod must be one of {SODS}")


def glued_charge(desc: GluedDescriptor, e) -> Charge:
    left, right = _READOUT[desc.sod]
    return charge_eval(desc.Z1, project(left, e)) + charge_eval(desc.Z2, project(right, e))


def glued_charge_rows(desc: GluedDescriptor):
    """The charge as two rows (Re, Im) of linear functionals on Z^4."""
    basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    vals = [glued_charge(desc, b) for b in basis]
    return [v.re for v in vals], [v.im for v in vals]


def alpha_charge(alpha) -> GluedDescriptor:
    """-d1 - d2 - alpha r1 + i(r1 + r2), split as Z1 = [[1, -alpha], [0, 1]] on C1."""
    a = as_fraction(alpha)
    return GluedDescriptor(12, Mat2(Fraction(1), -a, Fraction(0), Fraction(1)), IDENTITY, 0, 0)


def alpha_closed_form(alpha, e) -> Charge:
    r1, d1, r2, d2 = e
    return Charge(-d1 - d2 - alpha * r1, r1 + r2)


def in_S_a(g1: LiftedElement, g2: LiftedElement, a) -> bool:
    a = float(a)
    if not 0 < a < 1:
        raise InvalidA(f"a = {a} is not in (0, 1)")
    return eval_lift(g1, 0.0) >= eval_lift(g2, 0.0) and eval_lift(g1, a) >= eval_lift(g2, a)


IRRATIONAL = None  # marker for slope data alpha = -cot(pi theta) not in Q


def hn_rational(slope1: Optional[object], slope2: Optional[object]) -> bool:
    """Both heart parameters carry rational slope data.

    ``None`` marks an irrational cotangent; anything else is taken as an exact
    rational (``float('inf')`` stands for theta = 0).
    """
    return slope1 is not IRRATIONAL and slope2 is not IRRATIONAL


def jealousy(r1, r2) -> str:
    """Recollement of Coh^{r1} and Coh^{r2} strictly inside the gluing band."""
    if r2 - 1 < r1 < r2:
        return "no_stability_function"
    return "admits"
