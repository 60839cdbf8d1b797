"""Quadratic forms for the support property and semistable-existence bounds.

Four regimes, each with charge ``Z`` on Z^4 and form ``Q``:

``StrongOrth``      glued data with orthogonal hearts; Q = <Z1(i*v), Z2(j!v)>.
``SameHeartUpper``  Z1 = M Z2 with M = [[-A, B], [0, C]], C > 0 > A; a
                    four-term form with weight delta = -CA/B^2.
``GluedNegDisc``    glued data with complex eigenvalues; Q = cross product of
                    Z2(i*v) and Z2(j!v).
``GammaEuler``      tilted data at genus 1; Q = d2 r1 - d1 r2.

Negative definiteness on ker Z is certified by exact leading minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DegenerateCharge,
    DomainError,
    GenusUnsupported,
    RankConstraint,
    RegimeViolation,
    UndefinedSlope,
)
from .gltilde import IDENTITY, Mat2, charge_abcd, charge_from_abcd
from .glue import GluedDescriptor, glued_charge_rows
from .rational import as_fraction, fmt_q
from .serre_dual import dual_class
from .tiltgamma import GammaParams, zr_rows

REGIMES = ("StrongOrth", "SameHeartUpper", "GluedNegDisc", "GammaEuler")

Vec = Tuple[Fraction, Fraction, Fraction, Fraction]


class QuadForm4:
    """Symmetric 4x4 rational matrix acting on (r1, d1, r2, d2)."""

    def __init__(self, rows):
        self.m = [[as_fraction(x) for x in row] for row in rows]
        for i in range(4):
            for j in range(4):
                if self.m[i][j] != self.m[j][i]:
                    raise ValueError("quadratic form must be symmetric")

    @classmethod
    def from_bilinear(cls, L: Sequence[Sequence]) -> "QuadForm4":
        """Symmetrise an arbitrary bilinear coefficient matrix."""
        return cls([[Fraction(L[i][j] + L[j][i], 2) for j in range(4)] for i in range(4)])

    def __call__(self, v) -> Fraction:
        return self.pair(v, v)

    def pair(self, u, v) -> Fraction:
        return sum(
            (self.m[i][j] * u[i] * v[j] for i in range(4) for j in range(4)),
            Fraction(0),
        )

    def __neg__(self) -> "QuadForm4":
        return QuadForm4([[-x for x in row] for row in self.m])

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadForm4) and self.m == other.m

    def to_json(self):
        return [[fmt_q(x) for x in row] for row in self.m]


def _outer(u, w):
    return [[u[i] * w[j] for j in range(4)] for i in range(4)]


def _sum(*mats):
    return [[sum((m[i][j] for m in mats), Fraction(0)) for j in range(4)] for i in range(4)]


def _scale(k, m):
    return [[k * x for x in row] for row in m]


def _rows_of(M: Mat2, part: str):
    """Re and Im of Z_M composed with i* (part='1') or j! (part='2') as rows on Z^4."""
    # Z_M(r, d) = M (-d, r): Re = -M.a d + M.b r, Im = -M.c d + M.d r
    re = [M.b, -M.a]
    im = [M.d, -M.c]
    zero = [Fraction(0), Fraction(0)]
    if part == "1":
        return re + zero, im + zero
    return zero + re, zero + im


# ---------------------------------------------------------------- regimes


@dataclass(frozen=True)
class SupportRegime:
    tag: str
    M: Mat2 = IDENTITY
    base: Mat2 = IDENTITY
    genus: int = 1

    def charge(self):
        """Rows (Re, Im) of the charge on Z^4 for this regime."""
        if self.tag == "GammaEuler":
            return zr_rows(GammaParams.from_matrix(self.M))
        desc = GluedDescriptor(12, self.M @ self.base, self.base)
        return glued_charge_rows(desc)


def check_regime(reg: SupportRegime) -> None:
    if reg.tag not in REGIMES:
        raise RegimeViolation(f"unknown regime {reg.tag!r}")
    M = reg.M
    if M.det() <= 0:
        raise RegimeViolation("det(M) must be positive")
    if reg.base.det() <= 0:
        raise RegimeViolation("det of the base charge must be positive")
    A, B, C, D = charge_abcd(M)
    if reg.tag == "SameHeartUpper":
        if D != 0:
            raise RegimeViolation("transition must be upper triangular (D = 0)")
        if not C > 0:
            raise RegimeViolation("C > 0 required")
        if not A < 0:
            raise RegimeViolation("A < 0 required")
        if B == 0:
            raise RegimeViolation("delta = -CA/B^2 undefined for B = 0")
    elif reg.tag == "GluedNegDisc":
        if not (A + C) ** 2 - 4 * B * D < 0:
            raise RegimeViolation("discriminant (A+C)^2 - 4BD must be negative")
        if not D > 0:
            raise RegimeViolation("D > 0 required")
        if not B > 0:
            raise RegimeViolation("B > 0 required")
    elif reg.tag == "GammaEuler":
        if reg.genus != 1:
            raise GenusUnsupported("the Euler form certifies support only at genus 1")
        GammaParams.from_matrix(M).validate()
        if not (A + C) ** 2 - 4 * B * D < 0:
            raise RegimeViolation("tilted data need a negative discriminant")


def delta_weight(A, B, C) -> Fraction:
    if B == 0:
        raise RegimeViolation("delta = -CA/B^2 undefined for B = 0")
    return Fraction(-C * A) / (B * B)


def build_Q(reg: SupportRegime) -> QuadForm4:
    check_regime(reg)
    if reg.tag == "GammaEuler":
        # d2 r1 - d1 r2
        L = [[0] * 4 for _ in range(4)]
        L[0][3] = 1
        L[1][2] = -1
        return QuadForm4.from_bilinear(L)
    Z1 = reg.M @ reg.base
    Z2 = reg.base
    re1, im1 = _rows_of(Z1, "1")
    re2, im2 = _rows_of(Z2, "2")
    if reg.tag == "StrongOrth":
        return QuadForm4.from_bilinear(_sum(_outer(im1, im2), _outer(re1, re2)))
    if reg.tag == "SameHeartUpper":
        A, B, C, _ = charge_abcd(reg.M)
        dl = delta_weight(A, B, C)
        L = _sum(
            _scale(-1, _outer(re1, im2)),
            _outer(im1, re2),
            _outer(im1, im2),
            _scale(dl, _outer(re1, re2)),
        )
        return QuadForm4.from_bilinear(L)
    # GluedNegDisc: -Im Z2(j!v) Re Z2(i*v) + Im Z2(i*v) Re Z2(j!v)
    rb1, ib1 = _rows_of(Z2, "1")
    L = _sum(_scale(-1, _outer(im2, rb1)), _outer(ib1, re2))
    return QuadForm4.from_bilinear(L)


# ---------------------------------------------------------------- kernel test


def _nullspace(rows) -> List[List[Fraction]]:
    """Exact kernel basis of a small rational matrix by reduced row echelon form."""
    m = [[as_fraction(x) for x in row] for row in rows]
    ncol = len(m[0])
    pivots = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncol) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncol
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis, len(pivots)


@dataclass
class KernelReport:
    certified: bool
    basis: List[List[Fraction]]
    gram: List[List[Fraction]]
    counterexample: Optional[List[Fraction]] = None

    def to_json(self):
        out = {
            "certified": self.certified,
            "kernel_basis": [[fmt_q(x) for x in v] for v in self.basis],
            "restricted_form": [[fmt_q(x) for x in row] for row in self.gram],
        }
        if self.counterexample is not None:
            out["counterexample"] = [fmt_q(x) for x in self.counterexample]
        return out


def kernel_negdef(Q: QuadForm4, charge_rows) -> KernelReport:
    basis, rank = _nullspace(charge_rows)
    if rank < 2:
        raise DegenerateCharge("real and imaginary parts are linearly dependent")
    k1, k2 = basis
    g11, g12, g22 = Q.pair(k1, k1), Q.pair(k1, k2), Q.pair(k2, k2)
    gram = [[g11, g12], [g12, g22]]
    det = g11 * g22 - g12 * g12
    if g11 < 0 and det > 0:
        return KernelReport(True, basis, gram)
    if g11 >= 0:
        witness = k1
    else:
        # Q(-g12 k1 + g11 k2) = g11 * det >= 0
        witness = [-g12 * a + g11 * b for a, b in zip(k1, k2)]
    return KernelReport(False, basis, gram, witness)


def q_on_distinguished(Q: QuadForm4) -> Dict[str, dict]:
    """Coefficients of Q on the families (r,d,0,0), (0,0,r,d), (r,d,r,d)."""
    fams = {
        "i": ((1, 0, 0, 0), (0, 1, 0, 0)),
        "j": ((0, 0, 1, 0), (0, 0, 0, 1)),
        "l": ((1, 0, 1, 0), (0, 1, 0, 1)),
    }
    out = {}
    for tag, (u, w) in fams.items():
        rr, rd, dd = Q.pair(u, u), 2 * Q.pair(u, w), Q.pair(w, w)
        out[tag] = {"r^2": rr, "rd": rd, "d^2": dd, "vanishes": rr == rd == dd == 0}
    return out


# ---------------------------------------------------------------- bounds


def _direct_interval(A, B, C, e):
    r1, d1, r2, d2 = e
    x = Fraction(d1, r1)
    y = Fraction(d2, r2)
    lo = C * y + A * x
    hi = (A * x + C * y + y - x - Fraction(r1, r2) * x * (A + C)) * Fraction(r2, r2 - r1)
    return lo, hi


def cotassp_interval(A, B, C, e) -> dict:
    """Interval that -B must lie in for a semistable class with nonzero map.

    Direct case r2 > r1 > 0. For r1 > r2 > 0 the class is dualised: the
    dual data have transition (1/det) [[C, B], [0, -A]] and the dual class
    (r2, -d2, r1, -d1) falls in the direct case; the interval for -B is the
    dual interval scaled back by det = -AC.
    """
    A, B, C = (as_fraction(v) for v in (A, B, C))
    r1, d1, r2, d2 = e
    if not C > 0:
        raise RankConstraint("C > 0 required")
    if r1 <= 0 or r2 <= 0:
        raise RankConstraint("ranks must be positive")
    if r1 == r2:
        raise RankConstraint("r1 = r2 is excluded")
    if r2 > r1:
        lo, hi = _direct_interval(A, B, C, e)
        via = "direct"
    else:
        det = -A * C
        if det <= 0:
            raise RankConstraint("duality transport needs det = -AC > 0")
        A2, B2, C2 = -C / det, B / det, -A / det
        lo2, hi2 = _direct_interval(A2, B2, C2, dual_class(e))
        lo, hi = lo2 * det, hi2 * det
        via = "dual"
    return {"lo": lo, "hi": hi, "inside": lo <= -B <= hi, "via": via}


def trialpha_interval(e):
    """Closed form of the alpha window for r1 != r2."""
    r1, d1, r2, d2 = e
    if r1 == r2:
        raise RankConstraint("r1 = r2 is excluded")
    w = Fraction(d2, r2) - Fraction(d1, r1)
    return w, w * (1 + Fraction(r1 + r2, abs(r2 - r1)))


def alpha_abc(alpha):
    """The alpha charge in (A, B, C) coordinates: A = -1, B = -alpha, C = 1."""
    return Fraction(-1), -as_fraction(alpha), Fraction(1)


def lstar_line_bundle_stable(M: Mat2, d) -> bool:
    """l(L) stability test -D d^2 - (A + C) d - B > 0 for deg L = d <= -C/D."""
    from .errors import HeartViolation

    A, B, C, D = charge_abcd(M)
    if D == 0:
        raise HeartViolation("D = 0: the bound -C/D is undefined")
    if not d <= -C / D:
        raise HeartViolation(f"d = {d} exceeds -C/D = {fmt_q(-C / D)}")
    return -D * d * d - (A + C) * d - B > 0


def necessary_chain(A, B, C, e) -> List[Tuple[str, bool]]:
    A, B, C = (as_fraction(v) for v in (A, B, C))
    r1, d1, r2, d2 = e
    if not any(e):
        return [("IBGG", True), ("IIBGG", True), ("IE1GG", True)]
    den = C * r1 + r2
    if den == 0:
        raise UndefinedSlope("C r1 + r2 = 0")
    mu = (-A * d1 - B * r1 + d2) / den
    return [
        ("IBGG", -B >= (A + C) * mu),
        ("IIBGG", -A * d1 + d2 - mu * (r2 - A * r1) <= 0),
        ("IE1GG", (r2 - r1) * mu <= d2 - d1),
    ]


# ---------------------------------------------------------------- sampling


def _q(rng, lo=-9, hi=9, den=4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_regime(tag: str, rng) -> SupportRegime:
    """A random rational parameter draw satisfying the regime's hypotheses."""
    while True:
        if tag == "StrongOrth":
            M = Mat2(_q(rng), _q(rng), _q(rng), _q(rng))
        elif tag == "SameHeartUpper":
            A, B, C = -_q(rng, 1, 9), _q(rng), _q(rng, 1, 9)
            M = charge_from_abcd(A, B, C, 0)
        elif tag == "GluedNegDisc":
            A, B, C, D = _q(rng), _q(rng, 1, 9), _q(rng), _q(rng, 1, 9)
            M = charge_from_abcd(A, B, C, D)
        elif tag == "GammaEuler":
            M = Mat2(_q(rng), _q(rng), _q(rng, 1, 9), _q(rng))
        else:
            raise RegimeViolation(f"unknown regime {tag!r}")
        reg = SupportRegime(tag, M)
        try:
            check_regime(reg)
        except DomainError:
            continue
        return reg
