"""The universal cover of GL+(2, R) and stability conditions on the curve.

An element is a pair ``(T, f)`` where ``f`` is the increasing lift of the
action of ``T`` on rays: ``T`` sends the ray at angle ``pi t`` to the ray at
angle ``pi f(t)``. ``f`` is pinned by an integer branch ``m`` through
``f(0) = 2m + phi/pi`` with ``phi`` the Iwasawa angle of ``T``.

Acting by ``(T, f)`` on ``(Z, P)`` gives ``(T^-1 Z, P(f(.)))``, so the curve
charge attached to an element is ``M = T^-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

import numpy as np

from .errors import InvalidRegion, NonPositiveDeterminant
from .rational import as_fraction


@dataclass(frozen=True)
class Mat2:
    a: object
    b: object
    c: object
    d: object

    @classmethod
    def rows(cls, rows: Iterable[Iterable]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def exact(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(*(as_fraction(x) for x in (a, b, c, d)))

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inv(self) -> "Mat2":
        det = self.det()
        if det == 0:
            raise NonPositiveDeterminant("singular matrix")
        if isinstance(det, Fraction) or isinstance(det, int):
            det = Fraction(det)
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, k) -> "Mat2":
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def apply(self, x, y):
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def as_float(self) -> "Mat2":
        return Mat2(float(self.a), float(self.b), float(self.c), float(self.d))

    def to_rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def is_exact(self) -> bool:
        return all(isinstance(x, (int, Fraction)) for x in (self.a, self.b, self.c, self.d))


IDENTITY = Mat2(Fraction(1), Fraction(0), Fraction(0), Fraction(1))


def rotation(phi: float) -> Mat2:
    return Mat2(math.cos(phi), -math.sin(phi), math.sin(phi), math.cos(phi))


def unipotent(x) -> Mat2:
    """N_x = [[1, x], [0, 1]]."""
    return Mat2(Fraction(1), as_fraction(x), Fraction(0), Fraction(1))


# ---------------------------------------------------------------- charges


class Charge(NamedTuple):
    """A value of a central charge, kept exact when the inputs are."""

    re: object
    im: object

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __add__(self, o) -> "Charge":  # type: ignore[override]
        return Charge(self.re + o[0], self.im + o[1])

    def __neg__(self) -> "Charge":
        return Charge(-self.re, -self.im)

    def phase(self) -> float:
        """Principal phase in (-1, 1]."""
        return math.atan2(float(self.im), float(self.re)) / math.pi


def charge_eval(M: Mat2, x) -> Charge:
    """(Re, Im) = M (-d, r); for M = [[-A, B], [-D, C]] this is Ad + Br + i(Cr + Dd)."""
    r, d = x
    re, im = M.apply(-d, r)
    return Charge(re, im)


def charge_abcd(M: Mat2):
    """Read (A, B, C, D) off M = [[-A, B], [-D, C]]."""
    return (-M.a, M.b, M.d, -M.c)


def charge_from_abcd(A, B, C, D) -> Mat2:
    return Mat2(-A, B, -D, C)


def slope(M: Mat2, x):
    """mu = -Re Z / Im Z; None when the imaginary part vanishes."""
    z = charge_eval(M, x)
    if z.im == 0:
        return None
    return -z.re / z.im


# ---------------------------------------------------------------- Iwasawa


class Iwasawa(NamedTuple):
    k: float
    phi: float
    a: float
    x: float


def _angle(x: float, y: float) -> float:
    """Angle of (x, y) in [0, 2 pi)."""
    t = math.atan2(y, x)
    if t < 0:
        t += 2 * math.pi
    if t >= 2 * math.pi:
        t -= 2 * math.pi
    return t


def iwasawa(T: Mat2) -> Iwasawa:
    """T = k K_phi A_a N_x with K rotation, A_a = diag(a, 1/a), N_x unipotent."""
    det = T.det()
    if det <= 0:
        raise NonPositiveDeterminant(f"det(T) = {det} <= 0")
    F = T.as_float()
    k = math.sqrt(float(det))
    phi = _angle(F.a, F.c)
    a = math.hypot(F.a, F.c) / k
    cphi, sphi = math.cos(phi), math.sin(phi)
    r01 = (cphi * F.b + sphi * F.d) / k
    return Iwasawa(k, phi, a, r01 / a)


def recompose(w: Iwasawa) -> Mat2:
    K = rotation(w.phi)
    AN = Mat2(w.a, w.a * w.x, 0.0, 1.0 / w.a)
    return (K @ AN).scale(w.k)


# ---------------------------------------------------------------- lifts


@dataclass(frozen=True)
class LiftedElement:
    T: Mat2
    branch: int = 0

    def __post_init__(self):
        if self.T.det() <= 0:
            raise NonPositiveDeterminant(f"det(T) = {self.T.det()} <= 0")

    @property
    def charge(self) -> Mat2:
        return self.T.inv()

    def f0(self) -> float:
        F = self.T.as_float()
        return 2 * self.branch + _angle(F.a, F.c) / math.pi

    def to_json(self):
        return {"T": self.T.to_rows(), "branch": self.branch}


IDENTITY_LIFT = LiftedElement(IDENTITY, 0)


def lift_with_f0(T: Mat2, f0_target: float) -> LiftedElement:
    """The lift of T whose f(0) is closest to ``f0_target``."""
    F = T.as_float()
    base = _angle(F.a, F.c) / math.pi
    return LiftedElement(T, int(round((float(f0_target) - base) / 2)))


def lift_from_charge(M: Mat2, f0_target: float) -> LiftedElement:
    return lift_with_f0(M.inv(), f0_target)


def _turn(F: Mat2, s):
    # ccw angle (in units of pi) from T e1 to T e^{i pi s}; lies in [0, 1)
    # for s in [0, 1) because the cross product is det * sin(pi s) >= 0
    cs, sn = np.cos(np.pi * s), np.sin(np.pi * s)
    det = F.a * F.d - F.b * F.c
    dot = F.a * (F.a * cs + F.b * sn) + F.c * (F.c * cs + F.d * sn)
    return np.arctan2(det * sn, dot) / np.pi


def eval_lift(g: LiftedElement, t) -> float:
    F = g.T.as_float()
    t = float(t)
    k = math.floor(t)
    return g.f0() + k + float(_turn(F, t - k))


def eval_lift_array(g: LiftedElement, ts) -> np.ndarray:
    ts = np.asarray(ts, dtype=float)
    k = np.floor(ts)
    return g.f0() + k + _turn(g.T.as_float(), ts - k)


def inverse_lift(g: LiftedElement, y) -> float:
    """Solve f(t) = y."""
    F = g.T.as_float()
    c = g.f0()
    y = float(y)
    k = math.floor(y - c)
    s_img = y - c - k
    ux, uy = F.a, F.c
    cs, sn = math.cos(math.pi * s_img), math.sin(math.pi * s_img)
    wx, wy = cs * ux - sn * uy, sn * ux + cs * uy
    det = F.a * F.d - F.b * F.c
    px, py = (F.d * wx - F.b * wy) / det, (-F.c * wx + F.a * wy) / det
    s = math.atan2(py, px) / math.pi
    if s < 0:
        # only reachable through rounding when s_img is at 0
        s = 0.0 if s > -0.5 else s + 2.0
    return k + s


def _rebranch(T: Mat2, f0: float) -> LiftedElement:
    return lift_with_f0(T, f0)


def compose(g: LiftedElement, h: LiftedElement) -> LiftedElement:
    """(T_g T_h, f_g o f_h), branch recovered from the tracked value f(0)."""
    f0 = eval_lift(g, eval_lift(h, 0.0))
    return _rebranch(g.T @ h.T, f0)


def invert(g: LiftedElement) -> LiftedElement:
    return _rebranch(g.T.inv(), inverse_lift(g, 0.0))


def shift(g: LiftedElement, n: int) -> LiftedElement:
    """The element (-1)^n T with f + n: the shift functor [n]."""
    T = g.T if n % 2 == 0 else -g.T
    return _rebranch(T, g.f0() + n)


# ---------------------------------------------------------------- rho


class RhoPoint(NamedTuple):
    m0: float
    m1: float
    phi0: float
    phi1: float

    def to_json(self):
        return {"m0": self.m0, "m1": self.m1, "phi0": self.phi0, "phi1": self.phi1}


def rho(g: LiftedElement) -> RhoPoint:
    """Masses and phases of the skyscraper class (0,1) and structure sheaf (1,0)."""
    M = g.charge
    z0 = complex(charge_eval(M, (0, 1)))
    z1 = complex(charge_eval(M, (1, 0)))
    return RhoPoint(abs(z0), abs(z1), inverse_lift(g, 1.0), inverse_lift(g, 0.5))


def check_rho_point(p: RhoPoint) -> None:
    if not (p.m0 > 0 and p.m1 > 0):
        raise InvalidRegion("masses must be positive")
    if not (p.phi1 < p.phi0 < p.phi1 + 1):
        raise InvalidRegion("phases must satisfy phi1 < phi0 < phi1 + 1")


def rho_inverse(p: RhoPoint) -> LiftedElement:
    check_rho_point(p)
    m0, m1, phi0, phi1 = (float(v) for v in p)
    # Z(0,1) = -M e1 = m0 e^{i pi phi0}, Z(1,0) = M e2 = m1 e^{i pi phi1}
    M = Mat2(
        -m0 * math.cos(math.pi * phi0),
        m1 * math.cos(math.pi * phi1),
        -m0 * math.sin(math.pi * phi0),
        m1 * math.sin(math.pi * phi1),
    )
    T = M.inv()
    g = LiftedElement(T, 0)
    # pin the branch by f(phi0) = 1
    off = eval_lift(g, phi0) - 1.0
    return LiftedElement(T, -int(round(off / 2)))


def heart_descriptor(g: LiftedElement):
    """Coh^theta(C)[n] with n + theta = f(0)."""
    f0 = g.f0()
    n = math.floor(f0)
    theta = f0 - n
    if theta >= 1.0:
        n, theta = n + 1, 0.0
    # snap float noise so that exact angles give exact offsets
    if abs(theta - round(theta)) < 1e-12:
        n, theta = n + int(round(theta)), 0.0
    return n, theta
