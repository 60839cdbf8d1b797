"""Phase-constraint audits, region membership and a wall tracer.

Phases are those of the six distinguished objects i, j, l applied to a
skyscraper (``x``) and to the structure sheaf (``o``)::

    phi0 = i_x   phi1 = i_o   phi2 = j_x   phi3 = j_o   phi4 = l_x   phi5 = l_o
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .classify import ConditionStarData, trichotomy
from .errors import DegenerateOnPath, DomainError
from .gltilde import (
    IDENTITY,
    LiftedElement,
    Mat2,
    RhoPoint,
    eval_lift,
    inverse_lift,
    lift_with_f0,
)
from .rational import as_fraction

TAGS = ("i_x", "i_o", "j_x", "j_o", "l_x", "l_o")


@dataclass
class PhaseProfile:
    phases: Dict[str, float] = field(default_factory=dict)
    # True = stable, False = not semistable, missing / None = unknown
    stable: Dict[str, Optional[bool]] = field(default_factory=dict)

    @classmethod
    def of(cls, phis=None, flags=None) -> "PhaseProfile":
        phases = {}
        for k, v in enumerate(phis or ()):
            if v is not None:
                phases[f"phi{k}"] = float(v)
        return cls(phases, dict(flags or {}))

    def phi(self, k: int) -> Optional[float]:
        return self.phases.get(f"phi{k}")

    def flag(self, tag: str) -> Optional[bool]:
        return self.stable.get(tag)


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str

    def to_json(self):
        return {"rule": self.rule, "detail": self.detail}


# (rule text, needs-stable tags, lhs index, rhs index, rhs offset): phi_lhs < phi_rhs + offset
_PAIR_RULES = (
    ("phi0 < phi2+1", ("i_x", "j_x"), 0, 2, 1),
    ("phi2 < phi4", ("j_x", "l_x"), 2, 4, 0),
    ("phi4 < phi0", ("l_x", "i_x"), 4, 0, 0),
    ("phi1 < phi3+1", ("i_o", "j_o"), 1, 3, 1),
    ("phi3 < phi5", ("j_o", "l_o"), 3, 5, 0),
    ("phi5 < phi1", ("l_o", "i_o"), 5, 1, 0),
    ("phi1 < phi0", ("i_o", "i_x"), 1, 0, 0),
    ("phi0 < phi1+1", ("i_x", "i_o"), 0, 1, 1),
    ("phi3 < phi2", ("j_o", "j_x"), 3, 2, 0),
    ("phi2 < phi3+1", ("j_x", "j_o"), 2, 3, 1),
    ("phi5 < phi4", ("l_o", "l_x"), 5, 4, 0),
    ("phi4 < phi5+1", ("l_x", "l_o"), 4, 5, 1),
)

# an unstable object forces phi_lhs > phi_rhs + offset
_INSTABILITY_RULES = (
    ("phi4 > phi2+1", "i_x", 4, 2, 1),
    ("phi2 > phi0", "l_x", 2, 0, 0),
)


def audit(profile: PhaseProfile) -> List[Violation]:
    out: List[Violation] = []
    for rule, tags, a, b, off in _PAIR_RULES:
        if not all(profile.flag(t) is True for t in tags):
            continue
        pa, pb = profile.phi(a), profile.phi(b)
        if pa is None or pb is None:
            continue
        if not pa < pb + off:
            out.append(Violation(rule, f"phi{a} = {pa:.12g}, phi{b} = {pb:.12g}"))
    for rule, tag, a, b, off in _INSTABILITY_RULES:
        if profile.flag(tag) is not False:
            continue
        pa, pb = profile.phi(a), profile.phi(b)
        if pa is None or pb is None:
            continue
        if not pa > pb + off:
            out.append(Violation(rule, f"{tag} unstable but phi{a} = {pa:.12g}, phi{b} = {pb:.12g}"))
    flags = [profile.flag(t) for t in TAGS]
    if all(f is not None for f in flags):
        full = sum(1 for e in "ijl" if profile.flag(e + "_x") and profile.flag(e + "_o"))
        if full < 2:
            out.append(Violation("two stable embeddings", f"only {full} embedding(s) fully stable"))
    return out


# ---------------------------------------------------------------- regions


def in_P12(rho_i: RhoPoint, rho_j: RhoPoint, M1: Mat2, M2: Mat2) -> bool:
    if not rho_i.phi0 < rho_j.phi0 + 1:
        return False
    if not rho_i.phi1 < rho_j.phi1 + 1:
        return False
    if rho_i.phi0 > rho_j.phi0:
        return (M1 + M2).det() > 0
    return True


def in_L12(g: LiftedElement) -> bool:
    f0 = g.f0()
    if not f0 > -1:
        return False
    if not inverse_lift(g, 0.5) < 1.5:
        return False
    if f0 < 0:
        return (g.charge + IDENTITY).det() > 0
    return True


def delta(p: RhoPoint) -> float:
    m0, m1, a, b = (float(v) for v in p)
    return m0 * m1 * math.sin((a - b) * math.pi) - m0 * math.cos(a * math.pi) + m1 * math.sin(b * math.pi)


def in_Y(p: RhoPoint, tol: float = 0.0) -> bool:
    m0, m1, phi0, phi1 = p
    if not (m0 > 0 and m1 > 0):
        return False
    if not (phi0 < 2 and phi1 < 1.5 and phi1 < phi0 < phi1 + 1):
        return False
    if 1 <= phi0 < 2 and 0 < phi1 < 1.5:
        return delta(p) > -1 + tol
    return True


# ---------------------------------------------------------------- tracer


@dataclass(frozen=True)
class WallEvent:
    t: float
    wall: str
    left: str
    right: str

    def to_json(self):
        return {"t": round(self.t, 12), "wall": self.wall, "left": self.left, "right": self.right}


def _interp(M0: Mat2, M1: Mat2, t) -> Mat2:
    return Mat2(*(a + t * (b - a) for a, b in zip(
        (M0.a, M0.b, M0.c, M0.d), (M1.a, M1.b, M1.c, M1.d))))


def _quad_coeffs(fn, M0: Mat2, M1: Mat2):
    # fn is quadratic in t along the segment; recover it from three exact values
    v0, vh, v1 = (fn(_interp(M0, M1, Fraction(k, 2))) for k in range(3))
    a = 2 * v1 - 4 * vh + 2 * v0
    b = v1 - v0 - a
    return a, b, v0


def _positive_on_unit(a, b, c) -> bool:
    if c <= 0 or a + b + c <= 0:
        return False
    if a > 0:
        s = -b / (2 * a)
        if 0 < s < 1:
            return a * s * s + b * s + c > 0
    return True


class _Track:
    """Continuous branch tracking of f0 along the segment."""

    def __init__(self, M0: Mat2, M1: Mat2, f0):
        self.M0, self.M1 = M0, M1
        self.f0_start = float(f0)

    def lift(self, t: float, near: float) -> LiftedElement:
        return lift_with_f0(_interp(self.M0, self.M1, t).inv(), near)


def _verdict(M: Mat2, f0: float) -> str:
    try:
        return trichotomy(ConditionStarData(M, f0)).tag
    except DomainError as exc:
        return type(exc).__name__


def _walls(g: LiftedElement, g3: Optional[LiftedElement]) -> Dict[str, float]:
    M = g.charge
    tr, det = float(M.trace()), float(M.det())
    w = {
        "phi0=phi2+1": inverse_lift(g, 1.0) - 2.0,
        "phi1=phi3+1": inverse_lift(g, 0.5) - 1.5,
        "phi0=phi2": inverse_lift(g, 1.0) - 1.0,
        "phi1=phi3": inverse_lift(g, 0.5) - 0.5,
        "delta=0": tr * tr - 4 * det,
        "detMplusI=0": det + tr + 1,
    }
    if g3 is not None:
        p0, p1 = inverse_lift(g, 1.0), inverse_lift(g, 0.5)
        p4, p5 = inverse_lift(g3, 1.0), inverse_lift(g3, 0.5)
        w.update({"phi2=phi4": p4 - 1.0, "phi4=phi0": p0 - p4,
                  "phi3=phi5": p5 - 0.5, "phi5=phi1": p1 - p5})
    return w


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def trace_path(start: ConditionStarData, end: Mat2, samples: int = 200,
               tol: float = 1e-9) -> List[WallEvent]:
    """Walk M linearly from ``start.M`` to ``end`` and report wall crossings.

    The branch of f0 is carried continuously from ``start.f0``. Walls are the
    phase coincidences among the distinguished classes plus the vanishing of
    the discriminant and of det(M+I).
    """
    M0 = Mat2(*(as_fraction(v) for v in (start.M.a, start.M.b, start.M.c, start.M.d)))
    M1 = Mat2(*(as_fraction(v) for v in (end.a, end.b, end.c, end.d)))
    if not _positive_on_unit(*_quad_coeffs(lambda M: M.det(), M0, M1)):
        raise DegenerateOnPath("det(M) vanishes on the segment")
    use_l = _positive_on_unit(*_quad_coeffs(lambda M: (M + IDENTITY).det(), M0, M1))
    samples = max(int(samples), 1)

    def state(t: float, f0_near: float, f3_near: Optional[float]):
        M = _interp(M0.as_float(), M1.as_float(), t)
        g = lift_with_f0(M.inv(), f0_near)
        g3 = None
        if use_l:
            g3 = lift_with_f0((M + IDENTITY).inv(), f3_near)
        return M, g, g3

    # l data start at f3(0) = arg(C1 + 1 + i D1) / pi
    Mf = M0.as_float()
    f3 = math.atan2(-Mf.c, Mf.d + 1) / math.pi if use_l else None
    f0 = float(start.f0)
    grid = []
    for k in range(samples + 1):
        t = k / samples
        M, g, g3 = state(t, f0, f3)
        f0 = g.f0()
        f3 = g3.f0() if g3 is not None else None
        grid.append((t, M, g, g3, _walls(g, g3)))

    events: List[WallEvent] = []
    for (ta, Ma, ga, g3a, wa), (tb, Mb, gb, g3b, wb) in zip(grid, grid[1:]):
        for name, va in wa.items():
            vb = wb[name]
            sa, sb = _sign(va), _sign(vb)
            if sa == 0 or sa == sb:
                continue
            lo, hi = ta, tb
            fl, f3l = ga.f0(), g3a.f0() if g3a is not None else None
            if sb != 0:
                while hi - lo > tol:
                    mid = 0.5 * (lo + hi)
                    _, gm, g3m = state(mid, fl, f3l)
                    if _sign(_walls(gm, g3m)[name]) == sa:
                        lo, fl = mid, gm.f0()
                        f3l = g3m.f0() if g3m is not None else None
                    else:
                        hi = mid
            t_star = 0.5 * (lo + hi) if sb != 0 else tb
            # verdicts a little to each side
            eps = min(1e-6, (tb - ta) / 4)
            Ml, gl, _ = state(max(t_star - eps, 0.0), ga.f0(), f3l)
            Mr, gr, _ = state(min(t_star + eps, 1.0), gl.f0(), f3l)
            events.append(WallEvent(t_star, name, _verdict(Ml, gl.f0()), _verdict(Mr, gr.f0())))
    events.sort(key=lambda e: (e.t, e.wall))
    return events
