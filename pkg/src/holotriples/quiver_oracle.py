"""Brute-force model: representations V1 -> V2 of the A2 quiver over F_p.

A vector of F_p^n is encoded as an integer in base p and a subspace as the
bitmask of the vectors it contains, so inclusion is a mask test. Everything
here is exhaustive and meant for total dimension at most 6.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key, lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import InvalidCharge, SizeBound
from .rational import as_fraction

MAX_TOTAL_DIM = 6
PRIMES = (2, 3)

Vector = Tuple[int, ...]


# ---------------------------------------------------------------- F_p linear algebra


@lru_cache(maxsize=None)
def _vectors(p: int, n: int) -> Tuple[Vector, ...]:
    # index k <-> base-p digits of k, least significant first
    return tuple(tuple((k // p ** i) % p for i in range(n)) for k in range(p ** n))


def _index(v, p: int) -> int:
    return sum((x % p) * p ** i for i, x in enumerate(v))


@lru_cache(maxsize=None)
def _add_table(p: int, n: int):
    vs = _vectors(p, n)
    return tuple(tuple(_index([a + b for a, b in zip(u, w)], p) for w in vs) for u in vs)


@lru_cache(maxsize=None)
def _mul_table(p: int, n: int):
    vs = _vectors(p, n)
    return tuple(tuple(_index([c * a for a in u], p) for c in range(p)) for u in vs)


def _members(mask: int):
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


def span(vectors, p: int, n: int) -> int:
    """Bitmask of the span of vectors given as tuples or as indices."""
    add, mul = _add_table(p, n), _mul_table(p, n)
    out = {0}
    for v in vectors:
        k = v if isinstance(v, int) else _index(v, p)
        if k in out:
            continue
        out = {add[w][mul[k][c]] for w in out for c in range(p)}
    mask = 0
    for k in out:
        mask |= 1 << k
    return mask


def vectors_of(mask: int, p: int, n: int) -> List[Vector]:
    vs = _vectors(p, n)
    return [vs[k] for k in _members(mask)]


def dim_of(mask: int, p: int) -> int:
    return round(math.log(bin(mask).count("1"), p))


@lru_cache(maxsize=None)
def subspaces(p: int, n: int) -> Tuple[int, ...]:
    """All subspaces of F_p^n, one per reduced row echelon basis."""
    out = []
    for k in range(n + 1):
        for piv in itertools.combinations(range(n), k):
            slots = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
            for vals in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(piv):
                    rows[r][pc] = 1
                for (r, c), v in zip(slots, vals):
                    rows[r][c] = v
                out.append(span(rows, p, n))
    return tuple(sorted(out, key=lambda S: (bin(S).count("1"), S)))


@lru_cache(maxsize=None)
def _inclusion(p: int, n: int):
    """Boolean matrix I with I[a, b] iff subspace a is contained in subspace b."""
    S = subspaces(p, n)
    N = p ** n
    B = np.array([[(m >> k) & 1 for k in range(N)] for m in S], dtype=np.int32)
    return (B @ (1 - B).T) == 0


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def _apply(mat, v, p) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in mat)


def _add(u, v, p):
    return tuple((a + b) % p for a, b in zip(u, v))


def _smul(c, v, p):
    return tuple((c * a) % p for a in v)


# ---------------------------------------------------------------- reps


@dataclass(frozen=True)
class QuiverRep:
    p: int
    dims: Tuple[int, int]
    matrix: Tuple[Tuple[int, ...], ...]  # n2 rows, n1 columns

    @classmethod
    def of(cls, p: int, dims, matrix=None) -> "QuiverRep":
        n1, n2 = dims
        if p not in PRIMES:
            raise SizeBound(f"field characteristic {p} not in {PRIMES}")
        if n1 < 0 or n2 < 0 or n1 + n2 > MAX_TOTAL_DIM:
            raise SizeBound(f"dims {tuple(dims)} exceed total dimension {MAX_TOTAL_DIM}")
        if matrix is None:
            matrix = [[0] * n1 for _ in range(n2)]
        mat = tuple(tuple(int(x) % p for x in row) for row in matrix)
        if len(mat) != n2 or any(len(row) != n1 for row in mat):
            raise ValueError(f"matrix must be {n2} x {n1}")
        return cls(p, (n1, n2), mat)

    @property
    def rank(self) -> int:
        return rank_mod_p(self.matrix, self.p)

    def image(self, W1: int) -> int:
        out = 0
        for v in vectors_of(W1, self.p, self.dims[0]):
            out |= 1 << _index(_apply(self.matrix, v, self.p), self.p)
        return out

    def to_json(self):
        return {"p": self.p, "dims": list(self.dims), "matrix": [list(r) for r in self.matrix]}


@dataclass(frozen=True)
class Subrep:
    W1: int
    W2: int
    dims: Tuple[int, int]

    def le(self, other: "Subrep") -> bool:
        return not (self.W1 & ~other.W1) and not (self.W2 & ~other.W2)


def all_reps(p: int, n1: int, n2: int):
    for entries in itertools.product(range(p), repeat=n1 * n2):
        mat = [entries[i * n1:(i + 1) * n1] for i in range(n2)]
        yield QuiverRep.of(p, (n1, n2), mat)


def canonical_rep(p: int, n1: int, n2: int, r: int) -> QuiverRep:
    """Isoclass representative: the map of rank r in normal form."""
    mat = [[1 if (i == j and i < r) else 0 for j in range(n1)] for i in range(n2)]
    return QuiverRep.of(p, (n1, n2), mat)


@lru_cache(maxsize=4096)
def _lattice(rep: QuiverRep):
    """Subreps as index pairs into the subspace lists, with dims and inclusion."""
    p, (n1, n2) = rep.p, rep.dims
    S1, S2 = subspaces(p, n1), subspaces(p, n2)
    pairs = []
    for a, W1 in enumerate(S1):
        img = rep.image(W1)
        pairs.extend((a, b) for b, W2 in enumerate(S2) if not img & ~W2)
    ia = np.array([x for x, _ in pairs])
    ib = np.array([y for _, y in pairs])
    d1 = np.array([dim_of(W, p) for W in S1])[ia]
    d2 = np.array([dim_of(W, p) for W in S2])[ib]
    LE = _inclusion(p, n1)[np.ix_(ia, ia)] & _inclusion(p, n2)[np.ix_(ib, ib)]
    subs = tuple(Subrep(S1[x], S2[y], (int(u), int(v))) for (x, y), u, v in zip(pairs, d1, d2))
    codes = d1 * _CODE + d2
    bottom = int(np.argmin(d1 + d2))
    top = int(np.argmax(d1 + d2))
    return subs, codes, LE, bottom, top


def subreps(rep: QuiverRep) -> List[Subrep]:
    if sum(rep.dims) > MAX_TOTAL_DIM:
        raise SizeBound("dimension cap exceeded")
    return list(_lattice(rep)[0])


# ---------------------------------------------------------------- charges and phases


@dataclass(frozen=True)
class DimCharge:
    """Z(n1, n2) = n1 z1 + n2 z2 with z_k = re_k + i im_k (exact rationals)."""

    z1: Tuple[Fraction, Fraction]
    z2: Tuple[Fraction, Fraction]

    @classmethod
    def of(cls, re1, im1, re2, im2) -> "DimCharge":
        z = cls((as_fraction(re1), as_fraction(im1)), (as_fraction(re2), as_fraction(im2)))
        for re, im in (z.z1, z.z2):
            if im < 0 or (im == 0 and re >= 0):
                raise InvalidCharge("simple charges must lie in the semi-closed upper half plane")
        return z

    def __call__(self, v) -> Tuple[Fraction, Fraction]:
        n1, n2 = v
        return (n1 * self.z1[0] + n2 * self.z2[0], n1 * self.z1[1] + n2 * self.z2[1])

    def integral(self, v) -> Tuple[int, int]:
        """Z(v) times a positive common denominator; phases are unchanged."""
        (a, b), (c, d) = self._scaled
        n1, n2 = v
        return (n1 * a + n2 * c, n1 * b + n2 * d)

    @cached_property
    def _scaled(self):
        vals = (*self.z1, *self.z2)
        den = math.lcm(*(x.denominator for x in vals))
        a, b, c, d = (int(x * den) for x in vals)
        return (a, b), (c, d)

    def phase(self, v) -> float:
        re, im = self(v)
        return math.atan2(float(im), float(re)) / math.pi

    def to_json(self):
        return {"z1": [str(x) for x in self.z1], "z2": [str(x) for x in self.z2]}


def cmp_phase(z, w) -> int:
    """Sign of phase(z) - phase(w) for nonzero z, w in the upper half plane."""
    # phase(z) > phase(w) iff w x z > 0
    cross = w[0] * z[1] - w[1] * z[0]
    return (cross > 0) - (cross < 0)


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


# ---------------------------------------------------------------- HN


@dataclass(frozen=True)
class HNFactor:
    dims: Tuple[int, int]
    phase: float

    def to_json(self):
        return {"dims": list(self.dims), "phase": round(self.phase, 12)}


_CODE = 16  # dims (d1, d2) <-> d1 * _CODE + d2, linear for nonnegative differences


def _decode(c: int) -> Tuple[int, int]:
    return (int(c) // _CODE, int(c) % _CODE)


class _PhaseCache:
    """Exact phase order of all dimension vectors up to the cap, per charge.

    ``rank[code]`` is an integer with rank[u] < rank[v] iff phase(u) < phase(v);
    the zero vector gets -1. Charges are scaled to integers first, which
    leaves every phase unchanged.
    """

    def __init__(self, Z: "DimCharge"):
        self.Z = Z
        (a, b), (c, d) = Z._scaled
        vecs = [(x, y) for x in range(MAX_TOTAL_DIM + 1) for y in range(MAX_TOTAL_DIM + 1 - x)
                if x or y]
        zi = {v: (v[0] * a + v[1] * c, v[0] * b + v[1] * d) for v in vecs}
        order = sorted(vecs, key=cmp_to_key(lambda u, v: cmp_phase(zi[u], zi[v])))
        self.rank = np.full(_CODE * _CODE, -1, dtype=np.int64)
        r = 0
        for k, v in enumerate(order):
            if k and cmp_phase(zi[v], zi[order[k - 1]]) != 0:
                r += 1
            self.rank[v[0] * _CODE + v[1]] = r
        self.phases: Dict[Tuple[int, int], float] = {}

    def cmp(self, u, v) -> int:
        a = int(self.rank[u[0] * _CODE + u[1]])
        b = int(self.rank[v[0] * _CODE + v[1]])
        return (a > b) - (a < b)

    def phase(self, v) -> float:
        if v not in self.phases:
            self.phases[v] = self.Z.phase(v)
        return self.phases[v]


@lru_cache(maxsize=256)
def _phase_cache(Z: "DimCharge") -> _PhaseCache:
    return _PhaseCache(Z)


def _hn_chain(rep: QuiverRep, Z: DimCharge) -> List[int]:
    subs, codes, LE, L, top = _lattice(rep)
    Zi = Z.integral
    chain = [L]
    while L != top:
        cand = np.flatnonzero(LE[L])
        cand = cand[cand != L]
        diffs = codes[cand] - codes[L]
        bq = None
        for c in np.unique(diffs):
            q = _decode(c)
            if bq is None:
                bq = q
                continue
            zq, zb = Zi(q), Zi(bq)
            s = cmp_phase(zq, zb)
            # equal phase: larger Im, and at phase 1 (Im = 0) larger -Re
            if s > 0 or (s == 0 and (zq[1], -zq[0]) > (zb[1], -zb[0])):
                bq = q
        L = int(cand[np.flatnonzero(diffs == bq[0] * _CODE + bq[1])[0]])
        chain.append(L)
    return chain


def hn_filtration(rep: QuiverRep, Z: DimCharge) -> List[HNFactor]:
    """Greedy: take the subobject of maximal phase, then maximal imaginary part.

    Ties at phase 1, where every imaginary part vanishes, go to the larger
    modulus.
    """
    if sum(rep.dims) == 0:
        raise InvalidCharge("zero representation has no HN filtration")
    subs = _lattice(rep)[0]
    chain = _hn_chain(rep, Z)
    out = []
    for i, j in zip(chain, chain[1:]):
        q = _sub(subs[j].dims, subs[i].dims)
        out.append(HNFactor(q, Z.phase(q)))
    return out


@lru_cache(maxsize=64)
def _upsets(rep: QuiverRep):
    """Per-node cache: supersets of E_i and their mutual inclusion matrix."""
    return {}


def _upset(rep: QuiverRep, i: int):
    cache = _upsets(rep)
    if i not in cache:
        _, _, LE, _, _ = _lattice(rep)
        ups = np.flatnonzero(LE[i])
        cache[i] = (ups, LE[np.ix_(ups, ups)])
    return cache[i]


def hn_exhaustive(rep: QuiverRep, Z: DimCharge) -> List[List[HNFactor]]:
    """Every chain 0 < E1 < ... < E whose factors are semistable of strictly decreasing phase."""
    subs, codes, LE, bottom, top = _lattice(rep)
    pc = _phase_cache(Z)
    rank = pc.rank
    memo: Dict[Tuple[int, int], List[Tuple[HNFactor, ...]]] = {}

    def tails(i, prev_rank):
        # all admissible chains from E_i up to E, each factor of rank < prev_rank
        if i == top:
            return [()]
        key = (i, prev_rank)
        if key in memo:
            return memo[key]
        ups, inc = _upset(rep, i)
        r = rank[codes[ups] - codes[i]]
        # E_j / E_i is semistable iff no E_k between them has a larger phase quotient
        worst = np.where(inc, r[:, None], -1).max(axis=0)
        ok = (r >= 0) & (worst <= r) & (r < prev_rank)
        res = []
        for k in np.flatnonzero(ok):
            j = int(ups[k])
            q = _decode(codes[j] - codes[i])
            head = HNFactor(q, pc.phase(q))
            res.extend((head,) + t for t in tails(j, int(r[k])))
        memo[key] = res
        return res

    return [list(c) for c in tails(bottom, 1 << 30)]


def is_semistable(rep: QuiverRep, Z: DimCharge) -> bool:
    return len(hn_filtration(rep, Z)) == 1


def seesaw_violations(rep: QuiverRep, Z: DimCharge) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Short exact sequences 0 -> A -> B -> C -> 0 breaking the seesaw.

    With all three charges nonzero, phase(A) < phase(B) iff phase(B) <
    phase(C), and likewise for equality.
    """
    subs, codes, _, _, _ = _lattice(rep)
    total = codes.max()
    rank = _phase_cache(Z).rank
    ra, rb, rc = rank[codes], rank[total], rank[total - codes]
    ok = (ra < 0) | (rc < 0) | (np.sign(rb - ra) == np.sign(rc - rb))
    return [(subs[k].dims, _decode(total - codes[k])) for k in np.flatnonzero(~ok)]


# ---------------------------------------------------------------- Hom and torsion pairs


def hom_dim(X: QuiverRep, Y: QuiverRep) -> int:
    """dim Hom(X, Y): pairs (f1, f2) with f2 A_X = A_Y f1, solved as a linear system."""
    if X.p != Y.p:
        raise ValueError("field mismatch")
    p = X.p
    a1, a2 = X.dims
    b1, b2 = Y.dims
    nvar = b1 * a1 + b2 * a2
    if nvar == 0:
        return 0

    def v1(i, j):  # f1[i][j], i < b1, j < a1
        return i * a1 + j

    def v2(i, j):  # f2[i][j], i < b2, j < a2
        return b1 * a1 + i * a2 + j

    rows = []
    # (f2 A_X - A_Y f1)[i][j] = 0 for i < b2, j < a1
    for i in range(b2):
        for j in range(a1):
            row = [0] * nvar
            for k in range(a2):
                row[v2(i, k)] += X.matrix[k][j]
            for k in range(b1):
                row[v1(k, j)] -= Y.matrix[i][k]
            rows.append([x % p for x in row])
    return nvar - rank_mod_p(rows, p)


def hom_dim_enumerate(X: QuiverRep, Y: QuiverRep) -> int:
    """Count homomorphisms by brute force; for small cross-checks only."""
    p = X.p
    a1, a2 = X.dims
    b1, b2 = Y.dims
    n = b1 * a1 + b2 * a2
    if n > 12:
        raise SizeBound("too many maps to enumerate")
    count = 0
    for entries in itertools.product(range(p), repeat=n):
        f1 = [entries[i * a1:(i + 1) * a1] for i in range(b1)]
        off = b1 * a1
        f2 = [entries[off + i * a2: off + (i + 1) * a2] for i in range(b2)]
        ok = True
        for i in range(b2):
            for j in range(a1):
                lhs = sum(f2[i][k] * X.matrix[k][j] for k in range(a2))
                rhs = sum(Y.matrix[i][k] * f1[k][j] for k in range(b1))
                if (lhs - rhs) % p:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return round(math.log(count, p))


def _contains(W: int, v, p: int) -> bool:
    return bool(W >> _index(v, p) & 1)


def _coords(v, basis, p: int, n: int, modulo: int = 1):
    """Coefficients c with v - sum c_i b_i in the subspace ``modulo``."""
    for cs in itertools.product(range(p), repeat=len(basis)):
        w = v
        for c, b in zip(cs, basis):
            w = _add(w, _smul(-c % p, b, p), p)
        if _contains(modulo, w, p):
            return cs
    raise AssertionError("vector outside the span")


def quotient_rep(rep: QuiverRep, s: Subrep) -> QuiverRep:
    """V / W as a rep, using standard basis vectors that complete W."""
    p = rep.p

    def complement(W: int, n: int):
        basis, cur = [], W
        for k in range(n):
            e = tuple(1 if i == k else 0 for i in range(n))
            if not _contains(cur, e, p):
                basis.append(e)
                cur = span(list(_members(cur)) + [e], p, n)
        return basis

    n1, n2 = rep.dims
    B1, B2 = complement(s.W1, n1), complement(s.W2, n2)
    cols = [_coords(_apply(rep.matrix, b, p), B2, p, n2, s.W2) for b in B1]
    mat = [[cols[j][i] for j in range(len(B1))] for i in range(len(B2))]
    return QuiverRep.of(p, (len(B1), len(B2)), mat)


def sub_as_rep(rep: QuiverRep, s: Subrep) -> QuiverRep:
    p = rep.p
    n1, n2 = rep.dims

    def basis(W: int, n: int):
        out, cur = [], 1
        for v in vectors_of(W, p, n):
            if not _contains(cur, v, p):
                out.append(v)
                cur = span(out, p, n)
        return out

    B1, B2 = basis(s.W1, n1), basis(s.W2, n2)
    cols = [_coords(_apply(rep.matrix, b, p), B2, p, n2) for b in B1]
    mat = [[cols[j][i] for j in range(len(B1))] for i in range(len(B2))]
    return QuiverRep.of(p, (len(B1), len(B2)), mat)


def slope(Z: DimCharge, v):
    """-Re Z / Im Z as an exact rational, or +inf on the negative real axis."""
    re, im = Z(v)
    if im == 0:
        return math.inf
    return -re / im


def _alpha(alpha):
    if isinstance(alpha, float) and math.isinf(alpha):
        return alpha
    return as_fraction(alpha)


def in_torsion(rep: QuiverRep, Z: DimCharge, alpha) -> bool:
    if sum(rep.dims) == 0:
        return True
    a = _alpha(alpha)
    return all(slope(Z, f.dims) > a for f in hn_filtration(rep, Z))


def in_torsionfree(rep: QuiverRep, Z: DimCharge, alpha) -> bool:
    if sum(rep.dims) == 0:
        return True
    a = _alpha(alpha)
    return all(slope(Z, f.dims) <= a for f in hn_filtration(rep, Z))


@dataclass
class TorsionReport:
    torsion: List[QuiverRep]
    torsionfree: List[QuiverRep]
    hom_violations: List[Tuple[QuiverRep, QuiverRep]]
    decomposition_failures: List[QuiverRep]

    @property
    def ok(self) -> bool:
        return not self.hom_violations and not self.decomposition_failures

    def to_json(self):
        return {
            "torsion": len(self.torsion),
            "torsionfree": len(self.torsionfree),
            "hom_violations": [[a.to_json(), b.to_json()] for a, b in self.hom_violations],
            "decomposition_failures": [r.to_json() for r in self.decomposition_failures],
            "ok": self.ok,
        }


def torsion_part(rep: QuiverRep, Z: DimCharge, alpha) -> Subrep:
    """The HN step collecting every factor of slope > alpha."""
    subs = _lattice(rep)[0]
    if sum(rep.dims) == 0:
        return subs[0]
    a = _alpha(alpha)
    chain = _hn_chain(rep, Z)
    k = 0
    for i, j in zip(chain, chain[1:]):
        if slope(Z, _sub(subs[j].dims, subs[i].dims)) > a:
            k = j
        else:
            break
    return subs[k] if k else subs[chain[0]]


def decomposes(rep: QuiverRep, Z: DimCharge, alpha, search: bool = True) -> bool:
    """Some subrep lies in T with quotient in F; the HN witness is tried first."""
    s = torsion_part(rep, Z, alpha)
    if in_torsion(sub_as_rep(rep, s), Z, alpha) and in_torsionfree(quotient_rep(rep, s), Z, alpha):
        return True
    if not search:
        return False
    return any(
        in_torsion(sub_as_rep(rep, t), Z, alpha) and in_torsionfree(quotient_rep(rep, t), Z, alpha)
        for t in subreps(rep)
    )


def truncation_pair(reps: Sequence[QuiverRep], Z: DimCharge, alpha) -> TorsionReport:
    T = [r for r in reps if in_torsion(r, Z, alpha)]
    F = [r for r in reps if in_torsionfree(r, Z, alpha)]
    hom_bad = [(a, b) for a in T for b in F
               if sum(a.dims) and sum(b.dims) and hom_dim(a, b) > 0]
    dec_bad = [r for r in reps if not decomposes(r, Z, alpha)]
    return TorsionReport(T, F, hom_bad, dec_bad)


# ---------------------------------------------------------------- glued hearts


# Finite model of D^b(A2): indecomposables S1, S2, P1 (S2 -> P1 -> S1) and shifts.
# Objects are (name, shift).
_HOM0 = {("S1", "S1"), ("S2", "S2"), ("P1", "P1"), ("S2", "P1"), ("P1", "S1")}
_EXT1 = {("S1", "S2")}
# cone of the nonzero map X -> Y[k] (k in {0, 1}) as (name, shift)
_CONES = {
    ("S2", "P1", 0): ("S1", 0),
    ("P1", "S1", 0): ("S2", 1),
    ("S1", "S2", 1): ("P1", 1),
}


def _hom(x, y) -> bool:
    """Hom(x, y) != 0 in the bounded derived category."""
    (a, s), (b, t) = x, y
    k = t - s
    if k == 0:
        return (a, b) in _HOM0
    if k == 1:
        return (a, b) in _EXT1
    return False


def glued_heart(n1: int, n2: int):
    """Indecomposables of the heart glued from mod k[n1] on vertex 1 and mod k[n2] on vertex 2."""
    out = [("S1", n1), ("S2", n2)]
    if n1 == n2:
        out.append(("P1", n1))
    return out


def glued_heart_check(n1: int = 0, n2: int = 0) -> dict:
    if abs(n1) > 3 or abs(n2) > 3:
        raise SizeBound("shifts limited to |n| <= 3")
    G = glued_heart(n1, n2)
    inG = set(G)
    contains = ("S1", n1) in inG and ("S2", n2) in inG
    neg_hom = [(x, y) for x in G for y in G if y[1] < x[1] and _hom(x, y)]
    neg_hom += [(x, y) for x in G for y in G if _hom(x, (y[0], y[1] - 1))]
    escapes = []
    # extensions 0 -> y -> ? -> x -> 0 come from maps x -> y[1]
    for x in G:
        for y in G:
            key = (x[0], y[0], (y[1] + 1) - x[1])
            if key in _CONES and _hom(x, (y[0], y[1] + 1)):
                cone = _CONES[key]
                # the middle term is the cone shifted back by one
                mid = (cone[0], cone[1] + x[1] - 1)
                if mid not in inG:
                    escapes.append({"from": [list(x), list(y)], "middle": list(mid)})
    cone_bad = []
    # cones of maps inside G must have cohomology in G and G[1]
    for x in G:
        for y in G:
            key = (x[0], y[0], y[1] - x[1])
            if key in _CONES and _hom(x, y):
                cone = _CONES[key]
                c = (cone[0], cone[1] + x[1])
                if c not in inG and (c[0], c[1] - 1) not in inG:
                    cone_bad.append({"map": [list(x), list(y)], "cone": list(c)})
    valid = contains and not neg_hom and not escapes and not cone_bad
    return {
        "shifts": [n1, n2],
        "indecomposables": [list(x) for x in G],
        "contains_embedded_hearts": contains,
        "negative_homs": [[list(x), list(y)] for x, y in neg_hom],
        "extension_escapes": escapes,
        "cone_failures": cone_bad,
        "valid": valid,
        "gluing_inequality": n1 >= n2,
    }
