"""Exact complex-hyperbolic geometry of the mirror arrangement.

Distances are handled through their squared hyperbolic cosines and sines, which
lie in Q(sqrt3).  Large root lists are numpy integer arrays of shape (N, 28)
holding the Eisenstein coordinates (m0, n0, ..., m13, n13) of each root; all
bulk predicates on them are exact integer computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Optional, Sequence

import numpy as np

from .exactnum import (
    OMEGA,
    OMEGA_BAR,
    ONE,
    THETA,
    CycElem,
    EisInt,
    RealQuad,
    real_sign,
)
from .intlin import hnf, lll_gram
from .lattice import (
    GramLattice,
    eis_coords,
    enumerate_by_norm,
    enumerate_quadratic,
    from_eis_coords,
    kernel,
    signature,
)
from . import model
from .model import DIM, Vec, herm, norm, smul, sub

NCOORD = 2 * DIM
_EPS = np.array([-1] + [1] * (DIM - 1), dtype=np.int64)

# --------------------------------------------------------------------------
# scalar predicates


@dataclass(frozen=True)
class SqDistance:
    kind: str  # "cosh2" or "sinh2"
    value: RealQuad

    def __post_init__(self):
        if self.kind not in ("cosh2", "sinh2"):
            raise ValueError(self.kind)
        floor = 1 if self.kind == "cosh2" else 0
        if real_sign(self.value - floor) < 0:
            raise ValueError(f"{self.kind} value below {floor}")


def _real_part(x: CycElem, what: str) -> RealQuad:
    if not x.is_real():
        raise ValueError(f"{what} is not real")
    return x.re


def _negative_norm(v: Sequence) -> RealQuad:
    n = _real_part(norm(v), "norm")
    if real_sign(n) >= 0:
        raise ValueError("point of the ball needs negative norm")
    return n


def cosh_sq_dist(v: Sequence, w: Sequence) -> SqDistance:
    """cosh^2 of the distance between the negative lines of v and w."""
    nv, nw = _negative_norm(v), _negative_norm(w)
    return SqDistance("cosh2", herm(v, w).abs2() / (nv * nw))


def sinh_sq_dist_to_mirror(v: Sequence, s: Sequence) -> SqDistance:
    """sinh^2 of the distance from the point v to the mirror of the root s."""
    nv = _negative_norm(v)
    ns = _real_part(norm(s), "root norm")
    if ns != 3:
        raise ValueError("mirror needs a norm 3 root")
    return SqDistance("sinh2", -herm(v, s).abs2() / (nv * ns))


def sinh_sum_below(sinh2_a, cosh2_b, sinh2_bound) -> bool:
    """Decide asinh(sqrt a) + acosh(sqrt b) < asinh(sqrt c) exactly.

    Applying sinh to both sides gives sqrt(ab) + sqrt((1+a)(b-1)) < sqrt(c).
    Both sides are nonnegative, so we square twice, checking signs in between.
    """
    a, b, c = (RealQuad.coerce(x) for x in (sinh2_a, cosh2_b, sinh2_bound))
    if real_sign(a) < 0 or real_sign(b - 1) < 0 or real_sign(c) < 0:
        raise ValueError("arguments out of range")
    u2 = a * b
    v2 = (1 + a) * (b - 1)
    rest = c - u2 - v2  # need 2uv < rest
    if real_sign(rest) <= 0:
        return False
    return real_sign(rest * rest - 4 * u2 * v2) > 0


CRITICAL_SINH2 = (Fraction(0), Fraction(1, 3), Fraction(1), Fraction(4, 3), Fraction(7, 3))
# |<s, center>|^2 for a root in batch n around a norm -3 center
BATCH_PAIRING = (0, 3, 9, 12, 21)


def batch_of_pairing(p2: int) -> int:
    try:
        return BATCH_PAIRING.index(int(p2))
    except ValueError:
        return -1


# --------------------------------------------------------------------------
# integer root arrays


def to_array(vectors: Iterable[Sequence]) -> np.ndarray:
    rows = [eis_coords(v) for v in vectors]
    return np.array(rows, dtype=np.int64).reshape(len(rows), NCOORD)


def vector_of(row: Sequence[int]) -> Vec:
    return from_eis_coords([int(x) for x in row])


def array_norms(arr: np.ndarray) -> np.ndarray:
    m = arr[:, 0::2].astype(np.int64)
    n = arr[:, 1::2].astype(np.int64)
    return (m * m - m * n + n * n) @ _EPS


def rotate_unit(arr: np.ndarray, k: int) -> np.ndarray:
    """Multiply every coordinate by zeta^k, zeta = 1 + omega = -omega_bar (a primitive 6th root)."""
    out = arr
    for _ in range(k % 6):
        m, n = out[:, 0::2], out[:, 1::2]
        nxt = np.empty_like(out)
        nxt[:, 0::2] = m - n
        nxt[:, 1::2] = m
        out = nxt
    return out


def canonical_units(arr: np.ndarray) -> np.ndarray:
    """One representative per unit class: the first nonzero coordinate m + n*omega is
    rotated into the sector n >= 0, m > n (a fundamental domain for the six units)."""
    if len(arr) == 0:
        return arr.copy()
    nz = (arr[:, 0::2] != 0) | (arr[:, 1::2] != 0)
    if not nz.any(axis=1).all():
        raise ValueError("zero vector has no unit class")
    first = nz.argmax(axis=1)
    idx = np.arange(len(arr))
    m = arr[idx, 2 * first].copy()
    n = arr[idx, 2 * first + 1].copy()
    power = np.full(len(arr), -1, dtype=np.int64)
    for k in range(6):
        hit = (power < 0) & (n >= 0) & (m > n)
        power[hit] = k
        m, n = m - n, m
    out = arr.copy()
    for k in range(1, 6):
        sel = power == k
        if sel.any():
            out[sel] = rotate_unit(arr[sel], k)
    return out


def unique_rows(arr: np.ndarray) -> np.ndarray:
    if len(arr) == 0:
        return arr.reshape(0, NCOORD)
    return np.unique(arr, axis=0)


def scalar_classes(arr: np.ndarray) -> np.ndarray:
    """Sorted canonical representatives of the scalar classes of roots in arr."""
    return unique_rows(canonical_units(arr))


def row_keys(arr: np.ndarray) -> set[bytes]:
    a = np.ascontiguousarray(arr.astype(np.int64))
    return {r.tobytes() for r in a}


def contains_rows(haystack: np.ndarray, needles: np.ndarray) -> np.ndarray:
    keys = row_keys(haystack)
    a = np.ascontiguousarray(needles.astype(np.int64))
    return np.array([r.tobytes() in keys for r in a], dtype=bool)


@dataclass(frozen=True)
class Pairing:
    """2*D*<s, w> = (P + Q sqrt3) + i (R + S sqrt3) for every row s of an array."""

    P: np.ndarray
    Q: np.ndarray
    R: np.ndarray
    S: np.ndarray
    D: int

    @property
    def is_zero(self) -> np.ndarray:
        return (self.P == 0) & (self.Q == 0) & (self.R == 0) & (self.S == 0)

    def abs2_parts(self) -> tuple[np.ndarray, np.ndarray, int]:
        """(A, B, den) with |<s,w>|^2 = (A + B sqrt3) / den."""
        P, Q, R, S = (x.astype(object) if x.dtype == object else x for x in (self.P, self.Q, self.R, self.S))
        A = P * P + 3 * Q * Q + R * R + 3 * S * S
        B = 2 * (P * Q + R * S)
        return A, B, 4 * self.D * self.D

    def value(self, i: int) -> CycElem:
        d = 2 * self.D
        return CycElem.from_parts(
            Fraction(int(self.P[i]), d), Fraction(int(self.Q[i]), d), Fraction(int(self.R[i]), d), Fraction(int(self.S[i]), d)
        )


def _vector_weights(w: Sequence) -> tuple[np.ndarray, int]:
    """Integer (14, 4) table D*eps_j*parts(conj(w_j)) and the common denominator D."""
    parts = [CycElem.coerce(x).conj().parts() for x in w]
    den = lcm(*(f.denominator for p in parts for f in p))
    tab = np.array([[int(f * den) for f in p] for p in parts], dtype=object)
    tab = tab * _EPS.astype(object)[:, None]
    return tab, den


def pairing(arr: np.ndarray, w: Sequence) -> Pairing:
    """Exact hermitian products <s, w> for all rows s (vectorized)."""
    tab, den = _vector_weights(w)
    big = max((abs(int(x)) for x in tab.flat), default=0)
    amax = int(np.abs(arr).max()) if len(arr) else 0
    # |K| <= 3*amax; sums run over 14 coordinates with factors up to 3
    safe = 14 * 3 * 3 * amax * big < 2**40
    dtype = np.int64 if safe else object
    m = arr[:, 0::2].astype(dtype)
    n = arr[:, 1::2].astype(dtype)
    K = 2 * m - n
    al, be, ga, de = (tab[:, k].astype(dtype) for k in range(4))
    P = K @ al - 3 * (n @ de)
    Q = K @ be - n @ ga
    R = K @ ga + 3 * (n @ be)
    S = K @ de + n @ al
    return Pairing(P, Q, R, S, den)


def quad_sign_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact sign of a + b*sqrt3 for integer arrays."""
    if a.dtype != object and b.dtype != object:
        lim = max(int(np.abs(a).max(initial=0)), int(np.abs(b).max(initial=0)))
        if lim >= 2**30:
            a, b = a.astype(object), b.astype(object)
    sa = np.sign(a).astype(np.int64)
    sb = np.sign(b).astype(np.int64)
    out = np.where(sb == 0, sa, sb)
    opp = (sa != 0) & (sb != 0) & (sa != sb)
    if opp.any():
        aa, bb = a[opp], b[opp]
        bigger_a = (aa * aa > 3 * bb * bb).astype(bool)
        out[opp] = np.where(bigger_a, sa[opp], sb[opp])
    return out


# --------------------------------------------------------------------------
# L4 and the c-adapted coordinates


@lru_cache(maxsize=None)
def l4_vectors(target_norm: int) -> np.ndarray:
    """Vectors of L4 of the given norm, as E-coordinates over its A4 basis (8 ints)."""
    k = GramLattice(model.a4_block_gram())
    vecs = enumerate_by_norm(k, target_norm)
    return np.array(vecs, dtype=np.int64).reshape(len(vecs), 8)


@lru_cache(maxsize=None)
def cbasis_conversion() -> np.ndarray:
    """Integer (28, 28) matrix taking c-coordinates (theta*a0, theta*a1, v...) to standard ones.

    Slot 0 and 1 carry a/theta and b/theta, so their basis vectors are c/theta and s0/theta.
    """
    cb = model.cbasis()
    base = [smul(THETA.inverse(), cb.vectors[0]), smul(THETA.inverse(), cb.vectors[1])] + list(cb.vectors[2:])
    rows = []
    for u in base:
        rows.append(eis_coords(u))
        rows.append(eis_coords(smul(OMEGA, u)))
    return np.array(rows, dtype=np.int64)


def c_to_standard(carr: np.ndarray) -> np.ndarray:
    return carr @ cbasis_conversion()


@dataclass(frozen=True)
class TableRow:
    batch: int
    a: EisInt
    bs: tuple[EisInt, ...]
    norms: tuple[int, int, int]
    listed: int  # the mirror count printed in the table
    label: str


def _units3(x: EisInt) -> tuple[EisInt, ...]:
    w = EisInt(0, 1)
    return (x, x * w, x * w * w)


def _pm_units3(x: EisInt) -> tuple[EisInt, ...]:
    return _units3(x) + _units3(-x)


THETA_E = EisInt(1, 2)

TABLE1: tuple[TableRow, ...] = (
    TableRow(0, EisInt(0), (EisInt(0),), (3, 0, 0), 120, "b=0; 3,0,0"),
    TableRow(0, EisInt(0), _pm_units3(THETA_E), (0, 0, 0), 1, "b=+-w^j theta; 0,0,0"),
    TableRow(1, EisInt(1), _units3(EisInt(1)), (3, 0, 0), 2160, "b=w^j; 3,0,0"),
    TableRow(1, EisInt(1), _units3(EisInt(-2)), (0, 0, 0), 3, "b=-2w^j; 0,0,0"),
    TableRow(2, THETA_E, (EisInt(0),), (6, 0, 0), 6480, "b=0; 6,0,0"),
    TableRow(2, THETA_E, (EisInt(0),), (3, 3, 0), 172800, "b=0; 3,3,0"),
    TableRow(2, THETA_E, _pm_units3(THETA_E), (3, 0, 0), 4320, "b=+-w^j theta; 3,0,0"),
    TableRow(3, EisInt(-2), _units3(EisInt(1)), (6, 0, 0), 6480, "b=w^j; 6,0,0"),
    TableRow(3, EisInt(-2), _units3(EisInt(1)), (3, 3, 0), 518400, "b=w^j; 3,3,0"),
    TableRow(3, EisInt(-2), _units3(EisInt(-2)), (3, 0, 0), 2160, "b=-2w^j; 3,0,0"),
    TableRow(3, EisInt(-2), _units3(EisInt(3, 1)) + _units3(EisInt(3) + EisInt(-1, -1)), (0, 0, 0), 6, "b=w^j(3+w or 3+wbar); 0,0,0"),
)


def _block_choices(pattern: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    return sorted(set(itertools.permutations(pattern)))


def _block_list(nrm: int) -> np.ndarray:
    if nrm == 0:
        return np.zeros((1, 8), dtype=np.int64)
    return l4_vectors(nrm)


def table_row_ccoords(row: TableRow) -> np.ndarray:
    """All c-coordinate vectors [a/theta, b/theta; v1; v2; v3] described by a table row."""
    chunks = []
    for perm in _block_choices(row.norms):
        lists = [_block_list(k) for k in perm]
        sizes = [len(x) for x in lists]
        total = sizes[0] * sizes[1] * sizes[2]
        grid = np.empty((total, 24), dtype=np.int64)
        grid[:, 0:8] = np.repeat(lists[0], sizes[1] * sizes[2], axis=0)
        grid[:, 8:16] = np.tile(np.repeat(lists[1], sizes[2], axis=0), (sizes[0], 1))
        grid[:, 16:24] = np.tile(lists[2], (sizes[0] * sizes[1], 1))
        for b in row.bs:
            head = np.array([row.a.m, row.a.n, b.m, b.n], dtype=np.int64)
            block = np.empty((total, NCOORD), dtype=np.int64)
            block[:, :4] = head
            block[:, 4:] = grid
            chunks.append(block)
    return np.concatenate(chunks) if chunks else np.zeros((0, NCOORD), dtype=np.int64)


class Falsification(AssertionError):
    """A computed object contradicts a claimed property."""


@dataclass
class RowResult:
    row: TableRow
    raw: int
    classes: np.ndarray  # canonical representatives, sorted

    @property
    def count(self) -> int:
        return len(self.classes)


@dataclass
class RootList:
    center: str
    batch: int
    sinh2: Fraction
    roots: np.ndarray  # canonical scalar-class representatives, sorted
    rows: list[RowResult] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.roots)


def build_table_row(row: TableRow) -> RowResult:
    for b in row.bs:
        if not eis_congruent(row.a, b):
            raise Falsification(f"{row.label}: a and b not congruent mod theta")
    carr = table_row_ccoords(row)
    std = c_to_standard(carr)
    bad = np.nonzero(array_norms(std) != 3)[0]
    if len(bad):
        raise Falsification(f"{row.label}: constructed vector of norm {array_norms(std[bad[:1]])[0]} != 3")
    classes = scalar_classes(std)
    return RowResult(row, len(std), classes)


def eis_congruent(a: EisInt, b: EisInt) -> bool:
    return (a - b).divisible_by_theta()


def enumerate_table1(n: int) -> RootList:
    """Batch n roots around c built from the rows of the table (one rep per scalar class)."""
    if n not in (0, 1, 2, 3):
        raise ValueError("batches 0..3 only")
    results = [build_table_row(r) for r in TABLE1 if r.batch == n]
    allc = np.concatenate([r.classes for r in results])
    union = unique_rows(allc)
    if len(union) != len(allc):
        raise Falsification(f"batch {n}: table rows overlap")
    return RootList("c", n, CRITICAL_SINH2[n], union, results)


# --------------------------------------------------------------------------
# generic enumeration around a norm -3 lattice vector


def _eis_gcd(a: EisInt, b: EisInt) -> EisInt:
    while b:
        q = _eis_round_div(a, b)
        a, b = b, a - q * b
    return a


def _eis_round_div(a: EisInt, b: EisInt) -> EisInt:
    num = a * b.conj()
    d = b.norm()
    # nearest lattice point to (num.m + num.n*omega)/d in coordinates (m, n)
    best = None
    mb, nb = Fraction(num.m, d), Fraction(num.n, d)
    for dm in (0, 1):
        for dn in (0, 1):
            cand = EisInt(int(mb // 1) + dm, int(nb // 1) + dn)
            r = a - cand * b
            if best is None or r.norm() < best[0]:
                best = (r.norm(), cand)
    return best[1]


@dataclass
class CenterData:
    center: Vec
    basis: list[Vec]  # Z-basis of L in standard coordinates
    basis_arr: np.ndarray  # its (28, 28) integer coordinates
    functional: list[EisInt]  # <b_k, center>
    ideal_gen: EisInt
    kernel_arr: np.ndarray  # Z-basis of M = center-perp in L (LLL-reduced), (26, 28)
    kernel_gram: list[list[Fraction]]  # Re<,> on that basis


@lru_cache(maxsize=None)
def _l_basis() -> tuple[list[Vec], np.ndarray]:
    span = model.lattice_L()
    basis = span.basis()
    return basis, np.array([eis_coords(b) for b in basis], dtype=np.int64)


def prepare_center(center: Sequence) -> CenterData:
    center = tuple(CycElem.coerce(x) for x in center)
    if norm(center) != -3:
        raise ValueError("center must have norm -3")
    if not model.lattice_L().contains(center):
        raise ValueError("center is not a lattice vector")
    basis, barr = _l_basis()
    func = [EisInt.from_cyc(herm(b, center)) for b in basis]
    g = EisInt(0)
    for f in func:
        g = _eis_gcd(f, g) if g else f
    # kernel of x -> sum x_k <b_k, center> over Z
    h = hnf([[f.m, f.n] for f in func])
    karr = np.array(h.kernel, dtype=np.int64) @ barr
    kvecs = [vector_of(r) for r in karr]
    gram = [[herm(u, v).re.a if herm(u, v).re.b == 0 else None for v in kvecs] for u in kvecs]
    if any(x is None for r in gram for x in r):
        raise Falsification("Re<,> leaves Q on the complement")
    t = lll_gram(gram)
    karr = np.array(t, dtype=np.int64) @ karr
    kvecs = [vector_of(r) for r in karr]
    gram = [[herm(u, v).re.a for v in kvecs] for u in kvecs]
    return CenterData(center, basis, barr, func, g, karr, gram)


def _ideal_elements(gen: EisInt, max_abs2: Fraction) -> list[EisInt]:
    """Elements of gen*E of squared absolute value <= max_abs2, one per unit class (plus 0)."""
    if max_abs2 < 0:
        return []
    gnorm = gen.norm()
    # q = x gen with |q|^2 = |x|^2 |gen|^2; enumerate x in E with |x|^2 <= bound
    bound = Fraction(max_abs2) / gnorm
    a2 = [[Fraction(1), Fraction(-1, 2)], [Fraction(-1, 2), Fraction(1)]]
    xs = enumerate_quadratic(a2, bound)
    out = {}
    for m, n in xs:
        q = EisInt(m, n) * gen
        key = _unit_canonical(q)
        out[(key.m, key.n)] = key
    return sorted(out.values(), key=lambda e: (e.norm(), e.m, e.n))


def _unit_canonical(x: EisInt) -> EisInt:
    if not x:
        return x
    zeta = EisInt(1, 1)
    for _ in range(6):
        if x.n >= 0 and x.m > x.n:
            return x
        x = x * zeta
    raise AssertionError("unreachable")


def enumerate_roots_bounded(
    center: Sequence, max_pairing, data: Optional[CenterData] = None, name: str = "custom"
) -> RootList:
    """All scalar classes of roots s with |<s, center>|^2 <= max_pairing.

    s = s_p + m where p = <s, center> runs over the ideal of attainable pairings
    (up to units), s_p is a fixed lattice vector with that pairing, and m runs over the
    positive definite lattice M = center-perp in L.  The orthogonal projection of s to
    center-perp has norm 3 + |p|^2/3, which bounds m exactly.
    """
    bound = Fraction(max_pairing)
    if bound < 0:
        return RootList(name, -1, Fraction(-1), np.zeros((0, NCOORD), dtype=np.int64))
    d = data or prepare_center(center)
    chunks = [_coset_roots(d, p, Fraction(-3)) for p in _ideal_elements(d.ideal_gen, bound)]
    allr = np.concatenate(chunks) if chunks else np.zeros((0, NCOORD), dtype=np.int64)
    return RootList(name, -1, bound / 9, scalar_classes(allr))


def _coset_job(args) -> np.ndarray:
    d, p = args
    return _coset_roots(d, p, Fraction(-3))


def enumerate_batches(center: Sequence, max_batch: int, name: str = "custom",
                      data: Optional[CenterData] = None, workers: int = 1) -> dict[int, RootList]:
    """Scalar classes of batch 0..max_batch roots around a norm -3 lattice vector, split by batch.

    Cosets of the pairing value are independent; ``workers > 1`` spreads them over
    processes.  The result is sorted, so it does not depend on the worker count.
    """
    if not 0 <= max_batch < len(BATCH_PAIRING):
        raise ValueError("batch out of range")
    if workers < 1:
        raise ValueError("workers must be positive")
    d = data or prepare_center(center)
    ps = _ideal_elements(d.ideal_gen, Fraction(BATCH_PAIRING[max_batch]))
    if workers == 1:
        chunks = [_coset_job((d, p)) for p in ps]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_coset_job, [(d, p) for p in ps]))
    out: dict[int, list[np.ndarray]] = {n: [] for n in range(max_batch + 1)}
    for p, arr in zip(ps, chunks):
        n = batch_of_pairing(p.norm())
        if n < 0:
            # pairing value strictly between critical values: no roots may exist there
            if len(arr):
                raise Falsification(f"root with |<s,center>|^2 = {p.norm()} off the critical list")
            continue
        out[n].append(arr)
    res = {}
    for n, chunks in out.items():
        arr = np.concatenate(chunks) if chunks else np.zeros((0, NCOORD), dtype=np.int64)
        res[n] = RootList(name, n, CRITICAL_SINH2[n], scalar_classes(arr))
    return res


def _coset_roots(d: CenterData, p: EisInt, cnorm: Fraction) -> np.ndarray:
    h = hnf([[f.m, f.n] for f in d.functional])
    x = h.solve([p.m, p.n])
    if x is None:
        raise Falsification(f"pairing {p} not attained")
    sp_arr = np.array(x, dtype=np.int64) @ d.basis_arr
    sp = vector_of(sp_arr)
    # w0 = projection of s_p to center-perp
    alpha = p.to_cyc() / CycElem(cnorm)
    w0 = sub(sp, smul(alpha, d.center))
    target = Fraction(3) - Fraction(p.norm()) / cnorm
    kvecs = [vector_of(r) for r in d.kernel_arr]
    rhs = [herm(w0, k).re for k in kvecs]
    if any(r.b for r in rhs):
        raise Falsification("projection leaves the rational span")
    # coordinates c of w0 in the kernel basis: G c = rhs
    ginv = _ginv_cache(d)
    c = [sum(ginv[i][j] * rhs[j].a for j in range(len(rhs))) for i in range(len(rhs))]
    xs = enumerate_quadratic(d.kernel_gram, target, center=[-ci for ci in c], exact=True)
    if not xs:
        return np.zeros((0, NCOORD), dtype=np.int64)
    X = np.array(xs, dtype=np.int64)
    return X @ d.kernel_arr + sp_arr


_GINV: dict[int, list] = {}


def _ginv_cache(d: CenterData):
    key = id(d)
    if key not in _GINV:
        from .intlin import rational_inverse

        _GINV[key] = rational_inverse(d.kernel_gram)
    return _GINV[key]


# --------------------------------------------------------------------------
# polygons and mirrors


@dataclass(frozen=True)
class Polygon:
    """Totally real polygon given by vertex vectors in cyclic order."""

    vertices: tuple[Vec, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) not in (3, 4) or len(self.names) != len(self.vertices):
            raise ValueError("polygon needs 3 or 4 named vertices")
        for i, u in enumerate(self.vertices):
            for j, v in enumerate(self.vertices):
                x = herm(u, v)
                if not x.is_real() or real_sign(x.re) >= 0:
                    raise ValueError(f"<{self.names[i]},{self.names[j]}> is not real negative")

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[frozenset[int]]:
        n = self.size
        return [frozenset((i, (i + 1) % n)) for i in range(n)]


MISS, VERTEX, EDGE, INTERIOR, WHOLE = "Miss", "VertexOnly", "EdgeSegment", "InteriorCrossing", "WholePolygon"
_CODES = {MISS: 0, VERTEX: 1, EDGE: 2, INTERIOR: 3, WHOLE: 4}
_NAMES = {v: k for k, v in _CODES.items()}


@dataclass(frozen=True)
class MirrorHit:
    outcome: str
    face: frozenset  # vertex names carrying the zero locus (empty for Miss)
    zeros: frozenset  # vertex names with <v, s> = 0

    def __str__(self):
        inner = ",".join(sorted(self.face))
        return f"{self.outcome}({inner})" if self.face else self.outcome


def _cross_sign(a, b) -> int:
    return real_sign(a[0] * b[1] - a[1] * b[0])


def _dot_sign(a, b) -> int:
    return real_sign(a[0] * b[0] + a[1] * b[1])


def _in_cone(t, ws) -> bool:
    """Is the plane vector t a nonnegative combination of the nonzero vectors ws?"""
    for w in ws:
        if _cross_sign(t, w) == 0 and _dot_sign(t, w) > 0:
            return True
    for w1, w2 in itertools.combinations(ws, 2):
        cr = _cross_sign(w1, w2)
        if cr == 0:
            continue
        if _cross_sign(t, w2) * cr >= 0 and _cross_sign(w1, t) * cr >= 0:
            return True
    return False


def support_of_zero(points: Sequence[tuple[RealQuad, RealQuad]]) -> tuple[set[int], set[int]]:
    """(support, zeros): indices k with lambda_k > 0 in some lambda >= 0, lambda != 0, sum lambda_k z_k = 0."""
    zeros = {k for k, (x, y) in enumerate(points) if not x and not y}
    nonzero = [k for k in range(len(points)) if k not in zeros]
    support = set(zeros)
    for k in nonzero:
        t = (-points[k][0], -points[k][1])
        others = [points[j] for j in nonzero if j != k]
        if _in_cone(t, others):
            support.add(k)
    return support, zeros


def _outcome(support: set[int], zeros: set[int], n: int) -> str:
    if len(zeros) == n:
        return WHOLE
    if not support:
        return MISS
    if len(support) == 1:
        return VERTEX
    if len(support) == 2 and frozenset(support) in {frozenset((i, (i + 1) % n)) for i in range(n)}:
        return EDGE
    return INTERIOR


def mirror_polygon_classify(s: Sequence, poly: Polygon) -> MirrorHit:
    """Minimal face of the polygon carrying its intersection with the mirror of s.

    x -> <x, s> is real-linear on the real cone over the vertices, so the mirror
    meets the polygon exactly where a nonnegative combination of the values
    z_k = <v_k, s> vanishes.
    """
    pts = []
    for v in poly.vertices:
        z = herm(v, s)
        pts.append((z.re, z.im))
    support, zeros = support_of_zero(pts)
    out = _outcome(support, zeros, poly.size)
    face = frozenset() if out == MISS else frozenset(poly.names[k] for k in (support if out != WHOLE else range(poly.size)))
    return MirrorHit(out, face, frozenset(poly.names[k] for k in zeros))


@dataclass
class BulkHits:
    """Classification of many roots against one polygon."""

    codes: np.ndarray  # outcome code per row
    faces: np.ndarray  # bitmask of support vertices (exact rows and non-miss rows)
    zeros: np.ndarray  # bitmask of zero vertices
    exact_rows: int  # rows with a zero value or a collinear pair

    def outcome(self, i: int) -> str:
        return _NAMES[int(self.codes[i])]


def _mask_names(mask: int, names: Sequence[str]) -> frozenset:
    return frozenset(n for k, n in enumerate(names) if mask >> k & 1)


def _exact_sign_pairs(a: Pairing, b: Pairing) -> tuple[np.ndarray, np.ndarray]:
    """Signs of cross(z_a, z_b) and dot(z_a, z_b) for plane points z = (Re, Im), exactly."""
    ca = a.P * b.R + 3 * a.Q * b.S - a.R * b.P - 3 * a.S * b.Q
    cb = a.P * b.S + a.Q * b.R - a.R * b.Q - a.S * b.P
    da = a.P * b.P + 3 * a.Q * b.Q + a.R * b.R + 3 * a.S * b.S
    db = a.P * b.Q + a.Q * b.P + a.R * b.S + a.S * b.R
    return quad_sign_array(ca, cb), quad_sign_array(da, db)


def classify_array(arr: np.ndarray, poly: Polygon) -> BulkHits:
    """Vectorized exact classification.

    Vertex k is in the support when z_k = 0 or -z_k lies in the cone of the other
    nonzero values: either opposite to one of them, or between two independent
    ones.  All tests are exact signs of a + b sqrt3.
    """
    n = poly.size
    N = len(arr)
    prs = [pairing(arr, v) for v in poly.vertices]
    zero = np.zeros(N, dtype=np.int64)
    nz = []
    for k, p in enumerate(prs):
        zero |= p.is_zero.astype(np.int64) << k
        nz.append(~p.is_zero)
    cross, dot = {}, {}
    for i, j in itertools.combinations(range(n), 2):
        c, d = _exact_sign_pairs(prs[i], prs[j])
        cross[(i, j)], cross[(j, i)] = c, -c
        dot[(i, j)] = dot[(j, i)] = d
    support = zero.copy()
    for k in range(n):
        hit = np.zeros(N, dtype=bool)
        others = [j for j in range(n) if j != k]
        for j in others:
            hit |= nz[j] & (cross[(k, j)] == 0) & (dot[(k, j)] < 0)
        for i, j in itertools.combinations(others, 2):
            cr = cross[(i, j)]
            hit |= nz[i] & nz[j] & (cr != 0) & (-cross[(k, j)] * cr >= 0) & (cross[(k, i)] * cr >= 0)
        support |= (hit & nz[k]).astype(np.int64) << k
    size = np.zeros(N, dtype=np.int64)
    for k in range(n):
        size += (support >> k) & 1
    edges = np.zeros(N, dtype=bool)
    for k in range(n):
        edges |= support == ((1 << k) | (1 << ((k + 1) % n)))
    full = (1 << n) - 1
    codes = np.full(N, _CODES[INTERIOR], dtype=np.int64)
    codes[(size == 2) & edges] = _CODES[EDGE]
    codes[size == 1] = _CODES[VERTEX]
    codes[size == 0] = _CODES[MISS]
    codes[zero == full] = _CODES[WHOLE]
    faces = np.where(zero == full, full, support)
    degenerate = (zero != 0) | np.any([cross[(i, j)] == 0 for i, j in itertools.combinations(range(n), 2)], axis=0)
    return BulkHits(codes, faces, zero, int(degenerate.sum()))


def polygon_case(case: str) -> tuple[Polygon, Vec, tuple[str, str]]:
    """The polygon, its designated root and the designated edge for 'A', 'B' or 'Q'."""
    pv = model.polygon_vertices(case)
    order = pv["order"]
    poly = Polygon(tuple(pv[k] for k in order), tuple(order))
    edge = ("tau'", "rho'") if case == "Q" else ("tau'", "rho")
    return poly, pv["root"], edge


@lru_cache(maxsize=None)
def l4_first_block_classes() -> np.ndarray:
    """The 40 scalar classes of roots of L4 spanned by sA..sD (the mirrors containing the 9-ball)."""
    v = l4_vectors(3)
    carr = np.zeros((len(v), NCOORD), dtype=np.int64)
    carr[:, 4:12] = v
    return scalar_classes(c_to_standard(carr))


def canonical_row(v: Sequence) -> np.ndarray:
    return canonical_units(to_array([v]))[0]


def _key(row: np.ndarray) -> bytes:
    return np.ascontiguousarray(row.astype(np.int64)).tobytes()


# --------------------------------------------------------------------------
# verification drivers

from .report import Report  # noqa: E402


def union_classes(*lists: np.ndarray) -> np.ndarray:
    arrs = [a for a in lists if len(a)]
    if not arrs:
        return np.zeros((0, NCOORD), dtype=np.int64)
    return unique_rows(np.concatenate(arrs))


def verify_table1(table: Optional[dict[int, RootList]] = None) -> Report:
    rep = Report("batches", "tabulated batch counts around c")
    table = table or {n: enumerate_table1(n) for n in range(4)}
    total = 0
    for n in range(4):
        for rr in table[n].rows:
            rep.check(
                f"batch{n}[{rr.row.label}]",
                rr.count == rr.row.listed,
                {"computed": rr.count, "listed": rr.row.listed, "raw_roots": rr.raw},
            )
        total += table[n].count
    listed_total = sum(r.listed for r in TABLE1)
    rep.check("total", total == listed_total, {"computed": total, "listed_column_sum": listed_total})
    return rep.finish()


def verify_oracle_agreement(table: dict[int, RootList], generic: dict[int, RootList]) -> Report:
    rep = Report("batches", "table constructor vs generic enumerator around c")
    for n in range(4):
        a, b = table[n].roots, generic[n].roots
        same = a.shape == b.shape and np.array_equal(a, b)
        wit = {"table": len(a), "generic": len(b)}
        if not same:
            ka, kb = row_keys(a), row_keys(b)
            wit.update(only_table=len(ka - kb), only_generic=len(kb - ka))
        rep.check(f"batch{n}", same, wit)
    return rep.finish()


def _cover_expected() -> dict[tuple[str, str, str], RealQuad]:
    F = Fraction
    shared = {
        ("pinf", "tau"): RealQuad(F(1, 2), F(2, 3)),
        ("pinf", "m"): RealQuad(F(1303, 1034), F(1676, 1551)),
        ("c", "m"): RealQuad(F(794, 517), F(1376, 1551)),
        ("c", "rho"): RealQuad(F(5, 4), F(13, 18)),
    }
    out = {}
    for case in "ABQ":
        for (ctr, pt), val in shared.items():
            out[(case, ctr, pt)] = val
        out[(case, "c", "m'")] = RealQuad(F(1994, 1319), F(1152, 1319)) if case == "Q" else RealQuad(F(1828, 1195), F(1056, 1195))
        out[(case, "pinf", "tau'")] = RealQuad(F(320, 429), F(96, 143)) if case == "A" else RealQuad(F(59, 143), F(96, 143))
    out[("A", "pinf", "m'")] = RealQuad(F(4996, 3585), F(256, 239))
    out[("B", "pinf", "m'")] = RealQuad(F(1483, 1195), F(1296, 1195))
    out[("Q", "pinf", "m'")] = RealQuad(F(3103, 2638), F(1452, 1319))
    out[("Q", "c", "rho'")] = RealQuad(F(443, 359), F(256, 359))
    return out


def verify_polygon_cover() -> Report:
    """Polygons lie inside the union of the fourth critical balls around pinf and c."""
    rep = Report("geometry", "polygons covered by fourth critical balls")
    sp = model.special_points()
    centers = {"pinf": sp["pinf"], "c": sp["c"]}
    expected = _cover_expected()
    bound = RealQuad(Fraction(10, 3))
    for case in "ABQ":
        pv = model.polygon_vertices(case)
        near = {"pinf": ["tau", "tau'", "m", "m'"], "c": ["m", "m'", "rho"] + (["rho'"] if case == "Q" else [])}
        for ctr, pts in near.items():
            for pt in pts:
                val = cosh_sq_dist(centers[ctr], pv[pt]).value
                exp = expected[(case, ctr, pt)]
                rep.check(f"{case}:cosh2 d({ctr},{pt})", val == exp, {"computed": val, "closed_form": exp})
                rep.check(f"{case}:d({ctr},{pt})<r4", real_sign(bound - val) > 0, {"radicand": val})
    distinct = sorted({str(v) for v in expected.values()})
    rep.check("closed_forms_distinct_count", len(distinct) == 12, {"count": len(distinct)})
    return rep.finish()


def verify_polygon_classification(mirrors: np.ndarray, pinf_mirrors: Optional[np.ndarray] = None) -> Report:
    """Classify every given mirror against the three polygons.

    ``mirrors`` holds scalar-class representatives (batch <= 3 around c, optionally
    already merged with those around pinf)."""
    rep = Report("geometry", "polygons meet only the stated mirrors")
    allm = union_classes(mirrors, pinf_mirrors) if pinf_mirrors is not None else mirrors
    l4 = l4_first_block_classes()
    l4keys = row_keys(l4)
    for case in "ABQ":
        poly, root, edge = polygon_case(case)
        hits = classify_array(allm, poly)
        droot = _key(canonical_row(root))
        expected: dict[bytes, tuple[str, frozenset]] = {}
        for k in l4keys:
            expected[k] = (EDGE, frozenset(("rho", "rho'"))) if case == "Q" else (VERTEX, frozenset(("rho",)))
        expected[droot] = (EDGE, frozenset(edge))
        nonmiss = np.nonzero(hits.codes != _CODES[MISS])[0]
        found = {}
        for r in nonmiss:
            found[_key(allm[r])] = (hits.outcome(r), _mask_names(int(hits.faces[r]), poly.names))
        missing = [k for k in expected if k not in found]
        wrong = [k for k in found if found[k] != expected.get(k)]
        tally: dict[str, int] = {}
        for o, f in found.values():
            label = f"{o}({','.join(sorted(f))})"
            tally[label] = tally.get(label, 0) + 1
        rep.check(
            f"{case}:pattern",
            not missing and not wrong,
            {"mirrors_tested": len(allm), "non_miss": len(found), "tally": tally,
             "missing": len(missing), "unexpected": len(wrong), "exact_path_rows": hits.exact_rows},
        )
        want = 41 if case == "Q" else 40
        rep.check(f"{case}:non_miss_count", len(found) == want, {"count": len(found), "expected": want})
        rep.check(f"{case}:designated", found.get(droot) == expected[droot], {"hit": found.get(droot)})
    return rep.finish()


def _sinh2_parts(arr: np.ndarray, point: Sequence):
    """(A, B, den, zero) with |<s, point>|^2 = (A + B sqrt3)/den for each row."""
    pr = pairing(arr, point)
    A, B, den = pr.abs2_parts()
    return A, B, den, pr.is_zero


def _exact_argmin(A: np.ndarray, B: np.ndarray, mask: np.ndarray) -> tuple[int, np.ndarray]:
    """Index of a minimum of A + B sqrt3 over mask, and the mask of all rows attaining it."""
    idx = np.nonzero(mask)[0]
    approx = A[idx].astype(float) + B[idx].astype(float) * np.sqrt(3.0)
    cand = int(idx[int(np.argmin(approx))])
    while True:
        sg = quad_sign_array(A[idx] - A[cand], B[idx] - B[cand])
        lower = idx[sg < 0]
        if len(lower) == 0:
            break
        cand = int(lower[0])
    ties = np.zeros(len(A), dtype=bool)
    ties[idx[sg == 0]] = True
    return cand, ties


def verify_nearest_to_rho(c_mirrors: np.ndarray) -> Report:
    """Nearest mirrors to rho that miss it are s0..s11."""
    rep = Report("geometry", "nearest mirrors to rho")
    sp = model.special_points()
    rho, c = sp["rho"], sp["c"]
    x = RealQuad(Fraction(-1, 12), Fraction(1, 18))
    y = RealQuad(Fraction(5, 4), Fraction(13, 18))
    s0 = model.named_roots()["s0"]
    rep.check("sinh2 d(rho,s0)", sinh_sq_dist_to_mirror(rho, s0).value == x, {"value": x})
    rep.check("cosh2 d(c,rho)", cosh_sq_dist(c, rho).value == y, {"value": y})
    rep.check("sinh_sum_inequality", sinh_sum_below(x, y, Fraction(7, 3)), {"sinh2": x, "cosh2": y, "bound": Fraction(7, 3)})
    A, B, den, zero = _sinh2_parts(c_mirrors, rho)
    through = c_mirrors[zero]
    rep.check(
        "mirrors_through_rho_are_L4",
        len(through) == 40 and np.array_equal(unique_rows(through), l4_first_block_classes()),
        {"count": len(through)},
    )
    cand, ties = _exact_argmin(A, B, ~zero)
    rnorm = norm(rho).re
    val = -RealQuad(Fraction(int(A[cand]), den), Fraction(int(B[cand]), den)) / (rnorm * 3)
    rep.check("min_sinh2", val == x, {"min": val})
    gon = scalar_classes(to_array(model.twelve_gon_and_a4()[0]))
    rep.check("achievers_are_s0..s11", int(ties.sum()) == 12 and np.array_equal(unique_rows(c_mirrors[ties]), gon),
              {"count": int(ties.sum())})
    return rep.finish()


def verify_nearest_tau(pinf_batches: dict[int, RootList]) -> Report:
    """The 26 point and line mirrors are strictly closest to tau; none passes through it."""
    rep = Report("geometry", "nearest mirrors to tau")
    sp = model.special_points()
    tau, pinf = sp["tau"], sp["pinf"]
    roots = model.build_roots()
    dp = sinh_sq_dist_to_mirror(tau, roots["p1"]).value
    dl = sinh_sq_dist_to_mirror(tau, roots["l1"]).value
    closed = RealQuad(6, 8).inverse()  # = (-3 + 4 sqrt3)/78
    rep.check("sinh2 d(tau,p1)", dp == closed, {"value": dp})
    rep.check("d(tau,p1)=d(tau,l1)", dp == dl, {"l1": dl})
    y = cosh_sq_dist(pinf, tau).value
    rep.check("batches_0..2_suffice", sinh_sum_below(dp, y, CRITICAL_SINH2[3]), {"sinh2": dp, "cosh2": y})
    mirrors = union_classes(*(pinf_batches[n].roots for n in range(3)))
    A, B, den, zero = _sinh2_parts(mirrors, tau)
    rep.check("no_mirror_through_tau", not zero.any(), {"count": int(zero.sum())})
    cand, ties = _exact_argmin(A, B, ~zero)
    tnorm = norm(tau).re
    val = -RealQuad(Fraction(int(A[cand]), den), Fraction(int(B[cand]), den)) / (tnorm * 3)
    named = scalar_classes(to_array(model.root_list()))
    rep.check("min_sinh2", val == dp, {"min": val})
    rep.check("achievers_are_26", int(ties.sum()) == 26 and np.array_equal(unique_rows(mirrors[ties]), named),
              {"count": int(ties.sum()), "mirrors_tested": len(mirrors)})
    return rep.finish()


def triflection_apply(x: Sequence, s: Sequence, unit: CycElem = OMEGA) -> Vec:
    """x - (1 - unit) <x,s>/<s,s> s."""
    return sub(tuple(x), smul((ONE - unit) * herm(x, s) / norm(s), s))


def _l4_roots_vectors() -> list[Vec]:
    return [vector_of(r) for r in l4_first_block_classes()]


def sigma_criteria(t) -> dict:
    """Both computer checks for sigma_t; returns the verdicts and witnesses."""
    sigma = model.sigma_point(t).vector
    a4 = model.twelve_gon_and_a4()[1]
    a4keys = row_keys(scalar_classes(to_array(a4)))
    roots = _l4_roots_vectors()
    dist = {}
    for s in roots:
        dist[_key(canonical_row(s))] = (s, sinh_sq_dist_to_mirror(sigma, s).value)
    near = [dist[k][1] for k in dist if k in a4keys]
    far = [(k, v) for k, (_, v) in dist.items() if k not in a4keys]
    crit_a = all(real_sign(f - n) > 0 for n in near for _, f in far)
    images = []
    for s in a4:
        images.append(triflection_apply(sigma, s, OMEGA))
        images.append(triflection_apply(sigma, s, OMEGA_BAR))
    failures_b = []
    for k, _ in far:
        s = dist[k][0]
        proj = model.project_to_mirror(sigma, s)
        d_sigma = cosh_sq_dist(proj, sigma).value
        if not any(real_sign(d_sigma - cosh_sq_dist(proj, e).value) > 0 for e in images):
            failures_b.append(k)
    return {
        "t": Fraction(t),
        "nearest_ok": crit_a,
        "nearest": sorted(str(v) for v in near),
        "E_size": len({tuple(e) for e in images}),
        "E_ok": not failures_b,
        "E_failures": len(failures_b),
        "l4_classes": len(dist),
    }


def find_sigma_t(start=Fraction(1, 2), max_steps: int = 40) -> Optional[Fraction]:
    t = Fraction(start)
    for _ in range(max_steps):
        res = sigma_criteria(t)
        if res["nearest_ok"] and res["E_ok"] and res["E_size"] == 8:
            return t
        t /= 2
    return None


def verify_sigma_criteria(t=None, start=Fraction(1, 2)) -> Report:
    rep = Report("geometry", "sigma near rho: nearest mirrors and the set of images")
    if t is None:
        t = find_sigma_t(start)
        rep.check("t_found", t is not None, {"t": t, "search": "descending dyadic from " + str(start)})
        if t is None:
            return rep.finish()
    res = sigma_criteria(t)
    rep.check("nearest_four_are_sA..sD", res["nearest_ok"], {"t": res["t"], "nearest_sinh2": res["nearest"]})
    rep.check("E_has_8_points", res["E_size"] == 8, {"size": res["E_size"]})
    rep.check("other_36_closer_to_E", res["E_ok"], {"t": res["t"], "failures": res["E_failures"], "others": res["l4_classes"] - 4})
    return rep.finish()


# --------------------------------------------------------------------------
# mirrors meeting the Deligne-Mostow sub-ball


def mirror_meets_subball(s: Sequence) -> bool:
    """Does the mirror of s meet the 9-ball of vectors orthogonal to sA..sD?

    Decided by the inertia of the form on s-perp inside (sA..sD)-perp.
    """
    a4 = model.twelve_gon_and_a4()[1]
    rows = [[x.conj() for x in v] for v in list(a4) + [tuple(s)]]
    # x with <x, v> = sum eps_j x_j conj(v_j) = 0
    eqs = [[(-1 if j == 0 else 1) * r[j] for j in range(DIM)] for r in rows]
    basis = kernel(eqs)
    if not basis:
        return False
    gram = [[herm(u, v) for v in basis] for u in basis]
    _, neg, _ = signature(gram)
    return neg > 0


def _a4_inverse_form() -> tuple[np.ndarray, int]:
    """Integer matrix Qm and denominator with |proj of s to span(sA..sD)|^2 = X^T Qm X / den,
    X = Eisenstein coordinates of (<s, sA>, ..., <s, sD>)."""
    from .lattice import matrix_inverse, z_form_from_gram

    a4 = model.twelve_gon_and_a4()[1]
    g = [[herm(u, v) for v in a4] for u in a4]
    ginv = matrix_inverse(g)
    # projection p = sum c_k a_k with <p, a_l> = x_l, so x = G^T c and |p|^2 = x^H (G^T)^{-1}... in E-coordinates
    h = [[ginv[l][k] for l in range(4)] for k in range(4)]
    q = z_form_from_gram(h, scale=Fraction(1))
    den = lcm(*(x.denominator for r in q for x in r))
    return np.array([[int(x * den) for x in r] for r in q], dtype=np.int64), den


def subball_fast(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized criterion: (meets, contains_ball, orthogonal_to_A4) per row.

    The mirror of s meets the 9-ball iff s lies in span(sA..sD) (then it contains
    the ball) or the component of s orthogonal to sA..sD has positive norm.
    """
    a4 = model.twelve_gon_and_a4()[1]
    gon = model.twelve_gon_and_a4()[0]
    xs = []
    for a in a4:
        p = pairing(arr, a)
        # <s, a> lies in E: recover (m, n) from 2<s,a> = (P + i S sqrt3) (Q = R = 0 for Eisenstein a)
        if p.Q.any() or p.R.any():
            raise Falsification("pairing with an A4 root left Q(omega)")
        two_d = 2 * p.D
        n = p.S * 2 // two_d
        m = (p.P + p.S) // two_d
        xs.extend([m, n])
    X = np.stack(xs, axis=1).astype(np.int64)
    qm, den = _a4_inverse_form()
    q = np.einsum("ij,jk,ik->i", X, qm, X)
    contains = np.ones(len(arr), dtype=bool)
    for g in gon:
        contains &= pairing(arr, g).is_zero
    ortho = ~X.any(axis=1)
    meets = contains | (3 * den - q > 0)
    return meets, contains, ortho


def verify_subball_mirrors(c_mirrors: np.ndarray, sample: int = 200, seed: int = 0) -> Report:
    """Mirrors meeting the 9-ball: roots orthogonal to sA..sD, or the 40 containing it."""
    rep = Report("geometry", "mirrors meeting the Deligne-Mostow ball")
    nr = model.named_roots()
    rep.check("s0_meets", mirror_meets_subball(nr["s0"]))
    rep.check("sA_meets", mirror_meets_subball(nr["sA"]))
    meets, contains, ortho = subball_fast(c_mirrors)
    bad = meets & ~contains & ~ortho
    rep.check(
        "meeting_mirrors_are_DM_or_the_40",
        not bad.any() and int(contains.sum()) == 40,
        {"tested": len(c_mirrors), "meet": int(meets.sum()), "contain_ball": int(contains.sum()),
         "exceptions": int(bad.sum())},
    )
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(c_mirrors), size=min(sample, len(c_mirrors)), replace=False)
    forced = np.nonzero(meets)[0][:20]
    idx = np.unique(np.concatenate([idx, forced]))
    agree = [mirror_meets_subball(vector_of(c_mirrors[i])) == bool(meets[i]) for i in idx]
    rep.check("inertia_vs_fast_criterion", all(agree), {"sample": len(idx), "seed": seed, "disagree": agree.count(False)})
    return rep.finish()
