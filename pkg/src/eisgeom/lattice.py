"""Eisenstein lattices.

Graph lattices with the theta-weighted hermitian form, exact rank, radical and
inertia over Q(i, sqrt3), the integral Z-view under (2/3) Re<x,y>, theta-duality,
integral membership through Hermite normal form, exhaustive short-vector
enumeration (Fincke-Pohst with exact rational bounds) and the vector cache format.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import gmpy2
from gmpy2 import mpq

from .exactnum import (
    ONE,
    OMEGA,
    OMEGA_BAR,
    THETA,
    THETA_BAR,
    ZERO,
    CycElem,
    EisInt,
)
from .intlin import HNF, hnf, int_det, lll_gram

Matrix = list  # list of rows of CycElem
Vector = tuple  # tuple of CycElem


# --------------------------------------------------------------------------
# graphs and hermitian Grams


@dataclass(frozen=True)
class DirectedGraph:
    nodes: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if not (0 <= a < self.nodes and 0 <= b < self.nodes):
                raise ValueError(f"edge {(a, b)} has an endpoint outside 0..{self.nodes - 1}")
            if a == b:
                raise ValueError(f"self-loop at node {a}")
            if (a, b) in seen or (b, a) in seen:
                raise ValueError(f"repeated edge between {a} and {b}")
            seen.add((a, b))


def gram_from_graph(g: DirectedGraph) -> Matrix:
    """<e_a, e_b> = 3 on the diagonal, theta for an edge b -> a, conj(theta) for a -> b."""
    n = g.nodes
    gram = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        gram[a][a] = CycElem(3)
    for a, b in g.edges:
        gram[b][a] = THETA
        gram[a][b] = THETA_BAR
    return gram


def is_hermitian(gram: Matrix) -> bool:
    n = len(gram)
    return all(gram[i][j] == gram[j][i].conj() for i in range(n) for j in range(i, n))


def lorentz_form(x: Sequence, y: Sequence) -> CycElem:
    """<x,y> = -x0 conj(y0) + sum_k x_k conj(y_k)."""
    total = -(x[0] * y[0].conj())
    for a, b in zip(x[1:], y[1:]):
        if a and b:
            total = total + a * b.conj()
    return total


def gram_of(vectors: Sequence[Sequence], form=lorentz_form) -> Matrix:
    return [[form(u, v) for v in vectors] for u in vectors]


# --------------------------------------------------------------------------
# linear algebra over the field


def _echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q(i, sqrt3)."""
    a = [[CycElem.coerce(x) for x in r] for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((r for r in range(top, m) if a[r][col]), None)
        if piv is None:
            continue
        a[top], a[piv] = a[piv], a[top]
        inv = a[top][col].inverse()
        a[top] = [x * inv if x else x for x in a[top]]
        for r in range(m):
            if r != top and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y if y else x for x, y in zip(a[r], a[top])]
        pivots.append(col)
        top += 1
        if top == m:
            break
    return a[:top], pivots


def field_rank(rows: Sequence[Sequence]) -> int:
    return len(_echelon(rows)[1])


def kernel(rows: Sequence[Sequence]) -> list[list[CycElem]]:
    """Basis of {x : A x = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, pc in zip(red, pivots):
            v[pc] = -r[f]
        basis.append(v)
    return basis


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> Optional[list[CycElem]]:
    """One solution x of A x = rhs, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    red, pivots = _echelon(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, pc in zip(red, pivots):
        x[pc] = r[ncols]
    return x


def matrix_inverse(rows: Sequence[Sequence]) -> list[list[CycElem]]:
    n = len(rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def rank_and_radical(gram: Matrix) -> tuple[int, list[list[CycElem]]]:
    rad = kernel(gram)
    return len(gram) - len(rad), rad


def signature(gram: Matrix) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a hermitian matrix by symmetric pivoting."""
    if not is_hermitian(gram):
        raise ValueError("matrix is not hermitian")
    a = [[CycElem.coerce(x) for x in r] for r in gram]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + c e_j with c = a_ij makes the new diagonal 2|a_ij|^2 > 0
            c = a[i][j]
            _add_multiple(a, i, j, c)
            piv = i
        d = a[piv][piv]
        if not d.is_real():
            raise ArithmeticError("non-real pivot in hermitian elimination")
        s = d.re.sign()
        pos += s > 0
        neg += s < 0
        inv = d.inverse()
        active = [k for k in active if k != piv]
        for r in active:
            if a[r][piv]:
                _add_multiple(a, r, piv, -(a[r][piv] * inv))
    return pos, neg, n - pos - neg


def _add_multiple(a: Matrix, i: int, j: int, c: CycElem) -> None:
    """Congruence e_i <- e_i + c e_j applied to a hermitian matrix in place."""
    a[i] = [x + c * y if y else x for x, y in zip(a[i], a[j])]
    cc = c.conj()
    for row in a:
        if row[j]:
            row[i] = row[i] + row[j] * cc


# --------------------------------------------------------------------------
# lattices and their integral views


@dataclass
class GramLattice:
    """An Eisenstein lattice: hermitian Gram of an E-basis or generating set, optional coordinates."""

    gram: Matrix
    coords: Optional[list[Vector]] = None
    name: str = ""

    @property
    def rank(self) -> int:
        return rank_and_radical(self.gram)[0]

    @staticmethod
    def from_vectors(vectors: Sequence[Sequence], form=lorentz_form, name: str = "") -> "GramLattice":
        vs = [tuple(CycElem.coerce(x) for x in v) for v in vectors]
        return GramLattice(gram_of(vs, form), vs, name)


@dataclass
class ZLatticeView:
    """Integral symmetric matrix of (2/3) Re<x,y> on the Z-basis {e_k, omega e_k}."""

    matrix: list[list[int]]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> int:
        return int_det(self.matrix)

    def is_even(self) -> bool:
        return all(self.matrix[i][i] % 2 == 0 for i in range(self.dim))


def _two_thirds_re(x: CycElem) -> Fraction:
    r = Fraction(2, 3) * x.re
    if r.b:
        raise ValueError("form value leaves Q(omega)")
    return r.a


def z_form_from_gram(gram: Matrix, scale: Fraction = Fraction(2, 3)) -> list[list[Fraction]]:
    """scale * Re<,> on {e_1, w e_1, e_2, w e_2, ...} for an E-basis with the given Gram."""
    n = len(gram)
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        for l in range(n):
            h = gram[k][l]
            vals = (h, h * OMEGA_BAR, OMEGA * h, h)
            for (dk, dl), v in zip(((0, 0), (0, 1), (1, 0), (1, 1)), vals):
                re = v.re
                if re.b:
                    raise ValueError("Gram entry outside Q(omega)")
                out[2 * k + dk][2 * l + dl] = scale * re.a
    return out


def real_form(k: GramLattice) -> ZLatticeView:
    """Integral Z-view of a lattice given by the Gram of an E-basis (rank n -> 2n)."""
    if k.rank != len(k.gram):
        raise ValueError("real_form expects the Gram matrix of a basis")
    m = z_form_from_gram(k.gram)
    if any(x.denominator != 1 for r in m for x in r):
        raise ValueError("(2/3) Re<,> is not integral: not a theta-integral lattice")
    return ZLatticeView([[int(x) for x in r] for r in m])


def eis_coords(v: Sequence) -> list[int]:
    """(m1, n1, m2, n2, ...) for a vector with Eisenstein integer entries."""
    out = []
    for x in v:
        e = EisInt.from_cyc(CycElem.coerce(x))
        out.extend((e.m, e.n))
    return out


def from_eis_coords(ints: Sequence[int]) -> tuple:
    return tuple(EisInt(int(ints[2 * k]), int(ints[2 * k + 1])).to_cyc() for k in range(len(ints) // 2))


def z_generators(vectors: Sequence[Sequence]) -> list[list[int]]:
    """Integral rows spanning the Z-module underlying the E-span of Eisenstein vectors."""
    rows = []
    for v in vectors:
        rows.append(eis_coords(v))
        rows.append(eis_coords([x * OMEGA for x in v]))
    return rows


def theta_integral(gram: Matrix) -> bool:
    """All entries divisible by theta, i.e. K is contained in theta K*."""
    for row in gram:
        for x in row:
            try:
                EisInt.from_cyc(x / THETA)
            except ValueError:
                return False
    return True


def theta_dual_equals_self(k: GramLattice, form=lorentz_form) -> bool:
    """Decide theta K* = K.

    K lies in theta K* iff all products are divisible by theta; then (2/3) Re<,>
    is integral and its dual lattice is exactly theta K*, so equality holds iff the
    integral Z-view is unimodular.
    """
    if not theta_integral(k.gram):
        return False
    if k.coords is not None:
        vecs = LatticeSpan(k.coords).basis()
        zmat = [[Fraction(2, 3) * _rational_re(form(u, v)) for v in vecs] for u in vecs]
    else:
        if k.rank != len(k.gram):
            raise ValueError("degenerate lattice without coordinates")
        zmat = z_form_from_gram(k.gram)
    if any(x.denominator != 1 for r in zmat for x in r):
        return False
    d = int_det([[int(x) for x in r] for r in zmat])
    if d == 0:
        raise ValueError("degenerate lattice")
    return abs(d) == 1


def _rational_re(x: CycElem) -> Fraction:
    if x.re.b:
        raise ValueError("form value leaves Q(omega)")
    return x.re.a


def direct_sum(*grams: Matrix) -> Matrix:
    n = sum(len(g) for g in grams)
    out = [[ZERO] * n for _ in range(n)]
    off = 0
    for g in grams:
        for i, r in enumerate(g):
            for j, x in enumerate(r):
                out[off + i][off + j] = x
        off += len(g)
    return out


HYPERBOLIC_CELL = [[ZERO, THETA_BAR], [THETA, ZERO]]


# --------------------------------------------------------------------------
# membership


@dataclass
class Membership:
    member: bool
    coefficients: Optional[list[EisInt]] = None
    residual: Optional[list[int]] = None  # non-membership certificate in the Z-view
    scaled_by_theta: bool = False


class LatticeSpan:
    """The E-span of generators with entries in theta^-1 E, with an HNF membership oracle.

    Everything is multiplied by theta so that the integral Z-view applies.
    """

    def __init__(self, generators: Sequence[Sequence]):
        self.generators = [tuple(CycElem.coerce(x) for x in g) for g in generators]
        if not self.generators:
            raise ValueError("no generators")
        self.dim = len(self.generators[0])
        if any(len(g) != self.dim for g in self.generators):
            raise ValueError("dimension mismatch among generators")
        rows = z_generators([[x * THETA for x in g] for g in self.generators])
        self._hnf: HNF = hnf(rows)

    @property
    def z_rank(self) -> int:
        return self._hnf.rank

    def basis(self) -> list[tuple]:
        """A Z-basis of the span, as vectors."""
        return [tuple(x / THETA for x in from_eis_coords(r)) for r in self._hnf.rows]

    def membership(self, v: Sequence) -> Membership:
        v = [CycElem.coerce(x) for x in v]
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        try:
            target = eis_coords([x * THETA for x in v])
        except ValueError:
            # theta*v is not even Eisenstein-integral while the span is
            return Membership(False, residual=None, scaled_by_theta=True)
        residual = self._hnf.reduce(target)[1]
        if any(residual):
            return Membership(False, residual=residual, scaled_by_theta=True)
        x = self._hnf.solve(target)
        coeffs = [EisInt(x[2 * k], 0) + EisInt(x[2 * k + 1], 0) * EisInt(0, 1) for k in range(len(self.generators))]
        return Membership(True, coefficients=coeffs, scaled_by_theta=True)

    def contains(self, v: Sequence) -> bool:
        return self.membership(v).member


def hnf_membership(generators: Sequence[Sequence], v: Sequence) -> Membership:
    return LatticeSpan(generators).membership(v)


# --------------------------------------------------------------------------
# enumeration


def ldl(gram: Sequence[Sequence]) -> tuple[list, list]:
    """G = U^T D U with U unit upper triangular; entries as exact mpq."""
    n = len(gram)
    g = [[mpq(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in gram]
    d = [mpq(0)] * n
    u = [[mpq(0)] * n for _ in range(n)]
    for i in range(n):
        s = g[i][i]
        for k in range(i):
            s -= u[k][i] * u[k][i] * d[k]
        if s <= 0:
            raise ValueError("quadratic form is not positive definite")
        d[i] = s
        u[i][i] = mpq(1)
        for j in range(i + 1, n):
            s = g[i][j]
            for k in range(i):
                s -= u[k][i] * u[k][j] * d[k]
            u[i][j] = s / d[i]
    return u, d


def _floor_sqrt(q) -> int:
    """floor(sqrt(q)) for a nonnegative rational q."""
    num, den = int(q.numerator), int(q.denominator)
    return int(gmpy2.isqrt(num * den)) // den


def _rational_sqrt(q):
    num, den = q.numerator, q.denominator
    if gmpy2.is_square(num) and gmpy2.is_square(den):
        return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))
    return None


def enumerate_quadratic(
    gram: Sequence[Sequence],
    bound,
    center: Optional[Sequence] = None,
    exact: bool = False,
) -> list[tuple[int, ...]]:
    """All integer x with q(x - center) <= bound (== bound when exact), q(y) = y^T G y.

    Exhaustive: at every level the admissible range is derived exactly from the
    remaining budget via the LDL decomposition of G.
    """
    n = len(gram)
    u, d = ldl(gram)
    b = mpq(Fraction(bound).numerator, Fraction(bound).denominator)
    if b < 0:
        return []
    if center is None:
        t = [mpq(0)] * n
    else:
        t = [mpq(Fraction(x).numerator, Fraction(x).denominator) for x in center]
    x = [0] * n
    y = [mpq(0)] * n  # x - t at fixed levels
    out: list[tuple[int, ...]] = []
    rows = [[(j, u[i][j]) for j in range(i + 1, n) if u[i][j]] for i in range(n)]

    def level(i: int, budget) -> None:
        ci = t[i]
        for j, uij in rows[i]:
            ci -= uij * y[j]
        di = d[i]
        s2 = budget / di
        if i == 0 and exact:
            r = _rational_sqrt(s2)
            if r is None:
                return
            cands = {ci + r, ci - r}
            for v in sorted(cands):
                if v.denominator == 1:
                    x[0] = int(v)
                    out.append(tuple(x))
            return
        r = _floor_sqrt(s2)
        fl = int(gmpy2.floor(ci))
        for xi in range(fl - r - 1, fl + r + 3):
            diff = xi - ci
            e = di * diff * diff
            if e <= budget:
                x[i] = xi
                if i == 0:
                    if not exact:
                        out.append(tuple(x))
                else:
                    y[i] = xi - t[i]
                    level(i - 1, budget - e)

    if n == 0:
        if (b == 0) or not exact:
            return [()]
        return []
    level(n - 1, b)
    return out


def _gram_rational_re(gram: Matrix) -> list[list[Fraction]]:
    """Re<,> on the Z-basis {e_k, w e_k}: its quadratic form is the hermitian norm."""
    return z_form_from_gram(gram, scale=Fraction(1))


def enumerate_by_norm(k: GramLattice, target_norm) -> list[tuple[int, ...]]:
    """All vectors of exactly the given norm, as (m1, n1, ..., mk, nk) coordinates, sorted."""
    target = Fraction(target_norm)
    if len(k.gram) != k.rank:
        raise ValueError("enumerate_by_norm needs the Gram of a basis")
    pos, neg, zero = signature(k.gram)
    if neg or zero:
        raise ValueError("lattice is not positive definite")
    if target < 0:
        return []
    zf = _gram_rational_re(k.gram)
    t = lll_gram(zf)
    tg = [[sum(t[i][a] * zf[a][b] for a in range(len(zf))) for b in range(len(zf))] for i in range(len(zf))]
    reduced = [[sum(tg[i][b] * t[j][b] for b in range(len(zf))) for j in range(len(zf))] for i in range(len(zf))]
    vecs = enumerate_quadratic(reduced, target, exact=True)
    n2 = len(zf)
    out = [tuple(sum(v[i] * t[i][j] for i in range(n2)) for j in range(n2)) for v in vecs]
    out.sort()
    return out


def eis_norm(gram: Matrix, coords: Sequence[int]) -> CycElem:
    """Hermitian norm of the vector with E-coordinates (m1, n1, ...) against gram."""
    v = [EisInt(coords[2 * k], coords[2 * k + 1]).to_cyc() for k in range(len(coords) // 2)]
    total = ZERO
    for a, va in enumerate(v):
        if not va:
            continue
        for b, vb in enumerate(v):
            if vb:
                total = total + va * gram[a][b] * vb.conj()
    return total


# --------------------------------------------------------------------------
# cache files

CACHE_FORMAT = "eislat-vectors/1"


def write_vector_file(path: str, lattice_id: str, norm: str, vectors: Iterable[Sequence[int]]) -> str:
    """Atomically write vectors (one per line, decimal integers) behind a versioned header."""
    body_lines = [" ".join(str(int(c)) for c in v) for v in vectors]
    body = "\n".join(body_lines) + ("\n" if body_lines else "")
    digest = hashlib.sha256(body.encode()).hexdigest()
    header = f"# {CACHE_FORMAT} lattice={lattice_id} norm={norm} count={len(body_lines)} sha256={digest}\n"
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".vec")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(header)
            fh.write(body)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return digest


class CacheError(Exception):
    pass


def read_vector_file(path: str, lattice_id: Optional[str] = None, norm: Optional[str] = None):
    """Read and validate a vector file; raises CacheError on any inconsistency."""
    with open(path) as fh:
        header = fh.readline()
        body = fh.read()
    parts = header.split()
    if len(parts) < 2 or parts[0] != "#" or parts[1] != CACHE_FORMAT:
        raise CacheError(f"{path}: bad header")
    meta = dict(p.split("=", 1) for p in parts[2:] if "=" in p)
    for key in ("lattice", "norm", "count", "sha256"):
        if key not in meta:
            raise CacheError(f"{path}: header lacks {key}")
    if lattice_id is not None and meta["lattice"] != lattice_id:
        raise CacheError(f"{path}: lattice id mismatch")
    if norm is not None and meta["norm"] != norm:
        raise CacheError(f"{path}: norm mismatch")
    if hashlib.sha256(body.encode()).hexdigest() != meta["sha256"]:
        raise CacheError(f"{path}: checksum mismatch")
    vectors = [tuple(int(t) for t in line.split()) for line in body.splitlines() if line.strip()]
    if len(vectors) != int(meta["count"]):
        raise CacheError(f"{path}: count mismatch")
    return meta, vectors
