"""Concrete objects in C^{13,1}: point and line roots of the projective plane over F_3,
the 12-gon and A4 roots, distinguished points, the c-adapted basis and the
collineation group with its matrix lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .cycmatrix import CycMatrix
from .exactnum import (
    I,
    ONE,
    THETA,
    THETA_BAR,
    ZERO,
    CycElem,
    EisInt,
    RealQuad,
)
from .lattice import (
    DirectedGraph,
    LatticeSpan,
    eis_coords,
    field_rank,
    gram_from_graph,
    gram_of,
    lorentz_form,
    matrix_inverse,
    solve_linear,
)

DIM = 14
Vec = tuple  # 14 CycElem coordinates

LINE_OFFSETS = (0, 1, 3, 9)
TWELVE_GON = ("p6", "l10", "p13", "l4", "p7", "l11", "p12", "l9", "p9", "l8", "p8", "l5")
A4_ROOTS = ("l1", "p2", "l2", "p3")
A4_NAMES = ("A", "B", "C", "D")
LAMBDA = RealQuad(2, 1)


def vec(*entries) -> Vec:
    return tuple(CycElem.coerce(x) for x in entries)


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def smul(c, v: Vec) -> Vec:
    c = CycElem.coerce(c)
    return tuple(c * x for x in v)


def herm(u: Vec, v: Vec) -> CycElem:
    return lorentz_form(u, v)


def norm(v: Vec) -> CycElem:
    return lorentz_form(v, v)


# --------------------------------------------------------------------------
# roots and incidence


def labels() -> list[str]:
    return [f"p{j}" for j in range(1, 14)] + [f"l{j}" for j in range(1, 14)]


def label_index(name: str) -> int:
    kind, j = name[0], int(name[1:])
    if kind not in "pl" or not 1 <= j <= 13:
        raise KeyError(name)
    return (j - 1) + (13 if kind == "l" else 0)


def incident(i: int, j: int) -> bool:
    """Point p_i lies on line l_j (indices 1..13)."""
    return (i - j) % 13 in LINE_OFFSETS


def points_on_line(j: int) -> list[int]:
    return sorted((j - 1 + k) % 13 + 1 for k in LINE_OFFSETS)


def incidence_graph() -> DirectedGraph:
    """Nodes p1..p13, l1..l13; an edge from each line to each of its points."""
    edges = tuple((13 + j - 1, i - 1) for j in range(1, 14) for i in points_on_line(j))
    return DirectedGraph(26, edges)


@lru_cache(maxsize=None)
def build_roots() -> dict[str, Vec]:
    roots = {}
    for j in range(1, 14):
        p = [ZERO] * DIM
        p[j] = THETA
        roots[f"p{j}"] = tuple(p)
        l = [ZERO] * DIM
        l[0] = ONE
        for i in points_on_line(j):
            l[i] = ONE
        roots[f"l{j}"] = tuple(l)
    return roots


def root_list() -> list[Vec]:
    r = build_roots()
    return [r[n] for n in labels()]


# --------------------------------------------------------------------------
# distinguished points


@dataclass(frozen=True)
class NamedPoint:
    label: str
    vector: Vec
    t: Optional[Fraction] = None


@lru_cache(maxsize=None)
def special_points() -> dict[str, Vec]:
    lam = CycElem(LAMBDA)
    pinf = vec(THETA_BAR, *([0] * 13))
    linf = vec(4, *([1] * 13))
    tau = add(linf, smul(I, pinf))
    rho_tail = [2 * lam, 0, 0, 2 * lam, 3 * lam, 1, 1, 1, 1, 2 * lam, 3 * lam, 1, 1]
    rho = vec(6 * lam, *rho_tail)
    c = smul(THETA, vec(4, 1, 0, 0, 2, 2, 0, 0, 0, 0, 1, 2, 1, 0))
    return {"pinf": pinf, "linf": linf, "tau": tau, "rho": rho, "c": c}


def twelve_gon_and_a4() -> tuple[list[Vec], list[Vec]]:
    r = build_roots()
    return [r[n] for n in TWELVE_GON], [r[n] for n in A4_ROOTS]


def named_roots() -> dict[str, Vec]:
    """s0..s11 and sA..sD."""
    s, a = twelve_gon_and_a4()
    out = {f"s{j}": v for j, v in enumerate(s)}
    out.update({f"s{x}": v for x, v in zip(A4_NAMES, a)})
    return out


def project_to_mirror(v: Vec, s: Vec) -> Vec:
    """v - (<v,s>/3) s."""
    if norm(s) != 3:
        raise ValueError("projection needs a norm 3 root")
    return sub(v, smul(herm(v, s) / 3, s))


def project_to_span(v: Vec, basis: Sequence[Vec]) -> Vec:
    """Orthogonal projection onto the span of a nondegenerate family."""
    g = [[herm(bj, bi) for bj in basis] for bi in basis]
    rhs = [herm(v, bi) for bi in basis]
    x = solve_linear(g, rhs)
    if x is None:
        raise ValueError("degenerate span")
    out = tuple([ZERO] * len(v))
    for c, b in zip(x, basis):
        out = add(out, smul(c, b))
    return out


def project_to_L4(v: Optional[Vec] = None) -> Vec:
    _, a4 = twelve_gon_and_a4()
    if v is None:
        v = special_points()["tau"]
    return project_to_span(v, a4)


def displayed_L4_projection() -> Vec:
    """-(3+2 sqrt3)(l1 + i p3) - (5+3 sqrt3)(l2 + i p2)."""
    r = build_roots()
    u = add(r["l1"], smul(I, r["p3"]))
    w = add(r["l2"], smul(I, r["p2"]))
    return add(smul(-CycElem(RealQuad(3, 2)), u), smul(-CycElem(RealQuad(5, 3)), w))


def polygon_vertices(case: str) -> dict[str, Vec]:
    """Vertices of the polygon attached to s_A ('A'), s_B ('B') or s0 ('Q').

    Triangles are (tau, tau', rho); the quadrilateral is (tau, tau', rho', rho).
    Also returns the midpoints m = (tau+rho)/2 and m'.
    """
    sp = special_points()
    nr = named_roots()
    tau, rho = sp["tau"], sp["rho"]
    key = {"A": "sA", "B": "sB", "Q": "s0"}[case]
    s = nr[key]
    taup = project_to_mirror(tau, s)
    half = CycElem(Fraction(1, 2))
    out = {"tau": tau, "tau'": taup, "rho": rho, "m": smul(half, add(tau, rho))}
    if case == "Q":
        rhop = project_to_mirror(rho, s)
        out["rho'"] = rhop
        out["m'"] = smul(half, add(taup, rhop))
        out["order"] = ("tau", "tau'", "rho'", "rho")
    else:
        out["m'"] = smul(half, add(taup, rho))
        out["order"] = ("tau", "tau'", "rho")
    out["root"] = s
    return out


def sigma_point(t) -> NamedPoint:
    t = Fraction(t)
    if not 0 < t <= 1:
        raise ValueError("sigma_t needs 0 < t <= 1")
    sp = special_points()
    v = add(smul(1 - t, sp["rho"]), smul(t, sp["tau"]))
    return NamedPoint("sigma", v, t)


# --------------------------------------------------------------------------
# the basis adapted to c


CBASIS_LABELS = ("c", "s0", "sA", "sB", "sC", "sD", "s5", "s4", "s3", "s2", "s7", "s8", "s9", "s10")


@dataclass
class CBasis:
    vectors: list[Vec]
    gram: list[list[CycElem]]
    to_std: CycMatrix  # columns are the basis vectors
    from_std: CycMatrix

    def to_standard(self, coeffs: Sequence) -> Vec:
        return self.to_std.apply(coeffs)

    def from_standard(self, v: Sequence) -> Vec:
        return self.from_std.apply(v)


def a4_block_gram() -> list[list[CycElem]]:
    """[[3, tb, 0, 0], [t, 3, t, 0], [0, tb, 3, tb], [0, 0, t, 3]] with t = theta."""
    return gram_from_graph(DirectedGraph(4, ((0, 1), (2, 1), (2, 3))))


def displayed_cbasis_gram() -> list[list[CycElem]]:
    from .lattice import direct_sum

    return direct_sum([[CycElem(-3), ZERO], [ZERO, CycElem(3)]], *([a4_block_gram()] * 3))


@lru_cache(maxsize=None)
def cbasis() -> CBasis:
    sp = special_points()
    nr = named_roots()
    vs = [sp["c"] if lab == "c" else nr[lab] for lab in CBASIS_LABELS]
    cols = [list(v) for v in vs]
    b = [[cols[j][i] for j in range(DIM)] for i in range(DIM)]
    inv = matrix_inverse(b)
    return CBasis(vs, gram_of(vs), CycMatrix.from_rows(b), CycMatrix.from_rows(inv))


def c_coordinates_ok(coeffs: Sequence[CycElem]) -> tuple[bool, str]:
    """Test the membership characterization [a/theta, b/theta; v1; v2; v3]."""
    try:
        a = EisInt.from_cyc(coeffs[0] * THETA)
        b = EisInt.from_cyc(coeffs[1] * THETA)
    except ValueError:
        return False, "theta*a or theta*b not Eisenstein"
    if not (a - b).divisible_by_theta():
        return False, "a and b not congruent mod theta"
    for x in coeffs[2:]:
        try:
            EisInt.from_cyc(x)
        except ValueError:
            return False, "an L4 coordinate is not Eisenstein"
    return True, "ok"


def characterization_generators() -> list[Vec]:
    """E-module generators of {[a/theta, b/theta; v] : a = b mod theta, v in L4^3}."""
    cb = cbasis()
    c, s0 = cb.vectors[0], cb.vectors[1]
    gens = [smul(THETA.inverse(), add(c, s0)), c, s0]
    gens.extend(cb.vectors[2:])
    return gens


@lru_cache(maxsize=None)
def lattice_L() -> LatticeSpan:
    return LatticeSpan(root_list())


# --------------------------------------------------------------------------
# collineations


@dataclass(frozen=True)
class Collineation:
    """A permutation of the 26 root labels (indices 0..25); swap means points go to lines."""

    perm: tuple[int, ...]
    swap: bool

    def __matmul__(self, other: "Collineation") -> "Collineation":
        # (self @ other)(k) = self(other(k))
        return Collineation(tuple(self.perm[k] for k in other.perm), self.swap != other.swap)

    def inverse(self) -> "Collineation":
        inv = [0] * 26
        for k, v in enumerate(self.perm):
            inv[v] = k
        return Collineation(tuple(inv), self.swap)

    def sign(self, k: int) -> int:
        """Sign in the lift: a duality sends line roots to negated point roots."""
        return -1 if (self.swap and k >= 13) else 1


IDENTITY = Collineation(tuple(range(26)), False)


def _line_through(a: int, b: int) -> int:
    """Line (1..13) through distinct points a, b (1..13)."""
    for j in range(1, 14):
        if incident(a, j) and incident(b, j):
            return j
    raise ValueError("no common line")


def _meet(j: int, k: int) -> int:
    for i in range(1, 14):
        if incident(i, j) and incident(i, k):
            return i
    raise ValueError("no common point")


def from_point_map(pmap: dict[int, int]) -> Optional[Collineation]:
    """Complete a partial point map (1..13 -> 1..13) to a collineation by joins and meets."""
    pts = dict(pmap)
    lines: dict[int, int] = {}
    changed = True
    while changed and len(pts) < 13:
        changed = False
        known = list(pts)
        for x in range(len(known)):
            for y in range(x + 1, len(known)):
                a, b = known[x], known[y]
                j = _line_through(a, b)
                if j not in lines:
                    lines[j] = _line_through(pts[a], pts[b])
        lk = list(lines)
        for x in range(len(lk)):
            for y in range(x + 1, len(lk)):
                i = _meet(lk[x], lk[y])
                if i not in pts:
                    pts[i] = _meet(lines[lk[x]], lines[lk[y]])
                    changed = True
    if len(pts) < 13 or len(set(pts.values())) != 13:
        return None
    lmap = {}
    for j in range(1, 14):
        on = points_on_line(j)
        lmap[j] = _line_through(pts[on[0]], pts[on[1]])
    for j in range(1, 14):
        if sorted(pts[i] for i in points_on_line(j)) != points_on_line(lmap[j]):
            return None
    perm = [pts[i + 1] - 1 for i in range(13)] + [13 + lmap[j + 1] - 1 for j in range(13)]
    return Collineation(tuple(perm), False)


def preserves_incidence(g: Collineation) -> bool:
    for i in range(1, 14):
        for j in range(1, 14):
            a, b = g.perm[i - 1], g.perm[13 + j - 1]
            if g.swap:
                ok = incident(b + 1, a - 12)  # a is now a line, b a point
            else:
                ok = incident(a + 1, b - 12)
            if ok != incident(i, j):
                return False
    return True


def shift() -> Collineation:
    perm = [(i + 1) % 13 for i in range(13)] + [13 + (j + 1) % 13 for j in range(13)]
    return Collineation(tuple(perm), False)


def multiplier(m: int = 3) -> Collineation:
    """Index map j -> m*j (mod 13) on points and lines; m = 3 fixes the difference set."""
    perm = [((i + 1) * m - 1) % 13 for i in range(13)] + [13 + ((j + 1) * m - 1) % 13 for j in range(13)]
    return Collineation(tuple(perm), False)


def duality() -> Collineation:
    """p_i -> l_{-i}, l_j -> p_{-j}."""
    perm = [13 + ((-(i + 1)) % 13 or 13) - 1 for i in range(13)] + [((-(j + 1)) % 13 or 13) - 1 for j in range(13)]
    return Collineation(tuple(perm), True)


def frames() -> list[tuple[int, int, int, int]]:
    """Ordered quadruples of points (1..13), no three collinear."""
    out = []
    for a in range(1, 14):
        for b in range(1, 14):
            if b == a:
                continue
            lab = _line_through(a, b)
            for c in range(1, 14):
                if c in (a, b) or incident(c, lab):
                    continue
                lac, lbc = _line_through(a, c), _line_through(b, c)
                for d in range(1, 14):
                    if d in (a, b, c) or incident(d, lab) or incident(d, lac) or incident(d, lbc):
                        continue
                    out.append((a, b, c, d))
    return out


def closure(gens: Sequence[Collineation]) -> list[Collineation]:
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = h @ g
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(seen, key=lambda g: (g.swap, g.perm))


@dataclass
class CollineationGroup:
    elements: list[Collineation]
    generators: list[Collineation]
    frame_count: int
    point_group_order: int


@lru_cache(maxsize=None)
def collineation_group() -> CollineationGroup:
    fr = frames()
    base = fr[0]
    # two frame-derived collineations together with the cyclic symmetries
    extra = []
    for target in (fr[len(fr) // 3], fr[(2 * len(fr)) // 3 + 1]):
        g = from_point_map(dict(zip(base, target)))
        if g is None:
            raise RuntimeError("frame map does not extend: incidence structure is not a plane")
        extra.append(g)
    gens = [shift(), multiplier(3)] + extra
    point_group = closure(gens)
    full = closure(gens + [duality()])
    return CollineationGroup(full, gens + [duality()], len(fr), len(point_group))


# --------------------------------------------------------------------------
# matrix lifts


@lru_cache(maxsize=None)
def _lift_basis() -> tuple[tuple[int, ...], CycMatrix]:
    roots = root_list()
    chosen: list[int] = []
    for k in range(26):
        trial = chosen + [k]
        if field_rank([roots[i] for i in trial]) == len(trial):
            chosen = trial
        if len(chosen) == DIM:
            break
    cols = [roots[k] for k in chosen]
    b = CycMatrix.from_columns(cols)
    binv = CycMatrix.from_rows(matrix_inverse(b.rows()))
    return tuple(chosen), binv


def lift(g: Collineation) -> CycMatrix:
    """The matrix sending each chosen basis root r_k to sign * r_{g(k)}."""
    roots = root_list()
    chosen, binv = _lift_basis()
    cols = [smul(g.sign(k), roots[g.perm[k]]) for k in chosen]
    return CycMatrix.from_columns(cols) @ binv


def form_matrix() -> CycMatrix:
    return CycMatrix.from_rows([[CycElem(-1 if (i == j == 0) else int(i == j)) for j in range(DIM)] for i in range(DIM)])


def is_isometry(m: CycMatrix) -> bool:
    j = form_matrix()
    return m.conj_transpose() @ j @ m == j


def lift_report(g: Collineation) -> dict:
    m = lift(g)
    roots = root_list()
    images_ok = all(m.apply(roots[k]) == smul(g.sign(k), roots[g.perm[k]]) for k in range(26))
    tau = special_points()["tau"]
    img = m.apply(tau)
    lam = _scalar_between(img, tau)
    entries_eis = True
    for row in m.rows():
        for x in row:
            try:
                EisInt.from_cyc(x)
            except ValueError:
                entries_eis = False
    return {
        "matrix": m,
        "images_ok": images_ok,
        "isometry": is_isometry(m),
        "tau_scalar": lam,
        "entries_in_E": entries_eis,
    }


def _scalar_between(u: Vec, v: Vec) -> Optional[CycElem]:
    """lambda with u = lambda v, or None."""
    k = next((i for i, x in enumerate(v) if x), None)
    if k is None:
        return None
    lam = u[k] / v[k]
    return lam if smul(lam, v) == tuple(u) else None


def d24_stabilizer() -> list[Collineation]:
    grp = collineation_group().elements
    gon = {label_index(n) for n in TWELVE_GON}
    return [g for g in grp if {g.perm[k] for k in gon} == gon]


def scalar_between(u: Vec, v: Vec) -> Optional[CycElem]:
    return _scalar_between(u, v)


@lru_cache(maxsize=None)
def lattice_LDM() -> list[Vec]:
    """Z-basis of {v in L : v orthogonal to sA..sD}."""
    from .intlin import hnf

    basis = lattice_L().basis()
    _, a4 = twelve_gon_and_a4()
    rows = [eis_coords([herm(b, s) / THETA for s in a4]) for b in basis]
    kern = hnf(rows).kernel
    out = []
    for k in kern:
        v = tuple([ZERO] * DIM)
        for c, b in zip(k, basis):
            if c:
                v = add(v, smul(c, b))
        out.append(v)
    return out
