"""Triflections, reflection words and the matrix identities among them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .cycmatrix import CycMatrix
from .exactnum import E_PI3, E_PI6, OMEGA, ONE, CycElem
from . import model
from .model import DIM, Vec, herm, norm, sub
from .report import Report
from .words import GroupOps, evaluate, parse_word

SCALAR_CAP = 48


def form_matrix() -> CycMatrix:
    return model.form_matrix()


class Isometry:
    """A 14x14 matrix preserving the hermitian form -|x0|^2 + sum |xk|^2."""

    __slots__ = ("m",)

    def __init__(self, m: CycMatrix, check: bool = True):
        if check and not model.is_isometry(m):
            raise ValueError("matrix does not preserve the hermitian form")
        self.m = m

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(self.m @ other.m, check=False)

    def inverse(self) -> "Isometry":
        # M^-1 = J M^H J for an isometry
        j = form_matrix()
        return Isometry(j @ self.m.conj_transpose() @ j, check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Isometry) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def apply(self, v: Sequence) -> Vec:
        return self.m.apply(v)

    def scalar(self) -> Optional[CycElem]:
        return self.m.scalar_value()

    def ratio_to(self, other: "Isometry") -> Optional[CycElem]:
        """lambda with self = lambda * other, if any."""
        return self.m.scalar_multiple_of(other.m)

    def projective_key(self) -> CycMatrix:
        return self.m.projective_key()

    def __pow__(self, k: int) -> "Isometry":
        base = self if k >= 0 else self.inverse()
        out = identity()
        for _ in range(abs(k)):
            out = out @ base
        return out

    def __repr__(self):
        return f"Isometry({self.m!r})"


def identity() -> Isometry:
    return Isometry(CycMatrix.identity(DIM), check=False)


def triflection(s: Sequence, unit: CycElem = OMEGA) -> Isometry:
    """x -> x - (1 - unit) <x, s>/<s, s> s for a root s."""
    s = tuple(CycElem.coerce(x) for x in s)
    if norm(s) != 3:
        raise ValueError("triflection needs a norm 3 root")
    c = (ONE - unit) / 3
    rows = []
    for i in range(DIM):
        row = []
        for j in range(DIM):
            eps = -1 if j == 0 else 1
            e = -c * s[i] * s[j].conj() * eps
            if i == j:
                e = e + ONE
            row.append(e)
        rows.append(row)
    return Isometry(CycMatrix.from_rows(rows))


def preserves_L(w: Isometry) -> bool:
    span = model.lattice_L()
    return all(span.contains(w.apply(r)) for r in model.root_list())


@lru_cache(maxsize=None)
def reflections() -> dict[str, Isometry]:
    """S0..S11 and SA..SD, the omega-reflections in the named roots."""
    return {("S" + k[1:]): triflection(v) for k, v in model.named_roots().items()}


def _ops(extra: Optional[dict] = None) -> GroupOps[Isometry]:
    table = dict(reflections())
    if extra:
        table.update(extra)

    def gen(name: str) -> Isometry:
        if name not in table:
            raise KeyError(f"unresolved symbol {name}")
        return table[name]

    return GroupOps(identity, lambda a, b: a @ b, lambda a: a.inverse(), gen)


def eval_word(w, extra: Optional[dict] = None) -> Isometry:
    """Matrix of a word (text or parsed); products are taken left to right."""
    node = parse_word(w) if isinstance(w, str) else w
    return evaluate(node, _ops(extra))


# --------------------------------------------------------------------------
# action on the complex line through rho and tau


@dataclass(frozen=True)
class PlaneAction:
    alpha: CycElem
    beta: CycElem

    @property
    def ratio(self) -> CycElem:
        return self.beta / self.alpha


def _eigen(w: Isometry, v: Vec) -> Optional[CycElem]:
    return model.scalar_between(w.apply(v), v)


def plane_action(w: Isometry) -> Optional[PlaneAction]:
    """(alpha, beta) with W rho = alpha rho and W(tau - rho) = beta (tau - rho); None if W
    does not fix the line of rho and preserve the span of rho and tau."""
    sp = model.special_points()
    rho = sp["rho"]
    u = sub(sp["tau"], rho)  # orthogonal to rho
    alpha = _eigen(w, rho)
    if alpha is None:
        return None
    beta = _eigen(w, u)
    if beta is None:
        return None
    return PlaneAction(alpha, beta)


def order_mod_scalars(w: Isometry, cap: int = SCALAR_CAP) -> Optional[int]:
    p = w
    for k in range(1, cap + 1):
        if p.scalar() is not None:
            return k
        p = p @ w
    return None


def projective_closure(gens: Sequence[Isometry], cap: int = 1000) -> int:
    """Order of the group generated modulo scalars (breadth-first, capped)."""
    seen = {identity().projective_key()}
    frontier = [identity()]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = g @ h
                key = x.projective_key()
                if key not in seen:
                    seen.add(key)
                    nxt.append(x)
                    if len(seen) > cap:
                        return -1
        frontier = nxt
    return len(seen)


# --------------------------------------------------------------------------
# named words


def increasing(j: int, length: int = 11) -> str:
    return " ".join(f"S{(j + k) % 12}" for k in range(length))


def decreasing(j: int, length: int = 11) -> str:
    return " ".join(f"S{(j - k) % 12}" for k in range(length))


DELTA_A4 = "Delta(SA, SB, SC, SD)"
DELTA_11 = "Delta(" + ", ".join(f"S{k}" for k in range(1, 12)) + ")"
W1_TEXT = f"{increasing(1)} {DELTA_A4}^-1"
W2_TEXT = f"({increasing(1)})^6 {DELTA_11}^-1"


def _compare(words: list[Isometry]) -> tuple[bool, bool]:
    """(all equal as matrices, all equal up to scalars)."""
    first = words[0]
    exact = all(w == first for w in words[1:])
    proj = all(w.ratio_to(first) is not None for w in words[1:])
    return exact, proj


def verify_special_words() -> Report:
    rep = Report("identities", "special words in the reflections")
    inc = [eval_word(increasing(j)) for j in range(12)]
    dec = [eval_word(decreasing(j)) for j in range(12)]
    for name, ws in (("increasing", inc), ("decreasing", dec)):
        exact, proj = _compare(ws)
        rep.check(f"{name}_independent_of_j", exact or proj, {"matrix_equal": exact, "equal_up_to_scalar": proj})
    da = eval_word(DELTA_A4)
    for name, w in (("increasing", inc[1]), ("decreasing", dec[11]), ("Delta(SA..SD)", da)):
        pa = plane_action(w)
        rep.check(f"{name}_rotation_pi/6", pa is not None and pa.ratio == E_PI6, {"ratio": pa.ratio if pa else None})
    x = eval_word(f"{increasing(1, 10)} S11^2 {decreasing(10, 10)}")
    xs = Isometry(x.m.scale(E_PI3), check=False)
    y = da @ da
    gon, a4 = model.twelve_gon_and_a4()
    for name, w in (("e^(pi i/3) S1..S11^2..S1", xs), ("Delta(SA..SD)^2", y)):
        trivial = all(w.apply(s) == tuple(s) for s in gon)
        scal = all(w.apply(a) == tuple(E_PI3 * c for c in a) for a in a4)
        rep.check(f"{name}_trivial_on_DM", trivial)
        rep.check(f"{name}_scalar_on_A4", scal, {"scalar": E_PI3})
    rep.check("Delta(SA..SD)^2 = e^(pi i/3) I D", y == xs)
    i6 = eval_word(f"({increasing(1)})^6")
    d6 = eval_word(f"({decreasing(11)})^6")
    rep.check("(S1..S11)^6 = (S11..S1)^6", i6 == d6)
    pa = plane_action(eval_word(DELTA_11))
    rep.check("Delta(S1..S11)_rotation_pi", pa is not None and pa.ratio == -ONE, {"ratio": pa.ratio if pa else None})
    return rep.finish()


def verify_sigma_stabilizer() -> Report:
    rep = Report("identities", "stabilizer of sigma is dihedral of order 24")
    g1, g2 = eval_word(W1_TEXT), eval_word(W2_TEXT)
    o1, o2 = order_mod_scalars(g1), order_mod_scalars(g2)
    rep.check("order(g1)=12", o1 == 12, {"order": o1})
    rep.check("order(g2)=2", o2 == 2, {"order": o2})
    conj = g2 @ g1 @ g2.inverse() @ g1
    rep.check("g2 g1 g2^-1 = g1^-1", conj.scalar() is not None, {"scalar": conj.scalar()})
    sp = model.special_points()
    for name, g in (("g1", g1), ("g2", g2)):
        a, b = _eigen(g, sp["rho"]), _eigen(g, sp["tau"])
        rep.check(f"{name}_scalar_on_span(rho,tau)", a is not None and a == b, {"rho": a, "tau": b})
    order = projective_closure([g1, g2])
    rep.check("group_order_24", order == 24, {"order": order})
    return rep.finish()


def basepoint_targets() -> tuple[dict[str, str], dict[str, str]]:
    t1 = {f"S{j}": f"S{(j + 1) % 12}" for j in range(12)}
    t1.update({"SA": "SD", "SB": "SC", "SC": "SB", "SD": "SA"})
    t2 = {f"S{j}": f"S{(6 - j) % 12}" for j in range(12)}
    t2.update({x: x for x in ("SA", "SB", "SC", "SD")})
    return t1, t2


def verify_basepoint_conjugations() -> Report:
    rep = Report("identities", "conjugation action of the two stabilizer words")
    refl = reflections()
    t1, t2 = basepoint_targets()
    for wname, text, table in (("W1", W1_TEXT, t1), ("W2", W2_TEXT, t2)):
        w = eval_word(text)
        winv = w.inverse()
        bad = []
        proj_only = []
        for src, dst in table.items():
            img = w @ refl[src] @ winv
            if img != refl[dst]:
                (proj_only if img.ratio_to(refl[dst]) is not None else bad).append(src)
        rep.check(f"{wname}_permutes_16_reflections", not bad,
                  {"failures": bad, "only_up_to_scalar": proj_only, "level": "matrix" if not proj_only else "projective"})
    return rep.finish()


def braid_relation_check(a: Sequence, b: Sequence) -> Report:
    x = herm(a, b)
    rep = Report("identities", "Artin relations for a pair of triflections")
    sa, sb = triflection(a), triflection(b)
    if not x:
        rep.check("commute", sa @ sb == sb @ sa, {"product": x})
    elif x.abs2() == 3:
        rep.check("braid", sa @ sb @ sa == sb @ sa @ sb, {"product": x})
    else:
        raise ValueError("roots must be orthogonal or pair to a unit times theta")
    return rep.finish()


def verify_triflections() -> Report:
    rep = Report("identities", "triflections of the point and line roots")
    roots = model.build_roots()
    for name in model.labels():
        s = roots[name]
        t = triflection(s)
        cube = t @ t @ t
        rep.check(f"{name}", t.apply(s) == tuple(OMEGA * c for c in s) and cube == identity() and preserves_L(t))
    return rep.finish()


def verify_artin_pairs() -> Report:
    """Artin relations among the 16 named reflections."""
    rep = Report("identities", "Artin relations of the 12-gon plus A4 diagram")
    nr = model.named_roots()
    names = list(nr)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            sub_rep = braid_relation_check(nr[a], nr[b])
            c = sub_rep.checks[0]
            rep.check(f"{a},{b}:{c.id}", c.passed)
    return rep.finish()
