"""Relator data for the braid and Coxeter presentations, checked in quotients.

Three kinds of target are supported: permutations of {0..11}, the affine
symmetric group on Z with period 12 (window notation), and the reflection
matrices of :mod:`eisgeom.isometries`.  Matrix targets compare up to a
scalar and record it; the other two compare exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .exactnum import CycElem
from .intlin import hnf
from .report import Report
from .words import GroupOps, Node, Seq, evaluate, parse_word, render_word

N = 12
A4 = ("A", "B", "C", "D")


@dataclass(frozen=True)
class AffinePermutation:
    """Bijection f of Z with f(i + 12) = f(i) + 12, stored as (f(1), ..., f(12))."""

    window: tuple[int, ...]

    def __post_init__(self):
        w = self.window
        if len(w) != N:
            raise ValueError("window must have 12 entries")
        if sorted(x % N for x in w) != list(range(N)):
            raise ValueError("window entries must be distinct mod 12")
        if sum(w) != N * (N + 1) // 2:
            raise ValueError("window must satisfy sum (w_i - i) = 0")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, N)
        return self.window[r] + N * q

    def __matmul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return AffinePermutation(tuple(self(other(i)) for i in range(1, N + 1)))

    def inverse(self) -> "AffinePermutation":
        out = [0] * N
        for i in range(1, N + 1):
            v = self(i)
            q, r = divmod(v - 1, N)
            out[r] = i - N * q
        return AffinePermutation(tuple(out))

    def perm(self) -> tuple[int, ...]:
        """Underlying permutation of residues, written on 0..11 (position i-1 holds f(i)-1 mod 12)."""
        return tuple((x - 1) % N for x in self.window)

    @staticmethod
    def identity() -> "AffinePermutation":
        return AffinePermutation(tuple(range(1, N + 1)))


def cox_generator(i: int) -> AffinePermutation:
    """The affine reflection swapping i and i+1 (and every translate by 12)."""
    i %= N
    w = list(range(1, N + 1))
    if i == 0:
        w[0], w[-1] = 0, N + 1
    else:
        w[i - 1], w[i] = i + 1, i
    return AffinePermutation(tuple(w))


def translation_part(p: AffinePermutation) -> Optional[tuple[int, ...]]:
    """Shift vector (f(i) - i)/12 when p is a pure translation, else None."""
    out = []
    for i, v in enumerate(p.window, start=1):
        d = v - i
        if d % N:
            return None
        out.append(d // N)
    return tuple(out)


def transposition(i: int) -> tuple[int, ...]:
    """(i, i+1 mod 12) acting on {0..11}."""
    p = list(range(N))
    a, b = i % N, (i + 1) % N
    p[a], p[b] = b, a
    return tuple(p)


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(q)))


def _perm_inverse(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


# --------------------------------------------------------------------------
# assignments


@dataclass
class Assignment:
    """Interpretation of abstract generators g0..g11, gA..gD in a target group."""

    name: str
    ops: GroupOps
    equal: Callable[[object, object], tuple[bool, Optional[CycElem]]]
    covers: frozenset

    def value(self, text_or_node):
        node = parse_word(text_or_node) if isinstance(text_or_node, str) else text_or_node
        return evaluate(node, self.ops)


def _exact_eq(a, b):
    return a == b, None


def _table_ops(table: dict, identity, mul, inv) -> GroupOps:
    def gen(name: str):
        try:
            return table[name]
        except KeyError:
            raise KeyError(f"assignment {name!r} not covered") from None

    return GroupOps(identity, mul, inv, gen)


def symmetric_assignment() -> Assignment:
    table = {f"g{i}": transposition(i) for i in range(N)}
    ident = tuple(range(N))
    ops = _table_ops(table, lambda: ident, _compose, _perm_inverse)
    return Assignment("S12", ops, _exact_eq, frozenset(table))


def affine_assignment() -> Assignment:
    table = {f"g{i}": cox_generator(i) for i in range(N)}
    ops = _table_ops(table, AffinePermutation.identity, lambda a, b: a @ b, lambda a: a.inverse())
    return Assignment("affine", ops, _exact_eq, frozenset(table))


def matrix_assignment() -> Assignment:
    """g_j -> S_j and g_X -> S_X; equality is up to a scalar, which is reported."""
    from . import isometries

    refl = isometries.reflections()
    table = {"g" + k[1:]: v for k, v in refl.items()}
    ops = _table_ops(table, isometries.identity, lambda a, b: a @ b, lambda a: a.inverse())

    def eq(a, b):
        lam = b.ratio_to(a)
        return lam is not None, lam

    return Assignment("matrices", ops, eq, frozenset(table))


# --------------------------------------------------------------------------
# relators


@dataclass(frozen=True)
class Relator:
    """lhs = rhs; an empty rhs means lhs = 1."""

    label: str
    lhs: Node
    rhs: Node = Seq(())

    def text(self) -> str:
        r = render_word(self.rhs)
        return render_word(self.lhs) + " = " + (r if r else "1")

    @staticmethod
    def parse(label: str, line: str) -> "Relator":
        if "=" in line:
            left, right = line.split("=", 1)
            right = right.strip()
            return Relator(label, parse_word(left), parse_word("" if right == "1" else right))
        return Relator(label, parse_word(line))


def _g(k) -> str:
    return f"g{k % N}" if isinstance(k, int) else f"g{k}"


def inc_word(j: int, length: int = N - 1) -> str:
    return " ".join(_g(j + k) for k in range(length))


def dec_word(j: int, length: int = N - 1) -> str:
    return " ".join(_g(j - k) for k in range(length))


def _rel(label: str, lhs: str, rhs: str = "") -> Relator:
    return Relator(label, parse_word(lhs), parse_word(rhs))


def artin_cycle() -> list[Relator]:
    out = []
    for j in range(N):
        for k in range(j + 1, N):
            a, b = _g(j), _g(k)
            if (k - j) % N in (1, N - 1):
                out.append(_rel(f"braid({a},{b})", f"{a} {b} {a}", f"{b} {a} {b}"))
            else:
                out.append(_rel(f"commute({a},{b})", f"{a} {b}", f"{b} {a}"))
    return out


def artin_a4_block() -> list[Relator]:
    out = []
    names = [_g(x) for x in A4]
    for i, a in enumerate(names):
        for j in range(i + 1, len(names)):
            b = names[j]
            if j == i + 1:
                out.append(_rel(f"braid({a},{b})", f"{a} {b} {a}", f"{b} {a} {b}"))
            else:
                out.append(_rel(f"commute({a},{b})", f"{a} {b}", f"{b} {a}"))
    for k in range(N):
        for a in names:
            out.append(_rel(f"commute({_g(k)},{a})", f"{_g(k)} {a}", f"{a} {_g(k)}"))
    return out


def _equal_family(kind: str, word: Callable[[int, int], str], length: int) -> list[Relator]:
    base = word(0, length)
    return [_rel(f"{kind}0={kind}{j}", base, word(j, length)) for j in range(1, N)]


def _delta(names: Sequence[str]) -> str:
    return "Delta(" + ", ".join(names) + ")"


def relator_suite(name: str, literal_length: bool = False) -> list[Relator]:
    """Relators of a named presentation, with I_j, D_j and Delta written out.

    By default I_j and D_j have 11 letters in every suite.  ``literal_length``
    switches the moduli-space presentation to 12-letter words, which do not
    hold in the symmetric quotient.
    """
    short = N - 1
    if name == "thm31_1":
        return artin_cycle()
    if name == "thm31_2":
        return artin_cycle() + _equal_family("D", dec_word, short)
    if name == "thm31_3":
        return artin_cycle() + _equal_family("I", inc_word, short)
    if name == "thm31_4":
        return (artin_cycle() + _equal_family("D", dec_word, short) + _equal_family("I", inc_word, short)
                + [_rel("ID=1", f"{inc_word(0)} {dec_word(0)}")])
    if name == "thm32":
        ln = N if literal_length else short
        i0, d0 = f"({inc_word(0, ln)})", f"({dec_word(0, ln)})"
        return (artin_cycle() + _equal_family("I", inc_word, ln) + _equal_family("D", dec_word, ln)
                + [_rel("ID=1", f"{i0} {d0}"), _rel("I^6=D^6", f"{i0}^6", f"{d0}^6")])
    if name == "thm65":
        i0, d0 = f"({inc_word(0)})", f"({dec_word(0)})"
        da = _delta([_g(x) for x in A4])
        return (artin_cycle() + artin_a4_block() + _equal_family("I", inc_word, short)
                + _equal_family("D", dec_word, short)
                + [_rel("ID=Delta(A..D)^2", f"{i0} {d0}", f"{da}^2"), _rel("D^6=I^6", f"{d0}^6", f"{i0}^6")])
    if name == "thm65_conj":
        i0, d0 = f"({inc_word(0)})", f"({dec_word(0)})"
        d11 = _delta([_g(k) for k in range(1, N)])
        out = []
        for k in range(N):
            gk = _g(k)
            out.append(_rel(f"I {gk} I^-1", f"{i0} {gk} {i0}^-1", _g(k + 1)))
            out.append(_rel(f"D {gk} D^-1", f"{d0} {gk} {d0}^-1", _g(k - 1)))
            out.append(_rel(f"Delta {gk} Delta^-1", f"{d11} {gk} {d11}^-1", _g(N - k)))
        return out
    if name == "thm72":
        da = _delta([_g(x) for x in A4])
        d11 = _delta([_g(k) for k in range(1, N)])
        w1 = f"({inc_word(1)}) {da}^-1"
        w2 = f"({inc_word(1)})^6 {d11}^-1"
        swap = {"A": "D", "B": "C", "C": "B", "D": "A"}
        out = []
        for k in range(N):
            out.append(_rel(f"W1 {_g(k)}", f"{w1} {_g(k)} ({w1})^-1", _g(k + 1)))
            out.append(_rel(f"W2 {_g(k)}", f"{w2} {_g(k)} ({w2})^-1", _g(6 - k)))
        for x in A4:
            out.append(_rel(f"W1 {_g(x)}", f"{w1} {_g(x)} ({w1})^-1", _g(swap[x])))
            out.append(_rel(f"W2 {_g(x)}", f"{w2} {_g(x)} ({w2})^-1", _g(x)))
        return out
    raise KeyError(f"unknown relator suite {name!r}")


SUITES = ("thm31_1", "thm31_2", "thm31_3", "thm31_4", "thm32", "thm65", "thm65_conj", "thm72")

DESCRIPTIONS = {
    "thm31_1": "affine A11 Artin relations",
    "thm31_2": "braids in C minus 0 with 0 adjoined",
    "thm31_3": "braids in C minus 0 with infinity adjoined",
    "thm31_4": "braids on the sphere",
    "thm32": "moduli of 12 points on the line",
    "thm65": "fundamental group of the Deligne-Mostow quotient",
    "thm65_conj": "conjugation by I, D and Delta",
    "thm72": "basepoint change words",
}


def dump_suite(rels: Sequence[Relator]) -> str:
    return "".join(f"{r.label}\t{r.text()}\n" for r in rels)


def load_suite(text: str) -> list[Relator]:
    out = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        label, _, body = line.partition("\t")
        out.append(Relator.parse(label, body or label))
    return out


def check_relators(rs: Sequence[Relator], a: Assignment, suite: str = "relators",
                   expected_scalars: Optional[dict[str, CycElem]] = None) -> Report:
    """Evaluate each relator under the assignment; matrix targets record the scalar rhs/lhs."""
    rep = Report("coxeter", f"{DESCRIPTIONS.get(suite, suite)} under the {a.name} assignment")
    expected_scalars = expected_scalars or {}
    cache: dict = {}

    def val(node):
        key = render_word(node)
        if key not in cache:
            cache[key] = evaluate(node, a.ops)
        return cache[key]

    for r in rs:
        ok, lam = a.equal(val(r.lhs), val(r.rhs))
        witness = {"relation": r.text()}
        if lam is not None:
            witness["scalar"] = lam
            if r.label in expected_scalars:
                ok = ok and lam == expected_scalars[r.label]
                witness["expected_scalar"] = expected_scalars[r.label]
        rep.check(r.label, ok, witness)
    return rep.finish()


# --------------------------------------------------------------------------
# deflation


DEFLATION_WORD = f"{inc_word(0)} ({inc_word(1)})^-1"


def deflation_vector(shift: int = 0) -> Optional[tuple[int, ...]]:
    """Translation vector of the deflation word with every index shifted."""
    word = f"{inc_word(shift)} ({inc_word(shift + 1)})^-1"
    return translation_part(affine_assignment().value(word))


def conjugate_translations(v: Sequence[int], max_rounds: int = 64) -> tuple[list[tuple[int, ...]], int]:
    """Translation vectors obtained by conjugating v with generator words, grown
    breadth-first until the integral rank stops increasing over a full round."""
    gens = [cox_generator(i) for i in range(N)]
    seen = {tuple(v)}
    frontier = [tuple(v)]
    rank = hnf([list(v)], with_transform=False).rank
    for _ in range(max_rounds):
        nxt = []
        for vec in frontier:
            t = AffinePermutation(tuple(i + 1 + N * x for i, x in enumerate(vec)))
            for g in gens:
                c = translation_part(g @ t @ g.inverse())
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        if not nxt:
            break
        new_rank = hnf([list(x) for x in seen], with_transform=False).rank
        frontier = nxt
        if new_rank == rank and rank == N - 1:
            break
        rank = new_rank
    return sorted(seen), rank


def deflation_check() -> Report:
    rep = Report("coxeter", "deflation of the affine A11 Coxeter group")
    aff = affine_assignment()
    img = aff.value(DEFLATION_WORD)
    vec = translation_part(img)
    rep.check("delta_is_nonidentity_translation",
              vec is not None and any(vec), {"translation": vec, "window": img.window})
    if vec is not None:
        vs, rank = conjugate_translations(vec)
        rep.check("conjugate_translation_rank_11", rank == N - 1, {"rank": rank, "vectors": len(vs)})
    shifted = [deflation_vector(s) for s in range(N)]
    rot = all(shifted[s] == tuple(vec[(i - s) % N] for i in range(N)) for s in range(N)) if vec else False
    rep.check("basepoint_symmetry", rot, {"shifted": shifted[1]})
    cox = coxeter_relators()
    sym = symmetric_assignment()
    bad = [r.label for r in cox if not sym.equal(sym.value(r.lhs), sym.value(r.rhs))[0]]
    rep.check("S12_satisfies_coxeter_relators", not bad, {"failures": bad, "count": len(cox)})
    killed = sym.value(DEFLATION_WORD) == tuple(range(N))
    rep.check("S12_kills_delta", killed)
    affbad = [r.label for r in cox if not aff.equal(aff.value(r.lhs), aff.value(r.rhs))[0]]
    rep.check("affine_satisfies_coxeter_relators", not affbad, {"failures": affbad})
    return rep.finish()


def coxeter_relators() -> list[Relator]:
    """Artin relations of the 12-cycle plus g_i^2 = 1."""
    return artin_cycle() + [_rel(f"{_g(i)}^2", f"{_g(i)}^2") for i in range(N)]


def verify_relator_suites() -> list[Report]:
    """Every suite under the assignments that are homomorphic images of its group."""
    from .exactnum import E_PI3

    sym, aff, mat = symmetric_assignment(), affine_assignment(), matrix_assignment()
    reps = []
    for s in ("thm31_1", "thm31_2", "thm31_3", "thm31_4", "thm32"):
        reps.append(check_relators(relator_suite(s), sym, s))
    reps.append(check_relators(relator_suite("thm31_1"), aff, "thm31_1"))
    one = CycElem.coerce(1)
    exp = {"ID=Delta(A..D)^2": E_PI3, "D^6=I^6": one}
    for r in relator_suite("thm65"):
        exp.setdefault(r.label, None)
    exp = {k: v for k, v in exp.items() if v is not None}
    reps.append(check_relators(relator_suite("thm65"), mat, "thm65", exp))
    reps.append(check_relators(relator_suite("thm65_conj"), mat, "thm65_conj"))
    reps.append(check_relators(relator_suite("thm72"), mat, "thm72"))
    return reps
