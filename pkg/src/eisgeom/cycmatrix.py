"""Square matrices over Q(i, sqrt3) stored as four integer matrices over a common denominator.

M = (A + sqrt3*B + i*C + i*sqrt3*D) / den, with A..D numpy object arrays of Python
ints, so products stay exact and reasonably fast.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exactnum import ZERO, CycElem


def _lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def _zeros(n: int) -> np.ndarray:
    return np.zeros((n, n), dtype=object) * 0  # object array of Python int 0


class CycMatrix:
    __slots__ = ("parts", "den", "n")

    def __init__(self, parts: Sequence[np.ndarray], den: int = 1, normalize: bool = True):
        self.parts = tuple(parts)
        self.den = int(den)
        self.n = self.parts[0].shape[0]
        if normalize:
            self._normalize()

    def _normalize(self) -> None:
        g = self.den
        for p in self.parts:
            for x in p.flat:
                if x:
                    g = math.gcd(g, int(x))
                    if g == 1:
                        return
        if g > 1:
            self.parts = tuple(p // g for p in self.parts)
            self.den //= g

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "CycMatrix":
        n = len(rows)
        ents = [[CycElem.coerce(x).parts() for x in r] for r in rows]
        den = _lcm(f.denominator for r in ents for e in r for f in e)
        parts = []
        for k in range(4):
            a = np.empty((n, len(rows[0])), dtype=object)
            for i, r in enumerate(ents):
                for j, e in enumerate(r):
                    a[i, j] = int(e[k] * den)
            parts.append(a)
        return CycMatrix(parts, den)

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "CycMatrix":
        n = len(cols[0])
        return CycMatrix.from_rows([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @staticmethod
    def identity(n: int) -> "CycMatrix":
        a = _zeros(n)
        for i in range(n):
            a[i, i] = 1
        return CycMatrix((a, _zeros(n), _zeros(n), _zeros(n)), 1, normalize=False)

    @staticmethod
    def scalar(n: int, c: CycElem) -> "CycMatrix":
        return CycMatrix.identity(n).scale(c)

    def entry(self, i: int, j: int) -> CycElem:
        a, b, c, d = (int(p[i, j]) for p in self.parts)
        den = self.den
        return CycElem.from_parts(Fraction(a, den), Fraction(b, den), Fraction(c, den), Fraction(d, den))

    def rows(self) -> list[list[CycElem]]:
        return [[self.entry(i, j) for j in range(self.parts[0].shape[1])] for i in range(self.n)]

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        a1, b1, c1, d1 = self.parts
        a2, b2, c2, d2 = other.parts

        def mm(x, y):
            return x.dot(y)

        z1 = [p.any() for p in self.parts]
        z2 = [p.any() for p in other.parts]
        zero = np.zeros((a1.shape[0], a2.shape[1]), dtype=object)

        def term(x, y, fx, fy):
            return mm(x, y) if (fx and fy) else zero

        aa = term(a1, a2, z1[0], z2[0]) + 3 * term(b1, b2, z1[1], z2[1]) - term(c1, c2, z1[2], z2[2]) - 3 * term(d1, d2, z1[3], z2[3])
        bb = term(a1, b2, z1[0], z2[1]) + term(b1, a2, z1[1], z2[0]) - term(c1, d2, z1[2], z2[3]) - term(d1, c2, z1[3], z2[2])
        cc = term(a1, c2, z1[0], z2[2]) + term(c1, a2, z1[2], z2[0]) + 3 * term(b1, d2, z1[1], z2[3]) + 3 * term(d1, b2, z1[3], z2[1])
        dd = term(a1, d2, z1[0], z2[3]) + term(d1, a2, z1[3], z2[0]) + term(b1, c2, z1[1], z2[2]) + term(c1, b2, z1[2], z2[1])
        return CycMatrix((aa, bb, cc, dd), self.den * other.den)

    def scale(self, c: CycElem) -> "CycMatrix":
        c = CycElem.coerce(c)
        cm = CycMatrix.from_rows([[c]])
        a2, b2, c2, d2 = (int(p[0, 0]) for p in cm.parts)
        a1, b1, c1, d1 = self.parts
        aa = a1 * a2 + 3 * b1 * b2 - c1 * c2 - 3 * d1 * d2
        bb = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
        cc = a1 * c2 + c1 * a2 + 3 * b1 * d2 + 3 * d1 * b2
        dd = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2
        return CycMatrix((aa, bb, cc, dd), self.den * cm.den)

    def conj_transpose(self) -> "CycMatrix":
        a, b, c, d = self.parts
        return CycMatrix((a.T.copy(), b.T.copy(), -c.T, -d.T), self.den, normalize=False)

    def __neg__(self):
        return CycMatrix(tuple(-p for p in self.parts), self.den, normalize=False)

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            tuple(p * other.den - q * self.den for p, q in zip(self.parts, other.parts)), self.den * other.den
        )

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            tuple(p * other.den + q * self.den for p, q in zip(self.parts, other.parts)), self.den * other.den
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return all(
            np.array_equal(p * other.den, q * self.den) for p, q in zip(self.parts, other.parts)
        )

    def __hash__(self):
        return hash((self.den,) + tuple(tuple(p.flat) for p in self.parts))

    def is_zero(self) -> bool:
        return not any(p.any() for p in self.parts)

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        prod = self @ CycMatrix.from_rows([[x] for x in v])
        return tuple(prod.entry(i, 0) for i in range(self.n))

    def first_nonzero(self) -> Optional[tuple[int, int]]:
        for i in range(self.n):
            for j in range(self.n):
                if any(p[i, j] for p in self.parts):
                    return i, j
        return None

    def scalar_multiple_of(self, other: "CycMatrix") -> Optional[CycElem]:
        """lambda with self == lambda * other, or None."""
        pos = other.first_nonzero()
        if pos is None:
            return ZERO if self.is_zero() else None
        lam = self.entry(*pos) / other.entry(*pos)
        if not lam:
            return None
        return lam if self == other.scale(lam) else None

    def scalar_value(self) -> Optional[CycElem]:
        """c if self == c * identity, else None."""
        lam = self.entry(0, 0)
        return lam if self == CycMatrix.scalar(self.n, lam) else None

    def projective_key(self) -> "CycMatrix":
        """Canonical representative of the scalar class: first nonzero entry scaled to 1."""
        pos = self.first_nonzero()
        if pos is None:
            return self
        return self.scale(self.entry(*pos).inverse())

    def __pow__(self, k: int) -> "CycMatrix":
        if k < 0:
            raise ValueError("use inverse() for negative powers")
        out = CycMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __repr__(self):
        return f"CycMatrix(n={self.n}, den={self.den})"
