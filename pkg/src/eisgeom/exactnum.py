"""Exact arithmetic in Q(i, sqrt3), its real subfield Q(sqrt3) and the Eisenstein integers.

Elements of Q(i, sqrt3) are stored on the basis {1, sqrt3, i, i*sqrt3} with
rational coefficients, so complex conjugation and real parts are componentwise.
Signs of real elements a + b*sqrt3 are decided by rational case analysis.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rat = Fraction
Scalar = Union[int, Fraction]


def _rat(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def quad_sign(a, b) -> int:
    """Sign of a + b*sqrt3 for rationals (or integers) a, b."""
    sa, sb = _sign(a), _sign(b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with 3 b^2
    d = a * a - 3 * b * b
    return sa if d > 0 else sb


class RealQuad:
    """The real number a + b*sqrt3 with a, b rational."""

    __slots__ = ("a", "b")

    def __init__(self, a: Scalar = 0, b: Scalar = 0):
        object.__setattr__(self, "a", _rat(a))
        object.__setattr__(self, "b", _rat(b))

    def __setattr__(self, name, value):
        raise AttributeError("RealQuad is immutable")

    @staticmethod
    def coerce(x) -> "RealQuad":
        if isinstance(x, RealQuad):
            return x
        return RealQuad(x)

    def __add__(self, other):
        if isinstance(other, CycElem):
            return NotImplemented
        o = RealQuad.coerce(other)
        return RealQuad(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return RealQuad(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, CycElem):
            return NotImplemented
        o = RealQuad.coerce(other)
        return RealQuad(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return RealQuad.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, CycElem):
            return NotImplemented
        o = RealQuad.coerce(other)
        return RealQuad(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def galois(self) -> "RealQuad":
        """The conjugate a - b*sqrt3."""
        return RealQuad(self.a, -self.b)

    def field_norm(self) -> Fraction:
        return self.a * self.a - 3 * self.b * self.b

    def inverse(self) -> "RealQuad":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt3)")
        return RealQuad(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, CycElem):
            return NotImplemented
        return self * RealQuad.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RealQuad.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RealQuad(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sign(self) -> int:
        return quad_sign(self.a, self.b)

    def __eq__(self, other):
        if isinstance(other, CycElem):
            return other == self
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, RealQuad):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * 3 ** 0.5

    def __repr__(self):
        return f"RealQuad({self.a}, {self.b})"

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt3"


def real_sign(x: RealQuad) -> int:
    """Exact sign of a real element of Q(sqrt3): -1, 0 or +1."""
    return RealQuad.coerce(x).sign()


class CycElem:
    """An element re + i*im of Q(i, sqrt3) with re, im in Q(sqrt3)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", RealQuad.coerce(re))
        object.__setattr__(self, "im", RealQuad.coerce(im))

    def __setattr__(self, name, value):
        raise AttributeError("CycElem is immutable")

    @staticmethod
    def from_parts(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> "CycElem":
        """a + b*sqrt3 + c*i + d*i*sqrt3."""
        return CycElem(RealQuad(a, b), RealQuad(c, d))

    @staticmethod
    def coerce(x) -> "CycElem":
        if isinstance(x, CycElem):
            return x
        if isinstance(x, EisInt):
            return x.to_cyc()
        return CycElem(RealQuad.coerce(x))

    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.re.a, self.re.b, self.im.a, self.im.b)

    def __add__(self, other):
        o = CycElem.coerce(other)
        return CycElem(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CycElem(-self.re, -self.im)

    def __sub__(self, other):
        o = CycElem.coerce(other)
        return CycElem(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return CycElem.coerce(other) - self

    def __mul__(self, other):
        o = CycElem.coerce(other)
        return CycElem(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "CycElem":
        return CycElem(self.re, -self.im)

    def abs2(self) -> RealQuad:
        """|x|^2 = x * conj(x) as a real element."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "CycElem":
        n = self.abs2()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt3)")
        ninv = n.inverse()
        return CycElem(self.re * ninv, -self.im * ninv)

    def __truediv__(self, other):
        o = CycElem.coerce(other)
        if not o.im:
            inv = o.re.inverse()
            return CycElem(self.re * inv, self.im * inv)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return CycElem.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RealQuad, EisInt)):
            other = CycElem.coerce(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"CycElem({render(self)!r})"

    def __str__(self):
        return render(self)


def cyc_mul(x: CycElem, y: CycElem) -> CycElem:
    return CycElem.coerce(x) * CycElem.coerce(y)


def cyc_conj(x: CycElem) -> CycElem:
    return CycElem.coerce(x).conj()


def render(x: CycElem) -> str:
    """Canonical text form 'a + b*sqrt3 + c*i + d*i*sqrt3' (rationals as p/q)."""
    a, b, c, d = CycElem.coerce(x).parts()
    return f"{a} + {b}*sqrt3 + {c}*i + {d}*i*sqrt3"


_RAT = r"\s*(-?\d+(?:/\d+)?)\s*"
_TEXT = re.compile(
    rf"^{_RAT}\+{_RAT}\*\s*sqrt3\s*\+{_RAT}\*\s*i\s*\+{_RAT}\*\s*i\s*\*\s*sqrt3\s*$"
)


def parse(text: str) -> CycElem:
    """Inverse of render."""
    m = _TEXT.match(text)
    if not m:
        raise ValueError(f"not a canonical field element: {text!r}")
    return CycElem.from_parts(*(Fraction(g) for g in m.groups()))


class EisInt:
    """The Eisenstein integer m + n*omega."""

    __slots__ = ("m", "n")

    def __init__(self, m: int = 0, n: int = 0):
        if not isinstance(m, int) or not isinstance(n, int):
            raise TypeError("Eisenstein integer components must be int")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("EisInt is immutable")

    def __add__(self, other):
        o = EisInt.coerce(other)
        return EisInt(self.m + o.m, self.n + o.n)

    __radd__ = __add__

    def __neg__(self):
        return EisInt(-self.m, -self.n)

    def __sub__(self, other):
        o = EisInt.coerce(other)
        return EisInt(self.m - o.m, self.n - o.n)

    def __rsub__(self, other):
        return EisInt.coerce(other) - self

    def __mul__(self, other):
        o = EisInt.coerce(other)
        # omega^2 = -1 - omega
        m = self.m * o.m - self.n * o.n
        n = self.m * o.n + self.n * o.m - self.n * o.n
        return EisInt(m, n)

    __rmul__ = __mul__

    @staticmethod
    def coerce(x) -> "EisInt":
        if isinstance(x, EisInt):
            return x
        if isinstance(x, int):
            return EisInt(x, 0)
        raise TypeError(f"cannot treat {x!r} as an Eisenstein integer")

    def conj(self) -> "EisInt":
        # conj(omega) = -1 - omega
        return EisInt(self.m - self.n, -self.n)

    def norm(self) -> int:
        return self.m * self.m - self.m * self.n + self.n * self.n

    def to_cyc(self) -> CycElem:
        return CycElem.from_parts(Fraction(2 * self.m - self.n, 2), 0, 0, Fraction(self.n, 2))

    @staticmethod
    def from_cyc(x: CycElem) -> "EisInt":
        """The Eisenstein integer equal to x; ValueError if x is not in Z[omega]."""
        a, b, c, d = CycElem.coerce(x).parts()
        n = 2 * d
        m = a + d
        if b or c or n.denominator != 1 or m.denominator != 1:
            raise ValueError(f"{render(x)} is not an Eisenstein integer")
        return EisInt(int(m), int(n))

    def divisible_by_theta(self) -> bool:
        # E / theta E = F_3 via m + n*omega -> m + n mod 3
        return (self.m + self.n) % 3 == 0

    def div_theta(self) -> "EisInt":
        """self / theta, assuming divisibility."""
        if not self.divisible_by_theta():
            raise ValueError(f"{self} is not divisible by theta")
        # theta = 1 + 2 omega, conj(theta) = -theta, x/theta = -x*theta/3
        p = self * THETA_E
        return EisInt(-p.m // 3, -p.n // 3)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.n == 0 and self.m == other
        if isinstance(other, EisInt):
            return self.m == other.m and self.n == other.n
        if isinstance(other, (CycElem, RealQuad, Fraction)):
            return self.to_cyc() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.n))

    def __bool__(self):
        return bool(self.m) or bool(self.n)

    def __repr__(self):
        return f"EisInt({self.m}, {self.n})"


def eis_congruent_mod_theta(a: EisInt, b: EisInt) -> bool:
    return (EisInt.coerce(a) - EisInt.coerce(b)).divisible_by_theta()


ZERO = CycElem()
ONE = CycElem(1)
I = CycElem(0, 1)
SQRT3 = CycElem(RealQuad(0, 1))
OMEGA = CycElem.from_parts(Fraction(-1, 2), 0, 0, Fraction(1, 2))
OMEGA_BAR = OMEGA.conj()
THETA = CycElem.from_parts(0, 0, 0, 1)  # i*sqrt3 = omega - omega_bar
THETA_BAR = THETA.conj()
E_PI6 = CycElem.from_parts(0, Fraction(1, 2), Fraction(1, 2), 0)  # (sqrt3 + i)/2
E_PI3 = CycElem.from_parts(Fraction(1, 2), 0, 0, Fraction(1, 2))  # (1 + i sqrt3)/2

OMEGA_E = EisInt(0, 1)
THETA_E = EisInt(1, 2)
UNITS_E = (EisInt(1, 0), EisInt(0, 1), EisInt(-1, -1), EisInt(-1, 0), EisInt(0, -1), EisInt(1, 1))
