"""Integer and rational linear algebra: Hermite normal form, determinants, LLL on Gram matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass
class HNF:
    """Row Hermite normal form H = U * A with U unimodular.

    ``rows`` holds the nonzero rows of H, ``pivots`` their pivot columns and
    ``transform`` the matching rows of U.
    """

    rows: list[list[int]]
    pivots: list[int]
    transform: list[list[int]]
    ncols: int
    kernel: list[list[int]] = None  # rows of U killing A: a basis of the left kernel

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> tuple[list[int], list[int]]:
        """Reduce v by the rows; returns (coefficients over rows, residual)."""
        v = list(v)
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        coeffs = [0] * len(self.rows)
        for k, (row, col) in enumerate(zip(self.rows, self.pivots)):
            q = v[col] // row[col]
            if q:
                coeffs[k] = q
                for j in range(col, self.ncols):
                    if row[j]:
                        v[j] -= q * row[j]
        return coeffs, v

    def solve(self, v: Sequence[int]) -> Optional[list[int]]:
        """Integer x with x * A = v, or None if v is not in the row lattice."""
        coeffs, residual = self.reduce(v)
        if any(residual):
            return None
        nrows_a = len(self.transform[0]) if self.transform else 0
        x = [0] * nrows_a
        for c, urow in zip(coeffs, self.transform):
            if c:
                for j, u in enumerate(urow):
                    if u:
                        x[j] += c * u
        return x

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v)[1])

    def index_if_full(self) -> int:
        """Product of pivots, the index in Z^ncols when the rank is full."""
        if self.rank != self.ncols:
            raise ValueError("lattice is not of full rank")
        out = 1
        for row, col in zip(self.rows, self.pivots):
            out *= row[col]
        return out


def hnf(matrix: Sequence[Sequence[int]], with_transform: bool = True) -> HNF:
    """Row-style Hermite normal form of an integer matrix."""
    a = [list(map(int, r)) for r in matrix]
    m = len(a)
    ncols = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)] if with_transform else None

    def combine(i, j, p, q, r, s):
        # rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j)
        ri, rj = a[i], a[j]
        a[i] = [p * x + q * y for x, y in zip(ri, rj)]
        a[j] = [r * x + s * y for x, y in zip(ri, rj)]
        if u is not None:
            ui, uj = u[i], u[j]
            u[i] = [p * x + q * y for x, y in zip(ui, uj)]
            u[j] = [r * x + s * y for x, y in zip(ui, uj)]

    pivots = []
    top = 0
    for col in range(ncols):
        if top >= m:
            break
        for i in range(top + 1, m):
            if a[i][col] == 0:
                continue
            x, y = a[top][col], a[i][col]
            g, p, q = xgcd(x, y)
            combine(top, i, p, q, -y // g, x // g)
        if a[top][col] == 0:
            continue
        if a[top][col] < 0:
            a[top] = [-x for x in a[top]]
            if u is not None:
                u[top] = [-x for x in u[top]]
        piv = a[top][col]
        for i in range(top):
            q = a[i][col] // piv
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                if u is not None:
                    u[i] = [x - q * y for x, y in zip(u[i], u[top])]
        pivots.append(col)
        top += 1
    rows = a[:top]
    transform = u[:top] if u is not None else []
    kern = u[top:] if u is not None else []
    return HNF(rows, pivots, transform, ncols, kern)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) > 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("square matrix required")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def rational_inverse(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def lll_gram(gram: Sequence[Sequence[Fraction]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """Unimodular T such that T G T^t is LLL-reduced, for positive definite G.

    Used only to precondition enumeration; any unimodular T spans the same lattice.
    """
    n = len(gram)
    b = [list(map(Fraction, r)) for r in gram]
    h = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return h
    mu = [[Fraction(0)] * n for _ in range(n)]
    bs = [Fraction(0)] * n
    bs[0] = b[0][0]

    def red(k, l):
        if abs(mu[k][l]) <= Fraction(1, 2):
            return
        q = round(mu[k][l])
        h[k] = [x - q * y for x, y in zip(h[k], h[l])]
        bkl, bll = b[k][l], b[l][l]
        bkk = b[k][k] - 2 * q * bkl + q * q * bll
        for j in range(n):
            b[k][j] -= q * b[l][j]
        b[k][k] = bkk
        for j in range(n):
            b[j][k] = b[k][j]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k, kmax):
        h[k], h[k - 1] = h[k - 1], h[k]
        b[k], b[k - 1] = b[k - 1], b[k]
        for row in b:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        big = bs[k] + m * m * bs[k - 1]
        mu[k][k - 1] = m * bs[k - 1] / big
        bs[k] = bs[k - 1] * bs[k] / big
        bs[k - 1] = big
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                s = b[k][j]
                for i in range(j):
                    s -= mu[j][i] * mu[k][i] * bs[i]
                mu[k][j] = s / bs[j]
            s = b[k][k]
            for j in range(k):
                s -= mu[k][j] * mu[k][j] * bs[j]
            bs[k] = s
            if bs[k] <= 0:
                raise ValueError("Gram matrix is not positive definite")
        red(k, k - 1)
        if bs[k] < (delta - mu[k][k - 1] ** 2) * bs[k - 1]:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return h
