"""Independent oracles for the classification tests: random small totally real
triangles and a dense-sampling decision of whether a mirror meets them."""

import random
from fractions import Fraction

import numpy as np

from eisgeom import geometry as geo
from eisgeom import model
from eisgeom.exactnum import OMEGA, CycElem


def real_vec(xs):
    return tuple(CycElem(Fraction(x)) for x in xs)


def random_case(rng: random.Random):
    """A small totally real triangle and a root whose mirror passes near a point of its plane."""
    base = [rng.randint(-2, 2) for _ in range(14)]
    base[0] = 60
    pts = [[10 * b + rng.randint(-3, 3) for b in base] for _ in range(3)]
    verts = tuple(real_vec(p) for p in pts)
    weights = [rng.randint(-1, 4) for _ in range(3)]
    if sum(weights) <= 0:
        weights[0] += 1 - sum(weights)
    p = real_vec([sum(w * q[k] for w, q in zip(weights, pts)) for k in range(14)])
    w = [rng.randint(-3, 3) + rng.randint(-3, 3) * OMEGA for _ in range(14)]
    s = model.sub(model.smul(model.norm(p), w), model.smul(model.herm(w, p), p))
    s = tuple(x + rng.randint(-1, 1) for x in s)
    return geo.Polygon(verts, ("a", "b", "c")), s


def grid_oracle(poly, s, res=60, levels=8):
    """Sample the real-linear image of the triangle densely, zooming in on the point
    nearest 0 (|f| is convex, so the zoom tracks the true minimum)."""
    z = np.array([complex(model.herm(v, s)) for v in poly.vertices])
    diam = max(abs(a - b) for a in z for b in z)
    centre, width = np.array([1 / 3, 1 / 3]), 1.0
    best = np.inf
    for _ in range(levels):
        g = np.linspace(-width, width, 2 * res + 1)
        x, y = np.meshgrid(centre[0] + g, centre[1] + g)
        x, y = x.ravel(), y.ravel()
        keep = (x >= 0) & (y >= 0) & (x + y <= 1)
        x, y = x[keep], y[keep]
        vals = np.abs(x * z[0] + y * z[1] + (1 - x - y) * z[2])
        k = vals.argmin()
        best = min(best, vals[k])
        centre, width = np.array([x[k], y[k]]), width / 8
    if best < 1e-9 * diam:
        return True
    if best > 1e-6 * diam:
        return False
    return None
