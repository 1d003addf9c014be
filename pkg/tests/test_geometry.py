import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import SEED
from oracles import grid_oracle, random_case, real_vec
from eisgeom import geometry as geo
from eisgeom import model
from eisgeom.exactnum import OMEGA, RealQuad, CycElem
from eisgeom.lattice import eis_coords

SP = model.special_points()
ROOTS = model.root_list()
UNITS = [CycElem(1), -CycElem(1), OMEGA, -OMEGA, OMEGA * OMEGA, -(OMEGA * OMEGA)]

eis_small = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
scalar = st.builds(CycElem.from_parts, *(st.fractions(-5, 5, max_denominator=6),) * 4).filter(bool)


def _perturbed(center, deltas):
    """center + small Eisenstein perturbation in the first few coordinates."""
    v = list(center)
    for k, (m, n) in enumerate(deltas):
        v[k + 1] = v[k + 1] + m + n * OMEGA
    return tuple(v)


ball_point = st.builds(
    _perturbed,
    st.sampled_from([SP["c"], SP["tau"], SP["rho"], SP["pinf"]]),
    st.lists(eis_small, max_size=3),
)


def _scale(lam, v):
    return tuple(lam * x for x in v)


@settings(max_examples=1000, deadline=None, derandomize=True)
@given(ball_point, ball_point, st.sampled_from(ROOTS), scalar, scalar)
def test_distance_predicates_are_scalar_invariant(v, w, s, lam, mu):
    if model.norm(v).re.sign() >= 0 or model.norm(w).re.sign() >= 0:
        return
    assert geo.cosh_sq_dist(_scale(lam, v), _scale(mu, w)) == geo.cosh_sq_dist(v, w)
    u = UNITS[hash(lam) % 6]
    assert geo.sinh_sq_dist_to_mirror(_scale(lam, v), _scale(u, s)) == geo.sinh_sq_dist_to_mirror(v, s)


def test_distance_domain_checks():
    with pytest.raises(ValueError):
        geo.cosh_sq_dist(ROOTS[0], SP["c"])
    with pytest.raises(ValueError):
        geo.sinh_sq_dist_to_mirror(SP["c"], SP["tau"])
    assert geo.cosh_sq_dist(SP["c"], SP["c"]).value == 1


quad = st.builds(RealQuad, st.fractions(0, 6, max_denominator=20), st.fractions(0, 3, max_denominator=20))


@settings(max_examples=300, deadline=None, derandomize=True)
@given(quad, quad, quad)
def test_sinh_sum_agrees_with_floats(a, b, c):
    b = b + 1
    lhs = math.asinh(math.sqrt(float(a))) + math.acosh(math.sqrt(float(b)))
    rhs = math.asinh(math.sqrt(float(c)))
    if abs(lhs - rhs) < 1e-9:
        return
    assert geo.sinh_sum_below(a, b, c) == (lhs < rhs)


def test_sinh_sum_boundary_is_strict():
    # asinh(0) + acosh(1) = 0 is not below asinh(0)
    assert not geo.sinh_sum_below(0, 1, 0)
    assert geo.sinh_sum_below(0, 1, Fraction(1, 100))


@settings(max_examples=50, deadline=None, derandomize=True)
@given(st.lists(st.lists(st.integers(-40, 40), min_size=28, max_size=28), min_size=1, max_size=6),
       st.sampled_from(list(SP.values()) + ROOTS[:6]))
def test_pairing_matches_exact_herm(rows, w):
    arr = np.array(rows, dtype=np.int64)
    p = geo.pairing(arr, w)
    for i, r in enumerate(arr):
        assert p.value(i) == model.herm(geo.vector_of(r), w)
    A, B, den = p.abs2_parts()
    for i, r in enumerate(arr):
        assert RealQuad(Fraction(int(A[i]), den), Fraction(int(B[i]), den)) == model.herm(geo.vector_of(r), w).abs2()


def test_quad_sign_array():
    rng = np.random.default_rng(SEED)
    a = rng.integers(-10**6, 10**6, 2000)
    b = rng.integers(-10**6, 10**6, 2000)
    got = geo.quad_sign_array(a, b)
    want = [RealQuad(int(x), int(y)).sign() for x, y in zip(a, b)]
    assert list(got) == want


def test_canonical_units_closed_under_units():
    arr = geo.to_array(ROOTS)
    base = geo.scalar_classes(arr)
    assert len(base) == 26
    for k in range(6):
        assert np.array_equal(geo.scalar_classes(geo.rotate_unit(arr, k)), base)
    assert np.array_equal(geo.rotate_unit(arr, 6), arr)


@pytest.mark.slow
def test_enumerations_are_unit_closed(generic_c, generic_pinf):
    for batches in (generic_c, generic_pinf):
        for rl in batches.values():
            rows = rl.roots
            assert np.array_equal(geo.scalar_classes(rows), rows)
            for k in range(1, 6):
                assert np.array_equal(geo.scalar_classes(geo.rotate_unit(rows, k)), rows)
            assert (geo.array_norms(rows) == 3).all()


def test_l4_counts():
    assert len(geo.l4_vectors(3)) == 240
    assert len(geo.l4_vectors(6)) == 2160


# classification ---------------------------------------------------------


def test_classification_matches_dense_sampling():
    rng = random.Random(SEED)
    decided = tally = 0
    counts = {}
    while decided < 150:
        poly, s = random_case(rng)
        tally += 1
        verdict = grid_oracle(poly, s)
        if verdict is None:
            continue
        decided += 1
        hit = geo.mirror_polygon_classify(s, poly)
        counts[hit.outcome] = counts.get(hit.outcome, 0) + 1
        assert (hit.outcome != geo.MISS) == verdict, (SEED, tally, hit)
        if hit.outcome in (geo.VERTEX, geo.EDGE):
            # the zero locus must really lie on the reported face
            idx = [poly.names.index(n) for n in hit.face]
            z = [complex(model.herm(poly.vertices[k], s)) for k in idx]
            t = np.linspace(0, 1, 200001)
            seg = np.abs(t * z[0] + (1 - t) * z[-1])
            assert seg.min() <= 1e-5 * max(1.0, max(abs(x) for x in z))
    assert counts.get(geo.MISS, 0) > 10 and counts.get(geo.INTERIOR, 0) > 10, counts


def test_vectorized_route_matches_scalar_route():
    rng = random.Random(SEED + 1)
    for _ in range(20):
        poly, s = random_case(rng)
        rows = [s] + [tuple(x + rng.randint(-1, 1) * OMEGA for x in s) for _ in range(10)]
        rows += [tuple(rng.randint(-2, 2) + rng.randint(-2, 2) * OMEGA for _ in range(14)) for _ in range(10)]
        arr = np.array([eis_coords(r) for r in rows], dtype=np.int64)
        bulk = geo.classify_array(arr, poly)
        for i, r in enumerate(rows):
            want = geo.mirror_polygon_classify(r, poly)
            assert bulk.outcome(i) == want.outcome
            if want.outcome != geo.MISS:
                assert geo._mask_names(int(bulk.faces[i]), poly.names) == want.face


def _tri():
    return geo.Polygon(
        (real_vec([10, 0, 0] + [0] * 11), real_vec([10, 1, 0] + [0] * 11), real_vec([10, 0, 1] + [0] * 11)),
        ("a", "b", "c"),
    )


@pytest.mark.parametrize(
    "s, outcome, face",
    [
        ((1, 0, 0), geo.MISS, set()),
        ((0, 1, OMEGA), geo.VERTEX, {"a"}),
        ((1, 10, 0), geo.VERTEX, {"b"}),
        ((0, 0, 1), geo.EDGE, {"a", "b"}),
        ((0, 1, 0), geo.EDGE, {"a", "c"}),
        ((1, 10, 10), geo.EDGE, {"b", "c"}),
        ((1, 20, OMEGA), geo.EDGE, {"a", "b"}),
        ((0, 1, -1), geo.INTERIOR, {"a", "b", "c"}),
        ((-1, -20 - 10 * OMEGA, -10 + 10 * OMEGA), geo.INTERIOR, {"a", "b", "c"}),
        ((0, 0, 0, 1), geo.WHOLE, {"a", "b", "c"}),
    ],
)
def test_degenerate_cases(s, outcome, face):
    poly = _tri()
    s = tuple(CycElem.coerce(x) for x in s) + (CycElem(0),) * (14 - len(s))
    hit = geo.mirror_polygon_classify(s, poly)
    assert hit.outcome == outcome and hit.face == frozenset(face)
    arr = np.array([eis_coords(s)], dtype=np.int64)
    bulk = geo.classify_array(arr, poly)
    assert bulk.outcome(0) == outcome


def test_polygon_rejects_non_totally_real():
    v = real_vec([10, 1] + [0] * 12)
    w = tuple([CycElem(10), OMEGA] + [CycElem(0)] * 12)
    with pytest.raises(ValueError):
        geo.Polygon((v, w, v), ("a", "b", "c"))


def test_polygon_cover():
    rep = geo.verify_polygon_cover()
    assert rep.passed, rep.failures()


def test_designated_hits():
    for case in "ABQ":
        poly, root, edge = geo.polygon_case(case)
        hit = geo.mirror_polygon_classify(root, poly)
        assert hit.outcome == geo.EDGE and hit.face == frozenset(edge)


def test_nearest_tau_closed_form_and_sigma():
    r = model.build_roots()
    tau = SP["tau"]
    assert geo.sinh_sq_dist_to_mirror(tau, r["p1"]).value == RealQuad(Fraction(-3, 78), Fraction(4, 78))
    rep = geo.verify_sigma_criteria(Fraction(1, 2))
    assert rep.passed, rep.failures()
