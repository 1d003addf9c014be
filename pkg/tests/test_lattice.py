from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eisgeom import model
from eisgeom.exactnum import THETA, THETA_BAR, ZERO, CycElem, EisInt
from eisgeom.intlin import hnf, int_det
from eisgeom.lattice import (
    CacheError,
    GramLattice,
    direct_sum,
    enumerate_by_norm,
    enumerate_quadratic,
    gram_from_graph,
    hnf_membership,
    rank_and_radical,
    read_vector_file,
    real_form,
    signature,
    theta_dual_equals_self,
    write_vector_file,
)
from eisgeom.suites import alternating_twelve_gon, hyperbolic_cell


def test_a4_gram_shape():
    g = model.a4_block_gram()
    assert g[0][1] == THETA_BAR and g[1][0] == THETA
    assert g[1][2] == THETA and g[2][1] == THETA_BAR and g[2][3] == THETA_BAR and g[3][2] == THETA
    assert signature(g)[:2] == (4, 0)


def test_rank_one_real_form_is_a2():
    z = real_form(GramLattice([[CycElem(3)]]))
    assert z.matrix == [[2, -1], [-1, 2]]
    assert z.det == 3


def test_l4_real_form_is_e8():
    z = real_form(GramLattice(model.a4_block_gram()))
    assert z.dim == 8 and z.is_even() and z.det == 1


def test_theta_duality():
    a4 = model.a4_block_gram()
    assert theta_dual_equals_self(GramLattice(a4))
    assert theta_dual_equals_self(GramLattice(hyperbolic_cell()))
    assert theta_dual_equals_self(GramLattice(direct_sum(hyperbolic_cell(), a4, a4, a4)))
    assert not theta_dual_equals_self(GramLattice([[CycElem(3), ZERO], [ZERO, CycElem(3)]]))
    assert not theta_dual_equals_self(GramLattice([[CycElem(3)]]))


def test_theta_duality_of_l_and_ldm():
    lat = GramLattice.from_vectors(model.lattice_L().basis())
    ldm = GramLattice.from_vectors(model.lattice_LDM())
    assert theta_dual_equals_self(lat) and theta_dual_equals_self(ldm)
    assert signature(lat.gram)[:2] == (13, 1)
    assert signature(ldm.gram)[:2] == (9, 1)


def test_graph_lattices():
    r, rad = rank_and_radical(gram_from_graph(model.incidence_graph()))
    assert (r, len(rad)) == (14, 12)
    r, rad = rank_and_radical(gram_from_graph(alternating_twelve_gon()))
    assert (r, len(rad)) == (10, 2)


def test_enumeration_counts():
    k = GramLattice(model.a4_block_gram())
    assert len(enumerate_by_norm(k, 1)) == 0
    assert len(enumerate_by_norm(k, 3)) == 240
    assert len(enumerate_by_norm(k, 6)) == 2160


def test_enumeration_unit_closed_and_exact():
    k = GramLattice(model.a4_block_gram())
    vecs = enumerate_by_norm(k, 3)
    keys = set(vecs)
    assert vecs == sorted(vecs)
    for v in vecs:
        w = []
        for i in range(0, 8, 2):
            x = EisInt(v[i], v[i + 1]) * EisInt(0, 1)
            w.extend((x.m, x.n))
        assert tuple(w) in keys
        assert tuple(-x for x in v) in keys


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 6))
def test_quadratic_enumeration_against_brute_force(n, bound):
    # x^2 + ... with a fixed positive definite tridiagonal form
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(2)
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = Fraction(-1)
    got = set(map(tuple, enumerate_quadratic(g, bound)))
    import itertools

    r = 4
    brute = {x for x in itertools.product(range(-r, r + 1), repeat=n)
             if sum(g[i][j] * x[i] * x[j] for i in range(n) for j in range(n)) <= bound}
    assert {x for x in got if max(map(abs, x), default=0) <= r} == brute


def test_membership():
    roots = model.root_list()
    assert hnf_membership(roots, roots[0]).member
    sp = model.special_points()
    nr = model.named_roots()
    v = tuple((a + b) / THETA for a, b in zip(nr["s0"], sp["c"]))
    assert hnf_membership(roots, v).member
    p1 = model.build_roots()["p1"]
    assert not hnf_membership(roots, tuple(x / THETA for x in p1)).member


def test_hnf_kernel_and_det():
    h = hnf([[2, 4, 6], [1, 2, 3], [0, 1, 1]])
    assert h.rank == 2
    for k in h.kernel:
        assert [sum(k[i] * row[j] for i, row in enumerate([[2, 4, 6], [1, 2, 3], [0, 1, 1]])) for j in range(3)] == [0, 0, 0]
    assert int_det([[2, 1], [1, 2]]) == 3


def test_vector_file_round_trip(tmp_path):
    p = tmp_path / "v.vec"
    vecs = [(1, -2, 3), (0, 0, 5)]
    write_vector_file(str(p), "lat", "3", vecs)
    meta, back = read_vector_file(str(p), "lat", "3")
    assert back == vecs and meta["count"] == "2"


def test_vector_file_corruption_detected(tmp_path):
    p = tmp_path / "v.vec"
    write_vector_file(str(p), "lat", "3", [(1, 2)])
    text = p.read_text().replace("1 2", "1 3")
    p.write_text(text)
    with pytest.raises(CacheError):
        read_vector_file(str(p))
    with pytest.raises(CacheError):
        write_vector_file(str(p), "lat", "3", [(1, 2)])
        read_vector_file(str(p), "other")
