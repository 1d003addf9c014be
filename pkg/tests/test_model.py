import pytest

from eisgeom import model
from eisgeom.exactnum import THETA, CycElem, real_sign


def test_roots_have_norm_3_and_incidence_products():
    roots = model.build_roots()
    assert len(roots) == 26
    assert all(model.norm(v) == 3 for v in roots.values())
    for j in range(1, 14):
        for i in range(1, 14):
            x = model.herm(roots[f"l{j}"], roots[f"p{i}"])
            if model.incident(i - 1, j - 1):
                assert x.abs2() == 3
            else:
                assert not x


def test_special_points():
    sp = model.special_points()
    assert model.norm(sp["c"]) == -3
    assert real_sign(model.norm(sp["tau"]).re) < 0
    assert real_sign(model.norm(sp["rho"]).re) < 0
    # rho is orthogonal to the A4 roots
    _, a4 = model.twelve_gon_and_a4()
    assert all(not model.herm(sp["rho"], a) for a in a4)


def test_named_roots_form_twelve_gon_plus_a4():
    nr = model.named_roots()
    for j in range(12):
        a, b = nr[f"s{j}"], nr[f"s{(j + 1) % 12}"]
        assert model.herm(a, b).abs2() == 3
        for k in range(j + 2, j + 11):
            assert not model.herm(a, nr[f"s{k % 12}"])
    names = ["sA", "sB", "sC", "sD"]
    for i, x in enumerate(names):
        for j, y in enumerate(names):
            prod = model.herm(nr[x], nr[y])
            if abs(i - j) == 1:
                assert prod.abs2() == 3
            elif i != j:
                assert not prod
        assert all(not model.herm(nr[x], nr[f"s{k}"]) for k in range(12))


def test_cbasis_gram_is_block_matrix():
    assert model.cbasis().gram == model.displayed_cbasis_gram()


def test_membership_characterization_both_directions():
    span_l = model.lattice_L()
    gens = model.characterization_generators()
    span_c = model.LatticeSpan(gens)
    assert all(span_l.contains(g) for g in gens)
    assert all(span_c.contains(r) for r in model.root_list())


def test_c_coordinates_rule():
    ok, _ = model.c_coordinates_ok([THETA.inverse(), THETA.inverse()] + [CycElem(0)] * 12)
    assert ok
    bad, why = model.c_coordinates_ok([THETA.inverse(), CycElem(0)] + [CycElem(0)] * 12)
    assert not bad and "congruent" in why


def test_collineation_group():
    grp = model.collineation_group()
    assert len(grp.elements) == 11232
    assert grp.point_group_order == 5616
    assert len(model.d24_stabilizer()) == 24


def test_lifts_preserve_form_and_roots():
    for g in model.collineation_group().generators:
        r = model.lift_report(g)
        assert r["images_ok"] and r["isometry"]
        assert r["tau_scalar"] is not None


def test_sigma_point_range():
    with pytest.raises(ValueError):
        model.sigma_point(0)
    assert model.sigma_point(1).vector == model.special_points()["tau"]
