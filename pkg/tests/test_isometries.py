import pytest
from hypothesis import given, settings, strategies as st

from eisgeom import isometries as iso
from eisgeom import model
from eisgeom.exactnum import E_PI3, E_PI6, OMEGA, ONE

NAMES = [f"S{k}" for k in range(12)] + ["SA", "SB", "SC", "SD"]
word = st.lists(st.tuples(st.sampled_from(NAMES), st.sampled_from([1, -1])), min_size=1, max_size=5)


def _text(w):
    return " ".join(n if e == 1 else f"{n}^-1" for n, e in w)


def test_triflections_of_all_26_roots():
    for s in model.root_list():
        t = iso.triflection(s)
        assert t.apply(s) == tuple(OMEGA * x for x in s)
        assert t @ t @ t == iso.identity()
        assert iso.preserves_L(t)


def test_triflection_rejects_non_roots():
    with pytest.raises(ValueError):
        iso.triflection(model.special_points()["c"])


def test_collineation_lifts_preserve_L():
    for g in model.collineation_group().generators:
        assert iso.preserves_L(iso.Isometry(model.lift(g)))


@settings(max_examples=25, deadline=None)
@given(word)
def test_words_are_isometries_with_inverse(w):
    m = iso.eval_word(_text(w))
    assert model.is_isometry(m.m)
    assert m @ m.inverse() == iso.identity()


def test_plane_action_composes():
    a = iso.eval_word(iso.increasing(1))
    b = iso.eval_word(iso.DELTA_A4)
    pa, pb, pab = iso.plane_action(a), iso.plane_action(b), iso.plane_action(a @ b)
    assert pab.ratio == pa.ratio * pb.ratio == E_PI6 * E_PI6


def test_plane_action_refuses_when_plane_moves():
    assert iso.plane_action(iso.reflections()["S0"]) is None


def test_special_words():
    rep = iso.verify_special_words()
    assert rep.passed, rep.failures()
    assert rep.get("increasing_independent_of_j").witness["matrix_equal"] is True
    assert rep.get("decreasing_independent_of_j").witness["matrix_equal"] is True


def test_delta_a4_squared_is_scalar_times_i_d():
    i_word = iso.eval_word(iso.increasing(1))
    d_word = iso.eval_word(iso.decreasing(11))
    da = iso.eval_word(iso.DELTA_A4)
    assert (da @ da).ratio_to(i_word @ d_word) == E_PI3


def test_sigma_stabilizer():
    rep = iso.verify_sigma_stabilizer()
    assert rep.passed, rep.failures()
    assert iso.order_mod_scalars(iso.eval_word(iso.W1_TEXT)) == 12


def test_basepoint_conjugations_exact():
    rep = iso.verify_basepoint_conjugations()
    assert rep.passed
    assert all(c.witness["level"] == "matrix" for c in rep.checks)


def test_artin_pairs():
    assert iso.verify_artin_pairs().passed


def test_braid_check_rejects_bad_pair():
    r = model.build_roots()
    with pytest.raises(ValueError):
        iso.braid_relation_check(r["p1"], r["p1"])


def test_scalar_identity_is_not_identity():
    assert iso.identity().scalar() == ONE
    assert iso.reflections()["S0"].scalar() is None
