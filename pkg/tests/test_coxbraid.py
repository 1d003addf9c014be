import pytest
from hypothesis import given, settings, strategies as st

from eisgeom import coxbraid as cb
from eisgeom.exactnum import E_PI3

gens = st.lists(st.integers(0, 11), max_size=12)


def _compose(idx):
    out = cb.AffinePermutation.identity()
    for i in idx:
        out = out @ cb.cox_generator(i)
    return out


@given(gens, gens, gens)
def test_affine_composition_associative(a, b, c):
    x, y, z = _compose(a), _compose(b), _compose(c)
    assert (x @ y) @ z == x @ (y @ z)
    assert x @ x.inverse() == cb.AffinePermutation.identity()


def test_window_validation():
    with pytest.raises(ValueError):
        cb.AffinePermutation((1, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12))
    with pytest.raises(ValueError):
        cb.AffinePermutation((13, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12))


def test_coxeter_relations_in_affine_model():
    e = cb.AffinePermutation.identity()
    for i in range(12):
        s = cb.cox_generator(i)
        assert s @ s == e
        for j in range(i + 1, 12):
            t = cb.cox_generator(j)
            if (j - i) % 12 in (1, 11):
                assert s @ t @ s == t @ s @ t and s @ t != t @ s
            else:
                assert s @ t == t @ s


def test_translation_part():
    assert cb.translation_part(cb.AffinePermutation.identity()) == (0,) * 12
    assert cb.translation_part(cb.cox_generator(0)) is None
    v = cb.deflation_vector()
    assert v is not None and any(v) and sum(v) == 0


@settings(max_examples=50)
@given(st.lists(st.integers(-3, 3), min_size=11, max_size=11), st.lists(st.integers(-3, 3), min_size=11, max_size=11))
def test_translation_part_is_homomorphism(a, b):
    def tr(v):
        v = v + [-sum(v)]
        return cb.AffinePermutation(tuple(i + 1 + 12 * x for i, x in enumerate(v))), tuple(v)

    (x, u), (y, w) = tr(a), tr(b)
    assert cb.translation_part(x @ y) == tuple(p + q for p, q in zip(u, w))


def test_deflation():
    rep = cb.deflation_check()
    assert rep.passed, rep.failures()
    assert rep.get("conjugate_translation_rank_11").witness["rank"] == 11


def test_basepoint_symmetry_of_deflation():
    v = cb.deflation_vector(0)
    for s in range(12):
        assert cb.deflation_vector(s) == tuple(v[(i - s) % 12] for i in range(12))


def test_suite_sizes():
    assert len(cb.artin_cycle()) == 66
    assert sum(r.label.startswith("braid") for r in cb.relator_suite("thm31_1")) == 12
    assert sum(r.label.startswith("commute") for r in cb.relator_suite("thm31_1")) == 54
    t65 = cb.relator_suite("thm65")
    assert len(t65) == 120 + 11 + 11 + 2
    t32 = cb.relator_suite("thm32")
    assert any(r.label == "I^6=D^6" for r in t32)
    with pytest.raises(KeyError):
        cb.relator_suite("nope")


def test_suite_text_round_trip():
    for name in cb.SUITES:
        rels = cb.relator_suite(name)
        back = cb.load_suite(cb.dump_suite(rels))
        assert [r.text() for r in back] == [r.text() for r in rels]


@pytest.mark.parametrize("name", ["thm31_1", "thm31_2", "thm31_3", "thm31_4", "thm32"])
def test_symmetric_quotient(name):
    assert cb.check_relators(cb.relator_suite(name), cb.symmetric_assignment(), name).passed


def test_twelve_letter_increasing_words_fail_in_symmetric_quotient():
    rep = cb.check_relators(cb.relator_suite("thm32", literal_length=True), cb.symmetric_assignment())
    assert not rep.passed
    assert rep.get("braid(g0,g1)").passed


def test_affine_model_satisfies_only_coxeter_part():
    aff = cb.affine_assignment()
    assert cb.check_relators(cb.relator_suite("thm31_1"), aff).passed
    assert not cb.check_relators(cb.relator_suite("thm31_3"), aff).passed


def test_matrix_assignment_scalars():
    rep = cb.check_relators(cb.relator_suite("thm65"), cb.matrix_assignment(), "thm65")
    assert rep.passed
    assert rep.get("ID=Delta(A..D)^2").witness["scalar"] == E_PI3
    assert rep.get("D^6=I^6").witness["scalar"] == 1
