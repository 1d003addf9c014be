import pytest
from hypothesis import given, strategies as st

from eisgeom.words import GroupOps, WordSyntaxError, delta, evaluate, parse_word, render_word, symbols

# free group on letters, words as reduced tuples of (name, +-1)


def _reduce(w):
    out = []
    for x in w:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


FREE = GroupOps(
    identity=lambda: (),
    mul=lambda a, b: _reduce(a + b),
    inv=lambda a: tuple((n, -e) for n, e in reversed(a)),
    gen=lambda n: ((n, 1),),
)

names = st.sampled_from(["S0", "S5", "S11", "SA", "gD", "g3"])
exps = st.integers(-3, 3)
words = st.lists(st.tuples(names, exps), max_size=6).map(
    lambda xs: " ".join(f"{n}^{e}" if e != 1 else n for n, e in xs))


def test_delta_expansion():
    assert evaluate(parse_word("Delta(S1, S2, S3)"), FREE) == evaluate(parse_word("S1 S2 S3 S1 S2 S1"), FREE)
    assert delta([], FREE) == ()


def test_powers_and_groups():
    assert evaluate(parse_word("(S1 S2)^-2"), FREE) == evaluate(parse_word("S2^-1 S1^-1 S2^-1 S1^-1"), FREE)
    assert evaluate(parse_word("S3^0"), FREE) == ()


@given(words)
def test_render_round_trip(text):
    node = parse_word(text)
    assert evaluate(parse_word(render_word(node)), FREE) == evaluate(node, FREE)


@given(words, words)
def test_evaluation_is_a_homomorphism(a, b):
    lhs = evaluate(parse_word(f"({a}) ({b})" if a and b else a + " " + b), FREE)
    assert lhs == FREE.mul(evaluate(parse_word(a), FREE), evaluate(parse_word(b), FREE))


def test_symbols():
    assert symbols(parse_word("Delta(SA, SB)^2 S0^-1")) == {"SA", "SB", "S0"}


@pytest.mark.parametrize("bad", ["S1 +", "(S1", "Delta(S1", "X3", "S1^"])
def test_syntax_errors(bad):
    with pytest.raises(WordSyntaxError):
        parse_word(bad)
