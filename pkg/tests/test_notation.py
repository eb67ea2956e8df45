from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from acgt.errors import ParseError
from acgt.game_core import Atom, GameStore, int_game, star
from acgt.notation import parse, to_text

import reference as ref


def test_sugar(store):
    z = store.zero
    assert parse(store, "s(0)") == z
    assert parse(store, "star") == star(store)
    assert parse(store, "int(-2)") == int_game(store, -2)
    assert parse(store, "s(-3/2)") == store.score(Fraction(-3, 2))
    assert parse(store, "<e^0|e^0>") == z


def test_bracket_forms(store):
    g = parse(store, "<s(0),star|star>")
    assert store.left_options(g) == tuple(sorted((store.zero, star(store))))
    assert store.right_options(g) == (star(store),)
    h = parse(store, "<s(1)|<s(1)|s(0)>>")
    assert store.right_options(h) == (store.intern([store.score(1)], [store.zero]),)


def test_whitespace_is_free(store):
    assert parse(store, " < s( 1 ) , star |  e^ -1/2 > ") == parse(store, "<s(1),star|e^-1/2>")


@pytest.mark.parametrize("text, pos", [
    ("<s(0)|", 6),
    ("<s(0)|s(0)", 10),
    ("s(1/0)", 2),
    ("s(1/-2)", 4),
    ("s(0) s(0)", 5),
    ("<e^x|e^0>", 3),
    ("", 0),
])
def test_errors_carry_position(store, text, pos):
    with pytest.raises(ParseError) as err:
        parse(store, text)
    assert err.value.position == pos


def test_unicode_rendering(store):
    g = store.intern([store.zero], Atom(0))
    assert to_text(store, g, unicode=True) == "⟨0̂|∅^0⟩"
    assert to_text(store, star(store), unicode=True) == "*"


@settings(max_examples=200, deadline=None)
@given(ref.games(adorns=st.sampled_from([Fraction(n, d) for n in range(-7, 8) for d in (1, 2, 3)])))
def test_round_trip(t):
    s = GameStore()
    g = ref.from_tuple(s, t)
    assert parse(s, to_text(s, g)) == g


def test_round_trip_on_pools(shared):
    s = shared["store"]
    for name in ("dicot-misere-witness", "dicot-scoring", "guaranteed", "zero"):
        for g in shared[name]:
            assert parse(s, to_text(s, g)) == g
