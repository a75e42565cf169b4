from hypothesis import given
from hypothesis import strategies as st

from shifthull.freegroup import IDENTITY, FreeGroupWord, ball, reduce_word
from shifthull.words import Alphabet

letters = st.lists(st.tuples(st.sampled_from("ab"), st.sampled_from([1, -1])), max_size=8)


@given(letters)
def test_reduction_is_idempotent(word):
    reduced = reduce_word(word)
    assert reduce_word(reduced.letters) == reduced
    assert all(x != (y[0], -y[1]) for x, y in zip(reduced.letters, reduced.letters[1:]))


@given(letters, letters)
def test_group_laws(x, y):
    g, h = reduce_word(x), reduce_word(y)
    assert g * g.inverse() == IDENTITY
    assert (g * h).inverse() == h.inverse() * g.inverse()
    assert g * IDENTITY == g


def test_of_and_as_uv():
    g = FreeGroupWord.of("ab", "cb")
    assert str(g) == "ac⁻¹"
    assert g.as_uv() == ("a", "c")
    assert FreeGroupWord.of("ab", "ab").is_identity
    assert (FreeGroupWord.of("", "a") * FreeGroupWord.of("b")).as_uv() is None
    assert str(IDENTITY) == "ε"


def test_ball_sizes():
    group = ball(Alphabet(("a", "b")), 2)
    assert len(group) == 1 + 4 + 12
    assert group[0] == IDENTITY
    assert len(set(group)) == len(group)
