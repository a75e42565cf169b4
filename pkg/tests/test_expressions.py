import pytest

from shifthull.constructible import ConstructibleSet, f_lambda, f_lambda_gamma
from shifthull.errors import NotInLanguageError, UsageError
from shifthull.expressions import parse_character, parse_constructible, parse_hull, parse_set, parse_word
from shifthull.hull import HULL_ZERO, equals, identity, invert, theta
from shifthull.words import UNIT, ZERO


def test_words(golden, full2):
    assert parse_word("ε", golden.alphabet) == UNIT
    assert parse_word("∅", golden.alphabet) is ZERO
    assert parse_word(" 010 ", golden.alphabet) == "010"
    # 1 is a symbol of the golden mean shift, so it never means the unit there
    assert parse_word("1", golden.alphabet) == "1"
    with pytest.raises(UsageError):
        parse_word("", golden.alphabet)


def test_sets(ex4, abc):
    assert parse_set(ex4, "F:1,2").regular_set.equals(f_lambda(ex4, ["1", "2"]))
    assert parse_set(ex4, "F:1,2/3").equals(f_lambda_gamma(ex4, ["1", "2"], ["3"]))
    assert parse_set(abc, "E:a").u == "a"
    c = parse_set(abc, "C:a|ab")
    assert isinstance(c, ConstructibleSet)
    assert c.lam == frozenset({"a", "ab"})
    assert set(parse_set(ex4, "P:0+4").words(4)) == {"04", "004", "0004"}


@pytest.mark.parametrize("text", ["X:1", "F1", "Q:0"])
def test_bad_sets(golden, text):
    with pytest.raises(UsageError):
        parse_set(golden, text)


def test_start_set_needs_a_word(golden):
    with pytest.raises(NotInLanguageError):
        parse_set(golden, "E:11")


def test_constructible_only(golden):
    with pytest.raises(UsageError):
        parse_constructible(golden, "P:0+")


def test_hulls(golden):
    assert equals(parse_hull(golden, "T:0"), theta(golden, "0"))
    assert equals(parse_hull(golden, "~T:0"), invert(theta(golden, "0")))
    assert equals(parse_hull(golden, "I"), identity(golden))
    assert parse_hull(golden, "∅") is HULL_ZERO
    h = parse_hull(golden, "H:0|ε|1")
    assert h.u == "0" and h.v == "1"
    with pytest.raises(UsageError):
        parse_hull(golden, "H:0|1")
    with pytest.raises(UsageError):
        parse_hull(golden, "Z")


def test_characters(abc, golden):
    assert str(parse_character(abc, "S:abc")) == "φ[abc]"
    assert str(parse_character(golden, "S:1(0)")) == "φ[1(0)]"
    assert parse_character(abc, "Y:F:a,b").generator.u == UNIT
    with pytest.raises(UsageError):
        parse_character(abc, "R:a")
