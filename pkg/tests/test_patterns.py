import pytest

from shifthull.errors import MalformedPatternError, UnknownSymbolError
from shifthull.patterns import (
    AnySuffix,
    Lit,
    OneOf,
    Plus,
    Star,
    SubshiftSpec,
    basic_steps,
    parse_atom,
    parse_pattern,
    pattern_text,
)
from shifthull.words import Alphabet

FIVE = Alphabet(tuple("01234"))


def test_compact_patterns():
    assert parse_pattern("10+4[0234]", FIVE) == (Lit("1"), Plus("0"), Lit("4"), OneOf(frozenset("0234")))
    assert parse_pattern("0*4⋆", FIVE) == (Star("0"), Lit("4"), AnySuffix())
    assert pattern_text(parse_pattern("30+4", FIVE)) == "30+4"


def test_list_atoms():
    assert parse_atom("*") == AnySuffix()
    assert parse_atom("0+") == Plus("0")
    assert parse_atom("[13]") == OneOf(frozenset("13"))
    with pytest.raises(MalformedPatternError):
        parse_atom("01")


@pytest.mark.parametrize(
    "text, error",
    [
        ("1⋆0", MalformedPatternError),
        ("0*", MalformedPatternError),
        ("1]", MalformedPatternError),
        ("1[]", MalformedPatternError),
        ("15", UnknownSymbolError),
        ("[19]", UnknownSymbolError),
    ],
)
def test_bad_patterns(text, error):
    with pytest.raises(error):
        parse_pattern(text, FIVE)


def test_plus_lowers_to_set_then_star():
    assert basic_steps(parse_pattern("10+4", FIVE)) == (
        ("set", frozenset("1")),
        ("set", frozenset("0")),
        ("star", "0"),
        ("set", frozenset("4")),
    )


def test_spec_validates_patterns():
    with pytest.raises(UnknownSymbolError):
        SubshiftSpec(Alphabet(("0", "1")), ((Lit("2"),),))
