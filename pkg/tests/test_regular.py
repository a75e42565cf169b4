import itertools

import pytest
from automata.fa.dfa import DFA

from shifthull.automaton import forbidden_nfa
from shifthull.constructible import e_set, f_lambda, follower, follower_lattice
from shifthull.regular import CardinalityClass, RegularSet
from shifthull.words import UNIT, EvPeriodicWord

from conftest import CORPUS


def test_empty_set(golden):
    empty = RegularSet.empty(golden.alphabet)
    assert empty.is_empty
    assert empty.cardinality().kind is CardinalityClass.EMPTY
    assert empty.shortest_word() is None
    assert list(empty.words(5)) == []
    assert empty.canonical_key() == ()


def test_shortest_word_is_length_lex_first(golden, ex4):
    assert e_set(golden, "1").shortest_word() == "10"
    assert f_lambda(ex4, ["1", "2"]).boundary().shortest_word() == "04"


def test_words_are_length_lex(golden):
    words = list(follower(golden, "1").words(3))
    assert words == ["0", "00", "01", "000", "001", "010"]


def test_quotient_and_prefix(golden):
    language = follower(golden, UNIT)
    assert follower(golden, "1").prefixed("1").equals(e_set(golden, "1"))
    ones = language.prefixed("10")
    assert "100" in ones and "10" not in ones
    assert ones.quotient(ones.run("10")).equals(language)
    assert language.prefixed("") is language


def test_canonical_key_ignores_presentation(golden):
    # F_0 and F_{0,00} are the same language reached through different constructions
    assert f_lambda(golden, ["0"]).canonical_key() == f_lambda(golden, ["0", "00"]).canonical_key()
    assert f_lambda(golden, ["0"]).canonical_key() != follower(golden, "1").canonical_key()


def test_symmetric_difference(golden):
    a, b = follower(golden, "0"), follower(golden, "1")
    assert a.symmetric_difference(b).equals(a.difference(b))


def test_trace_along_a_point(ex4):
    s = f_lambda(ex4, ["1", "2"])
    trace = s.trace(EvPeriodicWord("0004", "1"))
    assert [trace.accepted(n) for n in range(1, 6)] == [True, True, True, True, False]
    assert trace.died
    assert trace.inside_finite and not trace.outside_finite
    zeros = s.trace(EvPeriodicWord("", "0"))
    assert zeros.all_accepted_from(1) and zeros.outside_finite


@pytest.mark.parametrize("name", CORPUS)
def test_cardinality_matches_enumeration(name, shifts, brute):
    aut = shifts[name]
    for cls in follower_lattice(aut).nonempty:
        cardinality = cls.language.cardinality()
        listed = list(cls.language.words(6))
        if cardinality.kind is CardinalityClass.FINITE:
            assert list(cardinality.words) == listed
        else:
            assert cardinality.kind is CardinalityClass.INFINITE
            assert any(len(w) == 6 for w in listed)


@pytest.mark.parametrize("name", CORPUS)
def test_forbidden_nfa_matches_the_factor_regex(name, specs, brute):
    nfa = forbidden_nfa(specs[name])
    oracle = brute[name]
    for n in range(1, 6):
        for letters in itertools.product(oracle.symbols, repeat=n):
            word = "".join(letters)
            assert nfa.accepts_input(word) == (not oracle.clean(word))


@pytest.mark.parametrize("name", CORPUS)
def test_boolean_operations_agree_with_enumeration(name, shifts):
    aut = shifts[name]
    lattice = follower_lattice(aut)
    sets = [cls.language for cls in lattice.nonempty]
    for a in sets:
        for b in sets:
            wa, wb = set(a.words(6)), set(b.words(6))
            assert set(a.intersection(b).words(6)) == wa & wb
            assert set(a.union(b).words(6)) == wa | wb
            assert set(a.difference(b).words(6)) == wa - wb
            if a.issubset(b):
                assert wa <= wb
            if a.isdisjoint(b):
                assert not wa & wb


def test_library_round_trip_keeps_the_set(golden, ex4):
    for s in (follower(golden, "1"), f_lambda(ex4, ["1", "2"]).boundary(), e_set(ex4, "4")):
        assert isinstance(s.dfa, DFA)
        back = RegularSet.from_dfa(s.alphabet, s.dfa)
        assert back.equals(s)
        assert back.canonical_key() == s.canonical_key()
        assert "" not in s and not s.dfa.accepts_input("")


def test_start_state_acceptance_does_not_add_the_empty_word(golden):
    # a one-state loop that accepts everywhere holds every nonempty word, never ε
    everything = RegularSet(golden.alphabet, 0, {0: {"0": 0, "1": 0}}, frozenset({0}))
    assert not everything.is_empty
    assert everything.cardinality().kind is CardinalityClass.INFINITE
    only_start = RegularSet(golden.alphabet, 0, {0: {}}, frozenset({0}))
    assert only_start.is_empty
    assert only_start.canonical_key() == ()
