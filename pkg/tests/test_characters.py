import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shifthull.automaton import enumerate_language
from shifthull.characters import (
    FiniteString,
    InfiniteString,
    char_eval,
    classify_string,
    criteria,
    ess_membership_witness,
    ground_report,
    principal_ultra,
    string_char,
    string_of,
)
from shifthull.constructible import follower_lattice, make_constructible
from shifthull.errors import AutomatonMismatchError, NotInLanguageError, NotMinimalError, PremiseViolatedError
from shifthull.groupoid import build_sample
from shifthull.words import UNIT, parse_point

from conftest import CORPUS


def string_points(aut, count=50):
    """The length-lex first ``count`` points of a sample grown until it is large enough or stops growing."""
    sample, size = (), -1
    for budget in range(2, 12):
        sample = build_sample(aut, budget)
        if len(sample) >= count or len(sample) == size:
            break
        size = len(sample)
    return list(sample)[:count]


def criterion_sets(aut):
    lattice = follower_lattice(aut)
    sets = [lattice.presentation(cls) for cls in lattice.nonempty]
    sets += [make_constructible(aut, mu, {mu}) for mu in aut.alphabet if aut.accepts(mu)]
    sets += [make_constructible(aut, mu, {mu, mu + mu}) for mu in aut.alphabet if aut.accepts(mu + mu)]
    return sets


def test_finite_string_prefixes(abc):
    sigma = string_of(abc, "abc")
    assert isinstance(sigma, FiniteString)
    assert sigma.prefixes() == ["a", "ab", "abc"]
    assert classify_string(sigma).bounded
    assert not classify_string(sigma).maximal


def test_infinite_string_is_open_and_maximal(golden):
    sigma = string_of(golden, parse_point("(01)", golden.alphabet))
    assert isinstance(sigma, InfiniteString)
    cls = classify_string(sigma)
    assert cls.open and cls.maximal and not cls.bounded


def test_string_outside_language(abc, golden):
    with pytest.raises(NotInLanguageError):
        string_of(abc, "aa")
    with pytest.raises(NotInLanguageError):
        string_of(golden, parse_point("0(1)", golden.alphabet))


def test_finite_string_character(abc):
    c = string_char(abc, "c")
    assert char_eval(c, make_constructible(abc, UNIT, {UNIT, "a", "b"}))
    assert not char_eval(c, make_constructible(abc, "a", {"a"}))
    assert char_eval(string_char(abc, "ab"), make_constructible(abc, "a", {"a"}))


def test_principal_ultra_on_finite_follower(abc):
    y = make_constructible(abc, UNIT, {UNIT, "a", "b"})
    psi = principal_ultra(y)
    assert char_eval(psi, y)
    assert not char_eval(psi, make_constructible(abc, "a", {"a"}))
    report = ess_membership_witness(psi, y, [])
    assert report.value
    assert not report.joined
    assert not report.agree


def test_principal_ultra_needs_a_finite_set(golden):
    with pytest.raises(NotMinimalError):
        principal_ultra(make_constructible(golden, UNIT, {UNIT, "1"}))


def test_ess_membership_needs_finite_difference(golden):
    x = make_constructible(golden, UNIT, {UNIT, "1"})
    c = string_char(golden, parse_point("(0)", golden.alphabet))
    with pytest.raises(PremiseViolatedError):
        ess_membership_witness(c, x, [])
    report = ess_membership_witness(c, x, [make_constructible(golden, "0", {"0"})])
    assert report.value == report.joined
    assert report.agree


def test_characters_stay_on_their_shift(golden, full2):
    c = string_char(golden, "0")
    with pytest.raises(AutomatonMismatchError):
        char_eval(c, make_constructible(full2, "0", {"0"}))


@pytest.mark.parametrize("name", CORPUS)
def test_criteria_agree_on_constructible_sets(shifts, name):
    aut = shifts[name]
    sets = criterion_sets(aut)
    points = string_points(aut)
    assert points
    for point in points:
        c = string_char(aut, point)
        for x in sets:
            bits = criteria(c, x)
            assert bits.agree, f"{point} on {x}: {bits}"
            assert char_eval(c, x) == bits.prefix


@pytest.mark.parametrize("name", CORPUS)
def test_character_vanishes_exactly_when_the_string_meets_the_set_finitely(shifts, name):
    aut = shifts[name]
    for point in string_points(aut):
        c = string_char(aut, point)
        for x in criterion_sets(aut):
            region = x.regular_set
            trace = region.trace(point)
            # past the transient, one period decides whether prefixes keep landing in X
            start = len(trace.transient) + 1
            tail = range(start, start + max(len(trace.cycle), 1))
            meets_forever = any(point.prefix(n) in region for n in tail)
            assert char_eval(c, x) == meets_forever, f"{point} on {x}"


@pytest.mark.parametrize("name", CORPUS)
def test_infinite_strings_respect_finite_covers(shifts, name):
    aut = shifts[name]
    lattice = follower_lattice(aut)
    pool = [lattice.presentation(cls) for cls in lattice.nonempty]
    chars = [string_char(aut, point) for point in string_points(aut, 10)]
    admissible = 0
    for x in pool:
        for size in range(4):
            for family in itertools.combinations(pool, size):
                try:
                    reports = [ess_membership_witness(c, x, family) for c in chars]
                except PremiseViolatedError:
                    continue
                admissible += 1
                for c, report in zip(chars, reports):
                    assert report.agree, f"{c} on {x} against {[str(y) for y in family]}: {report}"
    assert admissible >= len(pool)


def test_criteria_reject_finite_strings(golden):
    with pytest.raises(NotInLanguageError):
        criteria(string_char(golden, "01"), make_constructible(golden, "0", {"0"}))


def test_ground_report(abc, golden):
    report = ground_report(abc)
    assert not report.holds
    assert report.witness.lam == frozenset({UNIT, "a", "b"})
    assert report.cardinality.words == ("c",)
    assert ground_report(golden).holds


@pytest.mark.parametrize("name", ["golden", "ex4"])
def test_string_characters_respect_intersections(shifts, name):
    aut = shifts[name]
    words = enumerate_language(aut, 2)
    letters = [UNIT] + [w for w in words if len(w) == 1]
    points = string_points(aut, 12)
    subsets = st.sets(st.sampled_from(words), min_size=1, max_size=2)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(letters), subsets, subsets, st.sampled_from(points))
    def check(u, lam, delta, point):
        x = make_constructible(aut, u, lam | {u})
        y = make_constructible(aut, u, delta | {u})
        both = make_constructible(aut, u, lam | delta | {u})
        assert both.regular_set.equals(x.regular_set.intersection(y.regular_set))
        c = string_char(aut, point)
        assert char_eval(c, both) == (char_eval(c, x) and char_eval(c, y))

    check()
