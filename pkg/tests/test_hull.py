import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shifthull.automaton import enumerate_language
from shifthull.constructible import make_constructible
from shifthull.errors import AutomatonMismatchError, NotInLambdaError, NotInLanguageError, ZeroInLambdaError
from shifthull.freegroup import FreeGroupWord
from shifthull.hull import (
    HULL_ZERO,
    HullZero,
    apply,
    d_map,
    element,
    equals,
    from_constructible,
    graph,
    identity,
    idempotent,
    invert,
    is_idempotent,
    leq,
    mul,
    theta,
)
from shifthull.words import UNIT, ZERO

SHIFTS = ["golden", "ex4"]
# golden is checked on every word up to length 8, ex4 on v·s with |s| <= 4
TAILS = {"golden": 8, "ex4": 4}


def pool(aut):
    return [""] + enumerate_language(aut, 4)


@st.composite
def hull_triples(draw, words):
    u = draw(st.sampled_from(words))
    v = draw(st.sampled_from(words))
    extra = draw(st.sets(st.sampled_from(words), max_size=2))
    return u, frozenset(extra) | {u, v}, v


@st.composite
def idempotent_triples(draw, words):
    t = draw(st.sampled_from(words))
    extra = draw(st.sets(st.sampled_from(words), max_size=2))
    return t, frozenset(extra) | {t}, t


def build(aut, triple):
    u, lam, v = triple
    return element(aut, u, lam, v)


def brute_apply(oracle, triple, w):
    u, lam, v = triple
    return oracle.apply(u, lam, v, w)


def window(aut, name, v):
    """Test words of length <= 8: all short words plus v followed by admissible tails."""
    tails = [""] + enumerate_language(aut, min(TAILS[name], 8 - len(v)))
    return set(enumerate_language(aut, 3)) | {v + s for s in tails}


def graph_on(e, words):
    return {w: t for w in words if (t := apply(e, w)) is not ZERO}


def test_theta_moves_words(golden):
    t1 = theta(golden, "1")
    assert apply(t1, "0") == "10"
    assert apply(t1, "1") is ZERO
    assert apply(invert(t1), "10") == "0"
    assert apply(invert(t1), "0") is ZERO
    assert str(t1) == "θ[1]f{ε,1}θ[ε]⁻¹"
    assert str(identity(golden)) == "1"


def test_element_checks(golden):
    with pytest.raises(NotInLambdaError):
        element(golden, "0", {"1"}, "1")
    with pytest.raises(ZeroInLambdaError):
        element(golden, ZERO, {UNIT}, UNIT)
    with pytest.raises(NotInLanguageError):
        theta(golden, "11")
    assert element(golden, "1", {"1", "11"}, "1") is HULL_ZERO


def test_elements_from_constructible_sets(golden):
    x = make_constructible(golden, "0", {"0", UNIT})
    e = from_constructible(x)
    assert is_idempotent(e)
    assert e.domain().equals(x.regular_set)
    assert equals(e, mul(theta(golden, "0"), invert(theta(golden, "0"))))
    assert idempotent(golden, {"1"}).domain().equals(make_constructible(golden, UNIT, {UNIT, "1"}).regular_set)


def test_mixing_shifts_fails(golden, full2):
    with pytest.raises(AutomatonMismatchError):
        mul(theta(golden, "0"), theta(full2, "0"))


@pytest.mark.parametrize("name", SHIFTS)
def test_mul_matches_brute_composition(name, shifts, brute):
    aut, oracle = shifts[name], brute[name]
    words = pool(aut)
    windows = {}

    @settings(max_examples=1000, deadline=None)
    @given(hull_triples(words), hull_triples(words))
    def check(ta, tb):
        a, b = build(aut, ta), build(aut, tb)
        product, back = mul(a, b), invert(a)
        v = tb[2]
        if v not in windows:
            windows[v] = window(aut, name, v)
        for w in windows[v]:
            inner = brute_apply(oracle, tb, w)
            expected = None if inner is None else brute_apply(oracle, ta, inner)
            got = apply(product, w)
            assert (None if got is ZERO else got) == expected, (str(a), str(b), w)
            image = apply(a, w)
            if image is not ZERO:
                assert apply(back, image) == w

    check()


@pytest.mark.parametrize("name", SHIFTS)
def test_equals_matches_graph_comparison(name, shifts):
    aut = shifts[name]
    words = pool(aut)

    @settings(max_examples=300, deadline=None)
    @given(hull_triples(words), hull_triples(words))
    def check(ta, tb):
        a, b = build(aut, ta), build(aut, tb)
        words_seen = window(aut, name, ta[2]) | window(aut, name, tb[2])
        assert equals(a, b) == (graph_on(a, words_seen) == graph_on(b, words_seen)), (str(a), str(b))
        assert equals(a, a) and equals(invert(invert(a)), a)

    check()


@pytest.mark.parametrize("name", SHIFTS)
def test_strong_zero_e_unitarity(name, shifts):
    aut = shifts[name]
    words = pool(aut)

    @settings(max_examples=300, deadline=None)
    @given(hull_triples(words), idempotent_triples(words))
    def check(ta, te):
        a, e = build(aut, ta), build(aut, te)
        assert is_idempotent(e)
        product = mul(a, e)
        if not isinstance(product, HullZero) and is_idempotent(product):
            assert is_idempotent(a), (str(a), str(e))

    check()


@pytest.mark.parametrize("name", SHIFTS)
def test_inverse_semigroup_laws(name, shifts):
    aut = shifts[name]

    @settings(max_examples=60, deadline=None)
    @given(hull_triples(pool(aut)), hull_triples(pool(aut)), hull_triples(pool(aut)))
    def check(ta, tb, tc):
        a, b, c = build(aut, ta), build(aut, tb), build(aut, tc)
        assert equals(mul(mul(a, b), c), mul(a, mul(b, c)))
        assert equals(mul(mul(a, invert(a)), a), a)
        assert equals(invert(invert(a)), a)
        assert equals(invert(mul(a, b)), mul(invert(b), invert(a)))
        e, f = mul(invert(a), a), mul(invert(b), b)
        assert is_idempotent(e) and equals(mul(e, e), e)
        assert equals(mul(e, f), mul(f, e))

    check()


@pytest.mark.parametrize("name", SHIFTS)
def test_grading_and_unitarity(name, shifts):
    aut = shifts[name]

    @settings(max_examples=60, deadline=None)
    @given(hull_triples(pool(aut)), hull_triples(pool(aut)))
    def check(ta, tb):
        a, b = build(aut, ta), build(aut, tb)
        product = mul(a, b)
        if not isinstance(product, HullZero):
            assert d_map(product) == d_map(a) * d_map(b)
        if not isinstance(a, HullZero) and d_map(a).is_identity:
            assert is_idempotent(a)

    check()


@pytest.mark.parametrize("name", SHIFTS)
def test_order_is_graph_inclusion(name, shifts):
    aut = shifts[name]

    @settings(max_examples=60, deadline=None)
    @given(hull_triples(pool(aut)), hull_triples(pool(aut)))
    def check(ta, tb):
        a, b = build(aut, ta), build(aut, tb)
        restricted = mul(b, mul(invert(a), a))
        assert leq(restricted, b)
        if leq(a, b):
            assert graph(a, 6).items() <= graph(b, 6).items()
        assert leq(HULL_ZERO, a)

    check()


def test_d_map(golden):
    assert d_map(theta(golden, "10")) == FreeGroupWord.of("10")
    assert d_map(invert(theta(golden, "1"))) == FreeGroupWord.of("", "1")
    assert d_map(element(golden, "01", {"01", "1"}, "1")) == FreeGroupWord.of("0")
    assert d_map(HULL_ZERO) is ZERO


def test_graph(golden):
    assert graph(theta(golden, "1"), 3) == {"0": "10", "00": "100", "01": "101"}
    assert graph(HULL_ZERO, 3) == {}
