"""
ShiftHull makes the combinatorial algebra of one-sided subshifts executable:
follower sets, inverse hulls, characters, covers and groupoid models.

Copyright (C) 2022-2025 Travis L. Seymour, PhD

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from shifthull.automaton import ShiftAutomaton
from shifthull.errors import (
    LatticeLimitError,
    NotInLambdaError,
    NotInLanguageError,
    UsageError,
    ZeroInLambdaError,
)
from shifthull.patterns import PatternAtom, basic_steps, has_any_suffix
from shifthull.regular import Cardinality, RegularSet
from shifthull.words import UNIT, ZERO, ExtWord, show

logger = logging.getLogger(__name__)

WordSetLambda = FrozenSet[str]


def word_set(words: Iterable[ExtWord]) -> WordSetLambda:
    result = set()
    for t in words:
        if t is ZERO:
            raise ZeroInLambdaError("Λ and Γ may not contain the zero element")
        result.add(t)
    return frozenset(result)


def show_set(aut: ShiftAutomaton, words: Iterable[str]) -> str:
    return "{" + ",".join(show(t) for t in aut.alphabet.sorted(words)) + "}"


def lambda_states(aut: ShiftAutomaton, lam: Iterable[str]) -> Optional[FrozenSet[int]]:
    """States reached by the words of Λ; None when one of them is not in L_X."""
    states = set()
    for t in lam:
        q = aut.state_of(t)
        if q is None:
            return None
        states.add(q)
    return frozenset(states)


def follower_set(aut: ShiftAutomaton, states: FrozenSet[int]) -> RegularSet:
    """Nonempty words readable from every state in states."""
    states = frozenset(states)

    def build():
        def step(key, symbol):
            nxt = set()
            for q in key[1]:
                r = aut.step(q, symbol)
                if r is None:
                    return None
                nxt.add(r)
            return True, frozenset(nxt)

        return RegularSet.explore(aut.alphabet, (False, states), step, lambda key: key[0], label="F")

    return aut.memo(("F", states), build)


def follower_gamma_set(aut: ShiftAutomaton, states: FrozenSet[int], gamma_states: FrozenSet[int]) -> RegularSet:
    """Words readable from every state in states and from none of gamma_states."""
    states, gammas = frozenset(states), tuple(sorted(gamma_states))

    def build():
        def step(key, symbol):
            _, current, alive = key
            nxt = set()
            for q in current:
                r = aut.step(q, symbol)
                if r is None:
                    return None
                nxt.add(r)
            return True, frozenset(nxt), tuple(aut.step(r, symbol) for r in alive)

        return RegularSet.explore(
            aut.alphabet,
            (False, states, gammas),
            step,
            lambda key: key[0] and all(r is None for r in key[2]),
            label="F/Γ",
        )

    return aut.memo(("FG", states, gammas), build)


def f_lambda(aut: ShiftAutomaton, lam: Iterable[ExtWord]) -> RegularSet:
    lam = word_set(lam)
    if not lam:
        raise UsageError("Λ must be nonempty")
    states = lambda_states(aut, lam)
    if states is None:
        return RegularSet.empty(aut.alphabet, f"F{show_set(aut, lam)}")
    return follower_set(aut, states)


def follower(aut: ShiftAutomaton, t: ExtWord) -> RegularSet:
    if t is ZERO:
        raise ZeroInLambdaError("the follower set of zero is not defined")
    return f_lambda(aut, [t])


def f_lambda_gamma(aut: ShiftAutomaton, lam: Iterable[ExtWord], gamma: Iterable[ExtWord]) -> RegularSet:
    """{s ∈ L_X : ts ≠ 0 for t ∈ Λ, rs = 0 for r ∈ Γ}"""
    lam, gamma = word_set(lam), word_set(gamma)
    if not lam:
        raise UsageError("Λ must be nonempty")
    states = lambda_states(aut, lam)
    if states is None or UNIT in gamma:
        return RegularSet.empty(aut.alphabet)
    # r outside L_X kills every s already
    gamma_states = frozenset(q for q in (aut.state_of(r) for r in gamma) if q is not None)
    if not gamma_states:
        return follower_set(aut, states)
    return follower_gamma_set(aut, states, gamma_states)


def e_set(aut: ShiftAutomaton, mu: str) -> RegularSet:
    """E_μ = μ·F_μ, the admissible words that properly extend μ."""
    if not aut.accepts(aut.alphabet.check(mu)):
        raise NotInLanguageError(f"{mu!r} is not in the language of {aut.name or 'the shift'}")
    return follower(aut, mu).prefixed(mu, label=f"E_{mu}")


@dataclass(frozen=True)
class ConstructibleSet:
    """The set u·F_Λ with u ∈ Λ, kept together with its presentation."""

    shift: ShiftAutomaton = field(repr=False, compare=False)
    u: str
    lam: WordSetLambda

    @cached_property
    def regular_set(self) -> RegularSet:
        region = f_lambda(self.shift, self.lam)
        return region.prefixed(self.u, label=str(self)) if self.u else region.relabel(str(self))

    @property
    def is_empty(self) -> bool:
        return self.regular_set.is_empty

    def __contains__(self, word: str) -> bool:
        return word in self.regular_set

    def __str__(self):
        return f"{self.u}F{show_set(self.shift, self.lam)}" if self.u else f"F{show_set(self.shift, self.lam)}"


def make_constructible(aut: ShiftAutomaton, u: ExtWord, lam: Iterable[ExtWord]) -> ConstructibleSet:
    lam = word_set(lam)
    if u is ZERO:
        raise ZeroInLambdaError("u may not be the zero element")
    if u not in lam:
        raise NotInLambdaError(f"u = {show(u)} must belong to Λ = {show_set(aut, lam)}")
    if all(t == UNIT for t in lam):
        raise NotInLanguageError("Λ must contain a word besides the unit")
    for t in lam:
        aut.alphabet.check(t)
    return ConstructibleSet(aut, u, lam)


SetLike = Union[RegularSet, ConstructibleSet]


def as_regular(s: SetLike) -> RegularSet:
    return s.regular_set if isinstance(s, ConstructibleSet) else s


@dataclass(frozen=True)
class Analysis:
    cardinality: Cardinality
    equal: Optional[bool] = None
    subset: Optional[bool] = None
    superset: Optional[bool] = None
    intersection: Optional[Cardinality] = None


def analyze(s: SetLike, other: Optional[SetLike] = None) -> Analysis:
    s = as_regular(s)
    if other is None:
        return Analysis(s.cardinality())
    other = as_regular(other)
    return Analysis(
        s.cardinality(),
        equal=s.equals(other),
        subset=s.issubset(other),
        superset=other.issubset(s),
        intersection=s.intersection(other).cardinality(),
    )


def interior_boundary(x: SetLike) -> Tuple[RegularSet, RegularSet]:
    s = as_regular(x)
    return s.interior(), s.boundary()


def pattern_set(aut: ShiftAutomaton, pattern: Sequence[PatternAtom]) -> RegularSet:
    """Admissible words matching the pattern as a whole (a trailing ⋆ matches any continuation)."""
    steps = basic_steps(pattern)
    end = len(steps)
    open_end = has_any_suffix(pattern)

    def closure(positions):
        closed = set(positions)
        stack = list(positions)
        while stack:
            i = stack.pop()
            if i < end and steps[i][0] == "star" and i + 1 not in closed:
                closed.add(i + 1)
                stack.append(i + 1)
        return frozenset(closed)

    def step(key, symbol):
        _, positions, q = key
        r = aut.step(q, symbol)
        if r is None:
            return None
        moved = set()
        for i in positions:
            if i == end:
                if open_end:
                    moved.add(end)
                continue
            kind, value = steps[i]
            if kind == "set":
                if symbol in value:
                    moved.add(i + 1)
            elif symbol == value:
                moved.add(i)
        if not moved:
            return None
        return True, closure(moved), r

    if aut.is_empty:
        return RegularSet.empty(aut.alphabet)
    label = "".join(str(atom) for atom in pattern)
    return RegularSet.explore(
        aut.alphabet, (False, closure({0}), aut.initial), step, lambda key: key[0] and end in key[1], label=label
    )


@dataclass(frozen=True)
class LatticeClass:
    """One follower language F_Λ, with the automaton states and a word set Λ producing it."""

    states: FrozenSet[int]
    words: Tuple[str, ...]
    language: RegularSet = field(compare=False, repr=False)

    @property
    def is_empty(self) -> bool:
        return self.language.is_empty


class FollowerLattice:
    """
    The distinct follower languages F_t of nonempty words t together with all their
    intersections. ``top`` is L_X itself (Λ ⊆ {unit}).
    """

    def __init__(self, aut: ShiftAutomaton, limit: Optional[int] = None):
        self.shift = aut
        access = aut.nonempty_access_words()
        self._by_key: Dict[tuple, LatticeClass] = {}
        self.singles: List[LatticeClass] = []
        for q in aut.reached_states():
            language = follower_set(aut, frozenset({q}))
            key = language.canonical_key()
            if key not in self._by_key:
                cls = LatticeClass(frozenset({q}), (access[q],), language)
                self._by_key[key] = cls
                self.singles.append(cls)
        self.classes: List[LatticeClass] = list(self.singles)
        queue = deque(self.singles)
        while queue:
            current = queue.popleft()
            for single in self.singles:
                states = current.states | single.states
                if states == current.states:
                    continue
                language = follower_set(aut, states)
                key = language.canonical_key()
                if key in self._by_key:
                    continue
                if limit is not None and len(self.classes) >= limit:
                    raise LatticeLimitError(f"follower lattice of {aut.name or 'the shift'} exceeds {limit} classes")
                words = tuple(aut.alphabet.sorted(set(current.words) | set(single.words)))
                cls = LatticeClass(states, words, language)
                self._by_key[key] = cls
                self.classes.append(cls)
                queue.append(cls)
        initial = frozenset({aut.initial}) if not aut.is_empty else frozenset()
        self.top = LatticeClass(initial, (), follower_set(aut, initial) if initial else RegularSet.empty(aut.alphabet))
        logger.info(f"follower lattice of {aut.name or 'shift'}: {len(self.singles)} followers, {len(self.classes)} classes")

    def __len__(self):
        return len(self.classes)

    @property
    def nonempty(self) -> List[LatticeClass]:
        return [c for c in self.classes if not c.is_empty]

    def find(self, language: RegularSet) -> Optional[LatticeClass]:
        return self._by_key.get(language.canonical_key())

    def presentation(self, cls: LatticeClass) -> ConstructibleSet:
        """F_Λ for the class, as the constructible set 1·F_{Λ ∪ {1}}."""
        return make_constructible(self.shift, UNIT, set(cls.words) | {UNIT})


def follower_lattice(aut: ShiftAutomaton, limit: Optional[int] = None) -> FollowerLattice:
    return aut.memo(("lattice", limit), lambda: FollowerLattice(aut, limit))


def constructible_subsets(
    aut: ShiftAutomaton,
    region: RegularSet,
    lattice: Optional[FollowerLattice] = None,
    stats: Optional[dict] = None,
) -> Iterator[ConstructibleSet]:
    """
    Yields nonempty constructible sets wF_Δ (w ∈ Δ) contained in region.

    A set wF_Δ only depends on the region state and automaton state reached by w and on
    the follower class of Δ ∖ {w}, so one candidate per (pair, class) is examined; the
    search is exhaustive over those finitely many combinations.
    """
    lattice = lattice or follower_lattice(aut)
    stats = stats if stats is not None else {}
    stats.setdefault("pairs", 0)
    stats.setdefault("checks", 0)
    classes = lattice.nonempty
    if region.is_empty or aut.is_empty:
        return

    quotient = region.quotient(region.start)
    stats["pairs"] += 1
    for cls in classes:
        stats["checks"] += 1
        if cls.language.issubset(quotient):
            yield make_constructible(aut, UNIT, set(cls.words) | {UNIT})

    pairs: Dict[Tuple[int, int], str] = {}
    queue: deque = deque()

    def visit(d, q, word):
        if d is None or q is None or (d, q) in pairs:
            return
        pairs[(d, q)] = word
        queue.append((d, q))

    for symbol in aut.alphabet:
        visit(region.step(region.start, symbol), aut.step(aut.initial, symbol), symbol)
    while queue:
        d, q = queue.popleft()
        w = pairs[(d, q)]
        for symbol in aut.alphabet:
            visit(region.step(d, symbol), aut.step(q, symbol), w + symbol)

        quotient = region.quotient(d)
        stats["pairs"] += 1
        if quotient.is_empty:
            continue
        seen = set()
        for cls in [lattice.top] + classes:
            language = follower_set(aut, cls.states | {q})
            key = language.canonical_key()
            if key in seen or language.is_empty:
                continue
            seen.add(key)
            stats["checks"] += 1
            if language.issubset(quotient):
                yield make_constructible(aut, w, set(cls.words) | {w})
