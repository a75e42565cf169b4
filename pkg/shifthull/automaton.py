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
from typing import Callable, Dict, FrozenSet, List, Optional, TypeVar, Union

import networkx as nx
from automata.fa.dfa import DFA
from automata.fa.nfa import NFA

from shifthull.errors import StateLimitError, UsageError, ZeroInLambdaError
from shifthull.patterns import SubshiftSpec, basic_steps
from shifthull.words import ZERO, Alphabet, EvPeriodicWord, ExtWord

logger = logging.getLogger(__name__)

T = TypeVar("T")

# states of the forbidden-factor NFA besides the pattern positions
_SCAN = "scan"
_HIT = "hit"


class ShiftAutomaton:
    """
    Deterministic factor-avoidance recognizer of a one-sided subshift.

    ``transitions`` is the partial transition table of the determinized complement of
    Σ*FΣ* (every state reachable from ``initial``); ``live`` holds the states from which an
    infinite run exists. L_X is exactly the set of nonempty words whose run stays inside
    ``live``, so every query below works on the live-restricted table ``delta``.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        transitions: Dict[int, Dict[str, int]],
        initial: int,
        live: FrozenSet[int],
        name: str = "",
    ):
        self.alphabet = alphabet
        self.transitions = transitions
        self.initial = initial
        self.live = frozenset(live)
        self.name = name
        self.delta: Dict[int, Dict[str, int]] = {
            q: {a: r for a, r in row.items() if r in self.live} for q, row in transitions.items() if q in self.live
        }
        self._memo: dict = {}

    def __repr__(self):
        return f"ShiftAutomaton({self.name or 'unnamed'}, states={len(self.transitions)}, live={len(self.live)})"

    @property
    def is_empty(self) -> bool:
        return self.initial not in self.live

    def memo(self, key, factory: Callable[[], T]) -> T:
        """Per-automaton cache for derived languages and lattices."""
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = factory()
            return value

    def step(self, state: Optional[int], symbol: str) -> Optional[int]:
        row = self.delta.get(state)
        return None if row is None else row.get(symbol)

    def run(self, word: str, start: Optional[int] = None) -> Optional[int]:
        """Live state reached by reading word from start (default: initial), or None."""
        state = self.initial if start is None else start
        delta = self.delta
        if state not in delta:
            return None
        for letter in word:
            state = delta[state].get(letter)
            if state is None:
                return None
        return state

    def factor_clean(self, word: str) -> bool:
        state = self.initial
        for letter in word:
            state = self.transitions[state].get(letter)
            if state is None:
                return False
        return True

    def accepts(self, word: str) -> bool:
        return bool(word) and self.run(word) is not None

    def state_of(self, t: ExtWord) -> Optional[int]:
        if t is ZERO:
            raise ZeroInLambdaError("the zero element cannot be used as a word here")
        return self.run(t)

    def readable_from(self, state: Optional[int], point: EvPeriodicWord) -> bool:
        """True when the infinite word can be read forever starting at state."""
        if state is None:
            return False
        state = self.run(point.preperiod, state)
        seen = set()
        while state is not None and state not in seen:
            seen.add(state)
            state = self.run(point.period, state)
        return state is not None

    def contains_point(self, point: EvPeriodicWord) -> bool:
        return self.memo(("point", point), lambda: self.readable_from(None if self.is_empty else self.initial, point))

    def access_words(self) -> Dict[int, str]:
        """Shortest length-lex word (possibly empty) reaching each live state."""
        return self.memo("access", lambda: self._bfs_words({self.initial: ""} if not self.is_empty else {}))

    def nonempty_access_words(self) -> Dict[int, str]:
        """Shortest length-lex nonempty word reaching each live state it can reach."""

        def build():
            seeds = {}
            for symbol in self.alphabet:
                r = self.step(self.initial, symbol)
                if r is not None and r not in seeds:
                    seeds[r] = symbol
            return self._bfs_words(seeds)

        return self.memo("nonempty-access", build)

    def _bfs_words(self, seeds: Dict[int, str]) -> Dict[int, str]:
        words = dict(seeds)
        queue = deque(seeds)
        while queue:
            q = queue.popleft()
            for symbol in self.alphabet:
                r = self.step(q, symbol)
                if r is not None and r not in words:
                    words[r] = words[q] + symbol
                    queue.append(r)
        return words

    def reached_states(self) -> List[int]:
        """States reached by some word of L_X, ordered by their shortest word."""
        words = self.nonempty_access_words()
        return sorted(words, key=lambda q: self.alphabet.key(words[q]))


def forbidden_nfa(spec: SubshiftSpec) -> NFA:
    """NFA of Σ*FΣ*: the words containing a factor matched by some forbidden pattern."""
    symbols = frozenset(spec.alphabet.symbols)
    transitions: Dict[object, Dict[str, set]] = {
        _SCAN: {symbol: {_SCAN} for symbol in symbols},
        _HIT: {symbol: {_HIT} for symbol in symbols},
    }
    transitions[_SCAN][""] = set()
    for p, pattern in enumerate(spec.forbidden):
        steps = basic_steps(pattern)
        transitions[_SCAN][""].add((p, 0))
        for i, (kind, value) in enumerate(steps):
            row = transitions.setdefault((p, i), {})
            if kind == "set":
                for symbol in value:
                    row.setdefault(symbol, set()).add((p, i + 1))
            else:
                row.setdefault(value, set()).add((p, i))
                row.setdefault("", set()).add((p, i + 1))
        transitions[(p, len(steps))] = {"": {_HIT}}
    return NFA(
        states=frozenset(transitions),
        input_symbols=symbols,
        transitions=transitions,
        initial_state=_SCAN,
        final_states=frozenset({_HIT}),
    )


def compile_spec(spec: SubshiftSpec, state_limit: Optional[int] = None) -> ShiftAutomaton:
    """
    Compiles a forbidden-pattern presentation into its ShiftAutomaton.

    The minimal DFA of Σ*FΣ* is built by automata-lib; its rejecting states are exactly
    the factor-avoiding ones and become the transition table.

    :param spec: validated presentation
    :param state_limit: optional cap on the number of determinized states
    """
    dfa = DFA.from_nfa(forbidden_nfa(spec), minify=True)
    if state_limit is not None and len(dfa.states) > state_limit:
        raise StateLimitError(f"determinization of {spec.name or 'spec'} exceeded {state_limit} states")

    index = {dfa.initial_state: 0}
    queue = deque([dfa.initial_state])
    transitions: Dict[int, Dict[str, int]] = {}
    while queue:
        current = queue.popleft()
        row = {}
        if current not in dfa.final_states:
            for symbol in spec.alphabet:
                nxt = dfa.transitions[current].get(symbol)
                if nxt is None or nxt in dfa.final_states:
                    continue  # a forbidden factor just ended
                if nxt not in index:
                    index[nxt] = len(index)
                    queue.append(nxt)
                row[symbol] = index[nxt]
        transitions[index[current]] = row

    live = live_states(transitions) if dfa.initial_state not in dfa.final_states else frozenset()
    aut = ShiftAutomaton(spec.alphabet, transitions, 0, live, name=spec.name)
    logger.info(f"compiled {aut!r}")
    if aut.is_empty:
        logger.warning(f"subshift {spec.name or '(unnamed)'} is empty: no infinite word avoids the forbidden set")
    return aut


def live_states(transitions: Dict[int, Dict[str, int]]) -> FrozenSet[int]:
    """States that can reach a cycle."""
    graph = nx.DiGraph()
    graph.add_nodes_from(transitions)
    graph.add_edges_from((q, r) for q, row in transitions.items() for r in row.values())
    cyclic = set()
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1 or any(graph.has_edge(q, q) for q in component):
            cyclic |= component
    live = set(cyclic)
    for q in cyclic:
        live |= nx.ancestors(graph, q)
    return frozenset(live)


def membership(aut: ShiftAutomaton, w: Union[str, EvPeriodicWord]) -> bool:
    if isinstance(w, EvPeriodicWord):
        aut.alphabet.check(w.preperiod)
        aut.alphabet.check(w.period)
        return aut.contains_point(w)
    return aut.accepts(aut.alphabet.check(w))


def sx_mul(aut: ShiftAutomaton, x: ExtWord, y: ExtWord) -> ExtWord:
    """Concatenation-or-zero product of the unitized subshift semigroup."""
    if x is ZERO or y is ZERO:
        return ZERO
    product = x + y
    if not product:
        return product
    return product if aut.accepts(aut.alphabet.check(product)) else ZERO


def enumerate_language(aut: ShiftAutomaton, max_len: int) -> List[str]:
    if max_len < 1:
        raise UsageError(f"max_len must be at least 1, got {max_len}")
    words: List[str] = []
    frontier = [("", aut.initial)] if not aut.is_empty else []
    for _ in range(max_len):
        frontier = [
            (word + symbol, r)
            for word, state in frontier
            for symbol in aut.alphabet
            if (r := aut.step(state, symbol)) is not None
        ]
        words.extend(word for word, _ in frontier)
    return words


def language_counts(aut: ShiftAutomaton, max_len: int) -> List[int]:
    """Number of words of L_X of each length 1..max_len."""
    if max_len < 1:
        raise UsageError(f"max_len must be at least 1, got {max_len}")
    counts = []
    weights = {aut.initial: 1} if not aut.is_empty else {}
    for _ in range(max_len):
        nxt: Dict[int, int] = {}
        for state, weight in weights.items():
            for r in aut.delta[state].values():
                nxt[r] = nxt.get(r, 0) + weight
        weights = nxt
        counts.append(sum(weights.values()))
    return counts
