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

import enum
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

import networkx as nx
from automata.fa.dfa import DFA

from shifthull.errors import AlphabetMismatchError, StateLimitError
from shifthull.words import Alphabet, EvPeriodicWord

logger = logging.getLogger(__name__)

_SINK = "accept"

# fresh start state of the library acceptor, never accepting so the empty word stays out
_START = -1


class CardinalityClass(enum.Enum):
    EMPTY = "Empty"
    FINITE = "Finite"
    INFINITE = "Infinite"


@dataclass(frozen=True)
class Cardinality:
    kind: CardinalityClass
    words: Tuple[str, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.kind is CardinalityClass.EMPTY

    @property
    def is_finite(self) -> bool:
        return self.kind is not CardinalityClass.INFINITE

    def __str__(self):
        if self.kind is CardinalityClass.FINITE:
            return f"Finite({{{', '.join(self.words)}}})"
        return self.kind.value


@dataclass(frozen=True)
class PrefixTrace:
    """
    Membership of the prefixes of an eventually periodic word in a regular set.

    ``transient[i]`` tells whether the prefix of length i+1 belongs to the set; after the
    transient the flags repeat with period ``len(cycle)``. ``died`` means the run left the
    acceptor, so no longer prefix belongs to the set.
    """

    transient: Tuple[bool, ...]
    cycle: Tuple[bool, ...]
    died: bool

    def accepted(self, length: int) -> bool:
        if length <= len(self.transient):
            return self.transient[length - 1]
        if self.died:
            return False
        return self.cycle[(length - len(self.transient) - 1) % len(self.cycle)]

    @property
    def outside_finite(self) -> bool:
        """Only finitely many prefixes are missing from the set."""
        return not self.died and all(self.cycle)

    @property
    def inside_finite(self) -> bool:
        return self.died or not any(self.cycle)

    def all_accepted_from(self, length: int) -> bool:
        """Every prefix of length >= length is in the set."""
        if self.died:
            return False
        return all(self.transient[max(length - 1, 0) :]) and all(self.cycle)

    def any_accepted_from(self, length: int) -> bool:
        if any(self.transient[max(length - 1, 0) :]):
            return True
        return not self.died and any(self.cycle)


class RegularSet:
    """
    A set of nonempty words given by a deterministic partial acceptor.

    States are 0..n-1, ``start`` is None for the empty set. Every state is reachable from
    ``start``; dead ends are tolerated and pruned where it matters. Boolean operations,
    equality, emptiness and finiteness go through the automata-lib ``DFA`` in ``dfa``.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        start: Optional[int],
        delta: Dict[int, Dict[str, int]],
        accepting: FrozenSet[int],
        label: str = "",
    ):
        self.alphabet = alphabet
        self.start = start
        self.delta = delta
        self.accepting = frozenset(accepting)
        self.label = label

    def __repr__(self):
        return f"RegularSet({self.label or '?'}, states={len(self.delta)})"

    def relabel(self, label: str) -> RegularSet:
        return RegularSet(self.alphabet, self.start, self.delta, self.accepting, label)

    @classmethod
    def empty(cls, alphabet: Alphabet, label: str = "∅") -> RegularSet:
        return cls(alphabet, None, {}, frozenset(), label)

    @classmethod
    def explore(
        cls,
        alphabet: Alphabet,
        start_key: Hashable,
        step: Callable[[Hashable, str], Optional[Hashable]],
        accept: Callable[[Hashable], bool],
        label: str = "",
        limit: Optional[int] = None,
    ) -> RegularSet:
        """
        Builds the reachable part of an implicitly given automaton.

        :param start_key: any hashable description of the start state
        :param step: successor of a key on a symbol, or None when undefined
        :param accept: acceptance of a key
        :param limit: optional cap on the number of states
        """
        index = {start_key: 0}
        keys = [start_key]
        delta: Dict[int, Dict[str, int]] = {}
        queue = deque([start_key])
        while queue:
            key = queue.popleft()
            row = {}
            for symbol in alphabet:
                nxt = step(key, symbol)
                if nxt is None:
                    continue
                if nxt not in index:
                    if limit is not None and len(index) >= limit:
                        raise StateLimitError(f"building {label or 'a regular set'} exceeded {limit} states")
                    index[nxt] = len(keys)
                    keys.append(nxt)
                    queue.append(nxt)
                row[symbol] = index[nxt]
            delta[index[key]] = row
        accepting = frozenset(i for i, key in enumerate(keys) if accept(key))
        return cls(alphabet, 0, delta, accepting, label)

    @classmethod
    def from_dfa(cls, alphabet: Alphabet, dfa: DFA, label: str = "") -> RegularSet:
        """Reads back a library DFA, keeping only the states that still lead to acceptance."""
        graph = nx.DiGraph()
        graph.add_nodes_from(dfa.states)
        graph.add_edges_from((q, r) for q, row in dfa.transitions.items() for r in row.values())
        graph.add_edges_from((q, _SINK) for q in dfa.final_states)
        useful = nx.ancestors(graph, _SINK)
        if dfa.initial_state not in useful:
            return cls.empty(alphabet, label)

        def step(q, symbol):
            r = dfa.transitions[q].get(symbol)
            return r if r in useful else None

        return cls.explore(alphabet, dfa.initial_state, step, lambda q: q in dfa.final_states, label)

    @cached_property
    def dfa(self) -> DFA:
        """The same set as a partial automata-lib DFA with a fresh, rejecting start state."""
        symbols = frozenset(self.alphabet.symbols)
        if self.start is None:
            return DFA.empty_language(symbols)
        transitions = {q: dict(row) for q, row in self.delta.items()}
        transitions[_START] = dict(self.delta[self.start])
        return DFA(
            states=frozenset(transitions),
            input_symbols=symbols,
            transitions=transitions,
            initial_state=_START,
            final_states=frozenset(self.accepting),
            allow_partial=True,
        )

    # ---- structure -------------------------------------------------------------------

    def step(self, state: Optional[int], symbol: str) -> Optional[int]:
        if state is None:
            return None
        return self.delta[state].get(symbol)

    def run(self, word: str, start: Optional[int] = None) -> Optional[int]:
        state = self.start if start is None else start
        for letter in word:
            if state is None:
                return None
            state = self.delta[state].get(letter)
        return state

    def __contains__(self, word: str) -> bool:
        return bool(word) and self.run(word) in self.accepting

    @cached_property
    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.delta)
        graph.add_edges_from((q, r) for q, row in self.delta.items() for r in row.values())
        return graph

    @cached_property
    def useful(self) -> FrozenSet[int]:
        """States from which an accepting state can be reached."""
        if not self.accepting:
            return frozenset()
        graph = self.graph.copy()
        graph.add_edges_from((q, _SINK) for q in self.accepting)
        return frozenset(nx.ancestors(graph, _SINK))

    @cached_property
    def is_empty(self) -> bool:
        return self.dfa.isempty()

    @cached_property
    def access_words(self) -> Dict[int, str]:
        """Shortest length-lex word reaching each state."""
        if self.start is None:
            return {}
        words = {self.start: ""}
        queue = deque([self.start])
        while queue:
            q = queue.popleft()
            for symbol in self.alphabet:
                r = self.delta[q].get(symbol)
                if r is not None and r not in words:
                    words[r] = words[q] + symbol
                    queue.append(r)
        return words

    def shortest_word(self) -> Optional[str]:
        """Length-lex first member, or None for the empty set."""
        if self.is_empty:
            return None
        words: Dict[int, str] = {}
        queue: deque = deque()
        for symbol in self.alphabet:
            r = self.step(self.start, symbol)
            if r is not None and r not in words:
                words[r] = symbol
                queue.append(r)
        while queue:
            q = queue.popleft()
            for symbol in self.alphabet:
                r = self.delta[q].get(symbol)
                if r is not None and r not in words:
                    words[r] = words[q] + symbol
                    queue.append(r)
        return min((w for q, w in words.items() if q in self.accepting), key=self.alphabet.key)

    def cardinality(self) -> Cardinality:
        return self._cardinality

    @cached_property
    def _cardinality(self) -> Cardinality:
        if self.is_empty:
            return Cardinality(CardinalityClass.EMPTY)
        if not self.dfa.isfinite():
            return Cardinality(CardinalityClass.INFINITE)
        found = {"".join(word) for word in self.dfa}
        return Cardinality(CardinalityClass.FINITE, tuple(self.alphabet.sorted(found)))

    def words(self, max_len: int) -> Iterable[str]:
        """Members of length <= max_len in length-lex order."""
        if self.is_empty:
            return
        frontier = [("", self.start)]
        for _ in range(max_len):
            nxt = []
            for word, q in frontier:
                for symbol in self.alphabet:
                    r = self.delta[q].get(symbol)
                    if r is not None and r in self.useful:
                        nxt.append((word + symbol, r))
            for word, q in nxt:
                if q in self.accepting:
                    yield word
            frontier = nxt
            if not frontier:
                return

    # ---- derived sets ----------------------------------------------------------------

    def _check(self, other: RegularSet) -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(f"sets over {self.alphabet} and {other.alphabet} cannot be combined")

    def _combine(self, other: RegularSet, operation: str, symbol: str) -> RegularSet:
        self._check(other)
        label = f"({self.label} {symbol} {other.label})"
        product = getattr(self.dfa, operation)(other.dfa, minify=True)
        return RegularSet.from_dfa(self.alphabet, product, label)

    def intersection(self, other: RegularSet) -> RegularSet:
        return self._combine(other, "intersection", "∩")

    def union(self, other: RegularSet) -> RegularSet:
        return self._combine(other, "union", "∪")

    def difference(self, other: RegularSet) -> RegularSet:
        return self._combine(other, "difference", "∖")

    def symmetric_difference(self, other: RegularSet) -> RegularSet:
        return self._combine(other, "symmetric_difference", "Δ")

    def issubset(self, other: RegularSet) -> bool:
        self._check(other)
        return self.dfa.issubset(other.dfa)

    def isdisjoint(self, other: RegularSet) -> bool:
        self._check(other)
        return self.dfa.isdisjoint(other.dfa)

    def equals(self, other: RegularSet) -> bool:
        self._check(other)
        return self.dfa == other.dfa

    def quotient(self, state: Optional[int], label: str = "") -> RegularSet:
        """The words s with (word reaching state)·s in the set, s nonempty."""
        if state is None:
            return RegularSet.empty(self.alphabet, label)

        def step(key, symbol):
            started, q = key
            r = self.step(q, symbol)
            return None if r is None else (True, r)

        return RegularSet.explore(
            self.alphabet, (False, state), step, lambda key: key[0] and key[1] in self.accepting, label
        )

    def prefixed(self, u: str, label: str = "") -> RegularSet:
        """u·L; the empty u gives back the set itself."""
        if not u:
            return self
        if self.is_empty:
            return RegularSet.empty(self.alphabet, label)

        def step(key, symbol):
            kind, value = key
            if kind == "u":
                if u[value] != symbol:
                    return None
                return ("u", value + 1) if value + 1 < len(u) else ("at", self.start)
            r = self.step(value, symbol)
            return None if r is None else ("s", r)

        return RegularSet.explore(
            self.alphabet,
            ("u", 0),
            step,
            lambda key: key[0] == "s" and key[1] in self.accepting,
            label or f"{u}·{self.label}",
        )

    def interior(self) -> RegularSet:
        """Members s with some one-letter extension sa still in the set."""
        inner = frozenset(q for q in self.accepting if any(r in self.accepting for r in self.delta[q].values()))
        return RegularSet(self.alphabet, self.start, self.delta, inner, f"int({self.label})")

    def boundary(self) -> RegularSet:
        inner = self.interior().accepting
        return RegularSet(self.alphabet, self.start, self.delta, self.accepting - inner, f"∂({self.label})")

    # ---- canonical form --------------------------------------------------------------

    def canonical_key(self) -> tuple:
        """Minimized, canonically numbered transition structure: equal keys iff equal sets."""
        return self._canonical_key

    @cached_property
    def _canonical_key(self) -> tuple:
        if self.is_empty:
            return ()
        # breadth-first numbering of the minimal acceptor, in alphabet order
        minimal = RegularSet.from_dfa(self.alphabet, self.dfa.minify())
        rows = []
        for q in sorted(minimal.delta):
            row = tuple(minimal.delta[q].get(symbol, -1) for symbol in self.alphabet.symbols)
            rows.append((q in minimal.accepting, row))
        return tuple(rows)

    # ---- infinite words --------------------------------------------------------------

    def trace(self, point: EvPeriodicWord, start: Optional[int] = None) -> PrefixTrace:
        flags: List[bool] = []
        state = self.start if start is None else start
        if state is None:
            return PrefixTrace((), (), True)
        for letter in point.preperiod:
            state = self.delta[state].get(letter)
            if state is None:
                return PrefixTrace(tuple(flags), (), True)
            flags.append(state in self.accepting)
        boundaries: Dict[int, int] = {}
        while state not in boundaries:
            boundaries[state] = len(flags)
            for letter in point.period:
                state = self.delta[state].get(letter)
                if state is None:
                    return PrefixTrace(tuple(flags), (), True)
                flags.append(state in self.accepting)
        cut = boundaries[state]
        return PrefixTrace(tuple(flags[:cut]), tuple(flags[cut:]), False)


def union_all(alphabet: Alphabet, sets: Iterable[RegularSet], label: str = "") -> RegularSet:
    result = RegularSet.empty(alphabet, label or "∅")
    for s in sets:
        result = s if result.start is None else result.union(s)
    return result
