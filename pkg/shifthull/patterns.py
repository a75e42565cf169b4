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

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple, Union

from shifthull.errors import MalformedPatternError, UnknownSymbolError
from shifthull.words import Alphabet


@dataclass(frozen=True)
class Lit:
    symbol: str

    def __str__(self):
        return self.symbol


@dataclass(frozen=True)
class Plus:
    symbol: str

    def __str__(self):
        return f"{self.symbol}+"


@dataclass(frozen=True)
class Star:
    symbol: str

    def __str__(self):
        return f"{self.symbol}*"


@dataclass(frozen=True)
class OneOf:
    symbols: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, "symbols", frozenset(self.symbols))
        if not self.symbols:
            raise MalformedPatternError("a [..] class must list at least one symbol")

    def __str__(self):
        return "[" + "".join(sorted(self.symbols)) + "]"


@dataclass(frozen=True)
class AnySuffix:
    def __str__(self):
        return "⋆"


PatternAtom = Union[Lit, Plus, Star, OneOf, AnySuffix]
Pattern = Tuple[PatternAtom, ...]

# one atom per match: [..] class, the any-suffix mark, or a symbol with optional +/*
ATOM_TOKENS = re.compile(r"\[(?P<oneof>[^\[\]]*)\]|(?P<any>⋆)|(?P<symbol>[^\[\]+*⋆])(?P<op>[+*]?)|(?P<bad>.)")


def tokenize(text: str) -> List[Tuple[PatternAtom, int]]:
    """Splits compact pattern text into (atom, column) pairs."""
    atoms = []
    for m in ATOM_TOKENS.finditer(text):
        column = m.start() + 1
        if m.group("bad") is not None:
            raise MalformedPatternError(f"unexpected {m.group('bad')!r} in pattern {text!r}")
        if m.group("oneof") is not None:
            atoms.append((OneOf(frozenset(m.group("oneof"))), column))
        elif m.group("any") is not None:
            atoms.append((AnySuffix(), column))
        else:
            symbol, op = m.group("symbol"), m.group("op")
            atoms.append(({"": Lit, "+": Plus, "*": Star}[op](symbol), column))
    return atoms


def parse_atom(text: str) -> PatternAtom:
    if text.strip() == "*":
        return AnySuffix()
    tokens = tokenize(text)
    if len(tokens) != 1:
        raise MalformedPatternError(f"expected exactly one pattern atom, got {text!r}")
    return tokens[0][0]


def parse_pattern(text: str, alphabet: Alphabet) -> Pattern:
    """Parses the compact form, e.g. ``10+4[0234]`` or ``0*4⋆``."""
    pattern = tuple(atom for atom, _ in tokenize(text))
    validate_pattern(pattern, alphabet)
    return pattern


def atom_symbols(atom: PatternAtom) -> Iterable[str]:
    if isinstance(atom, OneOf):
        return sorted(atom.symbols)
    if isinstance(atom, AnySuffix):
        return ()
    return (atom.symbol,)


def validate_pattern(pattern: Sequence[PatternAtom], alphabet: Alphabet) -> None:
    if not pattern:
        raise MalformedPatternError("empty pattern")
    for i, atom in enumerate(pattern):
        if isinstance(atom, AnySuffix) and i != len(pattern) - 1:
            raise MalformedPatternError("the any-suffix atom '*' may only appear last")
        for symbol in atom_symbols(atom):
            if symbol not in alphabet:
                raise UnknownSymbolError(f"pattern uses {symbol!r}, which is not in the alphabet {alphabet}")
    if all(isinstance(atom, (Star, AnySuffix)) for atom in pattern):
        raise MalformedPatternError(f"pattern {pattern_text(pattern)!r} matches the empty word")


def pattern_text(pattern: Sequence[PatternAtom]) -> str:
    return "".join(str(atom) for atom in pattern)


def basic_steps(pattern: Sequence[PatternAtom]) -> Tuple[Tuple[str, object], ...]:
    """
    Lowers a pattern to ("set", symbols) and ("star", symbol) steps; Plus becomes a set
    step followed by a star step. A trailing AnySuffix is dropped; callers decide what
    it means for them.
    """
    steps = []
    for atom in pattern:
        if isinstance(atom, Lit):
            steps.append(("set", frozenset(atom.symbol)))
        elif isinstance(atom, OneOf):
            steps.append(("set", atom.symbols))
        elif isinstance(atom, Plus):
            steps.append(("set", frozenset(atom.symbol)))
            steps.append(("star", atom.symbol))
        elif isinstance(atom, Star):
            steps.append(("star", atom.symbol))
    return tuple(steps)


def has_any_suffix(pattern: Sequence[PatternAtom]) -> bool:
    return bool(pattern) and isinstance(pattern[-1], AnySuffix)


@dataclass(frozen=True)
class SubshiftSpec:
    alphabet: Alphabet
    forbidden: Tuple[Pattern, ...] = ()
    name: str = ""
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "forbidden", tuple(tuple(p) for p in self.forbidden))
        for pattern in self.forbidden:
            validate_pattern(pattern, self.alphabet)
