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
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple, Union

from shifthull.errors import EmptyAlphabetError, SpecError, UnknownSymbolError

# characters with a meaning in patterns, set expressions or point syntax
RESERVED_SYMBOLS = frozenset("()[]+*|,;:/~⋆ε∅ \t\n")


class Zero(enum.Enum):
    """The absorbing element adjoined to the language."""

    ZERO = "0"

    def __repr__(self) -> str:
        return "ZERO"

    def __str__(self) -> str:
        return "∅"


ZERO = Zero.ZERO

# The adjoined unit is the empty word.
UNIT = ""

ExtWord = Union[str, Zero]


@dataclass(frozen=True)
class Alphabet:
    symbols: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise EmptyAlphabetError("alphabet must contain at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise SpecError(f"alphabet has duplicate symbols: {list(symbols)}")
        for symbol in symbols:
            if not isinstance(symbol, str) or len(symbol) != 1:
                raise SpecError(f"alphabet symbols must be single characters, got {symbol!r}")
            if symbol in RESERVED_SYMBOLS:
                raise SpecError(f"symbol {symbol!r} is reserved")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbolError(f"symbol {symbol!r} is not in the alphabet {''.join(self.symbols)}")

    def check(self, word: str) -> str:
        """Raises UnknownSymbolError if word uses a letter outside the alphabet."""
        for letter in word:
            self.index(letter)
        return word

    def key(self, word: str) -> Tuple[int, Tuple[int, ...]]:
        """Length-lex sort key."""
        return len(word), tuple(self._index[c] for c in word)

    def sorted(self, words) -> list:
        return sorted(words, key=self.key)

    def words(self, length: int) -> Iterator[str]:
        for letters in itertools.product(self.symbols, repeat=length):
            yield "".join(letters)

    def __str__(self) -> str:
        return "{" + ",".join(self.symbols) + "}"


def primitive_root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def is_primitive(word: str) -> bool:
    return bool(word) and primitive_root(word) == word


@dataclass(frozen=True)
class EvPeriodicWord:
    """
    The infinite word preperiod·period·period·…

    Always stored canonically (primitive period, shortest preperiod), so two values
    are equal exactly when they spell the same infinite word.
    """

    preperiod: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        pre, period = self.preperiod, primitive_root(self.period)
        while pre and pre[-1] == period[-1]:
            pre = pre[:-1]
            period = period[-1] + period[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", period)

    def letter(self, i: int) -> str:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> str:
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        rest = n - len(self.preperiod)
        return self.preperiod + (self.period * (rest // len(self.period) + 1))[:rest]

    def starts_with(self, word: str) -> bool:
        return self.prefix(len(word)) == word

    def shift(self, n: int = 1) -> EvPeriodicWord:
        if n <= len(self.preperiod):
            return EvPeriodicWord(self.preperiod[n:], self.period)
        k = (n - len(self.preperiod)) % len(self.period)
        return EvPeriodicWord("", self.period[k:] + self.period[:k])

    def prepend(self, word: str) -> EvPeriodicWord:
        return EvPeriodicWord(word + self.preperiod, self.period)

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})"


def point_key(alphabet: Alphabet, point: EvPeriodicWord):
    return alphabet.key(point.preperiod), alphabet.key(point.period)


def parse_point(text: str, alphabet: Alphabet) -> EvPeriodicWord:
    """Reads the `pre(period)` notation, e.g. ``10004(1)``."""
    text = text.strip()
    if text.endswith("^∞"):
        text = text[:-2]
    if not text.endswith(")") or "(" not in text:
        raise SpecError(f"expected a point written as pre(period), got {text!r}")
    pre, period = text[:-1].split("(", 1)
    if not period:
        raise SpecError(f"empty period in {text!r}")
    return EvPeriodicWord(alphabet.check(pre), alphabet.check(period))


def show(word: ExtWord) -> str:
    """Display form: ε for the unit, ∅ for zero."""
    if word is ZERO:
        return "∅"
    return word if word else "ε"
