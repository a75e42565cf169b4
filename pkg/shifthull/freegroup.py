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

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from shifthull.words import Alphabet

Letter = Tuple[str, int]


def reduce_word(letters: Iterable[Letter]) -> FreeGroupWord:
    stack: List[Letter] = []
    for symbol, sign in letters:
        if stack and stack[-1] == (symbol, -sign):
            stack.pop()
        else:
            stack.append((symbol, sign))
    return FreeGroupWord(tuple(stack))


@dataclass(frozen=True)
class FreeGroupWord:
    """A reduced word over Σ ∪ Σ⁻¹; letters are (symbol, +1 | -1)."""

    letters: Tuple[Letter, ...] = ()

    @classmethod
    def of(cls, u: str = "", v: str = "") -> FreeGroupWord:
        """The reduced form of u·v⁻¹."""
        return reduce_word([(a, 1) for a in u] + [(a, -1) for a in reversed(v)])

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: FreeGroupWord) -> FreeGroupWord:
        return reduce_word(self.letters + other.letters)

    def inverse(self) -> FreeGroupWord:
        return FreeGroupWord(tuple((symbol, -sign) for symbol, sign in reversed(self.letters)))

    def as_uv(self) -> Optional[Tuple[str, str]]:
        """(u, v) with self = u·v⁻¹ and u, v positive words, or None for any other shape."""
        split = 0
        while split < len(self.letters) and self.letters[split][1] == 1:
            split += 1
        if any(sign == 1 for _, sign in self.letters[split:]):
            return None
        u = "".join(symbol for symbol, _ in self.letters[:split])
        v = "".join(symbol for symbol, _ in reversed(self.letters[split:]))
        return u, v

    def __str__(self):
        if not self.letters:
            return "ε"
        return "".join(symbol if sign == 1 else f"{symbol}⁻¹" for symbol, sign in self.letters)


IDENTITY = FreeGroupWord()


def ball(alphabet: Alphabet, radius: int) -> List[FreeGroupWord]:
    """All reduced words of length <= radius, shortest first."""
    generators = [(a, sign) for a in alphabet for sign in (1, -1)]
    layer = [IDENTITY]
    result = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for g in layer:
            for symbol, sign in generators:
                if g.letters and g.letters[-1] == (symbol, -sign):
                    continue
                nxt.append(FreeGroupWord(g.letters + ((symbol, sign),)))
        result.extend(nxt)
        layer = nxt
    return result
