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

from typing import Optional


class ShiftHullError(Exception):
    """Base class for every input or usage problem reported by shifthull."""


class SpecError(ShiftHullError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class EmptyAlphabetError(SpecError):
    pass


class MalformedPatternError(SpecError):
    pass


class UnknownSymbolError(SpecError):
    """A letter that is not part of the alphabet (in a spec file or in a word)."""


class NotInLanguageError(ShiftHullError):
    """A word (or point) that was required to be admissible is not."""


class ZeroInLambdaError(ShiftHullError):
    pass


class NotInLambdaError(ShiftHullError):
    pass


class AutomatonMismatchError(ShiftHullError):
    pass


class AlphabetMismatchError(ShiftHullError):
    pass


class NotSubsetError(ShiftHullError):
    pass


class PremiseViolatedError(ShiftHullError):
    pass


class NotAGermError(ShiftHullError):
    pass


class FlavorMismatchError(ShiftHullError):
    pass


class NotMinimalError(ShiftHullError):
    pass


class LatticeLimitError(ShiftHullError):
    pass


class StateLimitError(ShiftHullError):
    pass


class ConfigError(ShiftHullError):
    pass


class UsageError(ShiftHullError):
    pass


class WitnessError(ShiftHullError):
    """A computed witness failed its own membership check."""
