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
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

from shifthull.automaton import ShiftAutomaton
from shifthull.constructible import ConstructibleSet, FollowerLattice, constructible_subsets, follower_lattice
from shifthull.errors import (
    AutomatonMismatchError,
    NotInLanguageError,
    NotMinimalError,
    PremiseViolatedError,
)
from shifthull.regular import Cardinality, union_all
from shifthull.words import EvPeriodicWord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteString:
    word: str

    @property
    def is_infinite(self) -> bool:
        return False

    def prefixes(self) -> List[str]:
        return [self.word[:n] for n in range(1, len(self.word) + 1)]

    def __str__(self):
        return self.word


@dataclass(frozen=True)
class InfiniteString:
    point: EvPeriodicWord

    @property
    def is_infinite(self) -> bool:
        return True

    def __str__(self):
        return str(self.point)


StringPoint = Union[FiniteString, InfiniteString]


@dataclass(frozen=True)
class StringClass:
    open: bool
    maximal: bool
    bounded: bool


def string_of(aut: ShiftAutomaton, w: Union[str, EvPeriodicWord]) -> StringPoint:
    """σ_w, the set of nonempty prefixes of an admissible word."""
    if isinstance(w, EvPeriodicWord):
        aut.alphabet.check(w.preperiod + w.period)
        if not aut.contains_point(w):
            raise NotInLanguageError(f"{w} is not a point of {aut.name or 'the shift'}")
        return InfiniteString(w)
    if not aut.accepts(aut.alphabet.check(w)):
        raise NotInLanguageError(f"{w!r} is not in the language of {aut.name or 'the shift'}")
    return FiniteString(w)


def classify_string(sigma: StringPoint) -> StringClass:
    # with word length as the length function: open, maximal and unbounded all mean infinite
    infinite = sigma.is_infinite
    return StringClass(open=infinite, maximal=infinite, bounded=not infinite)


@dataclass(frozen=True)
class StringChar:
    shift: ShiftAutomaton = field(repr=False, compare=False)
    string: StringPoint

    def __str__(self):
        return f"φ[{self.string}]"


@dataclass(frozen=True)
class PrincipalUltra:
    generator: ConstructibleSet

    @property
    def shift(self) -> ShiftAutomaton:
        return self.generator.shift

    def __str__(self):
        return f"ψ[{self.generator}]"


Character = Union[StringChar, PrincipalUltra]


def string_char(aut: ShiftAutomaton, w: Union[str, EvPeriodicWord]) -> StringChar:
    return StringChar(aut, string_of(aut, w))


def principal_ultra(y: ConstructibleSet, lattice: Optional[FollowerLattice] = None) -> PrincipalUltra:
    """The character X ↦ [Y ⊆ X] of a minimal nonempty constructible set Y."""
    region = y.regular_set
    cardinality = region.cardinality()
    if cardinality.is_empty or not cardinality.is_finite:
        raise NotMinimalError(f"{y} must be finite and nonempty, it is {cardinality}")
    for z in constructible_subsets(y.shift, region, lattice):
        if not z.regular_set.equals(region):
            raise NotMinimalError(f"{z} is a smaller nonempty constructible subset of {y}")
    return PrincipalUltra(y)


def _check_shift(c: Character, x: ConstructibleSet) -> None:
    if c.shift is not x.shift:
        raise AutomatonMismatchError(f"character {c} and set {x} live on different shifts")


def prefix_criterion(point: EvPeriodicWord, x: ConstructibleSet) -> bool:
    """u is a prefix of ω and, with ω = uη, tη ∈ X for every t ∈ Λ."""
    if not point.starts_with(x.u):
        return False
    eta = point.shift(len(x.u))
    return all(x.shift.contains_point(eta.prepend(t)) for t in x.lam)


def epsilon_criterion(sigma: StringPoint, x: ConstructibleSet) -> bool:
    """∅ ≠ σ ∩ E_u ⊆ uF_Λ."""
    u = x.u
    if isinstance(sigma, InfiniteString):
        if not sigma.point.starts_with(u):
            return False
        return x.regular_set.trace(sigma.point).all_accepted_from(len(u) + 1)
    inside = [p for p in sigma.prefixes() if p.startswith(u) and len(p) > len(u)]
    return bool(inside) and all(p in x.regular_set for p in inside)


def finiteness_criterion(sigma: InfiniteString, x: ConstructibleSet) -> bool:
    """σ ∖ X is finite."""
    return x.regular_set.trace(sigma.point).outside_finite


def char_eval(c: Character, x: ConstructibleSet) -> bool:
    _check_shift(c, x)
    if isinstance(c, PrincipalUltra):
        return c.generator.regular_set.issubset(x.regular_set)
    if isinstance(c.string, InfiniteString):
        return prefix_criterion(c.string.point, x)
    return epsilon_criterion(c.string, x)


@dataclass(frozen=True)
class CriteriaBits:
    prefix: bool
    epsilon: bool
    finiteness: bool

    @property
    def agree(self) -> bool:
        return self.prefix == self.epsilon == self.finiteness


def criteria(c: StringChar, x: ConstructibleSet) -> CriteriaBits:
    """All three evaluations of an infinite-string character."""
    _check_shift(c, x)
    if not isinstance(c.string, InfiniteString):
        raise NotInLanguageError(f"criteria need an infinite string, got {c.string}")
    return CriteriaBits(
        prefix=prefix_criterion(c.string.point, x),
        epsilon=epsilon_criterion(c.string, x),
        finiteness=finiteness_criterion(c.string, x),
    )


@dataclass(frozen=True)
class EssReport:
    value: bool
    joined: bool
    finiteness: Optional[bool] = None

    @property
    def agree(self) -> bool:
        return self.value == self.joined and (self.finiteness is None or self.finiteness == self.value)


def ess_membership_witness(c: Character, x: ConstructibleSet, ys: Sequence[ConstructibleSet]) -> EssReport:
    """
    φ(X) against ⋁φ(Yᵢ) for a family whose union differs from X by finitely many words.

    :raises PremiseViolatedError: when X Δ ∪Yᵢ is infinite
    """
    for y in ys:
        _check_shift(c, y)
    _check_shift(c, x)
    region = x.regular_set
    joined_set = union_all(region.alphabet, [y.regular_set for y in ys])
    difference = region.symmetric_difference(joined_set).cardinality()
    if not difference.is_finite:
        raise PremiseViolatedError(f"{x} differs from the union of the family by infinitely many words")
    value = char_eval(c, x)
    joined = any(char_eval(c, y) for y in ys)
    finiteness = None
    if isinstance(c, StringChar) and isinstance(c.string, InfiniteString):
        finiteness = finiteness_criterion(c.string, x)
    return EssReport(value, joined, finiteness)


@dataclass(frozen=True)
class GroundReport:
    holds: bool
    witness: Optional[ConstructibleSet] = None
    cardinality: Optional[Cardinality] = None
    classes: int = 0


def ground_report(aut: ShiftAutomaton, lattice: Optional[FollowerLattice] = None) -> GroundReport:
    """Is every F_Λ either empty or infinite? A finite nonempty class is returned as witness."""
    lattice = lattice or follower_lattice(aut)
    for cls in lattice.nonempty:
        cardinality = cls.language.cardinality()
        if cardinality.is_finite:
            logger.info(f"finite follower class {cls.words}: {cardinality}")
            return GroundReport(False, lattice.presentation(cls), cardinality, len(lattice))
    return GroundReport(True, classes=len(lattice))

