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

import itertools
import logging
import os
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import tomli

from shifthull.errors import NotSubsetError, SpecError, UsageError
from shifthull.resource import get_resource

logger = logging.getLogger(__name__)

FAMILY_LIMIT = 6


@dataclass(frozen=True)
class UniverseSet:
    """
    A subset of a universe of integers, kept as its members below ``truncate`` plus a flag
    telling whether it contains every integer from ``truncate`` onward.
    """

    below: FrozenSet[int]
    infinite: bool = False

    @property
    def is_empty(self) -> bool:
        return not self.below and not self.infinite

    def __and__(self, other: UniverseSet) -> UniverseSet:
        return UniverseSet(self.below & other.below, self.infinite and other.infinite)

    def __or__(self, other: UniverseSet) -> UniverseSet:
        return UniverseSet(self.below | other.below, self.infinite or other.infinite)

    def __sub__(self, other: UniverseSet) -> UniverseSet:
        return UniverseSet(self.below - other.below, self.infinite and not other.infinite)

    def __le__(self, other: UniverseSet) -> bool:
        return self.below <= other.below and (other.infinite or not self.infinite)

    def show(self, truncate: int) -> str:
        if not self.infinite:
            return "{" + ",".join(str(n) for n in sorted(self.below)) + "}"
        start = truncate
        while start - 1 in self.below:
            start -= 1
        head = [str(n) for n in sorted(self.below) if n < start]
        return "{" + ",".join(head + [str(start), str(start + 1), "…"]) + "}"


EMPTY_SET = UniverseSet(frozenset())


@dataclass(frozen=True)
class CoverDefect:
    x: Tuple[str, ...]
    y: Tuple[str, ...]
    cover: Tuple[str, ...]
    defect: UniverseSet


@dataclass(frozen=True)
class FamilyReport:
    name: str
    covers: int
    defects: Tuple[CoverDefect, ...]

    @property
    def tight(self) -> bool:
        return all(d.defect.is_empty for d in self.defects)

    @property
    def essentially_tight(self) -> bool:
        return all(not d.defect.infinite for d in self.defects)


class FiniteUniverseFamily:
    """A finite sub-semilattice of the subsets of an explicit universe Ω."""

    def __init__(self, name: str, omega: UniverseSet, sets: Dict[str, UniverseSet], truncate: int, notes: str = ""):
        self.name = name
        self.omega = omega
        self.sets = dict(sets)
        self.truncate = truncate
        self.notes = notes
        for key, value in self.sets.items():
            if not value <= omega:
                raise NotSubsetError(f"set {key!r} of {name} is not contained in Ω")

    def __getitem__(self, key: str) -> UniverseSet:
        try:
            return self.sets[key]
        except KeyError:
            raise UsageError(f"{self.name} has no set named {key!r}; known: {', '.join(self.sets)}")

    def show(self, s: UniverseSet) -> str:
        return s.show(self.truncate)

    def region(self, x: Iterable[str], y: Iterable[str] = ()) -> UniverseSet:
        """∩ x ∩ ∩ (Ω ∖ y)"""
        result = self.omega
        for key in x:
            result = result & self[key]
        for key in y:
            result = result - self[key]
        return result

    def below(self, x: Sequence[str], y: Sequence[str] = ()) -> List[str]:
        """Names of the nonzero members z with z ⊆ every x and z disjoint from every y."""
        result = []
        for key, z in self.sets.items():
            if z.is_empty:
                continue
            if all(z <= self[k] for k in x) and all((z & self[k]).is_empty for k in y):
                result.append(key)
        return result

    def is_cover(self, x: Sequence[str], cover: Sequence[str], y: Sequence[str] = ()) -> bool:
        allowed = set(self.below(x, y))
        if any(key not in allowed and not self[key].is_empty for key in cover):
            return False
        return all(any(not (self[z] & self[c]).is_empty for c in cover) for z in allowed)

    def defect(self, x: Sequence[str], cover: Sequence[str], y: Sequence[str] = ()) -> UniverseSet:
        region = self.region(x, y)
        covered = EMPTY_SET
        for key in cover:
            if not self[key] <= region:
                raise NotSubsetError(f"{key!r} is not contained in the region of {', '.join(x)}")
            covered = covered | self[key]
        return region - covered


def family_report(family: FiniteUniverseFamily) -> FamilyReport:
    """Every cover of every region E^{X,Y}, with its defect set."""
    names = list(family.sets)
    if len(names) > FAMILY_LIMIT:
        raise UsageError(f"{family.name} has {len(names)} sets; at most {FAMILY_LIMIT} can be enumerated")
    subsets = [combo for size in range(len(names) + 1) for combo in itertools.combinations(names, size)]
    defects = []
    for x in subsets:
        for y in subsets:
            allowed = family.below(x, y)
            for size in range(len(allowed) + 1):
                for cover in itertools.combinations(allowed, size):
                    if family.is_cover(x, cover, y):
                        defects.append(CoverDefect(x, y, cover, family.defect(x, cover, y)))
    logger.info(f"{family.name}: {len(defects)} covers examined")
    nonempty = tuple(d for d in defects if not d.defect.is_empty)
    return FamilyReport(family.name, len(defects), nonempty)


def _parse_set(value, key: str) -> Tuple[FrozenSet[int], Optional[int]]:
    if isinstance(value, list):
        members, tail = value, None
    elif isinstance(value, dict):
        unknown = set(value) - {"members", "tail"}
        if unknown:
            raise SpecError(f"set {key!r}: unknown keys {', '.join(sorted(unknown))}")
        members, tail = value.get("members", []), value.get("tail")
    else:
        raise SpecError(f"set {key!r} must be a list of integers or a table with members/tail")
    if not all(isinstance(n, int) and n >= 0 for n in members) or not (tail is None or isinstance(tail, int)):
        raise SpecError(f"set {key!r} must hold non-negative integers")
    return frozenset(members), tail


def parse_universe(data: dict) -> FiniteUniverseFamily:
    name = data.get("name", "")
    if "omega" not in data or "sets" not in data:
        raise SpecError(f"universe {name!r} needs both 'omega' and 'sets'")
    raw = {"omega": _parse_set(data["omega"], "omega")}
    raw.update({key: _parse_set(value, key) for key, value in data["sets"].items()})
    largest = [max(members, default=-1) for members, _ in raw.values()] + [t for _, t in raw.values() if t is not None]
    truncate = data.get("truncate", max(largest, default=-1) + 1)
    if max(largest, default=-1) >= truncate:
        raise SpecError(f"universe {name!r}: truncate = {truncate} must exceed every explicit member and tail")

    def build(members, tail):
        extra = set(range(tail, truncate)) if tail is not None else set()
        return UniverseSet(frozenset(members) | extra, tail is not None)

    sets = {key: build(*value) for key, value in raw.items() if key != "omega"}
    return FiniteUniverseFamily(name, build(*raw["omega"]), sets, truncate, data.get("notes", ""))


def load_universe(name_or_path: str) -> FiniteUniverseFamily:
    """A bundled universe by name, or a TOML file by path."""
    path = name_or_path
    if not os.path.exists(path):
        try:
            path = get_resource("universes", f"{name_or_path}.toml")
        except FileNotFoundError:
            raise UsageError(f"no universe file {name_or_path!r} and no bundled universe of that name")
    try:
        with open(path, "rb") as f:
            data = tomli.load(f)
    except tomli.TOMLDecodeError as e:
        raise SpecError(f"{path}: {e}")
    return parse_universe(data)
