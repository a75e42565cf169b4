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
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple, Union

from shifthull.automaton import ShiftAutomaton
from shifthull.errors import FlavorMismatchError, NotAGermError, NotInLanguageError, UsageError
from shifthull.freegroup import FreeGroupWord
from shifthull.words import EvPeriodicWord, is_primitive, point_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointSample:
    """Eventually periodic points of X, closed under the shift and under prepending up to ``budget`` letters."""

    shift: ShiftAutomaton = field(repr=False, compare=False)
    points: Tuple[EvPeriodicWord, ...]
    depth: Dict[EvPeriodicWord, int] = field(repr=False, compare=False)
    budget: int

    def __contains__(self, point: object) -> bool:
        return point in self.depth

    def __iter__(self) -> Iterator[EvPeriodicWord]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def index(self, point: EvPeriodicWord) -> int:
        return self._index[point]

    @cached_property
    def _index(self) -> Dict[EvPeriodicWord, int]:
        return {p: i for i, p in enumerate(self.points)}


def _rotations(word: str) -> List[str]:
    return [word[i:] + word[:i] for i in range(len(word))]


def build_sample(aut: ShiftAutomaton, budget: int = 4, seed_count: int = 2, seed_period: int = 4) -> PointSample:
    """
    Seeds are the length-lex first ``seed_count`` primitive periods c, one per rotation
    class, with c^∞ ∈ X; their shift orbits are then extended by admissible prepends.
    """
    if budget < 0 or seed_count < 1 or seed_period < 1:
        raise UsageError("sample budget must be >= 0, seed count and seed period >= 1")
    seeds: List[str] = []
    taken = set()
    for length in range(1, seed_period + 1):
        for c in aut.alphabet.words(length):
            if len(seeds) >= seed_count:
                break
            if c in taken or not is_primitive(c) or not aut.contains_point(EvPeriodicWord("", c)):
                continue
            seeds.append(c)
            taken.update(_rotations(c))
    depth: Dict[EvPeriodicWord, int] = {}
    for c in seeds:
        for r in _rotations(c):
            depth.setdefault(EvPeriodicWord("", r), 0)
    layer = list(depth)
    for d in range(1, budget + 1):
        nxt = []
        for p in layer:
            for a in aut.alphabet:
                q = p.prepend(a)
                if q not in depth and aut.contains_point(q):
                    depth[q] = d
                    nxt.append(q)
        layer = nxt
    points = tuple(sorted(depth, key=lambda p: point_key(aut.alphabet, p)))
    logger.info(f"sample of {aut.name or 'shift'}: seeds {seeds}, {len(points)} points, budget {budget}")
    return PointSample(aut, points, depth, budget)


def alpha_apply(aut: ShiftAutomaton, g: FreeGroupWord, x: EvPeriodicWord) -> Optional[EvPeriodicWord]:
    """α_g(x) for g = uv⁻¹: defined when x = vη and uη ∈ X. Other shapes have empty domain."""
    uv = g.as_uv()
    if uv is None:
        return None
    u, v = uv
    if not x.starts_with(v):
        return None
    y = x.shift(len(v)).prepend(u)
    return y if aut.contains_point(y) else None


def alpha_compose(aut: ShiftAutomaton, g: FreeGroupWord, x: EvPeriodicWord) -> Optional[EvPeriodicWord]:
    """Applies the generator maps of g one letter at a time, rightmost first."""
    point: Optional[EvPeriodicWord] = x
    for symbol, sign in reversed(g.letters):
        if sign == 1:
            point = point.prepend(symbol)
            if not aut.contains_point(point):
                return None
        else:
            if not point.starts_with(symbol):
                return None
            point = point.shift(1)
    return point


def domain_shapes(
    aut: ShiftAutomaton, x: EvPeriodicWord, radius: int
) -> Iterator[Tuple[FreeGroupWord, Optional[EvPeriodicWord]]]:
    """
    Every reduced g = uv⁻¹ with |g| <= radius whose domain holds x, paired with α_g(x), followed
    by the one-letter overhangs a·u that leave X, paired with None. Every other element of the
    ball misses x through its shape or its v.
    """
    for nv in range(radius + 1):
        v = x.prefix(nv)
        eta = x.shift(nv)
        frontier = [""]
        for nu in range(radius - nv + 1):
            for u in frontier:
                g = FreeGroupWord.of(u, v)
                if len(g) == nu + nv:
                    yield g, eta.prepend(u)
            if nu == radius - nv:
                break
            grown = []
            for u in frontier:
                for a in aut.alphabet:
                    if aut.contains_point(eta.prepend(a + u)):
                        grown.append(a + u)
                        continue
                    g = FreeGroupWord.of(a + u, v)
                    if len(g) == nu + 1 + nv:
                        yield g, None
            frontier = grown


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    failures: Tuple[str, ...] = ()
    exhaustive: bool = True

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class ActionReport:
    sample_size: int
    radius: int
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _record(failures: List[str], message: str, cap: int = 10) -> None:
    if len(failures) < cap:
        failures.append(message)


def action_report(sample: PointSample, radius: int) -> ActionReport:
    """
    Orthogonality, prefix nesting of the ranges X_u, the decomposition of Tⁿ and
    semi-saturation, checked on the sample for group elements of length <= radius.
    """
    if radius < 1:
        raise UsageError(f"radius must be at least 1, got {radius}")
    aut = sample.shift
    letters = list(aut.alphabet)
    inverse = {a: FreeGroupWord(((a, -1),)) for a in letters}

    orthogonal: List[str] = []
    nesting: List[str] = []
    powers: List[str] = []
    for x in sample:
        hits = [a for a in letters if alpha_apply(aut, inverse[a], x) is not None]
        if len(hits) != 1:
            _record(orthogonal, f"{x} lies in the ranges of {hits}")
        for a in letters:
            for b in letters:
                if a != b and alpha_compose(aut, FreeGroupWord(((a, -1), (b, 1))), x) is not None:
                    _record(orthogonal, f"{a}⁻¹{b} defined at {x}")
        # descend the words u with x ∈ X_u; they must form one chain of prefixes of x
        chain = ""
        for n in range(1, radius + 1):
            children = [chain + a for a in letters if alpha_apply(aut, FreeGroupWord.of("", chain + a), x) is not None]
            if len(children) != 1 or not x.starts_with(children[0]):
                _record(nesting, f"ranges X_u at {x}, length {n}: {children}")
                break
            chain = children[0]
            if alpha_apply(aut, FreeGroupWord.of("", chain), x) != x.shift(n):
                _record(powers, f"T^{n}({x}) differs from α_{chain}⁻¹")

    points = list(sample)
    compose_failures: List[str] = []
    saturation: List[str] = []
    shapes = 0
    splits = 0
    for x in points:
        for g, image in domain_shapes(aut, x, radius):
            shapes += 1
            if alpha_apply(aut, g, x) != image or alpha_compose(aut, g, x) != image:
                _record(compose_failures, f"α_{g}({x}) disagrees with its letter-by-letter composition")
            # every reduced factorization g = g1·g2 of an element of the ball
            for cut in range(1, len(g)):
                splits += 1
                outer, inner = FreeGroupWord(g.letters[:cut]), FreeGroupWord(g.letters[cut:])
                step = alpha_apply(aut, inner, x)
                if (None if step is None else alpha_apply(aut, outer, step)) != image:
                    _record(saturation, f"α_{outer}∘α_{inner} ≠ α_{g} at {x}")

    checks = (
        CheckResult("orthogonality", len(points), tuple(orthogonal)),
        CheckResult("range nesting", len(points), tuple(nesting)),
        CheckResult("shift powers", len(points), tuple(powers)),
        CheckResult("letter composition", shapes, tuple(compose_failures)),
        CheckResult("semi-saturation", splits, tuple(saturation)),
    )
    logger.info(f"action checks on {len(points)} points, radius {radius}: {[c.passed for c in checks]}")
    return ActionReport(len(points), radius, checks)


@dataclass(frozen=True)
class PTGerm:
    """(y, g, x) with α_g(x) = y."""

    y: EvPeriodicWord
    g: FreeGroupWord
    x: EvPeriodicWord

    def __str__(self):
        return f"({self.y}, {self.g}, {self.x})"


@dataclass(frozen=True)
class DRGerm:
    """(y, k, x) with shift^m(y) = shift^n(x), k = m − n and (m, n) minimal."""

    y: EvPeriodicWord
    k: int
    x: EvPeriodicWord
    m: int
    n: int

    def __str__(self):
        return f"({self.y}, {self.k}, {self.x})"


Germ = Union[PTGerm, DRGerm]


def minrep(y: EvPeriodicWord, k: int, x: EvPeriodicWord) -> Optional[Tuple[int, int]]:
    """Least (m, n) with m − n = k and shift^m(y) = shift^n(x), or None."""
    periods = len(y.period) * len(x.period) // math.gcd(len(y.period), len(x.period))
    start = max(0, k)
    bound = max(start, len(y.preperiod), len(x.preperiod) + k) + periods
    for m in range(start, bound + 1):
        if y.shift(m) == x.shift(m - k):
            return m, m - k
    return None


def dr_germ(y: EvPeriodicWord, k: int, x: EvPeriodicWord) -> DRGerm:
    rep = minrep(y, k, x)
    if rep is None:
        raise NotAGermError(f"no m, n with m − n = {k} make the tails of {y} and {x} agree")
    return DRGerm(y, k, x, *rep)


def pt_germ(aut: ShiftAutomaton, g: FreeGroupWord, x: EvPeriodicWord) -> Optional[PTGerm]:
    y = alpha_apply(aut, g, x)
    return None if y is None else PTGerm(y, g, x)


def dr_convert(germ: PTGerm) -> DRGerm:
    uv = germ.g.as_uv()
    if uv is None:
        raise NotAGermError(f"{germ} has a group element outside the domain of the action")
    u, v = uv
    return dr_germ(germ.y, len(u) - len(v), germ.x)


def dr_invert(aut: ShiftAutomaton, germ: DRGerm) -> PTGerm:
    """The germ (y, uv⁻¹, x) read off the minimal representative: u = y[:m], v = x[:n]."""
    rep = minrep(germ.y, germ.k, germ.x)
    if rep is None:
        raise NotAGermError(f"{germ} has no minimal representative")
    m, n = rep
    u, v = germ.y.prefix(m), germ.x.prefix(n)
    g = FreeGroupWord.of(u, v)
    if len(g) != m + n:
        raise NotAGermError(f"{u}·{v}⁻¹ is not reduced for {germ}")
    if alpha_apply(aut, g, germ.x) != germ.y:
        raise NotInLanguageError(f"α_{g} does not carry {germ.x} to {germ.y}")
    return PTGerm(germ.y, g, germ.x)


def germ_compose(g1: Germ, g2: Germ) -> Optional[Germ]:
    if type(g1) is not type(g2):
        raise FlavorMismatchError(f"cannot compose {type(g1).__name__} with {type(g2).__name__}")
    if g1.x != g2.y:
        return None
    if isinstance(g1, PTGerm):
        return PTGerm(g1.y, g1.g * g2.g, g2.x)
    return dr_germ(g1.y, g1.k + g2.k, g2.x)


def germ_inverse(germ: Germ) -> Germ:
    if isinstance(germ, PTGerm):
        return PTGerm(germ.x, germ.g.inverse(), germ.y)
    return DRGerm(germ.x, -germ.k, germ.y, germ.n, germ.m)


def unit_germ(x: EvPeriodicWord) -> PTGerm:
    return PTGerm(x, FreeGroupWord(), x)


def enumerate_germs(sample: PointSample, radius: int, limit: int = 5000, seed: int = 0) -> Tuple[List[PTGerm], bool]:
    """
    Germs (y, uv⁻¹, x) with |u| + |v| <= radius and y in the sample.

    Points are visited in a seeded shuffled order until ``limit`` germs are collected;
    the flag tells whether every point was visited.
    """
    aut = sample.shift
    order = list(sample)
    random.Random(seed).shuffle(order)
    germs: List[PTGerm] = []
    exhaustive = True
    for x in order:
        if len(germs) >= limit:
            exhaustive = False
            break
        germs.extend(PTGerm(y, g, x) for g, y in domain_shapes(aut, x, radius) if y is not None and y in sample)
    germs.sort(key=lambda germ: (point_key(aut.alphabet, germ.x), len(germ.g), str(germ.g)))
    logger.info(f"{len(germs)} germs of radius {radius} ({'all points' if exhaustive else 'sampled points'})")
    return germs, exhaustive


@dataclass(frozen=True)
class GroupoidReport:
    germs: int
    pairs: int
    exhaustive: bool
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def groupoid_report(sample: PointSample, radius: int, limit: int = 5000, seed: int = 0) -> GroupoidReport:
    """Round trip through the Deaconu-Renault picture, functoriality and the groupoid axioms on sampled germs."""
    aut = sample.shift
    germs, exhaustive = enumerate_germs(sample, radius, limit, seed)
    round_trip: List[str] = []
    inverses: List[str] = []
    for germ in germs:
        converted = dr_convert(germ)
        if dr_invert(aut, converted) != germ:
            _record(round_trip, f"{germ} ↦ {converted} does not come back")
        back = germ_inverse(germ)
        if germ_inverse(back) != germ or germ_compose(germ, back) != unit_germ(germ.y):
            _record(inverses, f"inverse law fails at {germ}")
        if dr_convert(back) != germ_inverse(converted):
            _record(inverses, f"conversion does not commute with inversion at {germ}")

    by_range: Dict[EvPeriodicWord, List[PTGerm]] = defaultdict(list)
    for germ in germs:
        by_range[germ.y].append(germ)
    functor: List[str] = []
    pairs = 0
    for g1 in germs:
        for g2 in by_range.get(g1.x, ()):
            if pairs >= limit:
                break
            pairs += 1
            product = germ_compose(g1, g2)
            if dr_convert(product) != germ_compose(dr_convert(g1), dr_convert(g2)):
                _record(functor, f"conversion is not multiplicative on {g1}·{g2}")
    checks = (
        CheckResult("round trip", len(germs), tuple(round_trip), exhaustive),
        CheckResult("inverses", len(germs), tuple(inverses), exhaustive),
        CheckResult("functoriality", pairs, tuple(functor), exhaustive and pairs < limit),
    )
    return GroupoidReport(len(germs), pairs, exhaustive, checks)

