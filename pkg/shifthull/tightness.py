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
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from shifthull.automaton import ShiftAutomaton
from shifthull.constructible import (
    ConstructibleSet,
    FollowerLattice,
    SetLike,
    as_regular,
    constructible_subsets,
    f_lambda,
    f_lambda_gamma,
    follower_gamma_set,
    follower_lattice,
    follower_set,
    make_constructible,
    show_set,
    word_set,
)
from shifthull.errors import LatticeLimitError, NotSubsetError, WitnessError
from shifthull.regular import Cardinality, RegularSet, union_all
from shifthull.words import UNIT, EvPeriodicWord, ExtWord

logger = logging.getLogger(__name__)


def defect_set(x: SetLike, covers: Sequence[SetLike]) -> RegularSet:
    """X ∖ ∪ covers; every cover member must lie inside X."""
    region = as_regular(x)
    members = [as_regular(c) for c in covers]
    for c, member in zip(covers, members):
        if not member.issubset(region):
            raise NotSubsetError(f"{c} is not a subset of {x}")
    return region.difference(union_all(region.alphabet, members)).relabel(f"D({x})")


def covers_and_lengths(x: SetLike, candidates: Sequence[SetLike]) -> Optional[int]:
    """
    Least n₀ such that every word of the interior of X longer than n₀ is covered,
    or None when no such bound exists.
    """
    region = as_regular(x)
    leftover = region.interior().difference(union_all(region.alphabet, [as_regular(c) for c in candidates]))
    cardinality = leftover.cardinality()
    if not cardinality.is_finite:
        return None
    return max((len(w) for w in cardinality.words), default=0)


@dataclass(frozen=True)
class Covered:
    pairs: int
    checks: int
    n0: Optional[int]


@dataclass(frozen=True)
class NotCovered:
    witness: ConstructibleSet
    sample: str


@dataclass(frozen=True)
class UnknownUpTo:
    bound: int


CoverVerdict = Union[Covered, NotCovered, UnknownUpTo]


def cover_verdict(
    aut: ShiftAutomaton,
    x: SetLike,
    candidates: Sequence[SetLike],
    bound: int = 6,
    lattice_limit: Optional[int] = None,
) -> CoverVerdict:
    """
    Decides whether the candidates cover X: every nonempty constructible subset of X
    meets one of them.

    The decision searches the defect set D for a nonempty constructible subset. That
    search is exact while the follower lattice stays within lattice_limit; beyond it a
    bounded search over words of length <= bound either finds a witness or reports
    UnknownUpTo.
    """
    defect = defect_set(x, candidates)
    try:
        lattice = follower_lattice(aut, lattice_limit)
    except LatticeLimitError as e:
        logger.warning(f"{e}; falling back to a bounded search up to length {bound}")
        return _bounded_verdict(aut, defect, bound)
    stats: Dict[str, int] = {}
    for z in constructible_subsets(aut, defect, lattice, stats):
        logger.info(f"{x} not covered: {z} lies in the defect set")
        return NotCovered(z, z.regular_set.shortest_word())
    logger.info(f"cover of {x} certified after {stats['pairs']} pairs and {stats['checks']} inclusion checks")
    return Covered(stats["pairs"], stats["checks"], covers_and_lengths(x, candidates))


def _bounded_verdict(aut: ShiftAutomaton, defect: RegularSet, bound: int) -> CoverVerdict:
    short = list(defect.words(bound))
    extra = [()] + [(t,) for t in short]
    for w in short:
        for rest in extra:
            z = make_constructible(aut, w, {w, *rest})
            if not z.is_empty and z.regular_set.issubset(defect):
                return NotCovered(z, z.regular_set.shortest_word())
    return UnknownUpTo(bound)


@dataclass(frozen=True)
class BoundaryFailure:
    witness: ConstructibleSet
    sample: Tuple[str, ...]


@dataclass(frozen=True)
class HypothesesReport:
    leftover: Cardinality
    failures: Tuple[BoundaryFailure, ...]
    classes: int
    length_function: bool = True

    @property
    def holds(self) -> bool:
        return self.length_function and self.leftover.is_finite and not self.failures


def hypotheses_check(
    aut: ShiftAutomaton, max_len: int = 8, lattice: Optional[FollowerLattice] = None
) -> HypothesesReport:
    """
    Checks the sufficient conditions for essential tightness: word length as length
    function (always homogeneous and locally finite), finitely many words outside
    ∪ E_a, and a finite boundary for every constructible set.

    :param max_len: longest boundary word listed for a failing class
    """
    lattice = lattice or follower_lattice(aut)
    language = lattice.top.language
    starts = [follower_set(aut, frozenset({q})).prefixed(a) for a in aut.alphabet if (q := aut.run(a)) is not None]
    leftover = language.difference(union_all(aut.alphabet, starts)).cardinality()
    failures = []
    for cls in [lattice.top] + lattice.nonempty:
        boundary = cls.language.boundary()
        if not boundary.cardinality().is_finite:
            witness = make_constructible(aut, UNIT, set(cls.words) | {UNIT})
            failures.append(BoundaryFailure(witness, tuple(boundary.words(max_len))))
    return HypothesesReport(leftover, tuple(failures), len(lattice))


class StarStatus(enum.Enum):
    VACUOUS = "VacuouslyTrue"
    WITNESSED = "Witnessed"
    REFUTED = "Refuted"


@dataclass(frozen=True)
class StarVerdict:
    lam: Tuple[str, ...]
    gamma: Tuple[str, ...]
    status: StarStatus
    cardinality: Cardinality = field(repr=False)
    witness: Optional[EvPeriodicWord] = None


@dataclass(frozen=True)
class StarReport:
    verdicts: Tuple[StarVerdict, ...]
    examined: int
    pruned: int

    @property
    def holds(self) -> bool:
        return all(v.status is not StarStatus.REFUTED for v in self.verdicts)

    @property
    def refuted(self) -> List[StarVerdict]:
        return [v for v in self.verdicts if v.status is StarStatus.REFUTED]


def accepting_cycle(language: RegularSet) -> Optional[EvPeriodicWord]:
    """Length-lex least ω = p·c^∞ whose prefixes from p on all stay in the set."""
    core = language.graph.subgraph(language.accepting)
    access = language.access_words
    key = language.alphabet.key
    best = None
    for component in nx.strongly_connected_components(core):
        q = min(component, key=lambda s: key(access[s]))
        cycle = _cycle_word(language, q, component)
        if cycle is None:
            continue
        candidate = EvPeriodicWord(access[q], cycle)
        if best is None or (key(access[q]), key(cycle)) < (key(best[0]), key(best[1])):
            best = (access[q], cycle, candidate)
    return None if best is None else best[2]


def _cycle_word(language: RegularSet, q: int, component: FrozenSet[int]) -> Optional[str]:
    words: Dict[int, str] = {}
    queue: deque = deque()
    for symbol in language.alphabet:
        r = language.step(q, symbol)
        if r == q:
            return symbol
        if r in component and r not in words:
            words[r] = symbol
            queue.append(r)
    while queue:
        p = queue.popleft()
        for symbol in language.alphabet:
            r = language.step(p, symbol)
            if r == q:
                return words[p] + symbol
            if r in component and r not in words:
                words[r] = words[p] + symbol
                queue.append(r)
    return None


def _star_verdict(
    aut: ShiftAutomaton, lam: Iterable[str], gamma: Iterable[str], language: RegularSet
) -> StarVerdict:
    lam, gamma = tuple(aut.alphabet.sorted(lam)), tuple(aut.alphabet.sorted(gamma))
    cardinality = language.cardinality()
    if cardinality.is_finite:
        return StarVerdict(lam, gamma, StarStatus.VACUOUS, cardinality)
    omega = accepting_cycle(language)
    if omega is None:
        return StarVerdict(lam, gamma, StarStatus.REFUTED, cardinality)
    if not all(aut.contains_point(omega.prepend(t)) for t in lam):
        raise WitnessError(f"{omega} does not follow every word of Λ = {show_set(aut, lam)}")
    if any(aut.contains_point(omega.prepend(r)) for r in gamma):
        raise WitnessError(f"{omega} follows a word of Γ = {show_set(aut, gamma)}")
    return StarVerdict(lam, gamma, StarStatus.WITNESSED, cardinality, omega)


def condition_star_pair(aut: ShiftAutomaton, lam: Iterable[ExtWord], gamma: Iterable[ExtWord]) -> StarVerdict:
    lam, gamma = word_set(lam), word_set(gamma)
    return _star_verdict(aut, lam, gamma, f_lambda_gamma(aut, lam, gamma))


def condition_star(aut: ShiftAutomaton, lattice: Optional[FollowerLattice] = None) -> StarReport:
    """
    Condition (*) over every follower class Λ and every set Γ of follower singles.

    Whether a pair has a witness depends only on the language F_{Λ,Γ}, so pairs with an
    already examined language are skipped; once F_{Λ,Γ} is finite every larger Γ is
    finite too and is pruned.
    """
    lattice = lattice or follower_lattice(aut)
    verdicts: List[StarVerdict] = []
    examined = pruned = 0
    seen = set()
    for cls in [lattice.top] + lattice.nonempty:
        lam_words = cls.words or (UNIT,)
        base = cls.language
        relevant = [r for r in lattice.singles if not base.isdisjoint(r.language) and not base.issubset(r.language)]
        finite: List[FrozenSet[int]] = []
        for size in range(len(relevant) + 1):
            for combo in itertools.combinations(range(len(relevant)), size):
                chosen = frozenset(combo)
                if any(f <= chosen for f in finite):
                    pruned += 1
                    continue
                gamma_states = frozenset().union(*(relevant[i].states for i in combo))
                language = follower_gamma_set(aut, cls.states, gamma_states) if combo else base
                examined += 1
                if language.cardinality().is_finite:
                    finite.append(chosen)
                key = language.canonical_key()
                if key in seen:
                    continue
                seen.add(key)
                gamma_words = [relevant[i].words[0] for i in combo]
                verdicts.append(_star_verdict(aut, lam_words, gamma_words, language))
    logger.info(f"condition (*): {examined} pairs examined, {pruned} pruned, {len(verdicts)} distinct languages")
    return StarReport(tuple(verdicts), examined, pruned)


@dataclass(frozen=True)
class StarSeparation:
    """X = F_Λ against the family F_{Λ∪{r}}, r ∈ Γ, of a refuted pair."""

    verdict: StarVerdict
    x: RegularSet = field(repr=False)
    family: Tuple[RegularSet, ...] = field(repr=False)
    defect: Cardinality
    points: int
    disagreements: Tuple[EvPeriodicWord, ...]

    @property
    def separates(self) -> bool:
        return not self.defect.is_finite and not self.disagreements


def _follows_all(aut: ShiftAutomaton, point: EvPeriodicWord, lam: Iterable[str]) -> bool:
    # value of the infinite-string character at point on F_Λ
    return all(aut.contains_point(point.prepend(t)) for t in lam)


def star_separation(
    aut: ShiftAutomaton, verdict: StarVerdict, points: Iterable[EvPeriodicWord]
) -> Optional[StarSeparation]:
    """
    The family F_{Λ∪{r}} (r ∈ Γ) lies in F_Λ and leaves the defect F_{Λ,Γ}. For a refuted
    pair that defect is infinite while no infinite-string character sees it: every
    point with φ(F_Λ) = 1 also gives φ(F_{Λ∪{r}}) = 1 for some r. Returns None unless
    the verdict is refuted.
    """
    if verdict.status is not StarStatus.REFUTED:
        return None
    lam = word_set(verdict.lam)
    x = f_lambda(aut, lam).relabel(f"F{show_set(aut, lam)}")
    family = tuple(f_lambda(aut, lam | {r}).relabel(f"F{show_set(aut, lam | {r})}") for r in verdict.gamma)
    defect = defect_set(x, family).cardinality()
    points = list(points)
    disagreements = tuple(
        p
        for p in points
        if _follows_all(aut, p, lam) != any(_follows_all(aut, p, lam | {r}) for r in verdict.gamma)
    )
    logger.info(
        f"separation for Λ = {show_set(aut, lam)}, Γ = {show_set(aut, verdict.gamma)}: "
        f"defect {defect.kind.value}, {len(disagreements)} of {len(points)} points disagree"
    )
    return StarSeparation(verdict, x, family, defect, len(points), disagreements)
