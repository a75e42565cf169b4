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

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Union

from shifthull.automaton import ShiftAutomaton
from shifthull.constructible import ConstructibleSet, f_lambda, show_set, word_set
from shifthull.errors import AutomatonMismatchError, NotInLambdaError, NotInLanguageError, ZeroInLambdaError
from shifthull.freegroup import FreeGroupWord
from shifthull.regular import RegularSet
from shifthull.words import UNIT, ZERO, ExtWord, Zero, show


class HullZero:
    """The empty partial bijection."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "HULL_ZERO"

    def __str__(self):
        return "0"


HULL_ZERO = HullZero()


@dataclass(frozen=True, eq=False)
class HullElement:
    """
    θ_u f_Λ θ_v⁻¹: the partial bijection v·s ↦ u·s for s ∈ F_Λ.

    Build through ``element`` (or ``theta``, ``identity``, ``idempotent``); it returns
    HULL_ZERO when F_Λ is empty.
    """

    shift: ShiftAutomaton = field(repr=False)
    u: str
    lam: FrozenSet[str]
    v: str

    @cached_property
    def follower(self) -> RegularSet:
        return f_lambda(self.shift, self.lam)

    @property
    def is_identity(self) -> bool:
        return self.lam == frozenset({UNIT})

    def domain(self) -> RegularSet:
        return self.follower.prefixed(self.v, label=f"dom({self})")

    def range_set(self) -> RegularSet:
        return self.follower.prefixed(self.u, label=f"ran({self})")

    def __eq__(self, other):
        if not isinstance(other, (HullElement, HullZero)):
            return NotImplemented
        return equals(self, other)

    def __hash__(self):
        return hash((self.u, self.v, self.follower.canonical_key()))

    def __str__(self):
        if self.is_identity:
            return "1"
        return f"θ[{show(self.u)}]f{show_set(self.shift, self.lam)}θ[{show(self.v)}]⁻¹"


Hull = Union[HullElement, HullZero]


def element(aut: ShiftAutomaton, u: ExtWord, lam: Iterable[ExtWord], v: ExtWord) -> Hull:
    lam = word_set(lam)
    if u is ZERO or v is ZERO:
        raise ZeroInLambdaError("u and v may not be the zero element")
    if u not in lam or v not in lam:
        raise NotInLambdaError(f"u = {show(u)} and v = {show(v)} must belong to Λ = {show_set(aut, lam)}")
    for t in lam:
        aut.alphabet.check(t)
    if f_lambda(aut, lam).is_empty:
        return HULL_ZERO
    return HullElement(aut, u, lam, v)


def identity(aut: ShiftAutomaton) -> HullElement:
    return HullElement(aut, UNIT, frozenset({UNIT}), UNIT)


def theta(aut: ShiftAutomaton, mu: str) -> Hull:
    if not aut.accepts(aut.alphabet.check(mu)):
        raise NotInLanguageError(f"{mu!r} is not in the language of {aut.name or 'the shift'}")
    return element(aut, mu, {UNIT, mu}, UNIT)


def idempotent(aut: ShiftAutomaton, delta: Iterable[ExtWord]) -> Hull:
    """f_Δ, the identity map restricted to F_Δ."""
    return element(aut, UNIT, word_set(delta) | {UNIT}, UNIT)


def from_constructible(c: ConstructibleSet) -> Hull:
    """The idempotent θ_u f_Λ θ_u⁻¹ whose domain is uF_Λ."""
    return element(c.shift, c.u, c.lam, c.u)


def is_idempotent(e: Hull) -> bool:
    return isinstance(e, HullZero) or e.u == e.v


def apply(e: Hull, w: ExtWord) -> ExtWord:
    if isinstance(e, HullZero) or w is ZERO or not w.startswith(e.v):
        return ZERO
    s = w[len(e.v) :]
    if not s or s not in e.follower:
        return ZERO
    return e.u + s


def _right_multiply(aut: ShiftAutomaton, lam: FrozenSet[str], y: str) -> Optional[FrozenSet[str]]:
    """Λ·y, or None when some t·y is zero."""
    if not y:
        return lam
    shifted = set()
    for t in lam:
        if not aut.accepts(t + y):
            return None
        shifted.add(t + y)
    return frozenset(shifted)


def _same_shift(a: HullElement, b: HullElement) -> ShiftAutomaton:
    if a.shift is not b.shift:
        raise AutomatonMismatchError(f"elements over {a.shift.name!r} and {b.shift.name!r} cannot be combined")
    return a.shift


def mul(a: Hull, b: Hull) -> Hull:
    """The composition a∘b (b acts first)."""
    if isinstance(a, HullZero) or isinstance(b, HullZero):
        return HULL_ZERO
    aut = _same_shift(a, b)
    if b.u.startswith(a.v):
        y = b.u[len(a.v) :]
        shifted = _right_multiply(aut, a.lam, y)
        if shifted is None:
            return HULL_ZERO
        return element(aut, a.u + y, shifted | b.lam, b.v)
    if a.v.startswith(b.u):
        x = a.v[len(b.u) :]
        shifted = _right_multiply(aut, b.lam, x)
        if shifted is None:
            return HULL_ZERO
        return element(aut, a.u, a.lam | shifted, b.v + x)
    return HULL_ZERO


def invert(a: Hull) -> Hull:
    if isinstance(a, HullZero):
        return HULL_ZERO
    return HullElement(a.shift, a.v, a.lam, a.u)


def equals(a: Hull, b: Hull) -> bool:
    if isinstance(a, HullZero) or isinstance(b, HullZero):
        return isinstance(a, HullZero) and isinstance(b, HullZero)
    _same_shift(a, b)
    return a.u == b.u and a.v == b.v and a.follower.canonical_key() == b.follower.canonical_key()


def leq(a: Hull, b: Hull) -> bool:
    """Natural partial order: a = b·(a⁻¹a)."""
    if isinstance(a, HullZero):
        return True
    if isinstance(b, HullZero):
        return False
    return equals(a, mul(b, mul(invert(a), a)))


def d_map(a: Hull) -> Union[FreeGroupWord, Zero]:
    if isinstance(a, HullZero):
        return ZERO
    return FreeGroupWord.of(a.u, a.v)


def graph(e: Hull, max_len: int) -> Dict[str, str]:
    """The partial map restricted to arguments and images of length <= max_len."""
    if isinstance(e, HullZero):
        return {}
    result = {}
    for w in e.domain().words(max_len):
        image = apply(e, w)
        if image is not ZERO and len(image) <= max_len:
            result[w] = image
    return result
