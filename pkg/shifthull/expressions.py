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

from typing import List

from shifthull.automaton import ShiftAutomaton
from shifthull.characters import Character, principal_ultra, string_char
from shifthull.constructible import (
    ConstructibleSet,
    SetLike,
    f_lambda,
    f_lambda_gamma,
    make_constructible,
    pattern_set,
)
from shifthull.errors import NotInLanguageError, UsageError
from shifthull.hull import HULL_ZERO, Hull, element, identity, invert, theta
from shifthull.patterns import parse_pattern
from shifthull.words import UNIT, ZERO, Alphabet, ExtWord, parse_point

UNIT_TOKEN = "ε"
ZERO_TOKEN = "∅"


def parse_word(text: str, alphabet: Alphabet) -> ExtWord:
    """A word, the unit (ε, or 1 when 1 is not a symbol) or zero (∅)."""
    text = text.strip()
    if text == UNIT_TOKEN or (text == "1" and "1" not in alphabet):
        return UNIT
    if text == ZERO_TOKEN:
        return ZERO
    if not text:
        raise UsageError("empty word; write ε for the unit")
    return alphabet.check(text)


def parse_words(text: str, alphabet: Alphabet) -> List[ExtWord]:
    return [parse_word(part, alphabet) for part in text.split(",") if part.strip()]


def parse_set(aut: ShiftAutomaton, text: str) -> SetLike:
    """
    Set expressions: ``F:t1,t2`` (F_Λ), ``F:t1/r1,r2`` (F_{Λ,Γ}), ``E:a`` (E_a),
    ``C:u|t1,t2`` (uF_Λ, u joins Λ) and ``P:pattern`` (admissible words matching a pattern).
    """
    text = text.strip()
    kind, sep, body = text.partition(":")
    alphabet = aut.alphabet
    if not sep:
        raise UsageError(f"set expression {text!r} must start with F:, E:, C: or P:")
    if kind == "F":
        lam_text, slash, gamma_text = body.partition("/")
        lam = parse_words(lam_text, alphabet)
        if slash:
            return f_lambda_gamma(aut, lam, parse_words(gamma_text, alphabet)).relabel(text)
        if any(t != UNIT for t in lam):
            return make_constructible(aut, UNIT, set(lam) | {UNIT})
        return f_lambda(aut, lam).relabel(text)
    if kind == "E":
        mu = parse_word(body, alphabet)
        if mu is ZERO or not aut.accepts(mu):
            raise NotInLanguageError(f"E:{body} needs a word of the language")
        return make_constructible(aut, mu, {mu})
    if kind == "C":
        u_text, bar, lam_text = body.partition("|")
        u = parse_word(u_text, alphabet)
        return make_constructible(aut, u, set(parse_words(lam_text, alphabet)) | {u})
    if kind == "P":
        return pattern_set(aut, parse_pattern(body, alphabet)).relabel(text)
    raise UsageError(f"unknown set kind {kind!r} in {text!r}")


def parse_sets(aut: ShiftAutomaton, text: str) -> List[SetLike]:
    return [parse_set(aut, part) for part in text.split(";") if part.strip()]


def parse_constructible(aut: ShiftAutomaton, text: str) -> ConstructibleSet:
    s = parse_set(aut, text)
    if not isinstance(s, ConstructibleSet):
        raise UsageError(f"{text!r} is not a constructible set uF_Λ")
    return s


def parse_hull(aut: ShiftAutomaton, text: str) -> Hull:
    """``I``, ``T:μ``, ``H:u|t1,t2|v`` or ``∅``; a leading ``~`` inverts."""
    text = text.strip()
    if text.startswith("~"):
        return invert(parse_hull(aut, text[1:]))
    if text == "I":
        return identity(aut)
    if text == ZERO_TOKEN:
        return HULL_ZERO
    kind, sep, body = text.partition(":")
    if kind == "T" and sep:
        return theta(aut, aut.alphabet.check(body.strip()))
    if kind == "H" and sep:
        parts = body.split("|")
        if len(parts) != 3:
            raise UsageError(f"expected H:u|t1,t2|v, got {text!r}")
        u, v = parse_word(parts[0], aut.alphabet), parse_word(parts[2], aut.alphabet)
        return element(aut, u, set(parse_words(parts[1], aut.alphabet)) | {u, v}, v)
    raise UsageError(f"unknown hull expression {text!r}")


def parse_character(aut: ShiftAutomaton, text: str) -> Character:
    """``S:word`` or ``S:pre(period)`` for a string character, ``Y:<set>`` for a principal ultra-character."""
    text = text.strip()
    kind, sep, body = text.partition(":")
    if kind == "S" and sep:
        body = body.strip()
        if "(" in body:
            return string_char(aut, parse_point(body, aut.alphabet))
        return string_char(aut, aut.alphabet.check(body))
    if kind == "Y" and sep:
        return principal_ultra(parse_constructible(aut, body))
    raise UsageError(f"unknown character expression {text!r}")
