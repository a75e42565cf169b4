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
import os
import re
from typing import List, Optional, Tuple

import tomli
import tomli_w

from shifthull.errors import SpecError
from shifthull.patterns import (
    AnySuffix,
    OneOf,
    Pattern,
    PatternAtom,
    SubshiftSpec,
    parse_atom,
    tokenize,
    validate_pattern,
)
from shifthull.resource import get_resource, list_resources
from shifthull.words import Alphabet

logger = logging.getLogger(__name__)

SPEC_KEYS = ("name", "notes", "alphabet", "forbidden")
TOML_POSITION = re.compile(r"line (\d+), column (\d+)")


def _locate(text: str, needle: str, after: int = 0) -> Tuple[Optional[int], Optional[int]]:
    """1-based line and column of the first occurrence of needle at or after offset ``after``."""
    at = text.find(needle, after)
    if at < 0:
        return None, None
    line = text.count("\n", 0, at) + 1
    return line, at - (text.rfind("\n", 0, at) + 1) + 1


def _pattern(entry, alphabet: Alphabet) -> Pattern:
    if isinstance(entry, str):
        atoms = tuple(atom for atom, _ in tokenize(entry))
    elif isinstance(entry, list) and all(isinstance(a, str) for a in entry):
        atoms = tuple(parse_atom(a) for a in entry)
    else:
        raise SpecError(f"a forbidden pattern must be a string or a list of strings, got {entry!r}")
    validate_pattern(atoms, alphabet)
    return atoms


def parse_spec_text(text: str, source: str = "<spec>") -> SubshiftSpec:
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as e:
        found = TOML_POSITION.search(str(e))
        line, column = (int(found.group(1)), int(found.group(2))) if found else (None, None)
        raise SpecError(f"{source}: {e}", line, column)

    unknown = [key for key in data if key not in SPEC_KEYS]
    if unknown:
        line, column = _locate(text, unknown[0])
        raise SpecError(f"{source}: unknown key {unknown[0]!r}", line, column)
    if "alphabet" not in data:
        raise SpecError(f"{source}: missing 'alphabet'")
    symbols = data["alphabet"]
    if isinstance(symbols, str):
        symbols = list(symbols)
    try:
        alphabet = Alphabet(tuple(symbols))
    except SpecError as e:
        line, column = _locate(text, "alphabet")
        raise type(e)(f"{source}: {e}", line, column)

    forbidden: List[Pattern] = []
    anchor = text.find("forbidden")
    for i, entry in enumerate(data.get("forbidden", [])):
        try:
            forbidden.append(_pattern(entry, alphabet))
        except SpecError as e:
            first = entry if isinstance(entry, str) else (str(entry[0]) if isinstance(entry, list) and entry else "")
            line, column = _locate(text, f'"{first}"', max(anchor, 0))
            raise type(e)(f"{source}: forbidden pattern {i + 1}: {e}", line, column)
    name = data.get("name") or os.path.splitext(os.path.basename(source))[0]
    return SubshiftSpec(alphabet, tuple(forbidden), name, data.get("notes", ""))


def parse_spec(path: str) -> SubshiftSpec:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise SpecError(f"cannot read spec file {path}: {e}")
    return parse_spec_text(text, path)


def atom_token(atom: PatternAtom, alphabet: Alphabet) -> str:
    if isinstance(atom, AnySuffix):
        return "*"
    if isinstance(atom, OneOf):
        return "[" + "".join(alphabet.sorted(atom.symbols)) + "]"
    return str(atom)


def serialize_spec(spec: SubshiftSpec) -> str:
    """Canonical TOML text: fixed key order, one atom list per pattern."""
    data = {"name": spec.name}
    if spec.notes:
        data["notes"] = spec.notes
    data["alphabet"] = list(spec.alphabet.symbols)
    data["forbidden"] = [[atom_token(atom, spec.alphabet) for atom in pattern] for pattern in spec.forbidden]
    return tomli_w.dumps(data)


def corpus_names() -> List[str]:
    return list_resources("corpus")


def load_spec(name_or_path: str) -> SubshiftSpec:
    """A bundled spec by name (see corpus_names), or a spec file by path."""
    if os.path.exists(name_or_path):
        return parse_spec(name_or_path)
    try:
        path = get_resource("corpus", f"{name_or_path}.toml")
    except FileNotFoundError:
        raise SpecError(f"no spec file {name_or_path!r} and no bundled spec of that name ({', '.join(corpus_names())})")
    logger.debug(f"bundled spec {name_or_path} at {path}")
    return parse_spec(path)

