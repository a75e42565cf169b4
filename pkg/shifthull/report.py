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

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

from shifthull.regular import Cardinality, CardinalityClass, RegularSet
from shifthull.words import ExtWord, show


def word_list(words: Iterable[ExtWord], limit: int) -> Dict[str, Any]:
    """At most ``limit`` words, with an explicit truncation marker."""
    shown: List[str] = []
    truncated = False
    for w in words:
        if len(shown) >= limit:
            truncated = True
            break
        shown.append(show(w))
    return {"words": shown, "truncated": truncated}


def describe_set(s: RegularSet, bound: int, limit: int = 50) -> Dict[str, Any]:
    """Cardinality class from the acceptor plus the members up to length ``bound``."""
    cardinality = s.cardinality()
    listing = word_list(s.words(bound), limit)
    return {
        "label": s.label,
        "cardinality": cardinality.kind.value,
        "members": list(cardinality.words) if cardinality.kind is CardinalityClass.FINITE else None,
        "bound": bound,
        **listing,
    }


def describe_cardinality(c: Cardinality) -> Dict[str, Any]:
    return {"class": c.kind.value, "members": list(c.words)}


@dataclass
class Report:
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    verdicts: Dict[str, Any] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    scope: Dict[str, Any] = field(default_factory=dict)
    exit_status: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "scope": self.scope,
            "exit_status": self.exit_status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def render(self) -> str:
        lines = [f"{self.command}"]
        for title, section in (
            ("inputs", self.inputs),
            ("verdicts", self.verdicts),
            ("witnesses", self.witnesses),
            ("scope", self.scope),
        ):
            if not section:
                continue
            lines.append(f"{title}:")
            lines.extend(_render_value(key, value, 1) for key, value in section.items())
        return "\n".join(lines) + "\n"


def _render_value(key: str, value: Any, depth: int) -> str:
    pad = "  " * depth
    if isinstance(value, dict):
        inner = [_render_value(k, v, depth + 1) for k, v in value.items()]
        return "\n".join([f"{pad}{key}:"] + inner)
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return f"{pad}{key}: " + ", ".join(str(v) for v in value)
        inner = [_render_value(f"[{i}]", v, depth + 1) for i, v in enumerate(value)]
        return "\n".join([f"{pad}{key}:"] + inner)
    if isinstance(value, bool):
        value = "yes" if value else "no"
    return f"{pad}{key}: {value}"
