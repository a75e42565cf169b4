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

import dataclasses
import logging
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Tuple

import tomli

from shifthull.errors import ConfigError

logger = logging.getLogger(__name__)

CONFIG_ENV = "SHIFTHULL_CONFIG"
DEFAULT_CONFIG = Path("~/.config/shifthull/config.toml")


@dataclass(frozen=True)
class Settings:
    max_len: int = 8  # enumeration length for listings and oracles
    witness_bound: int = 20  # longest word shown in a report before truncating
    lattice_limit: int = 4096
    state_limit: int = 200000
    sample_budget: int = 4  # letters prepended when closing a point sample
    seed_count: int = 2
    seed_period: int = 4
    radius: int = 4
    germ_limit: int = 5000
    cover_bound: int = 6
    matrix_sizes: Tuple[int, ...] = (4, 6, 8)
    random_seed: int = 0

    def replace(self, **changes) -> Settings:
        changes = {key: value for key, value in changes.items() if value is not None}
        return dataclasses.replace(self, **changes)


def settings_from_dict(data: dict) -> Settings:
    known = {f.name: f for f in fields(Settings)}
    values = {}
    for key, value in data.items():
        if key not in known:
            raise ConfigError(f"unknown setting {key!r}")
        if key == "matrix_sizes":
            if not isinstance(value, list) or not value or not all(isinstance(n, int) and n >= 1 for n in value):
                raise ConfigError("matrix_sizes must be a nonempty list of positive integers")
            value = tuple(value)
        elif not isinstance(value, int) or isinstance(value, bool) or (value < 1 and key != "random_seed"):
            raise ConfigError(f"setting {key!r} must be a positive integer, got {value!r}")
        values[key] = value
    return Settings(**values)


def config_path(explicit: Optional[str] = None) -> Optional[Path]:
    if explicit:
        return Path(explicit)
    if os.environ.get(CONFIG_ENV):
        return Path(os.environ[CONFIG_ENV])
    default = DEFAULT_CONFIG.expanduser()
    return default if default.exists() else None


def load_settings(explicit: Optional[str] = None) -> Settings:
    """Settings from the [shifthull] table of the first config file found, else defaults."""
    path = config_path(explicit)
    if path is None:
        return Settings()
    try:
        with open(path, "rb") as f:
            data = tomli.load(f)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except tomli.TOMLDecodeError as e:
        raise ConfigError(f"{path}: {e}")
    logger.info(f"settings read from {path}")
    return settings_from_dict(data.get("shifthull", {}))
