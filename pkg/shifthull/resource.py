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

from importlib.resources import as_file, files
from pathlib import Path
from typing import List


def get_resource(*args: str) -> str:
    """
    Constructs and returns the full absolute path to a resource within 'shifthull/resources'.

    Args:
        *args: A sequence of strings representing the relative path components
               within 'shifthull/resources', e.g., ("corpus", "golden.toml").

    Returns:
        str: An absolute path to the resource that works during development and when packaged.

    Raises:
        FileNotFoundError: If the resource does not exist.
        RuntimeError: If an error occurs while resolving the resource path.
    """
    try:
        base = files("shifthull").joinpath("resources")
        resource_path = base.joinpath(*args)
        with as_file(resource_path) as resolved_path:
            resolved = Path(resolved_path).resolve()
            if not resolved.exists():
                raise FileNotFoundError(resolved)
            return str(resolved)
    except FileNotFoundError:
        raise FileNotFoundError(f"Resource not found: {'/'.join(args)}")
    except Exception as e:
        raise RuntimeError(f"Error accessing resource: {e}")


def list_resources(folder: str, suffix: str = ".toml") -> List[str]:
    """Stems of the bundled files in a resource folder, sorted."""
    try:
        base = files("shifthull").joinpath("resources", folder)
        return sorted(entry.name[: -len(suffix)] for entry in base.iterdir() if entry.name.endswith(suffix))
    except Exception as e:
        raise RuntimeError(f"Error listing resources in {folder}: {e}")
