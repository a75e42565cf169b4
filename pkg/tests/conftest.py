import itertools
import re
from functools import lru_cache

import pytest

from shifthull.automaton import compile_spec
from shifthull.patterns import Lit, OneOf, Plus, Star
from shifthull.specfile import load_spec

CORPUS = ("golden", "full2", "full1", "abc", "ex4")


def forbidden_regex(spec):
    """One alternation of every forbidden pattern, searched as a factor."""
    parts = []
    for pattern in spec.forbidden:
        pieces = []
        for atom in pattern:
            if isinstance(atom, Lit):
                pieces.append(re.escape(atom.symbol))
            elif isinstance(atom, Plus):
                pieces.append(re.escape(atom.symbol) + "+")
            elif isinstance(atom, Star):
                pieces.append(re.escape(atom.symbol) + "*")
            elif isinstance(atom, OneOf):
                pieces.append("[" + "".join(re.escape(s) for s in sorted(atom.symbols)) + "]")
            # a trailing any-suffix adds nothing to a factor test
        parts.append("".join(pieces))
    return re.compile("|".join(f"(?:{p})" for p in parts)) if parts else None


class BruteShift:
    """Independent language oracle: factor test by regex, prolongability by bounded search."""

    def __init__(self, spec, depth: int = 8):
        self.spec = spec
        self.symbols = spec.alphabet.symbols
        self.regex = forbidden_regex(spec)
        self.depth = depth
        self._extendable = lru_cache(maxsize=None)(self._extend)

    def clean(self, word: str) -> bool:
        return self.regex is None or self.regex.search(word) is None

    def _extend(self, word: str, depth: int) -> bool:
        if not self.clean(word):
            return False
        if depth == 0:
            return True
        return any(self._extendable(word + a, depth - 1) for a in self.symbols)

    def admissible(self, word: str) -> bool:
        return bool(word) and self._extendable(word, self.depth)

    def words(self, max_len: int):
        for n in range(1, max_len + 1):
            for letters in itertools.product(self.symbols, repeat=n):
                word = "".join(letters)
                if self.admissible(word):
                    yield word

    def apply(self, u: str, lam, v: str, w: str):
        """θ_u f_Λ θ_v⁻¹ as a partial map, straight from the definition."""
        if not w.startswith(v):
            return None
        s = w[len(v) :]
        if not s or not all(self.admissible(t + s) for t in lam):
            return None
        return u + s


@pytest.fixture(scope="session")
def specs():
    return {name: load_spec(name) for name in CORPUS}


@pytest.fixture(scope="session")
def shifts(specs):
    return {name: compile_spec(spec) for name, spec in specs.items()}


@pytest.fixture(scope="session")
def brute(specs):
    return {name: BruteShift(spec) for name, spec in specs.items()}


@pytest.fixture(scope="session")
def golden(shifts):
    return shifts["golden"]


@pytest.fixture(scope="session")
def full2(shifts):
    return shifts["full2"]


@pytest.fixture(scope="session")
def abc(shifts):
    return shifts["abc"]


@pytest.fixture(scope="session")
def ex4(shifts):
    return shifts["ex4"]
