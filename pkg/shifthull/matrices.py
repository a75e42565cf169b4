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
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

import numpy as np
from scipy import sparse

from shifthull.automaton import ShiftAutomaton, enumerate_language
from shifthull.errors import NotInLanguageError, UsageError
from shifthull.freegroup import FreeGroupWord, ball
from shifthull.groupoid import PointSample
from shifthull.hull import Hull, HullZero, apply, d_map, mul
from shifthull.words import UNIT, ZERO, EvPeriodicWord

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]


@dataclass(frozen=True)
class TruncatedBasis:
    """Basis vectors δ_label in a fixed order; words in length-lex order, or sample points."""

    labels: Tuple[Hashable, ...]
    unitized: bool = False

    @cached_property
    def index(self) -> Dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.index


def word_basis(aut: ShiftAutomaton, n: int, unitized: bool = False) -> TruncatedBasis:
    return aut.memo(
        ("basis", n, unitized),
        lambda: TruncatedBasis(tuple(([UNIT] if unitized else []) + enumerate_language(aut, n)), unitized),
    )


def point_basis(sample: PointSample) -> TruncatedBasis:
    return TruncatedBasis(sample.points)


@dataclass(frozen=True)
class SparseOp:
    """A 0/1 matrix on a truncated basis, stored as its set of unit entries (row, column)."""

    basis: TruncatedBasis = field(repr=False)
    entries: FrozenSet[Entry]

    @classmethod
    def from_map(cls, basis: TruncatedBasis, images: Iterable[Tuple[Hashable, Hashable]]) -> SparseOp:
        """δ_source ↦ δ_target for each (source, target) inside the basis."""
        index = basis.index
        return cls(basis, frozenset((index[t], index[s]) for s, t in images if s in index and t in index))

    @classmethod
    def from_matrix(cls, basis: TruncatedBasis, matrix) -> SparseOp:
        coo = sparse.coo_matrix(matrix)
        coo.eliminate_zeros()
        if coo.nnz and not np.all(coo.data == 1):
            raise ValueError(f"matrix has entries outside {{0, 1}}: {sorted(set(coo.data.tolist()))}")
        return cls(basis, frozenset(zip(coo.row.tolist(), coo.col.tolist())))

    @classmethod
    def zero(cls, basis: TruncatedBasis) -> SparseOp:
        return cls(basis, frozenset())

    @classmethod
    def identity(cls, basis: TruncatedBasis) -> SparseOp:
        return cls(basis, frozenset((i, i) for i in range(len(basis))))

    @cached_property
    def matrix(self) -> sparse.csr_matrix:
        n = len(self.basis)
        if not self.entries:
            return sparse.csr_matrix((n, n), dtype=np.int64)
        rows, cols = zip(*sorted(self.entries))
        data = np.ones(len(rows), dtype=np.int64)
        return sparse.csr_matrix((data, (rows, cols)), shape=(n, n), dtype=np.int64)

    def __matmul__(self, other: SparseOp) -> SparseOp:
        return SparseOp.from_matrix(self.basis, self.matrix @ other.matrix)

    @property
    def T(self) -> SparseOp:
        return SparseOp(self.basis, frozenset((c, r) for r, c in self.entries))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def trace(self) -> int:
        return sum(1 for r, c in self.entries if r == c)

    def image(self, label: Hashable) -> Optional[Hashable]:
        col = self.basis.index[label]
        rows = [r for r, c in self.entries if c == col]
        return self.basis.labels[rows[0]] if rows else None

    def compress(self, basis: TruncatedBasis) -> SparseOp:
        """Restriction to a sub-basis: rows and columns whose labels it contains."""
        labels = self.basis.labels
        index = basis.index
        return SparseOp(
            basis,
            frozenset(
                (index[labels[r]], index[labels[c]]) for r, c in self.entries if labels[r] in index and labels[c] in index
            ),
        )


def is_partial_isometry(op: SparseOp) -> bool:
    """M*M and MM* are diagonal with 0/1 entries."""
    for product in (op.matrix.T @ op.matrix, op.matrix @ op.matrix.T):
        coo = sparse.coo_matrix(product)
        coo.eliminate_zeros()
        if np.any(coo.row != coo.col) or np.any(coo.data != 1):
            return False
    return True


def t_matrix(aut: ShiftAutomaton, mu: str, n: int, unitized: bool = False) -> SparseOp:
    """T_μ: δ_w ↦ δ_{μw} when μw is admissible and |μw| <= n."""
    if not aut.accepts(aut.alphabet.check(mu)):
        raise NotInLanguageError(f"{mu!r} is not in the language of {aut.name or 'the shift'}")
    basis = word_basis(aut, n, unitized)
    return SparseOp.from_map(basis, ((w, mu + w) for w in basis.labels if aut.accepts(mu + w)))


def pi_matrix(aut: ShiftAutomaton, alpha: Hull, n: int) -> SparseOp:
    """π(α) on ℓ²(L_X) truncated at length n."""
    basis = word_basis(aut, n)
    if isinstance(alpha, HullZero):
        return SparseOp.zero(basis)
    images = ((w, apply(alpha, w)) for w in basis.labels)
    return SparseOp.from_map(basis, ((w, t) for w, t in images if t is not ZERO))


def vacuum_projection(aut: ShiftAutomaton, n: int, unitized: bool = True) -> SparseOp:
    """P = I − Σ_a T̃_a T̃_a*, the projection onto the empty-word vector."""
    if not unitized:
        raise UsageError("the vacuum projection lives on the unitized basis")
    basis = word_basis(aut, n, True)
    total = sparse.csr_matrix((len(basis), len(basis)), dtype=np.int64)
    for a in aut.alphabet:
        if aut.accepts(a):
            t = t_matrix(aut, a, n, True).matrix
            total = total + t @ t.T
    return SparseOp.from_matrix(basis, SparseOp.identity(basis).matrix - total)


def matrix_unit(aut: ShiftAutomaton, mu: str, nu: str, n: int) -> SparseOp:
    """T̃_μ P T̃_ν*, which should be the single entry δ_ν ↦ δ_μ."""
    return t_matrix(aut, mu, n, True) @ vacuum_projection(aut, n) @ t_matrix(aut, nu, n, True).T


def diag_expectation(op: SparseOp) -> SparseOp:
    return SparseOp(op.basis, frozenset((r, c) for r, c in op.entries if r == c))


def truncation_safe(aut: ShiftAutomaton, a: Hull, b: Hull, n: int) -> bool:
    """No word of length <= n passes through an image longer than n on its way through b then a."""
    for w in word_basis(aut, n).labels:
        z = apply(b, w)
        if z is ZERO or len(z) <= n:
            continue
        image = apply(a, z)
        if image is not ZERO and len(image) <= n:
            return False
    return True


@dataclass(frozen=True)
class ProductCheck:
    safe: bool
    truncated: bool
    guarded: bool


def product_check(aut: ShiftAutomaton, a: Hull, b: Hull, n: int) -> ProductCheck:
    """
    π(ab) against π(a)π(b) at size n, and again after computing the product at
    n + |u_b| and compressing back to n.
    """
    target = pi_matrix(aut, mul(a, b), n)
    truncated = (pi_matrix(aut, a, n) @ pi_matrix(aut, b, n)) == target
    reach = n + (0 if isinstance(b, HullZero) else len(b.u))
    wide = (pi_matrix(aut, a, reach) @ pi_matrix(aut, b, reach)).compress(word_basis(aut, n))
    return ProductCheck(truncation_safe(aut, a, b, n), truncated, wide == target)


def compact_difference_columns(aut: ShiftAutomaton, mu: str, n: int) -> int:
    """Columns where the unitized and the plain truncations of T_μ differ."""
    full = t_matrix(aut, mu, n, True)
    plain = t_matrix(aut, mu, n, False)
    return sum(1 for w in full.basis.labels if full.image(w) != (plain.image(w) if w in plain.basis else None))


@dataclass(frozen=True)
class GradedOp:
    """π(α) ⊗ λ_g with the grade g kept symbolic; ``materialize`` expands it over a ball of the free group."""

    op: SparseOp
    grade: Optional[FreeGroupWord]
    radius: int

    def __matmul__(self, other: GradedOp) -> GradedOp:
        if self.grade is None or other.grade is None:
            return GradedOp(SparseOp.zero(self.op.basis), None, self.radius)
        return GradedOp(self.op @ other.op, self.grade * other.grade, self.radius)

    def group_basis(self, alphabet) -> List[FreeGroupWord]:
        return ball(alphabet, self.radius)

    def materialize(self, alphabet) -> sparse.csr_matrix:
        group = self.group_basis(alphabet)
        size = len(self.op.basis) * len(group)
        if self.grade is None or self.op.is_zero:
            return sparse.csr_matrix((size, size), dtype=np.int64)
        position = {g: i for i, g in enumerate(group)}
        rows, cols = [], []
        for h, j in position.items():
            i = position.get(self.grade * h)
            if i is not None:
                rows.append(i)
                cols.append(j)
        shift = sparse.csr_matrix((np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(len(group),) * 2)
        return sparse.kron(self.op.matrix, shift, format="csr")

    def diagonal_blocks_zero(self, alphabet) -> bool:
        """Every entry between equal group coordinates vanishes."""
        width = len(self.group_basis(alphabet))
        coo = sparse.coo_matrix(self.materialize(alphabet))
        coo.eliminate_zeros()
        return not np.any(coo.row % width == coo.col % width)


def tensor_rep(aut: ShiftAutomaton, alpha: Hull, n: int, radius: int) -> GradedOp:
    if radius < 1:
        raise UsageError(f"radius must be at least 1, got {radius}")
    grade = d_map(alpha)
    return GradedOp(pi_matrix(aut, alpha, n), None if grade is ZERO else grade, radius)


@dataclass(frozen=True)
class PointRep:
    op: SparseOp
    outside_sample: Tuple[EvPeriodicWord, ...]
    undefined: Tuple[EvPeriodicWord, ...]


def point_rep(aut: ShiftAutomaton, mu: str, sample: PointSample) -> PointRep:
    """T_μ on ℓ²(sample): δ_ω ↦ δ_{μω}, separating images that leave the sample from genuinely undefined ones."""
    if not aut.accepts(aut.alphabet.check(mu)):
        raise NotInLanguageError(f"{mu!r} is not in the language of {aut.name or 'the shift'}")
    images, outside, undefined = [], [], []
    for omega in sample:
        target = omega.prepend(mu)
        if not aut.contains_point(target):
            undefined.append(omega)
        elif target in sample:
            images.append((omega, target))
        else:
            outside.append(omega)
    return PointRep(SparseOp.from_map(point_basis(sample), images), tuple(outside), tuple(undefined))


def export_coordinates(op: SparseOp) -> str:
    """Header "rows cols nnz", then one 1-based "row col 1" line per entry in row-major order."""
    n = len(op.basis)
    lines = [f"{n} {n} {op.nnz}"]
    lines.extend(f"{r + 1} {c + 1} 1" for r, c in sorted(op.entries))
    return "\n".join(lines) + "\n"
