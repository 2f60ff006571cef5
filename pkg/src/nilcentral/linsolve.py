"""Exact Gaussian elimination over Q or F_p.

Rows are processed sparsely (dict column -> value) and kept in reduced row
echelon form incrementally, so the canonical RREF comes out regardless of the
order in which constraint rows arrive.  All-zero rows are dropped on entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exactfield import QQ, FieldSpec, ModP

__all__ = [
    "Eliminator",
    "SubspaceBasis",
    "rref",
    "rank",
    "null_space",
    "span",
]


class Eliminator:
    """Incremental RREF over a fixed number of columns.

    >>> from fractions import Fraction as Q
    >>> e = Eliminator(2)
    >>> e.add_row({0: Q(1), 1: Q(2)}), e.add_row({0: Q(2), 1: Q(4)})
    (True, False)
    >>> e.rank
    1
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping) -> dict:
        row = {c: v for c, v in row.items() if v != 0}
        # pivot rows are mutually reduced, so one pass over the pivot columns suffices
        for c in [c for c in row if c in self.pivots]:
            v = row[c]
            for cc, pv in self.pivots[c].items():
                nv = row.get(cc, 0) - v * pv
                if nv == 0:
                    row.pop(cc, None)
                else:
                    row[cc] = nv
        return row

    def add_row(self, row: Mapping) -> bool:
        """Insert a row; return True if it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        lead = row[p]
        if isinstance(lead, int):
            raise TypeError("rows must hold field elements, not bare ints")
        row = {c: v / lead for c, v in row.items()}
        for prow in self.pivots.values():
            f = prow.get(p)
            if f is None:
                continue
            for cc, v in row.items():
                nv = prow.get(cc, 0) - f * v
                if nv == 0:
                    prow.pop(cc, None)
                else:
                    prow[cc] = nv
        self.pivots[p] = row
        return True

    def rows(self) -> list[dict]:
        return [self.pivots[p] for p in sorted(self.pivots)]

    def null_space_vectors(self, field: FieldSpec) -> list[list]:
        zero, one = field.zero(), field.one()
        free = [c for c in range(self.ncols) if c not in self.pivots]
        out = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for p, prow in self.pivots.items():
                x = prow.get(f)
                if x is not None:
                    v[p] = -x
            out.append(v)
        return out


def _to_sparse(row: Sequence) -> dict:
    return {c: v for c, v in enumerate(row) if v != 0}


def field_of(rows: Iterable[Sequence], default: FieldSpec = QQ) -> FieldSpec:
    for row in rows:
        for v in row:
            return FieldSpec.prime(v.p) if isinstance(v, ModP) else QQ
    return default


def rref(matrix: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list], int]:
    """Reduced row echelon form (zero rows kept at the bottom) and rank."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    zero = field_of(matrix).zero()
    e = Eliminator(ncols)
    for row in matrix:
        e.add_row(_to_sparse(row))
    out = [[prow.get(c, zero) for c in range(ncols)] for prow in e.rows()]
    out.extend([zero] * ncols for _ in range(len(matrix) - len(out)))
    return out, e.rank


def rank(matrix: Sequence[Sequence], ncols: int | None = None) -> int:
    return rref(matrix, ncols)[1]


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of F^ambient_dim held as its canonical RREF basis."""

    ambient_dim: int
    vectors: tuple[tuple, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def _check(self, other_dim: int):
        if other_dim != self.ambient_dim:
            raise ValueError(f"ambient dimension mismatch: {self.ambient_dim} vs {other_dim}")

    def contains(self, v: Sequence) -> bool:
        self._check(len(v))
        e = Eliminator(self.ambient_dim)
        for b in self.vectors:
            e.add_row(_to_sparse(b))
        return not e.reduce(_to_sparse(v))

    __contains__ = contains

    def equals(self, other: "SubspaceBasis") -> bool:
        self._check(other.ambient_dim)
        return self.vectors == other.vectors

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        self._check(other.ambient_dim)
        return all(self.contains(v) for v in other.vectors)

    def __add__(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._check(other.ambient_dim)
        return span(list(self.vectors) + list(other.vectors), self.ambient_dim)


def span(vectors: Iterable[Sequence], ambient_dim: int) -> SubspaceBasis:
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    zero = field_of(vectors).zero()
    e = Eliminator(ambient_dim)
    for v in vectors:
        e.add_row(_to_sparse(v))
    basis = tuple(tuple(prow.get(c, zero) for c in range(ambient_dim)) for prow in e.rows())
    return SubspaceBasis(ambient_dim, basis)


def null_space(
    matrix: Sequence[Sequence], ncols: int | None = None, field: FieldSpec | None = None
) -> SubspaceBasis:
    """Basis of {v : M v = 0}.  ``field`` is only needed when M has no entries to infer it from."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    e = Eliminator(ncols)
    for row in matrix:
        e.add_row(_to_sparse(row))
    return null_space_of(e, field or field_of(matrix))


def null_space_of(e: Eliminator, field: FieldSpec) -> SubspaceBasis:
    vecs = e.null_space_vectors(field)
    return span(vecs, e.ncols) if vecs else SubspaceBasis(e.ncols, ())
