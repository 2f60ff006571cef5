"""Strictly upper triangular matrices N_r, triangular conjugators and the named elements.

Matrices are sparse: a dict from 1-based ``(i, j)`` to a nonzero field element.
Out-of-range matrix units (``e_{0,j}``, ``e_{i,r+1}``) are the zero matrix.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exactfield import QQ, FieldError, FieldSpec, parse_field, parse_scalar, render_scalar

__all__ = [
    "ContextMismatchError",
    "RingContext",
    "UTMatrix",
    "InvTriMatrix",
    "commutator",
    "power",
    "conjugate",
    "unit",
    "named_matrix",
    "s1_element",
    "s2_element",
    "s2_closed_form",
    "in_center",
    "in_omega",
    "omega_slots",
]


class ContextMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class RingContext:
    r: int
    field: FieldSpec = QQ

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 2:
            raise ValueError(f"r must be an integer >= 2, got {self.r!r}")

    @property
    def n(self) -> int:
        return self.r * (self.r - 1) // 2

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Basis units in lexicographic order (1,2),(1,3),...,(r-1,r)."""
        return tuple((i, j) for i in range(1, self.r + 1) for j in range(i + 1, self.r + 1))

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {ij: k for k, ij in enumerate(self.pairs)}

    def idx(self, i: int, j: int) -> int:
        """0-based coordinate of the unit e_{i,j}."""
        try:
            return self._index[(i, j)]
        except KeyError:
            raise IndexError(f"({i},{j}) is not a strictly upper position for r={self.r}") from None

    def valid(self, i: int, j: int) -> bool:
        return 1 <= i < j <= self.r

    def __str__(self):
        return f"N_{self.r}({self.field})"


def _check_ctx(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"context mismatch: {a.ctx} vs {b.ctx}")


def _sparse_matmul(a: Mapping, b: Mapping) -> dict:
    rows_b: dict[int, list] = {}
    for (k, j), v in b.items():
        rows_b.setdefault(k, []).append((j, v))
    out: dict = {}
    for (i, k), u in a.items():
        for j, v in rows_b.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + u * v
    return {ij: v for ij, v in out.items() if v != 0}


class UTMatrix:
    """An element of N_r.  Immutable; ``@`` is the matrix product, ``*`` scales."""

    __slots__ = ("ctx", "_entries", "_hash")

    def __init__(self, ctx: RingContext, entries: Mapping[tuple[int, int], object] | None = None):
        self.ctx = ctx
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not ctx.valid(i, j):
                raise IndexError(f"entry ({i},{j}) is not strictly upper triangular for r={ctx.r}")
            v = ctx.field(v)
            if v != 0:
                clean[(i, j)] = v
        self._entries = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, entries):
        m = cls.__new__(cls)
        m.ctx = ctx
        m._entries = entries
        m._hash = None
        return m

    @classmethod
    def zero(cls, ctx: RingContext) -> "UTMatrix":
        return cls._raw(ctx, {})

    @classmethod
    def from_coords(cls, ctx: RingContext, coords: Sequence) -> "UTMatrix":
        if len(coords) != ctx.n:
            raise ValueError(f"expected {ctx.n} coordinates, got {len(coords)}")
        return cls(ctx, {ij: v for ij, v in zip(ctx.pairs, coords) if v != 0})

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def __getitem__(self, ij: tuple[int, int]):
        return self._entries.get(ij, self.ctx.field.zero())

    def coords(self) -> list:
        zero = self.ctx.field.zero()
        return [self._entries.get(ij, zero) for ij in self.ctx.pairs]

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __add__(self, other):
        if not isinstance(other, UTMatrix):
            return NotImplemented
        _check_ctx(self, other)
        out = dict(self._entries)
        for ij, v in other._entries.items():
            s = out.get(ij, 0) + v
            if s != 0:
                out[ij] = s
            else:
                out.pop(ij, None)
        return UTMatrix._raw(self.ctx, out)

    def __neg__(self):
        return UTMatrix._raw(self.ctx, {ij: -v for ij, v in self._entries.items()})

    def __sub__(self, other):
        if not isinstance(other, UTMatrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, UTMatrix):
            return NotImplemented
        _check_ctx(self, other)
        return UTMatrix._raw(self.ctx, _sparse_matmul(self._entries, other._entries))

    def __mul__(self, c):
        if isinstance(c, UTMatrix):
            raise TypeError("use @ for the matrix product")
        c = self.ctx.field(c)
        if c == 0:
            return UTMatrix.zero(self.ctx)
        return UTMatrix._raw(self.ctx, {ij: c * v for ij, v in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, UTMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self):
        if not self._entries:
            return f"UTMatrix(r={self.ctx.r}, 0)"
        terms = " + ".join(f"{render_scalar(v)}*e{i},{j}" for (i, j), v in sorted(self._entries.items()))
        return f"UTMatrix(r={self.ctx.r}, {terms})"

    def to_dict(self) -> dict:
        return {
            "r": self.ctx.r,
            "field": str(self.ctx.field),
            "entries": [
                {"i": i, "j": j, "v": render_scalar(v)} for (i, j), v in sorted(self._entries.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "UTMatrix":
        try:
            r = data["r"]
            field = parse_field(data["field"])
            raw = data["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from None
        if not isinstance(r, int) or isinstance(r, bool):
            raise ValueError("matrix JSON: r must be an integer")
        ctx = RingContext(r, field)
        entries = {}
        for e in raw:
            i, j, v = e["i"], e["j"], e["v"]
            if not isinstance(v, str):
                raise ValueError("matrix JSON: entry values must be scalar strings")
            if (i, j) in entries:
                raise ValueError(f"matrix JSON: duplicate entry ({i},{j})")
            entries[(i, j)] = parse_scalar(v, field)
        return cls(ctx, entries)


def unit(ctx: RingContext, i: int, j: int) -> UTMatrix:
    if not ctx.valid(i, j):
        raise IndexError(f"e_{{{i},{j}}} is not a unit of N_{ctx.r}")
    return UTMatrix._raw(ctx, {(i, j): ctx.field.one()})


def _unit_or_zero(ctx: RingContext, i: int, j: int) -> UTMatrix:
    return unit(ctx, i, j) if ctx.valid(i, j) else UTMatrix.zero(ctx)


def commutator(a: UTMatrix, b: UTMatrix) -> UTMatrix:
    return a @ b - b @ a


def power(a: UTMatrix, t: int) -> UTMatrix:
    if t < 1:
        raise ValueError("power needs t >= 1: the identity is not in N_r")
    out = a
    for _ in range(t - 1):
        out = out @ a
    return out


def in_center(a: UTMatrix) -> bool:
    return all(ij == (1, a.ctx.r) for ij in a._entries)


def omega_slots(ctx: RingContext) -> tuple[tuple[int, int], ...]:
    """The positions (1,r-1), (1,r), (2,r), with invalid ones dropped for tiny r."""
    r = ctx.r
    return tuple(ij for ij in ((1, r - 1), (1, r), (2, r)) if ctx.valid(*ij))


def in_omega(a: UTMatrix) -> bool:
    if a.ctx.r < 4:
        warnings.warn(f"Omega is all of N_{a.ctx.r} for r < 4", stacklevel=2)
    slots = omega_slots(a.ctx)
    return all(ij in slots for ij in a._entries)


class InvTriMatrix:
    """Invertible upper triangular matrix (diagonal included); used only as a conjugator."""

    __slots__ = ("ctx", "_entries")

    def __init__(self, ctx: RingContext, entries: Mapping[tuple[int, int], object]):
        self.ctx = ctx
        clean = {}
        for (i, j), v in entries.items():
            if not (1 <= i <= j <= ctx.r):
                raise IndexError(f"entry ({i},{j}) is not upper triangular for r={ctx.r}")
            v = ctx.field(v)
            if v != 0:
                clean[(i, j)] = v
        for i in range(1, ctx.r + 1):
            if (i, i) not in clean:
                raise ValueError(f"diagonal entry ({i},{i}) is zero; matrix is singular")
        self._entries = clean

    @classmethod
    def identity(cls, ctx: RingContext) -> "InvTriMatrix":
        return cls(ctx, {(i, i): 1 for i in range(1, ctx.r + 1)})

    @classmethod
    def diagonal(cls, ctx: RingContext, d: Sequence) -> "InvTriMatrix":
        if len(d) != ctx.r:
            raise ValueError(f"need {ctx.r} diagonal entries, got {len(d)}")
        return cls(ctx, {(i + 1, i + 1): v for i, v in enumerate(d)})

    @classmethod
    def transvection(cls, ctx: RingContext, i: int, j: int) -> "InvTriMatrix":
        """T_{i,j} = I - e_{i,j}."""
        if not ctx.valid(i, j):
            raise IndexError(f"T_{{{i},{j}}} needs 1 <= i < j <= {ctx.r}")
        entries = {(k, k): 1 for k in range(1, ctx.r + 1)}
        entries[(i, j)] = -1
        return cls(ctx, entries)

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def __getitem__(self, ij):
        return self._entries.get(ij, self.ctx.field.zero())

    def __eq__(self, other):
        if not isinstance(other, InvTriMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self._entries == other._entries

    def __repr__(self):
        return f"InvTriMatrix(r={self.ctx.r}, {sorted(self._entries.items())})"

    def __matmul__(self, other):
        if isinstance(other, InvTriMatrix):
            _check_ctx(self, other)
            return InvTriMatrix(self.ctx, _sparse_matmul(self._entries, other._entries))
        if isinstance(other, UTMatrix):
            _check_ctx(self, other)
            return UTMatrix._raw(self.ctx, _sparse_matmul(self._entries, other._entries))
        return NotImplemented

    def __rmatmul__(self, other):
        if isinstance(other, UTMatrix):
            _check_ctx(self, other)
            return UTMatrix._raw(self.ctx, _sparse_matmul(other._entries, self._entries))
        return NotImplemented

    def inverse(self) -> "InvTriMatrix":
        """Column-by-column back substitution for B X = I."""
        r = self.ctx.r
        rows: dict[int, list] = {}
        for (i, j), v in self._entries.items():
            if i != j:
                rows.setdefault(i, []).append((j, v))
        inv: dict = {}
        for j in range(1, r + 1):
            for i in range(j, 0, -1):
                acc = self.ctx.field(1 if i == j else 0)
                for k, v in rows.get(i, ()):
                    if k <= j and (k, j) in inv:
                        acc -= v * inv[(k, j)]
                x = acc / self._entries[(i, i)]
                if x != 0:
                    inv[(i, j)] = x
        return InvTriMatrix(self.ctx, inv)


def conjugate(b: InvTriMatrix, a: UTMatrix) -> UTMatrix:
    """B^{-1} A B."""
    _check_ctx(b, a)
    return (b.inverse() @ a) @ b


def named_matrix(ctx: RingContext, which: str) -> UTMatrix:
    """``J`` (all-ones superdiagonal), ``W1`` (i on e_{i,i+1}) or ``W2`` (r-i on e_{i,i+1})."""
    r = ctx.r
    if which == "J":
        coef = lambda i: 1
    elif which == "W1":
        coef = lambda i: i
    elif which == "W2":
        coef = lambda i: r - i
    else:
        raise ValueError(f"unknown named matrix {which!r}")
    return UTMatrix(ctx, {(i, i + 1): coef(i) for i in range(1, r)})


def s1_element(ctx: RingContext, d: Sequence) -> UTMatrix:
    """D^{-1} J D for D = diag(d), by explicit conjugation."""
    d = [ctx.field(x) for x in d]
    if any(x == 0 for x in d):
        raise ValueError("S1 diagonal entries must be nonzero")
    return conjugate(InvTriMatrix.diagonal(ctx, d), named_matrix(ctx, "J"))


def s2_element(ctx: RingContext, i: int, j: int) -> UTMatrix:
    """T_{i,j}^{-1} J T_{i,j}, by explicit inversion and conjugation."""
    return conjugate(InvTriMatrix.transvection(ctx, i, j), named_matrix(ctx, "J"))


def s2_closed_form(ctx: RingContext, i: int, j: int) -> UTMatrix:
    """J + e_{i,j+1} - e_{i-1,j}, dropping out-of-range units."""
    if not ctx.valid(i, j):
        raise IndexError(f"S2 index ({i},{j}) out of range for r={ctx.r}")
    return named_matrix(ctx, "J") + _unit_or_zero(ctx, i, j + 1) - _unit_or_zero(ctx, i - 1, j)


def superdiagonal(a: UTMatrix) -> list | None:
    """The superdiagonal (a_1..a_{r-1}) if ``a`` is supported only there, else None."""
    r = a.ctx.r
    if any(j != i + 1 for i, j in a._entries):
        return None
    return [a[(i, i + 1)] for i in range(1, r)]


def is_s1_shaped(a: UTMatrix) -> bool:
    sd = superdiagonal(a)
    return sd is not None and all(v != 0 for v in sd)


def matrices_from_units(ctx: RingContext, terms: Iterable[tuple[object, int, int]]) -> UTMatrix:
    """Sum of ``c * e_{i,j}``; units outside N_r contribute zero."""
    out = UTMatrix.zero(ctx)
    for c, i, j in terms:
        out = out + c * _unit_or_zero(ctx, i, j)
    return out
