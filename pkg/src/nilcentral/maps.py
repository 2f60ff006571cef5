"""Linear and affine self-maps of N_r in the lexicographic unit basis.

A :class:`MapOnN` stores ``columns[k]`` = coordinates of the image of the
k-th basis unit, plus an optional constant term (only the affine map ``p``
needs one).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exactfield import parse_field, parse_scalar, render_scalar
from .nilmatrix import (
    ContextMismatchError,
    InvTriMatrix,
    RingContext,
    UTMatrix,
    conjugate,
    unit,
)

__all__ = [
    "AffineMapError",
    "MapOnN",
    "OmegaTriple",
    "identity_map",
    "zero_map",
    "map_from_images",
    "conjugate_map",
    "g_map",
    "p_map",
    "zeta_map",
    "omega_map",
    "named_map",
]


class AffineMapError(ValueError):
    """Raised when an operation needs a linear map but got an affine one."""


@dataclass(frozen=True, eq=True)
class MapOnN:
    ctx: RingContext
    columns: tuple[tuple, ...]
    constant: UTMatrix | None = None

    def __post_init__(self):
        n = self.ctx.n
        if len(self.columns) != n or any(len(c) != n for c in self.columns):
            raise ValueError(f"a map on N_{self.ctx.r} needs {n} columns of length {n}")
        field = self.ctx.field
        if not all(field.owns(v) for col in self.columns for v in col):
            object.__setattr__(
                self, "columns", tuple(tuple(field(v) for v in col) for col in self.columns)
            )
        if self.constant is not None:
            if self.constant.ctx != self.ctx:
                raise ContextMismatchError("constant term lives in a different context")
            if self.constant.is_zero():
                object.__setattr__(self, "constant", None)

    @property
    def is_linear(self) -> bool:
        return self.constant is None

    def linear_part(self) -> "MapOnN":
        return MapOnN(self.ctx, self.columns) if self.constant is not None else self

    def coeff(self, s: int, k: int):
        """s-th coordinate of the image of the k-th unit (0-based)."""
        return self.columns[k][s]

    def image_of_unit(self, k: int) -> UTMatrix:
        return UTMatrix.from_coords(self.ctx, self.columns[k])

    def __call__(self, x: UTMatrix) -> UTMatrix:
        return apply(self, x)

    def _check(self, other: "MapOnN"):
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if not isinstance(other, MapOnN):
            return NotImplemented
        self._check(other)
        cols = tuple(tuple(a + b for a, b in zip(ca, cb)) for ca, cb in zip(self.columns, other.columns))
        const = _add_opt(self.constant, other.constant)
        return MapOnN(self.ctx, cols, const)

    def __neg__(self):
        cols = tuple(tuple(-a for a in c) for c in self.columns)
        return MapOnN(self.ctx, cols, None if self.constant is None else -self.constant)

    def __sub__(self, other):
        if not isinstance(other, MapOnN):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        c = self.ctx.field(c)
        cols = tuple(tuple(c * a for a in col) for col in self.columns)
        return MapOnN(self.ctx, cols, None if self.constant is None else c * self.constant)

    __rmul__ = __mul__

    def compose(self, other: "MapOnN") -> "MapOnN":
        """``self`` after ``other``."""
        self._check(other)
        if not (self.is_linear and other.is_linear):
            raise AffineMapError("composition is only defined for linear maps")
        n = self.ctx.n
        zero = self.ctx.field.zero()
        cols = []
        for k in range(n):
            inner = other.columns[k]
            col = [zero] * n
            for m, c in enumerate(inner):
                if c != 0:
                    outer = self.columns[m]
                    for s in range(n):
                        if outer[s] != 0:
                            col[s] = col[s] + c * outer[s]
            cols.append(tuple(col))
        return MapOnN(self.ctx, tuple(cols))

    def to_dict(self) -> dict:
        return {
            "r": self.ctx.r,
            "field": str(self.ctx.field),
            "columns": [[render_scalar(v) for v in col] for col in self.columns],
            "constant": None if self.constant is None else self.constant.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "MapOnN":
        try:
            r = data["r"]
            field = parse_field(data["field"])
            raw_cols = data["columns"]
            raw_const = data.get("constant")
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed map JSON: {exc}") from None
        if not isinstance(r, int) or isinstance(r, bool):
            raise ValueError("map JSON: r must be an integer")
        ctx = RingContext(r, field)
        if not isinstance(raw_cols, list) or any(not isinstance(c, list) for c in raw_cols):
            raise ValueError("map JSON: columns must be a list of lists")
        for col in raw_cols:
            if any(not isinstance(v, str) for v in col):
                raise ValueError("map JSON: coefficients must be scalar strings")
        cols = tuple(tuple(parse_scalar(v, field) for v in col) for col in raw_cols)
        const = None
        if raw_const is not None:
            const = UTMatrix.from_dict(raw_const)
            if const.ctx != ctx:
                raise ContextMismatchError("map JSON: constant has a different r or field")
        return cls(ctx, cols, const)


def _add_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def apply(f: MapOnN, x: UTMatrix) -> UTMatrix:
    if f.ctx != x.ctx:
        raise ContextMismatchError(f"context mismatch: {f.ctx} vs {x.ctx}")
    n = f.ctx.n
    zero = f.ctx.field.zero()
    out = [zero] * n
    for k, c in enumerate(x.coords()):
        if c != 0:
            col = f.columns[k]
            for s in range(n):
                if col[s] != 0:
                    out[s] = out[s] + c * col[s]
    y = UTMatrix.from_coords(f.ctx, out)
    return y if f.constant is None else y + f.constant


def map_from_images(ctx: RingContext, images: Sequence[UTMatrix]) -> MapOnN:
    if len(images) != ctx.n:
        raise ValueError(f"need {ctx.n} images, got {len(images)}")
    for im in images:
        if im.ctx != ctx:
            raise ContextMismatchError("image lives in a different context")
    return MapOnN(ctx, tuple(tuple(im.coords()) for im in images))


def identity_map(ctx: RingContext) -> MapOnN:
    return map_from_images(ctx, [unit(ctx, i, j) for i, j in ctx.pairs])


def zero_map(ctx: RingContext) -> MapOnN:
    z = ctx.field.zero()
    return MapOnN(ctx, tuple((z,) * ctx.n for _ in range(ctx.n)))


def conjugate_map(b: InvTriMatrix, f: MapOnN) -> MapOnN:
    """h(X) = B f(B^{-1} X B) B^{-1}."""
    if b.ctx != f.ctx:
        raise ContextMismatchError("conjugator and map live in different contexts")
    if not f.is_linear:
        raise AffineMapError("conjugate_map needs a linear map")
    ctx = f.ctx
    b_inv = b.inverse()
    images = []
    for i, j in ctx.pairs:
        # B f(B^{-1} X B) B^{-1} == conjugate(B^{-1}, f(conjugate(B, X)))
        images.append(conjugate(b_inv, apply(f, conjugate(b, unit(ctx, i, j)))))
    return map_from_images(ctx, images)


def _require_r4(ctx: RingContext, name: str):
    if ctx.r < 4:
        raise ValueError(f"{name} needs r >= 4 (Omega slots collide below that)")


def g_map(ctx: RingContext) -> MapOnN:
    """X -> x_{1,2} e_{1,r-1} + x_{r-1,r} e_{2,r}."""
    _require_r4(ctx, "g")
    r = ctx.r
    images = [UTMatrix.zero(ctx)] * ctx.n
    images[ctx.idx(1, 2)] = unit(ctx, 1, r - 1)
    images[ctx.idx(r - 1, r)] = unit(ctx, 2, r)
    return map_from_images(ctx, images)


def p_map(ctx: RingContext) -> MapOnN:
    """The affine map X -> x_{1,r} e_{1,r} + e_{1,r-1} + e_{2,r}."""
    _require_r4(ctx, "p")
    r = ctx.r
    images = [UTMatrix.zero(ctx)] * ctx.n
    images[ctx.idx(1, r)] = unit(ctx, 1, r)
    lin = map_from_images(ctx, images)
    return MapOnN(ctx, lin.columns, unit(ctx, 1, r - 1) + unit(ctx, 2, r))


def zeta_map(ctx: RingContext, functional: Sequence) -> MapOnN:
    """X -> functional(X) e_{1,r}; a map into the center."""
    if len(functional) != ctx.n:
        raise ValueError(f"functional needs {ctx.n} coefficients")
    z = unit(ctx, 1, ctx.r)
    return map_from_images(ctx, [c * z for c in functional])


@dataclass(frozen=True)
class OmegaTriple:
    """Three functionals giving the e_{1,r-1}, e_{1,r}, e_{2,r} coordinates of a map into Omega."""

    a_coef: tuple
    b_coef: tuple
    c_coef: tuple


def omega_map(ctx: RingContext, t: OmegaTriple) -> MapOnN:
    _require_r4(ctx, "omega_map")
    r = ctx.r
    ea, eb, ec = unit(ctx, 1, r - 1), unit(ctx, 1, r), unit(ctx, 2, r)
    if not (len(t.a_coef) == len(t.b_coef) == len(t.c_coef) == ctx.n):
        raise ValueError(f"Omega functionals need {ctx.n} coefficients each")
    images = [a * ea + b * eb + c * ec for a, b, c in zip(t.a_coef, t.b_coef, t.c_coef)]
    return map_from_images(ctx, images)


def named_map(ctx: RingContext, which: str) -> MapOnN:
    if which == "identity":
        return identity_map(ctx)
    if which == "g":
        return g_map(ctx)
    if which in ("p", "p_affine"):
        return p_map(ctx)
    raise ValueError(f"unknown named map {which!r}")
