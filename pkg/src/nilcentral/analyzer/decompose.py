"""Canonical decompositions f = lam*id + mu (mu into Omega) and f = lam*id + a*g + zeta."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactfield import render_scalar
from ..maps import AffineMapError, MapOnN, g_map, identity_map, zeta_map
from ..nilmatrix import UTMatrix, in_center, omega_slots

__all__ = [
    "DecompositionError",
    "CentralizingDecomposition",
    "CommutingDecomposition",
    "decompose_centralizing",
    "decompose_commuting",
]


class DecompositionError(ValueError):
    """The residual left after removing lam*id (or a*g) is not where it must be.

    ``unit`` is the basis unit whose image is offending and ``image`` that image.
    """

    def __init__(self, msg: str, unit=None, image: UTMatrix | None = None):
        super().__init__(msg)
        self.unit = unit
        self.image = image


@dataclass(frozen=True)
class CentralizingDecomposition:
    lam: object
    mu: MapOnN

    def assemble(self) -> MapOnN:
        return self.lam * identity_map(self.mu.ctx) + self.mu

    def to_dict(self) -> dict:
        return {"lambda": render_scalar(self.lam), "mu": self.mu.to_dict()}


@dataclass(frozen=True)
class CommutingDecomposition:
    lam: object
    a: object
    zeta: tuple
    is_standard_form: bool

    def assemble(self, ctx) -> MapOnN:
        return self.lam * identity_map(ctx) + self.a * g_map(ctx) + zeta_map(ctx, self.zeta)

    def to_dict(self) -> dict:
        return {
            "lambda": render_scalar(self.lam),
            "a": render_scalar(self.a),
            "zeta": [render_scalar(v) for v in self.zeta],
            "standard_form": self.is_standard_form,
        }


def _require(f: MapOnN):
    if f.ctx.r < 4:
        raise ValueError(f"decomposition not unique below r=4 (got r={f.ctx.r})")
    if not f.is_linear:
        raise AffineMapError("decomposition needs a linear map")


def decompose_centralizing(f: MapOnN) -> CentralizingDecomposition:
    """Split a centralizing map as lam*id + mu with mu into Omega.

    lam is read off the (2,3) coordinate of f(e_{2,3}); (2,3) is never an
    Omega slot for r >= 4, so lam is forced and the split is unique.
    """
    _require(f)
    ctx = f.ctx
    k = ctx.idx(2, 3)
    lam = f.coeff(k, k)
    mu = f - lam * identity_map(ctx)
    slots = {ctx.idx(*ij) for ij in omega_slots(ctx)}
    for m, col in enumerate(mu.columns):
        if any(v != 0 and s not in slots for s, v in enumerate(col)):
            raise DecompositionError(
                f"residual image of e{ctx.pairs[m]} leaves Omega; the map is not centralizing",
                ctx.pairs[m],
                mu.image_of_unit(m),
            )
    return CentralizingDecomposition(lam, mu)


def decompose_commuting(f: MapOnN) -> CommutingDecomposition:
    """Split a commuting map as lam*id + a*g + zeta with zeta center-valued."""
    cd = decompose_centralizing(f)
    ctx, mu = f.ctx, cd.mu
    r = ctx.r
    first, last = ctx.idx(1, 2), ctx.idx(r - 1, r)
    a = mu.coeff(ctx.idx(1, r - 1), first)
    a_again = mu.coeff(ctx.idx(2, r), last)
    if a != a_again:
        raise DecompositionError(
            f"g-coefficient read two ways disagrees ({render_scalar(a)} vs "
            f"{render_scalar(a_again)}); the map is not commuting",
            (r - 1, r),
            mu.image_of_unit(last),
        )
    rest = mu - a * g_map(ctx)
    for m in range(ctx.n):
        im = rest.image_of_unit(m)
        if not in_center(im):
            raise DecompositionError(
                f"mu - a*g sends e{ctx.pairs[m]} outside the center; the map is not commuting",
                ctx.pairs[m],
                im,
            )
    corner = ctx.idx(1, r)
    zeta = tuple(mu.coeff(corner, m) for m in range(ctx.n))
    return CommutingDecomposition(cd.lam, a, zeta, a == 0)
