"""Seeded random objects for property checks; integer entries drawn from -9..9."""

from __future__ import annotations

import random

from ..maps import MapOnN, OmegaTriple
from ..nilmatrix import InvTriMatrix, RingContext, UTMatrix

LOW, HIGH = -9, 9


def _entry(rng: random.Random, ctx: RingContext, nonzero: bool = False):
    while True:
        v = ctx.field(rng.randint(LOW, HIGH))
        if not nonzero or v != 0:
            return v


def random_matrix(ctx: RingContext, rng: random.Random) -> UTMatrix:
    return UTMatrix(ctx, {ij: _entry(rng, ctx) for ij in ctx.pairs})


def random_superdiagonal(ctx: RingContext, rng: random.Random) -> UTMatrix:
    """A random S1-shaped element: every superdiagonal entry nonzero, nothing else."""
    return UTMatrix(ctx, {(i, i + 1): _entry(rng, ctx, nonzero=True) for i in range(1, ctx.r)})


def random_inv_tri(ctx: RingContext, rng: random.Random) -> InvTriMatrix:
    entries = {}
    for i in range(1, ctx.r + 1):
        entries[(i, i)] = _entry(rng, ctx, nonzero=True)
        for j in range(i + 1, ctx.r + 1):
            entries[(i, j)] = _entry(rng, ctx)
    return InvTriMatrix(ctx, entries)


def random_functional(ctx: RingContext, rng: random.Random) -> tuple:
    return tuple(_entry(rng, ctx) for _ in range(ctx.n))


def random_map(ctx: RingContext, rng: random.Random) -> MapOnN:
    return MapOnN(ctx, tuple(random_functional(ctx, rng) for _ in range(ctx.n)))


def random_omega_triple(ctx: RingContext, rng: random.Random) -> OmegaTriple:
    return OmegaTriple(*(random_functional(ctx, rng) for _ in range(3)))


def random_scalar(ctx: RingContext, rng: random.Random, nonzero: bool = False):
    return _entry(rng, ctx, nonzero)
